//! The skew-symmetric/triangular splitting iteration.
//!
//! `A = U + S` with `U = D + U₀ + L₀ᵀ` upper triangular and `S = L₀ − L₀ᵀ`
//! skew-symmetric (the lower direction mirrors this with `L = D + L₀ + U₀ᵀ`).
//!
//! ```text
//! (αI + U) x½ = (αI − S) x  + b
//! (αI + S) x⁺ = (αI − U) x½ + b
//! ```

use crate::error::{Error, Result};
use crate::matkit::{
    eigenvalues_general, solve_dense, solve_lower, solve_upper, sym_eigenvalues, PivotedLu,
};
use crate::matrix::{norm2, sub_vec, DenseMatrix};
use crate::splittings::{triangular_split, PartTag, TriangularMode};
use crate::tolerances::DEFINITE_REL;

use super::{iterate, Shift, SolveReport, SolverConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StsDirection {
    Upper,
    Lower,
}

fn parts(a: &DenseMatrix, direction: StsDirection) -> Result<(DenseMatrix, DenseMatrix)> {
    let mode = match direction {
        StsDirection::Upper => TriangularMode::SkewUpper,
        StsDirection::Lower => TriangularMode::SkewLower,
    };
    let split = triangular_split(a, mode)?;
    let tri = match direction {
        StsDirection::Upper => PartTag::Upper,
        StsDirection::Lower => PartTag::Lower,
    };
    Ok((
        split.part(tri).expect("triangular part").clone(),
        split.part(PartTag::Lie).expect("skew part").clone(),
    ))
}

/// One STS operator with the shifted skew part factored once.
#[derive(Debug, Clone)]
pub struct Sts {
    alpha: f64,
    direction: StsDirection,
    tri: DenseMatrix,
    skew: DenseMatrix,
    tri_shift: DenseMatrix,
    skew_shift: PivotedLu,
}

impl Sts {
    pub fn new(a: &DenseMatrix, alpha: f64, direction: StsDirection) -> Result<Self> {
        let (tri, skew) = parts(a, direction)?;
        let tri_shift = tri.shifted(alpha);
        if tri_shift.diagonal().contains(&0.0) {
            return Err(Error::SingularShift);
        }
        let skew_shift = PivotedLu::new(&skew.shifted(alpha)).map_err(|_| Error::SingularShift)?;
        Ok(Self {
            alpha,
            direction,
            tri,
            skew,
            tri_shift,
            skew_shift,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `(αI − M) x + b`.
    fn rhs(&self, m: &DenseMatrix, x: &[f64], b: &[f64]) -> Vec<f64> {
        let mx = m.matvec(x);
        x.iter()
            .zip(&mx)
            .zip(b)
            .map(|((xi, v), bi)| self.alpha * xi - v + bi)
            .collect()
    }

    /// Both half-steps from `x`: returns `(x½, x⁺)`.
    pub fn step(&self, x: &[f64], b: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let r = self.rhs(&self.skew, x, b);
        let half = match self.direction {
            StsDirection::Upper => solve_upper(&self.tri_shift, &r),
            StsDirection::Lower => solve_lower(&self.tri_shift, &r),
        }
        .expect("nonzero diagonal checked at construction");
        let next = self.skew_shift.solve_vec(&self.rhs(&self.tri, &half, b));
        (half, next)
    }
}

/// `‖(αI − U)(αI + U)⁻¹‖₂`, below one whenever `U + Uᵀ` is positive definite.
pub fn kellogg_norm(u: &DenseMatrix, alpha: f64) -> Result<f64> {
    let minus = (-u).shifted(alpha);
    let k = solve_dense(&u.shifted(alpha).transpose(), &minus.transpose())
        .map_err(|_| Error::SingularShift)?
        .transpose();
    let gram = (&k.transpose() * &k).sym_part();
    let top = sym_eigenvalues(&gram)?.max_real();
    Ok(top.max(0.0).sqrt())
}

/// `T = (αI + S)⁻¹(αI − U)(αI + U)⁻¹(αI − S)`.
pub fn sts_iteration_matrix(
    a: &DenseMatrix,
    alpha: f64,
    direction: StsDirection,
) -> Result<DenseMatrix> {
    let n = a.check_square("matrix")?;
    let (tri, skew) = parts(a, direction)?;
    let eye = DenseMatrix::identity(n);
    let shift_err = |_| Error::SingularShift;
    let m1 = solve_dense(&tri.shifted(alpha), &(&eye.scale(alpha) - &skew)).map_err(shift_err)?;
    let m2 = &(&eye.scale(alpha) - &tri) * &m1;
    solve_dense(&skew.shifted(alpha), &m2).map_err(shift_err)
}

/// Solves `Ax = b` with the STS iteration.
///
/// Positive definiteness of `½(A + Aᵀ)` is checked and reported in
/// `hypothesis_holds`, not required. The automatic shift is 1.
pub fn sts_solve(
    a: &DenseMatrix,
    b: &[f64],
    cfg: &SolverConfig,
    direction: StsDirection,
) -> Result<SolveReport> {
    let n = a.check_square("matrix")?;
    if b.len() != n {
        return Err(crate::error::mismatch(
            format!("right-hand side of length {n}"),
            b.len().to_string(),
        ));
    }
    cfg.validate(n)?;
    let alpha = match cfg.alpha {
        Shift::Fixed(a) => a,
        Shift::Auto => 1.0,
    };
    let sym = a.sym_part();
    let definite = sym_eigenvalues(&sym)?.min_real() > DEFINITE_REL * sym.frobenius_norm();
    let op = Sts::new(a, alpha, direction)?;
    let residual = |x: &[f64]| norm2(&sub_vec(b, &a.matvec(x)));
    let (solution, iterations, residual_history, converged) =
        iterate(b, cfg, cfg.initial_guess(n), residual, |x| op.step(x, b).1);
    let rho_estimate = if cfg.analyze {
        Some(eigenvalues_general(&sts_iteration_matrix(a, alpha, direction)?)?.spectral_radius())
    } else {
        None
    };
    let bound = if definite {
        Some(kellogg_norm(&op.tri, alpha)?)
    } else {
        None
    };
    Ok(SolveReport {
        method: match direction {
            StsDirection::Upper => "sts-upper",
            StsDirection::Lower => "sts-lower",
        },
        solution,
        iterations,
        residual_history,
        converged,
        alpha: Some(alpha),
        rho_estimate,
        bound,
        hypothesis_holds: Some(definite),
    })
}
