//! The J-HSS alternating Lie-Jordan iteration.
//!
//! With `A = S + H` split by [`j_split`], each step solves
//!
//! ```text
//! (H + αJ⁻¹) x½   = (αJ⁻¹ − S) x  + b
//! (S + αJ⁻¹) x⁺   = (αJ⁻¹ − H) x½ + b
//! ```
//!
//! Both coefficient matrices are rewritten as `(HJ + αI)J⁻¹` and
//! `(SJ + αI)J⁻¹`, so each half-step is a solve with a shifted symmetric or
//! skew-symmetric matrix followed by a multiplication by `J`.

use crate::error::{Error, Result};
use crate::matkit::{eigenvalues_general, solve_dense, sym_eigenvalues, PivotedLu};
use crate::matrix::{norm2, sub_vec, DenseMatrix};
use crate::splittings::{j_split, PartTag};
use crate::structures::{BilinearStructure, Symmetry};
use crate::tolerances::DEFINITE_REL;

use super::{iterate, Shift, SolveReport, SolverConfig};

fn lie_jordan(a: &DenseMatrix, j: &BilinearStructure) -> Result<(DenseMatrix, DenseMatrix)> {
    let split = j_split(a, j)?;
    let s = split.part(PartTag::Lie).expect("lie part").clone();
    let h = split.part(PartTag::Jordan).expect("jordan part").clone();
    Ok((s, h))
}

/// The symmetric factor whose definiteness drives convergence: `HJ` when
/// `Jᵀ = J`, `SJ` when `Jᵀ = −J`.
pub fn definite_factor(a: &DenseMatrix, j: &BilinearStructure) -> Result<DenseMatrix> {
    let (s, h) = lie_jordan(a, j)?;
    let f = match j.symmetry() {
        Symmetry::Symmetric => &h * j.realize(),
        Symmetry::Skew => &s * j.realize(),
    };
    Ok(f.sym_part())
}

fn definite_spectrum(a: &DenseMatrix, j: &BilinearStructure) -> Result<(Vec<f64>, f64)> {
    let f = definite_factor(a, j)?;
    let eig = sym_eigenvalues(&f)?;
    Ok((eig.real_values(), f.frobenius_norm()))
}

/// `max_i |α − λ_i| / |α + λ_i|`.
pub fn contraction_bound(eigenvalues: &[f64], alpha: f64) -> f64 {
    eigenvalues
        .iter()
        .map(|l| (alpha - l).abs() / (alpha + l).abs())
        .fold(0.0, f64::max)
}

/// `α* = sqrt(λ_min λ_max)` of the definite factor.
pub fn optimal_alpha(a: &DenseMatrix, j: &BilinearStructure) -> Result<f64> {
    let (eig, norm) = definite_spectrum(a, j)?;
    let (lo, hi) = (eig[0], eig[eig.len() - 1]);
    if lo <= DEFINITE_REL * norm {
        return Err(Error::NotPositiveDefinite { lambda_min: lo });
    }
    Ok((lo * hi).sqrt())
}

/// One J-HSS operator with both shifted matrices factored once.
#[derive(Debug, Clone)]
pub struct JHss {
    alpha: f64,
    j: DenseMatrix,
    j_inv: DenseMatrix,
    s: DenseMatrix,
    h: DenseMatrix,
    h_shift: PivotedLu,
    s_shift: PivotedLu,
}

impl JHss {
    pub fn new(a: &DenseMatrix, j: &BilinearStructure, alpha: f64) -> Result<Self> {
        let (s, h) = lie_jordan(a, j)?;
        let jm = j.realize();
        let h_shift =
            PivotedLu::new(&(&h * jm).shifted(alpha)).map_err(|_| Error::SingularShift)?;
        let s_shift =
            PivotedLu::new(&(&s * jm).shifted(alpha)).map_err(|_| Error::SingularShift)?;
        Ok(Self {
            alpha,
            j: jm.clone(),
            j_inv: j.inverse().clone(),
            s,
            h,
            h_shift,
            s_shift,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `(αJ⁻¹ − M) x + b`.
    fn rhs(&self, m: &DenseMatrix, x: &[f64], b: &[f64]) -> Vec<f64> {
        let jx = self.j_inv.matvec(x);
        let mx = m.matvec(x);
        jx.iter()
            .zip(&mx)
            .zip(b)
            .map(|((u, v), bi)| self.alpha * u - v + bi)
            .collect()
    }

    /// Both half-steps from `x`: returns `(x½, x⁺)`.
    pub fn step(&self, x: &[f64], b: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let y = self.h_shift.solve_vec(&self.rhs(&self.s, x, b));
        let half = self.j.matvec(&y);
        let y = self.s_shift.solve_vec(&self.rhs(&self.h, &half, b));
        let next = self.j.matvec(&y);
        (half, next)
    }

    /// `P_α⁻¹ v = 2α J (SJ + αI)⁻¹ (HJ + αI)⁻¹ v`.
    pub fn apply_preconditioner(&self, v: &[f64]) -> Vec<f64> {
        let y = self.s_shift.solve_vec(&self.h_shift.solve_vec(v));
        self.j
            .matvec(&y)
            .into_iter()
            .map(|t| 2.0 * self.alpha * t)
            .collect()
    }
}

/// Solves `Ax = b` with the J-HSS iteration.
///
/// Fails with `WellDefinednessViolated` when the definite factor is not
/// positive definite, unless `cfg.force` is set.
pub fn j_hss_solve(
    a: &DenseMatrix,
    b: &[f64],
    j: &BilinearStructure,
    cfg: &SolverConfig,
) -> Result<SolveReport> {
    let n = a.check_square("matrix")?;
    if j.dim() != n || b.len() != n {
        return Err(crate::error::mismatch(
            format!("structure and right-hand side of size {n}"),
            format!("{} and {}", j.dim(), b.len()),
        ));
    }
    cfg.validate(n)?;
    let (eig, norm) = definite_spectrum(a, j)?;
    let lambda_min = eig[0];
    let definite = lambda_min > DEFINITE_REL * norm;
    if !definite && !cfg.force {
        return Err(Error::WellDefinednessViolated { lambda_min });
    }
    let alpha = match cfg.alpha {
        Shift::Fixed(a) => a,
        Shift::Auto if definite => (eig[0] * eig[eig.len() - 1]).sqrt(),
        Shift::Auto => 1.0,
    };
    let op = JHss::new(a, j, alpha)?;
    let residual = |x: &[f64]| norm2(&sub_vec(b, &a.matvec(x)));
    let (solution, iterations, residual_history, converged) =
        iterate(b, cfg, cfg.initial_guess(n), residual, |x| op.step(x, b).1);
    let rho_estimate = if cfg.analyze {
        Some(iteration_analysis(a, j, alpha)?.rho)
    } else {
        None
    };
    Ok(SolveReport {
        method: "j-hss",
        solution,
        iterations,
        residual_history,
        converged,
        alpha: Some(alpha),
        rho_estimate,
        bound: Some(contraction_bound(&eig, alpha)),
        hypothesis_holds: Some(definite),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationAnalysis {
    /// Iteration matrix `T_α` of `x⁺ = T_α x + c`.
    pub t: DenseMatrix,
    /// Spectral radius of `T_α`.
    pub rho: f64,
    /// `max_i |α − λ_i| / |α + λ_i|` over the definite factor.
    pub bound: f64,
}

/// Forms `T_α = J(SJ + αI)⁻¹(αI − HJ)(HJ + αI)⁻¹(αI − SJ)J⁻¹` and its
/// spectral radius, plus the eigenvalue bound.
pub fn iteration_analysis(
    a: &DenseMatrix,
    j: &BilinearStructure,
    alpha: f64,
) -> Result<IterationAnalysis> {
    let n = a.check_square("matrix")?;
    let (s, h) = lie_jordan(a, j)?;
    let jm = j.realize();
    let hj = &h * jm;
    let sj = &s * jm;
    let eye = DenseMatrix::identity(n);
    let shift_err = |_| Error::SingularShift;
    let m1 = &(&eye.scale(alpha) - &sj) * j.inverse();
    let m2 = solve_dense(&hj.shifted(alpha), &m1).map_err(shift_err)?;
    let m3 = &(&eye.scale(alpha) - &hj) * &m2;
    let m4 = solve_dense(&sj.shifted(alpha), &m3).map_err(shift_err)?;
    let t = jm * &m4;
    let rho = eigenvalues_general(&t)?.spectral_radius();
    let (eig, _) = definite_spectrum(a, j)?;
    Ok(IterationAnalysis {
        t,
        rho,
        bound: contraction_bound(&eig, alpha),
    })
}

/// Applies `P_α⁻¹` to `v` (two shifted solves and one multiplication by `J`).
pub fn apply_preconditioner(
    a: &DenseMatrix,
    j: &BilinearStructure,
    alpha: f64,
    v: &[f64],
) -> Result<Vec<f64>> {
    if v.len() != a.rows() {
        return Err(crate::error::mismatch(
            format!("vector of length {}", a.rows()),
            v.len().to_string(),
        ));
    }
    Ok(JHss::new(a, j, alpha)?.apply_preconditioner(v))
}

/// Factored J-HSS preconditioner for repeated application inside Krylov solvers.
#[derive(Debug, Clone)]
pub struct JHssPreconditioner {
    op: JHss,
}

impl JHssPreconditioner {
    pub fn new(a: &DenseMatrix, j: &BilinearStructure, alpha: f64) -> Result<Self> {
        Ok(Self {
            op: JHss::new(a, j, alpha)?,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.op.alpha
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.op.apply_preconditioner(v)
    }
}
