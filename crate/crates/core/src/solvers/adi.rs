//! ADI for `M = A ⊗ I + I ⊗ B`.
//!
//! With `x` read row-major as an `n×n` matrix `X`, `(A ⊗ I)x` is `AX` and
//! `(I ⊗ B)x` is `XBᵀ`, so both shifted half-steps are `n` right-hand sides
//! against one `n×n` factorization.

use crate::error::{Error, Result};
use crate::matkit::{eigenvalues_general, solve_dense, PivotedLu};
use crate::matrix::{norm2, sub_vec, DenseMatrix};
use crate::splittings::KroneckerSum;

use super::{iterate, Shift, SolveReport, SolverConfig};

fn reshape(v: &[f64], n: usize) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| v[i * n + j])
}

/// One ADI operator with `αI + A` and `αI + B` factored once.
#[derive(Debug, Clone)]
pub struct Adi {
    alpha: f64,
    sum: KroneckerSum,
    left: PivotedLu,
    right: PivotedLu,
}

impl Adi {
    pub fn new(a: &DenseMatrix, b: &DenseMatrix, alpha: f64) -> Result<Self> {
        let sum = KroneckerSum::new(a.clone(), b.clone())?;
        let left = PivotedLu::new(&a.shifted(alpha)).map_err(|_| Error::SingularShift)?;
        let right = PivotedLu::new(&b.shifted(alpha)).map_err(|_| Error::SingularShift)?;
        Ok(Self {
            alpha,
            sum,
            left,
            right,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn n(&self) -> usize {
        self.sum.n()
    }

    /// `(αI + A ⊗ I)⁻¹ r`, as `(αI + A)⁻¹R`.
    pub fn solve_left_shift(&self, r: &[f64]) -> Vec<f64> {
        let rm = reshape(r, self.n());
        solve_columns(&self.left, &rm).into_vec()
    }

    /// `(αI + I ⊗ B)⁻¹ r`, as `((αI + B)⁻¹Rᵀ)ᵀ`.
    pub fn solve_right_shift(&self, r: &[f64]) -> Vec<f64> {
        let rm = reshape(r, self.n()).transpose();
        solve_columns(&self.right, &rm).transpose().into_vec()
    }

    /// Both half-steps from `x`: returns `(x½, x⁺)`.
    pub fn step(&self, x: &[f64], rhs: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let n = self.n();
        let xm = reshape(x, n);
        let xb = &xm * &self.sum.b.transpose();
        let r1: Vec<f64> = x
            .iter()
            .zip(xb.as_slice())
            .zip(rhs)
            .map(|((xi, v), ri)| self.alpha * xi - v + ri)
            .collect();
        let half = self.solve_left_shift(&r1);
        let ah = &self.sum.a * &reshape(&half, n);
        let r2: Vec<f64> = half
            .iter()
            .zip(ah.as_slice())
            .zip(rhs)
            .map(|((hi, v), ri)| self.alpha * hi - v + ri)
            .collect();
        let next = self.solve_right_shift(&r2);
        (half, next)
    }
}

fn solve_columns(lu: &PivotedLu, r: &DenseMatrix) -> DenseMatrix {
    let n = r.rows();
    let cols: Vec<Vec<f64>> = (0..r.cols()).map(|j| lu.solve_vec(&r.col(j))).collect();
    DenseMatrix::from_fn(n, r.cols(), |i, j| cols[j][i])
}

/// `T = (αI + I⊗B)⁻¹(αI − A⊗I)(αI + A⊗I)⁻¹(αI − I⊗B)`, formed densely.
pub fn adi_iteration_matrix(a: &DenseMatrix, b: &DenseMatrix, alpha: f64) -> Result<DenseMatrix> {
    let sum = KroneckerSum::new(a.clone(), b.clone())?;
    let n2 = sum.n() * sum.n();
    let eye = DenseMatrix::identity(n2).scale(alpha);
    let left = sum.left_term();
    let right = sum.right_term();
    let shift_err = |_| Error::SingularShift;
    let m1 = solve_dense(&left.shifted(alpha), &(&eye - &right)).map_err(shift_err)?;
    let m2 = &(&eye - &left) * &m1;
    solve_dense(&right.shifted(alpha), &m2).map_err(shift_err)
}

/// Solves `(A ⊗ I + I ⊗ B)x = rhs` with ADI. The automatic shift is 1.
pub fn adi_solve(
    a: &DenseMatrix,
    b: &DenseMatrix,
    rhs: &[f64],
    cfg: &SolverConfig,
) -> Result<SolveReport> {
    let alpha = match cfg.alpha {
        Shift::Fixed(a) => a,
        Shift::Auto => 1.0,
    };
    let op = Adi::new(a, b, alpha)?;
    let n = op.n();
    if rhs.len() != n * n {
        return Err(crate::error::mismatch(
            format!("right-hand side of length {}", n * n),
            rhs.len().to_string(),
        ));
    }
    cfg.validate(n * n)?;
    let residual = |x: &[f64]| norm2(&sub_vec(rhs, &op.sum.apply(x)));
    let (solution, iterations, residual_history, converged) =
        iterate(rhs, cfg, cfg.initial_guess(n * n), residual, |x| {
            op.step(x, rhs).1
        });
    let rho_estimate = if cfg.analyze {
        Some(eigenvalues_general(&adi_iteration_matrix(a, b, alpha)?)?.spectral_radius())
    } else {
        None
    };
    Ok(SolveReport {
        method: "adi",
        solution,
        iterations,
        residual_history,
        converged,
        alpha: Some(alpha),
        rho_estimate,
        bound: None,
        hypothesis_holds: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splittings::kronecker_sum;

    fn laplacian(n: usize) -> DenseMatrix {
        DenseMatrix::from_fn(n, n, |i, j| match i.abs_diff(j) {
            0 => 2.0,
            1 => -1.0,
            _ => 0.0,
        })
    }

    #[test]
    fn laplacian_pair_converges_to_ones() {
        let l = laplacian(8);
        let m = kronecker_sum(&l, &l).unwrap();
        let rhs = m.matvec(&vec![1.0; 64]);
        let r = adi_solve(&l, &l, &rhs, &SolverConfig::with_alpha(1.0)).unwrap();
        assert!(r.converged);
        assert!(r.solution.iter().all(|x| (x - 1.0).abs() < 1e-8));
    }

    #[test]
    fn half_steps_match_dense_solves() {
        let a = DenseMatrix::from_rows(&[[3.0, 1.0, 0.0], [0.5, 2.0, -1.0], [0.0, 0.2, 4.0]]);
        let b = DenseMatrix::from_rows(&[[1.0, -0.3, 0.1], [0.4, 2.5, 0.0], [0.0, 1.0, 1.5]]);
        let op = Adi::new(&a, &b, 0.8).unwrap();
        let sum = KroneckerSum::new(a, b).unwrap();
        let r: Vec<f64> = (0..9).map(|i| (i as f64).sin()).collect();
        let dense_left =
            solve_dense(&sum.left_term().shifted(0.8), &DenseMatrix::column(&r)).unwrap();
        let dense_right =
            solve_dense(&sum.right_term().shifted(0.8), &DenseMatrix::column(&r)).unwrap();
        assert!(norm2(&sub_vec(&op.solve_left_shift(&r), dense_left.as_slice())) < 1e-12);
        assert!(norm2(&sub_vec(&op.solve_right_shift(&r), dense_right.as_slice())) < 1e-12);
    }

    #[test]
    fn scalar_pair_contracts_by_square() {
        let c = 3.0;
        let alpha = 1.0;
        let a = DenseMatrix::identity(2).scale(c);
        let t = adi_iteration_matrix(&a, &a, alpha).unwrap();
        let q = ((alpha - c) / (alpha + c)).powi(2);
        assert!(t.dist(&DenseMatrix::identity(4).scale(q)) < 1e-14);
    }

    #[test]
    fn zero_right_term_has_unit_factor() {
        let a = DenseMatrix::from_diagonal(&[1.0, 3.0]);
        let t = adi_iteration_matrix(&a, &DenseMatrix::zeros(2, 2), 1.0).unwrap();
        let rho = eigenvalues_general(&t).unwrap().spectral_radius();
        assert!((rho - 0.5).abs() < 1e-14);
    }
}
