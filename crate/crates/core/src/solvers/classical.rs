//! Jacobi and Gauss-Seidel stationary iterations, `x ← M⁻¹(Nx + b)` for
//! `A = M − N`.

use crate::error::{Error, Result};
use crate::matkit::{eigenvalues_general, solve_dense, solve_lower, solve_upper};
use crate::matrix::{norm2, sub_vec, DenseMatrix};

use super::{iterate, SolveReport, SolverConfig};

/// Largest system whose iteration-matrix spectral radius is reported.
const RHO_MAX_DIM: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalMethod {
    /// `M = D`.
    Jacobi,
    /// `M = D + L₀`.
    GaussSeidelForward,
    /// `M = D + U₀`.
    GaussSeidelBackward,
}

impl ClassicalMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassicalMethod::Jacobi => "jacobi",
            ClassicalMethod::GaussSeidelForward => "gauss-seidel-forward",
            ClassicalMethod::GaussSeidelBackward => "gauss-seidel-backward",
        }
    }

    fn split(self, a: &DenseMatrix) -> (DenseMatrix, DenseMatrix) {
        let m = match self {
            ClassicalMethod::Jacobi => a.diagonal_part(),
            ClassicalMethod::GaussSeidelForward => &a.diagonal_part() + &a.strict_lower(),
            ClassicalMethod::GaussSeidelBackward => &a.diagonal_part() + &a.strict_upper(),
        };
        let n = &m - a;
        (m, n)
    }
}

fn check_diagonal(a: &DenseMatrix) -> Result<()> {
    match a.diagonal().iter().position(|d| *d == 0.0) {
        Some(i) => Err(Error::ZeroDiagonal(i)),
        None => Ok(()),
    }
}

/// `T = M⁻¹N`.
pub fn classical_iteration_matrix(a: &DenseMatrix, method: ClassicalMethod) -> Result<DenseMatrix> {
    a.check_square("matrix")?;
    check_diagonal(a)?;
    let (m, n) = method.split(a);
    solve_dense(&m, &n)
}

pub fn classical_solve(
    a: &DenseMatrix,
    b: &[f64],
    method: ClassicalMethod,
    cfg: &SolverConfig,
) -> Result<SolveReport> {
    let dim = a.check_square("matrix")?;
    if b.len() != dim {
        return Err(crate::error::mismatch(
            format!("right-hand side of length {dim}"),
            b.len().to_string(),
        ));
    }
    cfg.validate(dim)?;
    check_diagonal(a)?;
    let (m, n) = method.split(a);
    let step = |x: &[f64]| {
        let r: Vec<f64> = n.matvec(x).iter().zip(b).map(|(u, v)| u + v).collect();
        match method {
            ClassicalMethod::Jacobi => r.iter().zip(m.diagonal()).map(|(u, d)| u / d).collect(),
            ClassicalMethod::GaussSeidelForward => solve_lower(&m, &r).expect("nonzero diagonal"),
            ClassicalMethod::GaussSeidelBackward => solve_upper(&m, &r).expect("nonzero diagonal"),
        }
    };
    let residual = |x: &[f64]| norm2(&sub_vec(b, &a.matvec(x)));
    let (solution, iterations, residual_history, converged) =
        iterate(b, cfg, cfg.initial_guess(dim), residual, step);
    let rho_estimate = if dim <= RHO_MAX_DIM {
        Some(eigenvalues_general(&classical_iteration_matrix(a, method)?)?.spectral_radius())
    } else {
        None
    };
    Ok(SolveReport {
        method: method.as_str(),
        solution,
        iterations,
        residual_history,
        converged,
        alpha: None,
        rho_estimate,
        bound: None,
        hypothesis_holds: None,
    })
}
