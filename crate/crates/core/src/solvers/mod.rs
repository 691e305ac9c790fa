//! Splitting-based iterative solvers and the spectral analysis around them.

mod adi;
mod classical;
mod gmres;
mod jhss;
mod sts;

pub use adi::{adi_iteration_matrix, adi_solve, Adi};
pub use classical::{classical_iteration_matrix, classical_solve, ClassicalMethod};
pub use gmres::gmres_preconditioned;
pub use jhss::{
    apply_preconditioner, contraction_bound, definite_factor, iteration_analysis, j_hss_solve,
    optimal_alpha, IterationAnalysis, JHss, JHssPreconditioner,
};
pub use sts::{kellogg_norm, sts_iteration_matrix, sts_solve, Sts, StsDirection};

use crate::error::{Error, Result};
use crate::matrix::norm2;
use crate::tolerances::{SOLVER_MAX_ITER, SOLVER_TOL};

/// Shift parameter `α`: fixed, or chosen by the solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shift {
    /// `α*` when the definite factor exists (J-HSS), otherwise 1.
    Auto,
    Fixed(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub alpha: Shift,
    /// Relative residual `‖b − Ax‖₂/‖b‖₂` at which iteration stops.
    pub tol: f64,
    pub max_iter: usize,
    /// Initial guess; zero when absent.
    pub x0: Option<Vec<f64>>,
    /// Run J-HSS even when the definite-factor hypothesis fails.
    pub force: bool,
    /// Form the iteration matrix and report its spectral radius.
    pub analyze: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            alpha: Shift::Auto,
            tol: SOLVER_TOL,
            max_iter: SOLVER_MAX_ITER,
            x0: None,
            force: false,
            analyze: false,
        }
    }
}

impl SolverConfig {
    pub fn with_alpha(alpha: f64) -> Self {
        Self {
            alpha: Shift::Fixed(alpha),
            ..Self::default()
        }
    }

    pub(crate) fn validate(&self, n: usize) -> Result<()> {
        if let Shift::Fixed(a) = self.alpha {
            if !(a > 0.0 && a.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "alpha must be positive, got {a}"
                )));
            }
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidConfig("max_iter must be at least 1".into()));
        }
        if let Some(x0) = &self.x0 {
            if x0.len() != n {
                return Err(crate::error::mismatch(
                    format!("initial guess of length {n}"),
                    x0.len().to_string(),
                ));
            }
        }
        Ok(())
    }

    pub(crate) fn initial_guess(&self, n: usize) -> Vec<f64> {
        self.x0.clone().unwrap_or_else(|| vec![0.0; n])
    }
}

/// Outcome of an iterative solve.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub method: &'static str,
    pub solution: Vec<f64>,
    pub iterations: usize,
    /// Relative residuals, starting with the initial guess.
    pub residual_history: Vec<f64>,
    pub converged: bool,
    pub alpha: Option<f64>,
    /// Spectral radius of the iteration matrix, when computed.
    pub rho_estimate: Option<f64>,
    /// Upper bound on the spectral radius, when the method has one.
    pub bound: Option<f64>,
    /// Whether the convergence hypothesis of the method was verified.
    pub hypothesis_holds: Option<bool>,
}

impl SolveReport {
    pub fn final_residual(&self) -> f64 {
        *self.residual_history.last().expect("history is nonempty")
    }
}

/// Relative-residual bookkeeping shared by the stationary solvers.
pub(crate) struct Monitor {
    scale: f64,
    tol: f64,
    pub history: Vec<f64>,
}

impl Monitor {
    pub fn new(b: &[f64], tol: f64) -> Self {
        let bn = norm2(b);
        Self {
            scale: if bn > 0.0 { bn } else { 1.0 },
            tol,
            history: Vec::new(),
        }
    }

    /// Records `‖r‖` and reports whether it meets the tolerance.
    pub fn record(&mut self, residual_norm: f64) -> bool {
        let rel = residual_norm / self.scale;
        self.history.push(rel);
        rel <= self.tol
    }
}

/// Runs `step` until the residual meets `cfg.tol` or `cfg.max_iter` is reached.
pub(crate) fn iterate(
    b: &[f64],
    cfg: &SolverConfig,
    mut x: Vec<f64>,
    residual: impl Fn(&[f64]) -> f64,
    mut step: impl FnMut(&[f64]) -> Vec<f64>,
) -> (Vec<f64>, usize, Vec<f64>, bool) {
    let mut monitor = Monitor::new(b, cfg.tol);
    let mut converged = monitor.record(residual(&x));
    let mut iterations = 0;
    while !converged && iterations < cfg.max_iter {
        x = step(&x);
        iterations += 1;
        let r = residual(&x);
        if !r.is_finite() {
            monitor.history.push(f64::INFINITY);
            break;
        }
        converged = monitor.record(r);
    }
    (x, iterations, monitor.history, converged)
}
