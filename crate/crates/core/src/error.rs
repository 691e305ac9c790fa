use thiserror::Error;

/// Errors raised by the kernels, splittings, factorizations and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("SingularMatrix: pivot {pivot:e} at step {step} below threshold")]
    SingularMatrix { step: usize, pivot: f64 },
    #[error("NotSymmetric: asymmetry {asymmetry:e} relative to norm {norm:e}")]
    NotSymmetric { asymmetry: f64, norm: f64 },
    #[error("NoConvergence: {what} did not converge after {iterations} iterations")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
    },
    #[error(
        "NegativeRealEigenvalue: eigenvalue {re} + {im}i lies on the closed negative real axis"
    )]
    NegativeRealEigenvalue { re: f64, im: f64 },
    #[error("SingularCustomJ: custom structure matrix is singular")]
    SingularCustomJ,
    #[error("custom structure matrix is neither symmetric nor skew-symmetric")]
    NotSignSymmetric,
    #[error("NotAKroneckerSum: residual {residual:e} relative to norm {norm:e}")]
    NotAKroneckerSum { residual: f64, norm: f64 },
    #[error("ZeroLeadingMinor({0}): factorization does not exist without pivoting")]
    ZeroLeadingMinor(usize),
    #[error("NumericallySingular: {0}")]
    NumericallySingular(String),
    #[error("ExistenceViolated: A*A has eigenvalue {re} + {im}i on the closed negative real axis")]
    ExistenceViolated { re: f64, im: f64 },
    #[error("FactorizationFailed(h = {h:e}): {reason}")]
    FactorizationFailed { h: f64, reason: String },
    #[error("WellDefinednessViolated: smallest eigenvalue {lambda_min:e} of the definite factor is not positive")]
    WellDefinednessViolated { lambda_min: f64 },
    #[error("SingularShift: shifted coefficient matrix is singular")]
    SingularShift,
    #[error("NotPositiveDefinite: smallest eigenvalue {lambda_min:e}")]
    NotPositiveDefinite { lambda_min: f64 },
    #[error("ZeroDiagonal: diagonal entry {0} is zero")]
    ZeroDiagonal(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn mismatch(expected: impl Into<String>, found: impl Into<String>) -> Error {
    Error::DimensionMismatch {
        expected: expected.into(),
        found: found.into(),
    }
}
