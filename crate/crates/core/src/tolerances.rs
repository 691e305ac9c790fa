//! Default tolerances, gathered in one place.
//!
//! Every routine that takes a tolerance uses these values unless the caller
//! overrides them through the corresponding `*_with` entry point or config.

/// Pivot rejection in pivoted elimination, relative to the largest row norm.
pub const PIVOT_REL: f64 = 1e-14;

/// Input asymmetry accepted by the symmetric eigensolver, relative to `‖A‖_F`.
pub const SYMMETRY_REL: f64 = 1e-12;

/// Jacobi sweeps stop once the off-diagonal norm drops below this fraction of `‖A‖_F`.
pub const JACOBI_OFF_REL: f64 = 1e-13;

/// Maximum number of cyclic Jacobi sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Shifted-QR iterations allowed per matrix dimension.
pub const QR_SWEEPS_PER_DIM: usize = 100;

/// The scaled argument of the exponential series satisfies `‖A‖_F / 2^s ≤` this.
pub const EXPM_SCALED_NORM: f64 = 0.5;

/// Number of Taylor terms (beyond the identity) in the exponential series.
pub const EXPM_TERMS: usize = 18;

/// Accepted square-root residual `‖X² − A‖_F / ‖A‖_F`.
pub const SQRTM_RESIDUAL_REL: f64 = 1e-10;

/// Iteration cap shared by Denman–Beavers and polar Newton.
pub const MATFUN_MAX_ITER: usize = 100;

/// Algebra membership: `residual ≤ MEMBERSHIP_REL · (1 + ‖W‖_F)`.
pub const MEMBERSHIP_REL: f64 = 1e-12;

/// Pivot rejection in pivot-free LU, relative to the largest entry of `A`.
pub const LU_PIVOT_REL: f64 = 1e-14;

/// Smallest accepted `R` diagonal in QR, relative to the largest column norm.
pub const QR_DIAG_REL: f64 = 1e-12;

/// Orthogonality residual `‖XᵀX − I‖_F` at which polar Newton stops.
pub const POLAR_ORTHO: f64 = 1e-12;

/// Product residual a factorization must meet, relative to `‖A‖_F`.
pub const FACTOR_RESIDUAL_REL: f64 = 1e-10;

/// Kronecker-sum subspace test, relative to `‖M‖_F`.
pub const KRON_RESIDUAL_REL: f64 = 1e-10;

/// Definiteness threshold on `λ_min`, relative to the Frobenius norm of the factor.
pub const DEFINITE_REL: f64 = 1e-10;

/// Default relative residual stopping threshold for iterative solvers.
pub const SOLVER_TOL: f64 = 1e-10;

/// Default iteration cap for iterative solvers.
pub const SOLVER_MAX_ITER: usize = 10_000;

/// Default finite-difference step grid for linearization checks.
pub const LINEARIZATION_STEPS: [f64; 4] = [1e-2, 1e-3, 1e-4, 1e-5];

/// Minimum accepted fitted order in linearization checks.
pub const LINEARIZATION_MIN_ORDER: f64 = 0.9;

/// A factor deviation `‖F(h) − I − h·part‖_F` at or below this counts as exact.
pub const LINEARIZATION_EXACT: f64 = 1e-13;
