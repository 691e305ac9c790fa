//! Matrix splittings, the Lie/Jordan algebras behind them, the factorizations
//! they linearize, and the alternating iterative solvers they induce.
//!
//! All matrices are dense, real and row-major ([`DenseMatrix`]).

pub mod error;
pub mod factorizations;
pub mod generate;
pub mod matkit;
pub mod matrix;
pub mod solvers;
pub mod splittings;
pub mod structures;
pub mod tolerances;

pub use error::{Error, Result};
pub use factorizations::{
    generalized_polar, linearization_check, lu_ldu, polar, qr_qdr, FactorScheme,
    FactorizationResult, LinearizationReport, LinearizedPair, LuForm, QrForm,
};
pub use matrix::DenseMatrix;
pub use solvers::{
    adi_solve, classical_solve, gmres_preconditioned, iteration_analysis, j_hss_solve,
    optimal_alpha, sts_solve, ClassicalMethod, Shift, SolveReport, SolverConfig, StsDirection,
};
pub use splittings::{
    j_split, kron_sum_factors, kronecker_split, kronecker_sum, triangular_split, KroneckerSum,
    PartTag, SplitScheme, Splitting, TriangularMode,
};
pub use structures::{AlgebraSide, BilinearStructure, StructureKind, Symmetry};
