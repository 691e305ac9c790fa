//! Dense real kernels shared by every other module: pivoted solves,
//! eigenvalues, the matrix exponential and the principal square root.

mod eigen;
mod expm;
mod lu;
mod sqrtm;

pub use eigen::{
    eigenvalues_general, spectral_radius, sym_eigenvalues, sym_eigenvalues_with, EigenReport,
};
pub use expm::expm;
pub use lu::{inverse, solve_dense, solve_lower, solve_upper, PivotedLu};
pub use sqrtm::{sqrtm_principal, sqrtm_principal_with};
