//! Fixed benchmark inputs.

use liesplit_core::{generate, BilinearStructure, DenseMatrix};

/// `tridiag(−1, 2, −1)`, the 1D second-difference operator.
pub fn laplacian_1d(n: usize) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| match i.abs_diff(j) {
        0 => 2.0,
        1 => -1.0,
        _ => 0.0,
    })
}

/// A definite J-HSS instance with right-hand side `A·1`.
pub fn jhss_problem(j: &BilinearStructure, seed: u64) -> (DenseMatrix, Vec<f64>) {
    let a = generate::definite_instance(j, &mut generate::rng(seed));
    let b = a.matvec(&vec![1.0; a.rows()]);
    (a, b)
}

/// A random matrix with entries on `[−1, 1]` scaled to unit Frobenius norm.
pub fn unit_matrix(n: usize, seed: u64) -> DenseMatrix {
    generate::unit_norm(n, &mut generate::rng(seed))
}
