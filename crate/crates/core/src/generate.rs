//! Seeded random test matrices.
//!
//! Every generator draws from a [`ChaCha8Rng`], so a seed fixes the output on
//! all platforms.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::factorizations::{qr_qdr, QrForm};
use crate::matrix::DenseMatrix;
use crate::structures::{AlgebraSide, BilinearStructure};

/// The generator behind every seeded instance.
pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries uniform on `[−1, 1]`.
pub fn matrix(n: usize, rng: &mut impl Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..=1.0))
}

pub fn vector(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect()
}

/// Uniform matrix rescaled to unit Frobenius norm.
pub fn unit_norm(n: usize, rng: &mut impl Rng) -> DenseMatrix {
    let m = matrix(n, rng);
    let s = m.frobenius_norm();
    m.scale(1.0 / s)
}

pub fn skew(n: usize, rng: &mut impl Rng) -> DenseMatrix {
    matrix(n, rng).skew_part()
}

/// Orthogonal factor of a uniform matrix.
pub fn orthogonal(n: usize, rng: &mut impl Rng) -> DenseMatrix {
    loop {
        if let Ok(f) = qr_qdr(&matrix(n, rng), QrForm::Qr) {
            return f.factors[0].clone();
        }
    }
}

/// `QΛQᵀ` with `λ_min = lo`, `λ_max = hi` and the rest uniform in between.
pub fn spd(n: usize, lo: f64, hi: f64, rng: &mut impl Rng) -> DenseMatrix {
    let q = orthogonal(n, rng);
    let d: Vec<f64> = (0..n)
        .map(|i| match i {
            0 => lo,
            _ if i == n - 1 => hi,
            _ => rng.gen_range(lo..=hi),
        })
        .collect();
    (&(&q * &DenseMatrix::from_diagonal(&d)) * &q.transpose()).sym_part()
}

/// `A = (X + Y)J⁻¹` with `X` spd (spectrum in `[0.5, 5]`) and `Y` skew, so the
/// definite factor of `A` is exactly `X`.
pub fn definite_instance(j: &BilinearStructure, rng: &mut impl Rng) -> DenseMatrix {
    let n = j.dim();
    let x = spd(n, 0.5, 5.0, rng);
    let y = skew(n, rng);
    &(&x + &y) * j.inverse()
}

/// `X + Y` with `X` spd and `Y` skew, so `½(A + Aᵀ)` is positive definite.
pub fn positive_definite_nonsymmetric(n: usize, rng: &mut impl Rng) -> DenseMatrix {
    let x = spd(n, 0.5, 5.0, rng);
    let y = skew(n, rng).scale(2.0);
    &x + &y
}

/// Uniform off-diagonal entries with `|a_ii|` exceeding the row sum by at
/// least one.
pub fn diagonally_dominant(n: usize, rng: &mut impl Rng) -> DenseMatrix {
    let mut m = matrix(n, rng);
    for i in 0..n {
        let off: f64 = (0..n).filter(|&j| j != i).map(|j| m[(i, j)].abs()).sum();
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        m[(i, i)] = sign * (off + rng.gen_range(1.0..=2.0));
    }
    m
}

/// `I + E` with `‖E‖_F = radius`.
pub fn near_identity(n: usize, radius: f64, rng: &mut impl Rng) -> DenseMatrix {
    &DenseMatrix::identity(n) + &unit_norm(n, rng).scale(radius)
}

/// Projection of a uniform matrix onto the Lie or Jordan algebra of `j`.
pub fn algebra_member(j: &BilinearStructure, side: AlgebraSide, rng: &mut impl Rng) -> DenseMatrix {
    j.project(&matrix(j.dim(), rng), side)
        .expect("dimensions agree")
}
