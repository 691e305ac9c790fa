//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use liesplit_core::matkit::solve_dense;
use liesplit_core::DenseMatrix;

/// `JXᵀJ⁻¹` by explicit products.
pub fn reflect(x: &DenseMatrix, j: &DenseMatrix, j_inv: &DenseMatrix) -> DenseMatrix {
    &(j * &x.transpose()) * j_inv
}

pub fn lie_part(x: &DenseMatrix, j: &DenseMatrix, j_inv: &DenseMatrix) -> DenseMatrix {
    (x - &reflect(x, j, j_inv)).scale(0.5)
}

pub fn jordan_part(x: &DenseMatrix, j: &DenseMatrix, j_inv: &DenseMatrix) -> DenseMatrix {
    (x + &reflect(x, j, j_inv)).scale(0.5)
}

/// `‖WᵀJ + JW‖_F`.
pub fn lie_residual(w: &DenseMatrix, j: &DenseMatrix) -> f64 {
    (&(&w.transpose() * j) + &(j * w)).frobenius_norm()
}

/// `‖WᵀJ − JW‖_F`.
pub fn jordan_residual(w: &DenseMatrix, j: &DenseMatrix) -> f64 {
    (&(&w.transpose() * j) - &(j * w)).frobenius_norm()
}

/// Entrywise `Tr(AᵀB)`.
pub fn trace_inner(a: &DenseMatrix, b: &DenseMatrix) -> f64 {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(x, y)| x * y)
        .sum()
}

/// Number of eigenvalues of symmetric `a` below `x`, from the signs of the
/// pivots of an unpivoted `LDLᵀ` of `a − xI` (Sylvester's law of inertia).
pub fn count_below(a: &DenseMatrix, x: f64) -> usize {
    let n = a.rows();
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|k| a[(i, k)] - if i == k { x } else { 0.0 })
                .collect()
        })
        .collect();
    let mut negatives = 0;
    for k in 0..n {
        let mut d = m[k][k];
        if d == 0.0 {
            d = -f64::EPSILON * (1.0 + x.abs());
        }
        if d < 0.0 {
            negatives += 1;
        }
        for i in k + 1..n {
            let f = m[i][k] / d;
            for c in k + 1..n {
                m[i][c] -= f * m[k][c];
            }
        }
    }
    negatives
}

/// Eigenvalues of symmetric `a`, ascending, by bisection on the inertia count.
pub fn inertia_eigenvalues(a: &DenseMatrix) -> Vec<f64> {
    let n = a.rows();
    let radius = (0..n)
        .map(|i| (0..n).map(|k| a[(i, k)].abs()).sum::<f64>())
        .fold(0.0, f64::max)
        + 1.0;
    (0..n)
        .map(|k| {
            let (mut lo, mut hi) = (-radius, radius);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if count_below(a, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

/// True when symmetric `a` has a Cholesky factor.
pub fn is_positive_definite(a: &DenseMatrix) -> bool {
    let n = a.rows();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..=i {
            let s: f64 = (0..k).map(|c| l[i][c] * l[k][c]).sum();
            if i == k {
                let d = a[(i, i)] - s;
                if d <= 0.0 {
                    return false;
                }
                l[i][i] = d.sqrt();
            } else {
                l[i][k] = (a[(i, k)] - s) / l[k][k];
            }
        }
    }
    true
}

pub fn solve_vec(a: &DenseMatrix, b: &[f64]) -> Vec<f64> {
    solve_dense(a, &DenseMatrix::column(b))
        .expect("nonsingular")
        .into_vec()
}

pub fn rel_dist(x: &[f64], y: &[f64]) -> f64 {
    let d: f64 = x
        .iter()
        .zip(y)
        .map(|(a, b)| (a - b).powi(2))
        .sum::<f64>()
        .sqrt();
    let s: f64 = y.iter().map(|v| v * v).sum::<f64>().sqrt();
    d / s.max(f64::MIN_POSITIVE)
}

/// Least-squares slope of `ln e` against `ln h`.
pub fn loglog_slope(h: &[f64], e: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = h.iter().zip(e).map(|(a, b)| (a.ln(), b.ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let num: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = pts.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    num / den
}
