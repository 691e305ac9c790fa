use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::tolerances::QR_DIAG_REL;

use super::{orthogonality_residual, pattern_residual, FactorScheme, FactorizationResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QrForm {
    /// `A = QR`, `R` upper triangular with positive diagonal.
    Qr,
    /// `A = LQ`, `L` lower triangular with positive diagonal.
    Lq,
    /// `A = QDU`, `D` positive diagonal, `U` unit upper triangular.
    Qdr,
}

/// Householder QR with the positive-diagonal convention, so the factors are unique.
pub fn qr_qdr(a: &DenseMatrix, form: QrForm) -> Result<FactorizationResult> {
    a.check_square("matrix")?;
    let upper = |i: usize, j: usize| i <= j;
    let lower = |i: usize, j: usize| i >= j;
    match form {
        QrForm::Qr => {
            let (q, r) = householder_qr(a)?;
            let s = vec![
                orthogonality_residual(&q),
                pattern_residual(&r, upper, false),
            ];
            Ok(FactorizationResult::assemble(
                FactorScheme::Qr,
                vec![q, r],
                a,
                s,
            ))
        }
        QrForm::Lq => {
            let (q, r) = householder_qr(&a.transpose())?;
            let (l, q) = (r.transpose(), q.transpose());
            let s = vec![
                pattern_residual(&l, lower, false),
                orthogonality_residual(&q),
            ];
            Ok(FactorizationResult::assemble(
                FactorScheme::Lq,
                vec![l, q],
                a,
                s,
            ))
        }
        QrForm::Qdr => {
            let (q, r) = householder_qr(a)?;
            let d = r.diagonal();
            let u = DenseMatrix::from_fn(r.rows(), r.cols(), |i, j| {
                if i <= j {
                    r[(i, j)] / d[i]
                } else {
                    0.0
                }
            });
            let dm = DenseMatrix::from_diagonal(&d);
            let s = vec![
                orthogonality_residual(&q),
                pattern_residual(&dm, |i, j| i == j, false),
                pattern_residual(&u, upper, true),
            ];
            Ok(FactorizationResult::assemble(
                FactorScheme::Qdr,
                vec![q, dm, u],
                a,
                s,
            ))
        }
    }
}

/// Returns `(Q, R)` with `diag(R) > 0`.
fn householder_qr(a: &DenseMatrix) -> Result<(DenseMatrix, DenseMatrix)> {
    let n = a.rows();
    let scale = (0..n)
        .map(|j| crate::matrix::norm2(&a.col(j)))
        .fold(0.0, f64::max);
    let mut r = a.clone();
    let mut q = DenseMatrix::identity(n);
    for k in 0..n.saturating_sub(1) {
        let mut v: Vec<f64> = (k..n).map(|i| r[(i, k)]).collect();
        let norm = crate::matrix::norm2(&v);
        if norm == 0.0 {
            continue;
        }
        let alpha = if v[0] > 0.0 { -norm } else { norm };
        v[0] -= alpha;
        let vnorm = crate::matrix::norm2(&v);
        if vnorm == 0.0 {
            continue;
        }
        for x in &mut v {
            *x /= vnorm;
        }
        for j in k..n {
            let s: f64 = v.iter().enumerate().map(|(i, vi)| vi * r[(k + i, j)]).sum();
            for (i, vi) in v.iter().enumerate() {
                r[(k + i, j)] -= 2.0 * vi * s;
            }
        }
        for i in 0..n {
            let s: f64 = v.iter().enumerate().map(|(j, vj)| q[(i, k + j)] * vj).sum();
            for (j, vj) in v.iter().enumerate() {
                q[(i, k + j)] -= 2.0 * s * vj;
            }
        }
        for i in k + 1..n {
            r[(i, k)] = 0.0;
        }
    }
    for i in 0..n {
        if r[(i, i)] < 0.0 {
            for j in 0..n {
                r[(i, j)] = -r[(i, j)];
                q[(j, i)] = -q[(j, i)];
            }
        }
    }
    let min_diag = r.diagonal().into_iter().fold(f64::INFINITY, f64::min);
    if !(min_diag > QR_DIAG_REL * scale) {
        return Err(Error::NumericallySingular(format!(
            "smallest R diagonal {min_diag:e} against scale {scale:e}"
        )));
    }
    Ok((q, r))
}
