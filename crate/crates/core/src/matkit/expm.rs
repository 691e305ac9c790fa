use crate::matrix::DenseMatrix;
use crate::tolerances::{EXPM_SCALED_NORM, EXPM_TERMS};

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
///
/// `A` is scaled by `2^-s` until its Frobenius norm is at most 0.5, the
/// series is summed to 18 terms, and the result is squared `s` times.
///
/// Panics if `a` is not square.
pub fn expm(a: &DenseMatrix) -> DenseMatrix {
    assert!(a.is_square(), "expm needs a square matrix");
    let n = a.rows();
    let norm = a.frobenius_norm();
    let mut squarings = 0u32;
    let mut scaled_norm = norm;
    while scaled_norm > EXPM_SCALED_NORM {
        scaled_norm *= 0.5;
        squarings += 1;
    }
    let x = a.scale(0.5f64.powi(squarings as i32));
    let mut sum = DenseMatrix::identity(n);
    let mut term = DenseMatrix::identity(n);
    for k in 1..=EXPM_TERMS {
        term = (&term * &x).scale(1.0 / k as f64);
        sum = &sum + &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_gives_identity() {
        assert_eq!(expm(&DenseMatrix::zeros(3, 3)), DenseMatrix::identity(3));
    }

    #[test]
    fn diagonal_exponentiates_entrywise() {
        let e = expm(&DenseMatrix::from_diagonal(&[1.0, 2.0]));
        assert!((e[(0, 0)] - 1f64.exp()).abs() < 1e-14 * 1f64.exp());
        assert!((e[(1, 1)] - 2f64.exp()).abs() < 1e-13 * 2f64.exp());
        assert_eq!(e[(0, 1)], 0.0);
    }

    #[test]
    fn nilpotent_series_terminates() {
        let e = expm(&DenseMatrix::from_rows(&[[0.0, 1.0], [0.0, 0.0]]));
        assert_eq!(e, DenseMatrix::from_rows(&[[1.0, 1.0], [0.0, 1.0]]));
    }

    #[test]
    fn rotation_generator() {
        let t = 2.5;
        let e = expm(&DenseMatrix::from_rows(&[[0.0, t], [-t, 0.0]]));
        let want = DenseMatrix::from_rows(&[[t.cos(), t.sin()], [-t.sin(), t.cos()]]);
        assert!(e.dist(&want) < 1e-13);
    }
}
