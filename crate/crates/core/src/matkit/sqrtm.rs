use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::tolerances::{MATFUN_MAX_ITER, SQRTM_RESIDUAL_REL};

use super::eigen::eigenvalues_general;
use super::lu::PivotedLu;

/// Principal square root by the scaled Denman–Beavers iteration.
pub fn sqrtm_principal(a: &DenseMatrix) -> Result<DenseMatrix> {
    sqrtm_principal_with(a, SQRTM_RESIDUAL_REL)
}

pub fn sqrtm_principal_with(a: &DenseMatrix, residual_rel: f64) -> Result<DenseMatrix> {
    let n = a.check_square("matrix")?;
    let norm = a.frobenius_norm();
    let eig = eigenvalues_general(a)?;
    let axis_tol = 1e-12 * norm.max(f64::MIN_POSITIVE);
    if let Some(z) = eig
        .values
        .iter()
        .find(|z| z.im.abs() <= axis_tol && z.re <= axis_tol)
    {
        return Err(Error::NegativeRealEigenvalue { re: z.re, im: z.im });
    }

    let mut y = a.clone();
    let mut z = DenseMatrix::identity(n);
    let mut scaling = true;
    for _ in 0..MATFUN_MAX_ITER {
        let ly = PivotedLu::new(&y)
            .map_err(|_| Error::NumericallySingular("Denman-Beavers iterate".into()))?;
        let lz = PivotedLu::new(&z)
            .map_err(|_| Error::NumericallySingular("Denman-Beavers iterate".into()))?;
        let mu = if scaling {
            let det = (ly.determinant() * lz.determinant()).abs();
            let mu = det.powf(-1.0 / (2.0 * n as f64));
            if mu.is_finite() && mu > 0.0 {
                mu
            } else {
                1.0
            }
        } else {
            1.0
        };
        let y_inv = inverse_from(&ly, n);
        let z_inv = inverse_from(&lz, n);
        let y_next = (&y.scale(mu) + &z_inv.scale(1.0 / mu)).scale(0.5);
        let z_next = (&z.scale(mu) + &y_inv.scale(1.0 / mu)).scale(0.5);
        let change = y_next.dist(&y) / y_next.frobenius_norm();
        y = y_next;
        z = z_next;
        if change < 1e-2 {
            scaling = false;
        }
        if change <= 1e-15 * (n as f64) {
            break;
        }
    }
    let residual = (&y * &y).dist(a);
    if residual > residual_rel * norm {
        return Err(Error::NoConvergence {
            what: "Denman-Beavers",
            iterations: MATFUN_MAX_ITER,
        });
    }
    Ok(y)
}

fn inverse_from(lu: &PivotedLu, n: usize) -> DenseMatrix {
    lu.solve(&DenseMatrix::identity(n))
        .expect("square identity rhs")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_root() {
        let x = sqrtm_principal(&DenseMatrix::identity(4)).unwrap();
        assert!(x.dist(&DenseMatrix::identity(4)) < 1e-15);
    }

    #[test]
    fn diagonal_root() {
        let x = sqrtm_principal(&DenseMatrix::from_diagonal(&[4.0, 9.0])).unwrap();
        assert!(x.dist(&DenseMatrix::from_diagonal(&[2.0, 3.0])) < 1e-14);
    }

    #[test]
    fn rejects_negative_real_spectrum() {
        let err = sqrtm_principal(&DenseMatrix::from_diagonal(&[1.0, -1.0])).unwrap_err();
        assert!(matches!(err, Error::NegativeRealEigenvalue { .. }));
        let err = sqrtm_principal(&DenseMatrix::from_diagonal(&[1.0, 0.0])).unwrap_err();
        assert!(matches!(err, Error::NegativeRealEigenvalue { .. }));
    }

    #[test]
    fn rotation_has_principal_root() {
        // 120 degree rotation: eigenvalues e^{±2πi/3}, root is the 60 degree rotation.
        let t = 2.0 * std::f64::consts::PI / 3.0;
        let a = DenseMatrix::from_rows(&[[t.cos(), -t.sin()], [t.sin(), t.cos()]]);
        let x = sqrtm_principal(&a).unwrap();
        let h = t / 2.0;
        let want = DenseMatrix::from_rows(&[[h.cos(), -h.sin()], [h.sin(), h.cos()]]);
        assert!(x.dist(&want) < 1e-12);
    }
}
