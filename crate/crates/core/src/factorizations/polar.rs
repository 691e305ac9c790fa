use crate::error::{Error, Result};
use crate::matkit::{eigenvalues_general, inverse, solve_dense, sqrtm_principal};
use crate::matrix::DenseMatrix;
use crate::structures::{AlgebraSide, BilinearStructure};
use crate::tolerances::{MATFUN_MAX_ITER, POLAR_ORTHO};

use super::{orthogonality_residual, FactorScheme, FactorizationResult};

/// Polar factorization `A = QP` by scaled Newton iteration `X ← ½(γX + γ⁻¹X⁻ᵀ)`.
pub fn polar(a: &DenseMatrix) -> Result<FactorizationResult> {
    a.check_square("matrix")?;
    let singular = |_| Error::NumericallySingular("polar Newton iterate".into());
    let mut x = a.clone();
    let mut scaling = true;
    let mut converged = false;
    for _ in 0..MATFUN_MAX_ITER {
        let x_inv = inverse(&x).map_err(singular)?;
        let gamma = if scaling {
            (x_inv.frobenius_norm() / x.frobenius_norm()).sqrt()
        } else {
            1.0
        };
        let next = (&x.scale(gamma) + &x_inv.transpose().scale(1.0 / gamma)).scale(0.5);
        let change = next.dist(&x) / next.frobenius_norm();
        x = next;
        if change < 1e-2 {
            scaling = false;
        }
        if orthogonality_residual(&x) <= POLAR_ORTHO {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            what: "polar Newton",
            iterations: MATFUN_MAX_ITER,
        });
    }
    let p = (&x.transpose() * a).sym_part();
    let structural = vec![orthogonality_residual(&x), 0.0];
    Ok(FactorizationResult::assemble(
        FactorScheme::Polar,
        vec![x, p],
        a,
        structural,
    ))
}

/// Generalized polar factorization `A = QP` with `QᵀJQ = J` and `P` the
/// principal square root of `A★A`.
///
/// Structural residuals are `‖QᵀJQ − J‖_F / ‖J‖_F` for `Q` and the Jordan
/// membership residual of `P` relative to `1 + ‖P‖_F`.
pub fn generalized_polar(a: &DenseMatrix, j: &BilinearStructure) -> Result<FactorizationResult> {
    let w = &j.j_adjoint(a)? * a;
    let norm = w.frobenius_norm();
    let axis_tol = 1e-12 * norm.max(f64::MIN_POSITIVE);
    let eig = eigenvalues_general(&w)?;
    if let Some(z) = eig
        .values
        .iter()
        .find(|z| z.im.abs() <= axis_tol && z.re <= axis_tol)
    {
        return Err(Error::ExistenceViolated { re: z.re, im: z.im });
    }
    let p = sqrtm_principal(&w).map_err(|e| match e {
        Error::NegativeRealEigenvalue { re, im } => Error::ExistenceViolated { re, im },
        other => other,
    })?;
    let q = solve_dense(&p.transpose(), &a.transpose())
        .map_err(|_| Error::NumericallySingular("square root factor".into()))?
        .transpose();
    let jm = j.realize();
    let group = (&(&q.transpose() * jm) * &q).dist(jm) / jm.frobenius_norm();
    let jordan = j.membership_residual(&p, AlgebraSide::Jordan)? / (1.0 + p.frobenius_norm());
    Ok(FactorizationResult::assemble(
        FactorScheme::JPolar,
        vec![q, p],
        a,
        vec![group, jordan],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matkit::expm;

    #[test]
    fn spd_input_has_trivial_rotation() {
        let a = DenseMatrix::from_rows(&[[4.0, 1.0], [1.0, 3.0]]);
        let r = polar(&a).unwrap();
        assert!(r.factors[0].dist(&DenseMatrix::identity(2)) < 1e-12);
        assert!(r.factors[1].dist(&a) < 1e-12);
    }

    #[test]
    fn scaled_rotation() {
        let t: f64 = 1.1;
        let rot = DenseMatrix::from_rows(&[[t.cos(), -t.sin()], [t.sin(), t.cos()]]);
        let r = polar(&rot.scale(2.0)).unwrap();
        assert!(r.factors[0].dist(&rot) < 1e-13);
        assert!(r.factors[1].dist(&DenseMatrix::identity(2).scale(2.0)) < 1e-13);
    }

    #[test]
    fn singular_is_rejected() {
        let a = DenseMatrix::from_rows(&[[1.0, 2.0], [2.0, 4.0]]);
        assert!(polar(&a).is_err());
    }

    #[test]
    fn group_member_has_unit_p() {
        let j = BilinearStructure::pseudo_euclidean(1, 1);
        // boost generator [[0, s], [s, 0]] lies in so(1,1)
        let a = expm(&DenseMatrix::from_rows(&[[0.0, 0.4], [0.4, 0.0]]));
        let r = generalized_polar(&a, &j).unwrap();
        assert!(r.factors[0].dist(&a) < 1e-12);
        assert!(r.factors[1].dist(&DenseMatrix::identity(2)) < 1e-12);
    }

    #[test]
    fn negative_real_spectrum_is_reported() {
        // A★A = diag(-1, -1) for this A under I_{1,1}
        let j = BilinearStructure::pseudo_euclidean(1, 1);
        let a = DenseMatrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]]);
        assert!(matches!(
            generalized_polar(&a, &j),
            Err(Error::ExistenceViolated { .. })
        ));
    }
}
