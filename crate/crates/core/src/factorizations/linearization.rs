//! Finite-difference check that a splitting is the derivative at the
//! identity of a factorization.
//!
//! For a path `exp(hA)` factored as `F₁(h)⋯F_k(h)` with `F_i(0) = I`, the
//! difference quotients `(F_i(h) − I)/h` converge to the matching parts of
//! the splitting of `A`. The report records the part-wise errors over a
//! decreasing step grid and the least-squares slope of `log e` against `log h`.

use crate::error::{Error, Result};
use crate::matkit::expm;
use crate::matrix::DenseMatrix;
use crate::splittings::{j_split, triangular_split, PartTag, SplitScheme, TriangularMode};
use crate::structures::BilinearStructure;
use crate::tolerances::{LINEARIZATION_EXACT, LINEARIZATION_MIN_ORDER};

use super::{
    generalized_polar, lu_ldu, polar, qr_qdr, FactorScheme, FactorizationResult, LuForm, QrForm,
};

/// A factorization paired with the splitting it linearizes to.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearizedPair {
    Polar,
    JPolar(BilinearStructure),
    Qr,
    Lq,
    Qdr,
    Ldu,
}

impl LinearizedPair {
    pub fn name(&self) -> String {
        match self {
            LinearizedPair::Polar => "polar".into(),
            LinearizedPair::JPolar(j) => format!("jpolar[{}]", j.descriptor()),
            LinearizedPair::Qr => "qr".into(),
            LinearizedPair::Lq => "lq".into(),
            LinearizedPair::Qdr => "qdr".into(),
            LinearizedPair::Ldu => "ldu".into(),
        }
    }

    pub fn factor_scheme(&self) -> FactorScheme {
        match self {
            LinearizedPair::Polar => FactorScheme::Polar,
            LinearizedPair::JPolar(_) => FactorScheme::JPolar,
            LinearizedPair::Qr => FactorScheme::Qr,
            LinearizedPair::Lq => FactorScheme::Lq,
            LinearizedPair::Qdr => FactorScheme::Qdr,
            LinearizedPair::Ldu => FactorScheme::Ldu,
        }
    }

    pub fn split_scheme(&self) -> SplitScheme {
        match self {
            LinearizedPair::Polar | LinearizedPair::JPolar(_) => SplitScheme::JSplit,
            LinearizedPair::Qr | LinearizedPair::Qdr => SplitScheme::SkewUpper,
            LinearizedPair::Lq => SplitScheme::SkewLower,
            LinearizedPair::Ldu => SplitScheme::Ldu,
        }
    }

    fn factor(&self, m: &DenseMatrix) -> Result<FactorizationResult> {
        match self {
            LinearizedPair::Polar => polar(m),
            LinearizedPair::JPolar(j) => generalized_polar(m, j),
            LinearizedPair::Qr => qr_qdr(m, QrForm::Qr),
            LinearizedPair::Lq => qr_qdr(m, QrForm::Lq),
            LinearizedPair::Qdr => qr_qdr(m, QrForm::Qdr),
            LinearizedPair::Ldu => lu_ldu(m, LuForm::Ldu),
        }
    }

    /// Splitting parts of `a` listed in factor order.
    fn parts(&self, a: &DenseMatrix) -> Result<Vec<(PartTag, DenseMatrix)>> {
        let take = |s: crate::splittings::Splitting, tags: &[PartTag]| {
            tags.iter()
                .map(|t| (*t, s.part(*t).expect("tag present").clone()))
                .collect::<Vec<_>>()
        };
        Ok(match self {
            LinearizedPair::Polar => {
                let j = BilinearStructure::identity(a.rows());
                take(j_split(a, &j)?, &[PartTag::Lie, PartTag::Jordan])
            }
            LinearizedPair::JPolar(j) => take(j_split(a, j)?, &[PartTag::Lie, PartTag::Jordan]),
            LinearizedPair::Qr => take(
                triangular_split(a, TriangularMode::SkewUpper)?,
                &[PartTag::Lie, PartTag::Upper],
            ),
            LinearizedPair::Lq => take(
                triangular_split(a, TriangularMode::SkewLower)?,
                &[PartTag::Lower, PartTag::Lie],
            ),
            LinearizedPair::Qdr => {
                let s = triangular_split(a, TriangularMode::SkewUpper)?;
                let upper = s.part(PartTag::Upper).expect("upper part");
                vec![
                    (
                        PartTag::Lie,
                        s.part(PartTag::Lie).expect("lie part").clone(),
                    ),
                    (PartTag::Diagonal, upper.diagonal_part()),
                    (PartTag::StrictUpper, upper.strict_upper()),
                ]
            }
            LinearizedPair::Ldu => take(
                triangular_split(a, TriangularMode::Ldu)?,
                &[
                    PartTag::StrictLower,
                    PartTag::Diagonal,
                    PartTag::StrictUpper,
                ],
            ),
        })
    }
}

/// Errors of one factor against its splitting part over the step grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PartError {
    pub factor: &'static str,
    pub tag: PartTag,
    /// `‖(F(h) − I)/h − part‖_F` per step.
    pub errors: Vec<f64>,
    /// Whether `‖F(h) − I − h·part‖_F` stayed at roundoff level for every step.
    pub exact: bool,
    /// Least-squares slope of `log e` against `log h`; `None` when exact.
    pub order: Option<f64>,
}

impl PartError {
    pub fn passes(&self, min_order: f64) -> bool {
        self.exact || self.order.is_some_and(|o| o >= min_order)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearizationReport {
    pub pair: String,
    pub factorization: FactorScheme,
    pub splitting: SplitScheme,
    pub steps: Vec<f64>,
    pub parts: Vec<PartError>,
}

impl LinearizationReport {
    /// Smallest fitted order over non-exact parts (`+∞` if every part is exact).
    pub fn min_order(&self) -> f64 {
        self.parts
            .iter()
            .filter_map(|p| p.order)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn passes(&self) -> bool {
        self.passes_with(LINEARIZATION_MIN_ORDER)
    }

    pub fn passes_with(&self, min_order: f64) -> bool {
        self.parts.iter().all(|p| p.passes(min_order))
    }
}

/// Factors `exp(hA)` for each step and compares difference quotients of the
/// factors with the splitting parts of `A`.
pub fn linearization_check(
    pair: &LinearizedPair,
    a: &DenseMatrix,
    steps: &[f64],
) -> Result<LinearizationReport> {
    let n = a.check_square("matrix")?;
    if steps.is_empty()
        || steps.iter().any(|h| !(*h > 0.0))
        || steps.windows(2).any(|w| w[1] >= w[0])
    {
        return Err(Error::InvalidConfig(
            "steps must be positive and strictly decreasing".into(),
        ));
    }
    let parts = pair.parts(a)?;
    let names = pair.factor_scheme().factor_names();
    let eye = DenseMatrix::identity(n);
    let mut errors = vec![Vec::with_capacity(steps.len()); parts.len()];
    let mut exact = vec![true; parts.len()];
    for &h in steps {
        let path_point = expm(&a.scale(h));
        let fact = pair
            .factor(&path_point)
            .map_err(|e| Error::FactorizationFailed {
                h,
                reason: e.to_string(),
            })?;
        for (i, ((_, part), factor)) in parts.iter().zip(&fact.factors).enumerate() {
            let deviation = (factor - &eye).dist(&part.scale(h));
            errors[i].push(deviation / h);
            if deviation > LINEARIZATION_EXACT {
                exact[i] = false;
            }
        }
    }
    let log_h: Vec<f64> = steps.iter().map(|h| h.ln()).collect();
    let parts = parts
        .iter()
        .zip(errors)
        .zip(exact)
        .enumerate()
        .map(|(i, (((tag, _), errs), exact))| {
            let order = if exact {
                None
            } else {
                fit_slope(&log_h, &errs)
            };
            PartError {
                factor: names[i],
                tag: *tag,
                exact: exact || order.is_none(),
                errors: errs,
                order,
            }
        })
        .collect();
    Ok(LinearizationReport {
        pair: pair.name(),
        factorization: pair.factor_scheme(),
        splitting: pair.split_scheme(),
        steps: steps.to_vec(),
        parts,
    })
}

/// Least-squares slope of `ln e` against `ln h`, over points with `e > 0`.
fn fit_slope(log_h: &[f64], errors: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = log_h
        .iter()
        .zip(errors)
        .filter(|(_, e)| **e > 0.0)
        .map(|(x, e)| (*x, e.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    Some(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerances::LINEARIZATION_STEPS;

    #[test]
    fn skew_input_keeps_polar_p_exact() {
        let a = DenseMatrix::from_rows(&[[0.0, 0.6, -0.2], [-0.6, 0.0, 0.5], [0.2, -0.5, 0.0]]);
        let r = linearization_check(&LinearizedPair::Polar, &a, &LINEARIZATION_STEPS).unwrap();
        let p = &r.parts[1];
        assert_eq!(p.tag, PartTag::Jordan);
        assert!(p.exact);
        assert!(r.passes());
    }

    #[test]
    fn qr_order_on_fixed_matrix() {
        let a = DenseMatrix::from_rows(&[[2.0, 3.0], [1.0, 4.0]]);
        let r = linearization_check(&LinearizedPair::Qr, &a, &LINEARIZATION_STEPS).unwrap();
        for p in &r.parts {
            assert!(p.order.unwrap() >= 0.9, "{p:?}");
        }
    }

    #[test]
    fn diagonal_input_ldu() {
        let a = DenseMatrix::from_diagonal(&[0.3, -0.7, 1.2]);
        let r = linearization_check(&LinearizedPair::Ldu, &a, &LINEARIZATION_STEPS).unwrap();
        assert!(r.parts[0].errors.iter().all(|&e| e == 0.0));
        assert!(r.parts[2].errors.iter().all(|&e| e == 0.0));
        assert!(r.parts[0].exact && r.parts[2].exact);
        let d = &r.parts[1];
        assert!(!d.exact);
        assert!((d.order.unwrap() - 1.0).abs() < 0.05);
    }

    #[test]
    fn rejects_bad_steps() {
        let a = DenseMatrix::identity(2);
        assert!(linearization_check(&LinearizedPair::Qr, &a, &[1e-3, 1e-2]).is_err());
        assert!(linearization_check(&LinearizedPair::Qr, &a, &[]).is_err());
        assert!(linearization_check(&LinearizedPair::Qr, &a, &[1e-2, -1e-3]).is_err());
    }

    #[test]
    fn failure_carries_step() {
        // exp(10·A) is a quarter turn, whose leading entry vanishes.
        let theta = std::f64::consts::FRAC_PI_2;
        let a = DenseMatrix::from_rows(&[[0.0, 1.0], [-1.0, 0.0]]).scale(theta / 10.0);
        let err = linearization_check(&LinearizedPair::Ldu, &a, &[10.0]).unwrap_err();
        assert!(matches!(err, Error::FactorizationFailed { h, .. } if h == 10.0));
    }
}
