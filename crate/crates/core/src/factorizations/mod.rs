//! Multiplicative decompositions that the splittings linearize, and the
//! finite-difference check that ties each factorization to its splitting.

mod linearization;
mod lu;
mod polar;
mod qr;

pub use linearization::{linearization_check, LinearizationReport, LinearizedPair, PartError};
pub use lu::{lu_ldu, LuForm};
pub use polar::{generalized_polar, polar};
pub use qr::{qr_qdr, QrForm};

use crate::matrix::DenseMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorScheme {
    LuDoolittle,
    LuCrout,
    Ldu,
    Qr,
    Lq,
    Qdr,
    Polar,
    JPolar,
}

impl FactorScheme {
    pub fn as_str(self) -> &'static str {
        match self {
            FactorScheme::LuDoolittle => "lu-doolittle",
            FactorScheme::LuCrout => "lu-crout",
            FactorScheme::Ldu => "ldu",
            FactorScheme::Qr => "qr",
            FactorScheme::Lq => "lq",
            FactorScheme::Qdr => "qdr",
            FactorScheme::Polar => "polar",
            FactorScheme::JPolar => "jpolar",
        }
    }

    /// Names of the factors, in multiplication order.
    pub fn factor_names(self) -> &'static [&'static str] {
        match self {
            FactorScheme::LuDoolittle | FactorScheme::LuCrout => &["L", "U"],
            FactorScheme::Ldu => &["L", "D", "U"],
            FactorScheme::Qr => &["Q", "R"],
            FactorScheme::Lq => &["L", "Q"],
            FactorScheme::Qdr => &["Q", "D", "U"],
            FactorScheme::Polar | FactorScheme::JPolar => &["Q", "P"],
        }
    }
}

/// Factors of `A` in multiplication order plus diagnostics.
///
/// `structural[i]` measures how far factor `i` is from its pattern or group:
/// zero for patterns enforced by construction, otherwise a relative residual.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorizationResult {
    pub scheme: FactorScheme,
    pub factors: Vec<DenseMatrix>,
    pub residual: f64,
    pub structural: Vec<f64>,
}

impl FactorizationResult {
    fn assemble(
        scheme: FactorScheme,
        factors: Vec<DenseMatrix>,
        a: &DenseMatrix,
        structural: Vec<f64>,
    ) -> Self {
        let mut out = Self {
            scheme,
            factors,
            residual: 0.0,
            structural,
        };
        out.residual = out.product().dist(a);
        out
    }

    pub fn product(&self) -> DenseMatrix {
        let mut it = self.factors.iter();
        let first = it.next().expect("at least one factor").clone();
        it.fold(first, |acc, f| &acc * f)
    }

    pub fn factor(&self, name: &str) -> Option<&DenseMatrix> {
        self.scheme
            .factor_names()
            .iter()
            .position(|n| *n == name)
            .map(|i| &self.factors[i])
    }
}

/// Sum of squares of entries violating a triangular/diagonal pattern, plus
/// deviation of the diagonal from one when `unit` is set.
pub(crate) fn pattern_residual(
    m: &DenseMatrix,
    keep: impl Fn(usize, usize) -> bool,
    unit: bool,
) -> f64 {
    let mut s = 0.0;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m[(i, j)];
            if i == j && unit {
                s += (v - 1.0) * (v - 1.0);
            } else if !keep(i, j) {
                s += v * v;
            }
        }
    }
    s.sqrt()
}

/// `‖QᵀQ − I‖_F`.
pub fn orthogonality_residual(q: &DenseMatrix) -> f64 {
    (&q.transpose() * q).dist(&DenseMatrix::identity(q.cols()))
}
