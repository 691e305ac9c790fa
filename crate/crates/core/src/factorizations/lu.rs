use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::tolerances::LU_PIVOT_REL;

use super::{pattern_residual, FactorScheme, FactorizationResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LuForm {
    /// Unit lower `L`, upper `U`.
    Doolittle,
    /// Lower `L`, unit upper `U`.
    Crout,
    /// Unit lower `L`, diagonal `D`, unit upper `U`.
    Ldu,
}

/// Pivot-free LU in the requested form.
///
/// Fails with `ZeroLeadingMinor(k)` (1-based) when the `k`-th pivot is
/// negligible, i.e. the factorization does not exist without a permutation.
pub fn lu_ldu(a: &DenseMatrix, form: LuForm) -> Result<FactorizationResult> {
    let n = a.check_square("matrix")?;
    let threshold = LU_PIVOT_REL * a.max_abs();
    let mut l = DenseMatrix::identity(n);
    let mut u = a.clone();
    for k in 0..n {
        let pivot = u[(k, k)];
        if pivot.abs() <= threshold || pivot == 0.0 {
            return Err(Error::ZeroLeadingMinor(k + 1));
        }
        for i in k + 1..n {
            let f = u[(i, k)] / pivot;
            l[(i, k)] = f;
            u[(i, k)] = 0.0;
            for j in k + 1..n {
                let ukj = u[(k, j)];
                u[(i, j)] -= f * ukj;
            }
        }
    }
    let d = u.diagonal();
    let unit_upper = DenseMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => u[(i, j)] / d[i],
        std::cmp::Ordering::Equal => 1.0,
        std::cmp::Ordering::Greater => 0.0,
    });
    let lower = |i: usize, j: usize| i >= j;
    let upper = |i: usize, j: usize| i <= j;
    Ok(match form {
        LuForm::Doolittle => {
            let s = vec![
                pattern_residual(&l, lower, true),
                pattern_residual(&u, upper, false),
            ];
            FactorizationResult::assemble(FactorScheme::LuDoolittle, vec![l, u], a, s)
        }
        LuForm::Crout => {
            let ld = DenseMatrix::from_fn(n, n, |i, j| l[(i, j)] * d[j]);
            let s = vec![
                pattern_residual(&ld, lower, false),
                pattern_residual(&unit_upper, upper, true),
            ];
            FactorizationResult::assemble(FactorScheme::LuCrout, vec![ld, unit_upper], a, s)
        }
        LuForm::Ldu => {
            let dm = DenseMatrix::from_diagonal(&d);
            let s = vec![
                pattern_residual(&l, lower, true),
                pattern_residual(&dm, |i, j| i == j, false),
                pattern_residual(&unit_upper, upper, true),
            ];
            FactorizationResult::assemble(FactorScheme::Ldu, vec![l, dm, unit_upper], a, s)
        }
    })
}
