//! Additive splittings `A = Σ parts`, each part carrying a structural tag.

use std::fmt;

use crate::error::{mismatch, Error, Result};
use crate::matrix::DenseMatrix;
use crate::structures::BilinearStructure;
use crate::tolerances::KRON_RESIDUAL_REL;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitScheme {
    JSplit,
    Doolittle,
    Crout,
    Ldu,
    Jacobi,
    SkewUpper,
    SkewLower,
    Levi,
    KroneckerSum,
}

/// Pattern and algebra modes accepted by [`triangular_split`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangularMode {
    Doolittle,
    Crout,
    Ldu,
    Jacobi,
    SkewUpper,
    SkewLower,
    Levi,
}

impl TriangularMode {
    pub const ALL: [TriangularMode; 7] = [
        TriangularMode::Doolittle,
        TriangularMode::Crout,
        TriangularMode::Ldu,
        TriangularMode::Jacobi,
        TriangularMode::SkewUpper,
        TriangularMode::SkewLower,
        TriangularMode::Levi,
    ];

    fn scheme(self) -> SplitScheme {
        match self {
            TriangularMode::Doolittle => SplitScheme::Doolittle,
            TriangularMode::Crout => SplitScheme::Crout,
            TriangularMode::Ldu => SplitScheme::Ldu,
            TriangularMode::Jacobi => SplitScheme::Jacobi,
            TriangularMode::SkewUpper => SplitScheme::SkewUpper,
            TriangularMode::SkewLower => SplitScheme::SkewLower,
            TriangularMode::Levi => SplitScheme::Levi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartTag {
    Lie,
    Jordan,
    Lower,
    Upper,
    StrictLower,
    StrictUpper,
    Diagonal,
    OffDiagonal,
    Trace,
    Traceless,
    LeftFactor,
    RightFactor,
}

impl PartTag {
    pub fn as_str(self) -> &'static str {
        match self {
            PartTag::Lie => "lie",
            PartTag::Jordan => "jordan",
            PartTag::Lower => "lower",
            PartTag::Upper => "upper",
            PartTag::StrictLower => "strict_lower",
            PartTag::StrictUpper => "strict_upper",
            PartTag::Diagonal => "diagonal",
            PartTag::OffDiagonal => "off_diagonal",
            PartTag::Trace => "trace",
            PartTag::Traceless => "traceless",
            PartTag::LeftFactor => "left_factor",
            PartTag::RightFactor => "right_factor",
        }
    }
}

impl fmt::Display for PartTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Splitting {
    pub scheme: SplitScheme,
    pub parts: Vec<(PartTag, DenseMatrix)>,
}

impl Splitting {
    pub fn part(&self, tag: PartTag) -> Option<&DenseMatrix> {
        self.parts.iter().find(|(t, _)| *t == tag).map(|(_, m)| m)
    }

    pub fn tags(&self) -> Vec<PartTag> {
        self.parts.iter().map(|(t, _)| *t).collect()
    }

    pub fn sum(&self) -> DenseMatrix {
        let mut it = self.parts.iter().map(|(_, m)| m);
        let first = it.next().expect("splitting has parts").clone();
        it.fold(first, |acc, m| &acc + m)
    }

    /// `‖Σ parts − A‖_F`.
    pub fn reconstruction_residual(&self, a: &DenseMatrix) -> f64 {
        self.sum().dist(a)
    }
}

/// Lie-Jordan splitting `A = S + H` with `S = ½(A − J Aᵀ J⁻¹)` and
/// `H = ½(A + J Aᵀ J⁻¹)`.
pub fn j_split(a: &DenseMatrix, j: &BilinearStructure) -> Result<Splitting> {
    let r = j.reflect(a)?;
    Ok(Splitting {
        scheme: SplitScheme::JSplit,
        parts: vec![
            (PartTag::Lie, (a - &r).scale(0.5)),
            (PartTag::Jordan, (a + &r).scale(0.5)),
        ],
    })
}

/// Triangular, diagonal, skew-plus-triangular and trace splittings.
pub fn triangular_split(a: &DenseMatrix, mode: TriangularMode) -> Result<Splitting> {
    let n = a.check_square("matrix")?;
    let l0 = a.strict_lower();
    let u0 = a.strict_upper();
    let d = a.diagonal_part();
    let parts = match mode {
        TriangularMode::Doolittle => vec![(PartTag::StrictLower, l0), (PartTag::Upper, &d + &u0)],
        TriangularMode::Crout => vec![(PartTag::Lower, &l0 + &d), (PartTag::StrictUpper, u0)],
        TriangularMode::Ldu => vec![
            (PartTag::StrictLower, l0),
            (PartTag::Diagonal, d),
            (PartTag::StrictUpper, u0),
        ],
        TriangularMode::Jacobi => vec![(PartTag::Diagonal, d), (PartTag::OffDiagonal, &l0 + &u0)],
        TriangularMode::SkewUpper => {
            let l0t = l0.transpose();
            let upper = &(&d + &u0) + &l0t;
            vec![(PartTag::Lie, &l0 - &l0t), (PartTag::Upper, upper)]
        }
        TriangularMode::SkewLower => {
            let u0t = u0.transpose();
            let lower = &(&d + &l0) + &u0t;
            vec![(PartTag::Lie, &u0 - &u0t), (PartTag::Lower, lower)]
        }
        TriangularMode::Levi => {
            let t = a.trace() / n as f64;
            let scalar = DenseMatrix::identity(n).scale(t);
            vec![
                (PartTag::Trace, scalar),
                (PartTag::Traceless, a.shifted(-t)),
            ]
        }
    };
    Ok(Splitting {
        scheme: mode.scheme(),
        parts,
    })
}

/// `M = A ⊗ I + I ⊗ B` kept in factored form.
///
/// With `x` read row-major as an `n×n` matrix `X`, `(A ⊗ I)x` is `AX` and
/// `(I ⊗ B)x` is `XBᵀ`, so `M` can be applied in `O(n³)`.
#[derive(Debug, Clone, PartialEq)]
pub struct KroneckerSum {
    pub a: DenseMatrix,
    pub b: DenseMatrix,
}

impl KroneckerSum {
    pub fn new(a: DenseMatrix, b: DenseMatrix) -> Result<Self> {
        let n = a.check_square("left term")?;
        let m = b.check_square("right term")?;
        if n != m {
            return Err(mismatch(format!("right term {n}x{n}"), format!("{m}x{m}")));
        }
        Ok(Self { a, b })
    }

    /// Side length `n` of the terms; `M` is `n²×n²`.
    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn left_term(&self) -> DenseMatrix {
        self.a.kron(&DenseMatrix::identity(self.n()))
    }

    pub fn right_term(&self) -> DenseMatrix {
        DenseMatrix::identity(self.n()).kron(&self.b)
    }

    pub fn to_dense(&self) -> DenseMatrix {
        &self.left_term() + &self.right_term()
    }

    /// `M·x` without forming `M`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n();
        assert_eq!(x.len(), n * n);
        let xm = DenseMatrix::from_fn(n, n, |i, j| x[i * n + j]);
        let out = &(&self.a * &xm) + &(&xm * &self.b.transpose());
        out.into_vec()
    }

    /// The splitting `M = (A ⊗ I) + (I ⊗ B)`.
    pub fn splitting(&self) -> Splitting {
        Splitting {
            scheme: SplitScheme::KroneckerSum,
            parts: vec![
                (PartTag::LeftFactor, self.left_term()),
                (PartTag::RightFactor, self.right_term()),
            ],
        }
    }
}

/// Explicit `n²×n²` Kronecker sum `A ⊗ I + I ⊗ B`.
pub fn kronecker_sum(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    Ok(KroneckerSum::new(a.clone(), b.clone())?.to_dense())
}

/// Recovers `(A, B)` with `Tr(B) = 0` from `M = A ⊗ I + I ⊗ B` by partial traces.
///
/// Block `(i, k)` of `M` is `A_ik I + δ_ik B`, so `A_ik = Tr(M_ik)/n` under the
/// gauge, and `B` is the mean diagonal block minus `(Tr A / n) I`.
pub fn kron_sum_factors(m: &DenseMatrix) -> Result<(DenseMatrix, DenseMatrix)> {
    let big = m.check_square("matrix")?;
    let n = (big as f64).sqrt().round() as usize;
    if n * n != big {
        return Err(mismatch("n²×n² matrix", format!("{big}x{big}")));
    }
    let block_trace = |i: usize, k: usize| (0..n).map(|r| m[(i * n + r, k * n + r)]).sum::<f64>();
    let a = DenseMatrix::from_fn(n, n, |i, k| block_trace(i, k) / n as f64);
    let mut mean_diag = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for r in 0..n {
            for c in 0..n {
                mean_diag[(r, c)] += m[(i * n + r, i * n + c)] / n as f64;
            }
        }
    }
    let b = mean_diag.shifted(-a.trace() / n as f64);
    let residual = kronecker_sum(&a, &b)?.dist(m);
    let norm = m.frobenius_norm();
    if residual > KRON_RESIDUAL_REL * norm {
        return Err(Error::NotAKroneckerSum { residual, norm });
    }
    Ok((a, b))
}

/// Splits a Kronecker-sum matrix into its `A ⊗ I` and `I ⊗ B` parts.
pub fn kronecker_split(m: &DenseMatrix) -> Result<Splitting> {
    let (a, b) = kron_sum_factors(m)?;
    Ok(KroneckerSum { a, b }.splitting())
}
