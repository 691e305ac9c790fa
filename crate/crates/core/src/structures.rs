//! Bilinear structure matrices `J` and their quadratic Lie and Jordan algebras.
//!
//! A structure `J` with `Jᵀ = ±J` defines the involution `X ↦ J Xᵀ J⁻¹`.
//! Its two eigenspaces are the `J`-quadratic Lie algebra
//! (`WᵀJ + JW = 0`) and the `J`-quadratic Jordan algebra (`WᵀJ − JW = 0`).
//! For the canonical kinds `J² = ±I`, so `J Xᵀ J⁻¹` and the adjoint
//! `J⁻¹ Xᵀ J` coincide; for a custom `J` they may differ, and the splitting
//! and projector code uses `J Xᵀ J⁻¹`.

use std::fmt;

use crate::error::{mismatch, Error, Result};
use crate::matkit::inverse;
use crate::matrix::DenseMatrix;
use crate::tolerances::MEMBERSHIP_REL;

/// Which canonical form a structure takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    Identity(usize),
    PseudoEuclidean { p: usize, q: usize },
    Symplectic(usize),
    Custom,
}

/// `+1` when `Jᵀ = J`, `−1` when `Jᵀ = −J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    Skew,
}

impl Symmetry {
    pub fn sign(self) -> f64 {
        match self {
            Symmetry::Symmetric => 1.0,
            Symmetry::Skew => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraSide {
    Lie,
    Jordan,
}

/// An invertible `±`-symmetric matrix `J` with its inverse.
#[derive(Clone, PartialEq)]
pub struct BilinearStructure {
    kind: StructureKind,
    symmetry: Symmetry,
    j: DenseMatrix,
    j_inv: DenseMatrix,
}

impl BilinearStructure {
    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "empty structure");
        let j = DenseMatrix::identity(n);
        Self {
            kind: StructureKind::Identity(n),
            symmetry: Symmetry::Symmetric,
            j_inv: j.clone(),
            j,
        }
    }

    /// `I_{p,q} = diag(I_p, −I_q)`.
    pub fn pseudo_euclidean(p: usize, q: usize) -> Self {
        assert!(p + q > 0, "empty structure");
        let d: Vec<f64> = (0..p + q).map(|i| if i < p { 1.0 } else { -1.0 }).collect();
        let j = DenseMatrix::from_diagonal(&d);
        Self {
            kind: StructureKind::PseudoEuclidean { p, q },
            symmetry: Symmetry::Symmetric,
            j_inv: j.clone(),
            j,
        }
    }

    /// The `2m×2m` matrix with `I_m` in the upper right and `−I_m` in the lower left.
    pub fn symplectic(m: usize) -> Self {
        assert!(m > 0, "empty structure");
        let j = DenseMatrix::from_fn(2 * m, 2 * m, |i, k| {
            if k == i + m {
                1.0
            } else if i == k + m {
                -1.0
            } else {
                0.0
            }
        });
        Self {
            kind: StructureKind::Symplectic(m),
            symmetry: Symmetry::Skew,
            j_inv: j.transpose(),
            j,
        }
    }

    /// Accepts an exactly symmetric or exactly skew-symmetric invertible matrix.
    pub fn custom(j: DenseMatrix) -> Result<Self> {
        let n = j.check_square("structure matrix")?;
        let symmetric = (0..n).all(|a| (0..n).all(|b| j[(a, b)] == j[(b, a)]));
        let skew = (0..n).all(|a| (0..n).all(|b| j[(a, b)] == -j[(b, a)]));
        let symmetry = match (symmetric, skew) {
            (true, _) => Symmetry::Symmetric,
            (false, true) => Symmetry::Skew,
            (false, false) => return Err(Error::NotSignSymmetric),
        };
        let j_inv = inverse(&j).map_err(|_| Error::SingularCustomJ)?;
        Ok(Self {
            kind: StructureKind::Custom,
            symmetry,
            j,
            j_inv,
        })
    }

    pub fn kind(&self) -> StructureKind {
        self.kind
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn dim(&self) -> usize {
        self.j.rows()
    }

    /// The explicit matrix `J`.
    pub fn realize(&self) -> &DenseMatrix {
        &self.j
    }

    pub fn inverse(&self) -> &DenseMatrix {
        &self.j_inv
    }

    fn check_dim(&self, a: &DenseMatrix) -> Result<()> {
        let n = self.dim();
        if a.rows() != n || a.cols() != n {
            return Err(mismatch(
                format!("{n}x{n}"),
                format!("{}x{}", a.rows(), a.cols()),
            ));
        }
        Ok(())
    }

    /// `A★ = J⁻¹ Aᵀ J`.
    pub fn j_adjoint(&self, a: &DenseMatrix) -> Result<DenseMatrix> {
        self.check_dim(a)?;
        Ok(&(&self.j_inv * &a.transpose()) * &self.j)
    }

    /// `J Aᵀ J⁻¹`, the involution whose eigenspaces give the Lie-Jordan splitting.
    pub fn reflect(&self, a: &DenseMatrix) -> Result<DenseMatrix> {
        self.check_dim(a)?;
        Ok(&(&self.j * &a.transpose()) * &self.j_inv)
    }

    /// Projection `½(X ∓ J Xᵀ J⁻¹)` onto the Lie (−) or Jordan (+) side.
    pub fn project(&self, x: &DenseMatrix, side: AlgebraSide) -> Result<DenseMatrix> {
        let r = self.reflect(x)?;
        Ok(match side {
            AlgebraSide::Lie => (x - &r).scale(0.5),
            AlgebraSide::Jordan => (x + &r).scale(0.5),
        })
    }

    /// `‖WᵀJ + JW‖_F` for the Lie side, `‖WᵀJ − JW‖_F` for the Jordan side.
    pub fn membership_residual(&self, w: &DenseMatrix, side: AlgebraSide) -> Result<f64> {
        self.check_dim(w)?;
        let wtj = &w.transpose() * &self.j;
        let jw = &self.j * w;
        Ok(match side {
            AlgebraSide::Lie => (&wtj + &jw).frobenius_norm(),
            AlgebraSide::Jordan => (&wtj - &jw).frobenius_norm(),
        })
    }

    pub fn is_member(&self, w: &DenseMatrix, side: AlgebraSide) -> Result<bool> {
        let r = self.membership_residual(w, side)?;
        Ok(r <= MEMBERSHIP_REL * (1.0 + w.frobenius_norm()))
    }

    /// Trace of the projector onto `side`, i.e. the dimension of that algebra.
    ///
    /// The projector maps the elementary matrix `E_ij` to `½(E_ij ∓ J E_ji J⁻¹)`,
    /// whose `(i, j)` coordinate is `½(1 ∓ J_ij (J⁻¹)_ij)`; summing over all
    /// `n²` elementary matrices gives the trace.
    pub fn projector_dimension(&self, side: AlgebraSide) -> usize {
        let n = self.dim();
        let sign = match side {
            AlgebraSide::Lie => -1.0,
            AlgebraSide::Jordan => 1.0,
        };
        let mut trace = 0.0;
        for i in 0..n {
            for k in 0..n {
                trace += 0.5 * (1.0 + sign * self.j[(i, k)] * self.j_inv[(i, k)]);
            }
        }
        trace.round() as usize
    }

    /// Compact descriptor: `identity:n`, `pq:p,q`, `symplectic:m` or `custom:n`.
    pub fn descriptor(&self) -> String {
        match self.kind {
            StructureKind::Identity(n) => format!("identity:{n}"),
            StructureKind::PseudoEuclidean { p, q } => format!("pq:{p},{q}"),
            StructureKind::Symplectic(m) => format!("symplectic:{m}"),
            StructureKind::Custom => format!("custom:{}", self.dim()),
        }
    }
}

impl fmt::Debug for BilinearStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BilinearStructure")
            .field("kind", &self.kind)
            .field("symmetry", &self.symmetry)
            .finish()
    }
}

/// Jordan product `½(AB + BA)`.
pub fn jordan_product(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    (&(a * b) + &(b * a)).scale(0.5)
}

/// Commutator `AB − BA`.
pub fn commutator(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    &(a * b) - &(b * a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_realizations() {
        assert_eq!(
            BilinearStructure::identity(3).realize(),
            &DenseMatrix::identity(3)
        );
        assert_eq!(
            BilinearStructure::pseudo_euclidean(1, 1).realize(),
            &DenseMatrix::from_rows(&[[1.0, 0.0], [0.0, -1.0]])
        );
        let s = BilinearStructure::symplectic(1);
        assert_eq!(
            s.realize(),
            &DenseMatrix::from_rows(&[[0.0, 1.0], [-1.0, 0.0]])
        );
        assert_eq!(s.symmetry(), Symmetry::Skew);
        assert_eq!(s.realize() * s.inverse(), DenseMatrix::identity(2));
    }

    #[test]
    fn symplectic_block_layout() {
        let j = BilinearStructure::symplectic(2);
        let m = j.realize();
        assert_eq!(m[(0, 2)], 1.0);
        assert_eq!(m[(1, 3)], 1.0);
        assert_eq!(m[(2, 0)], -1.0);
        assert_eq!(m[(3, 1)], -1.0);
        assert_eq!(m.frobenius_norm() * m.frobenius_norm(), 4.0);
    }

    #[test]
    fn custom_validation() {
        let bad = DenseMatrix::from_rows(&[[1.0, 2.0], [3.0, 1.0]]);
        assert_eq!(
            BilinearStructure::custom(bad).unwrap_err(),
            Error::NotSignSymmetric
        );
        let singular = DenseMatrix::from_rows(&[[1.0, 1.0], [1.0, 1.0]]);
        assert_eq!(
            BilinearStructure::custom(singular).unwrap_err(),
            Error::SingularCustomJ
        );
        let ok =
            BilinearStructure::custom(DenseMatrix::from_rows(&[[2.0, 1.0], [1.0, -1.0]])).unwrap();
        assert_eq!(ok.symmetry(), Symmetry::Symmetric);
        assert!((ok.realize() * ok.inverse()).dist(&DenseMatrix::identity(2)) < 1e-15);
    }

    #[test]
    fn adjoint_examples() {
        let a = DenseMatrix::from_rows(&[[2.0, 3.0], [1.0, 4.0]]);
        let id = BilinearStructure::identity(2);
        assert_eq!(id.j_adjoint(&a).unwrap(), a.transpose());
        let pq = BilinearStructure::pseudo_euclidean(1, 1);
        assert_eq!(
            pq.j_adjoint(&a).unwrap(),
            DenseMatrix::from_rows(&[[2.0, -1.0], [-3.0, 4.0]])
        );
        assert_eq!(pq.j_adjoint(&pq.j_adjoint(&a).unwrap()).unwrap(), a);
        assert!(id.j_adjoint(&DenseMatrix::identity(3)).is_err());
    }

    #[test]
    fn membership_examples() {
        let id = BilinearStructure::identity(2);
        let skew = DenseMatrix::from_rows(&[[0.0, 1.0], [-1.0, 0.0]]);
        assert_eq!(
            id.membership_residual(&skew, AlgebraSide::Lie).unwrap(),
            0.0
        );

        let pq = BilinearStructure::pseudo_euclidean(1, 1);
        let w = DenseMatrix::from_rows(&[[0.0, 2.0], [2.0, 0.0]]);
        assert_eq!(pq.membership_residual(&w, AlgebraSide::Lie).unwrap(), 0.0);

        for j in [id, pq, BilinearStructure::symplectic(2)] {
            let eye = DenseMatrix::identity(j.dim());
            assert_eq!(
                j.membership_residual(&eye, AlgebraSide::Jordan).unwrap(),
                0.0
            );
            assert!(j.is_member(&eye, AlgebraSide::Jordan).unwrap());
            assert!(!j.is_member(&eye, AlgebraSide::Lie).unwrap());
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(
            BilinearStructure::identity(4).projector_dimension(AlgebraSide::Lie),
            6
        );
        assert_eq!(
            BilinearStructure::pseudo_euclidean(2, 1).projector_dimension(AlgebraSide::Jordan),
            6
        );
        assert_eq!(
            BilinearStructure::symplectic(2).projector_dimension(AlgebraSide::Lie),
            10
        );
        assert_eq!(
            BilinearStructure::symplectic(2).projector_dimension(AlgebraSide::Jordan),
            6
        );
    }

    #[test]
    fn descriptors() {
        assert_eq!(
            BilinearStructure::pseudo_euclidean(2, 3).descriptor(),
            "pq:2,3"
        );
        assert_eq!(
            BilinearStructure::symplectic(4).descriptor(),
            "symplectic:4"
        );
    }
}
