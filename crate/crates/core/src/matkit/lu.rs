use crate::error::{mismatch, Error, Result};
use crate::matrix::DenseMatrix;
use crate::tolerances::PIVOT_REL;

/// Row-pivoted LU factors `PA = LU`, kept for repeated solves with one matrix.
#[derive(Debug, Clone)]
pub struct PivotedLu {
    lu: DenseMatrix,
    perm: Vec<usize>,
    sign: f64,
}

impl PivotedLu {
    /// Factors `a`, failing with `SingularMatrix` once a pivot drops below
    /// `PIVOT_REL` times the largest row norm of `a`.
    pub fn new(a: &DenseMatrix) -> Result<Self> {
        let n = a.check_square("matrix")?;
        let threshold = PIVOT_REL * a.max_row_norm();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        for k in 0..n {
            let (p, pivot) = (k..n)
                .map(|i| (i, lu[(i, k)].abs()))
                .fold(
                    (k, -1.0),
                    |best, cur| if cur.1 > best.1 { cur } else { best },
                );
            if pivot <= threshold || pivot == 0.0 {
                return Err(Error::SingularMatrix { step: k, pivot });
            }
            if p != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = tmp;
                }
                perm.swap(k, p);
                sign = -sign;
            }
            let d = lu[(k, k)];
            for i in k + 1..n {
                let f = lu[(i, k)] / d;
                lu[(i, k)] = f;
                if f != 0.0 {
                    for j in k + 1..n {
                        let u = lu[(k, j)];
                        lu[(i, j)] -= f * u;
                    }
                }
            }
        }
        Ok(Self { lu, perm, sign })
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn determinant(&self) -> f64 {
        self.sign * self.lu.diagonal().iter().product::<f64>()
    }

    pub fn solve_vec(&self, b: &[f64]) -> Vec<f64> {
        let n = self.dim();
        assert_eq!(b.len(), n);
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let row = self.lu.row(i);
            let s: f64 = row[..i].iter().zip(&x[..i]).map(|(l, v)| l * v).sum();
            x[i] -= s;
        }
        for i in (0..n).rev() {
            let row = self.lu.row(i);
            let s: f64 = row[i + 1..]
                .iter()
                .zip(&x[i + 1..])
                .map(|(u, v)| u * v)
                .sum();
            x[i] = (x[i] - s) / row[i];
        }
        x
    }

    pub fn solve(&self, b: &DenseMatrix) -> Result<DenseMatrix> {
        if b.rows() != self.dim() {
            return Err(mismatch(
                format!("{} right-hand-side rows", self.dim()),
                b.rows().to_string(),
            ));
        }
        let mut out = DenseMatrix::zeros(b.rows(), b.cols());
        for j in 0..b.cols() {
            let x = self.solve_vec(&b.col(j));
            for (i, v) in x.into_iter().enumerate() {
                out[(i, j)] = v;
            }
        }
        Ok(out)
    }

    /// Solves `Xᵀ`-systems: returns `x` with `Aᵀx = b`.
    pub fn solve_transposed_vec(&self, b: &[f64]) -> Vec<f64> {
        let n = self.dim();
        // Aᵀ = Uᵀ Lᵀ P, so solve Uᵀ z = b, Lᵀ w = z, x = Pᵀ w.
        let mut z = b.to_vec();
        for i in 0..n {
            let mut s = z[i];
            for k in 0..i {
                s -= self.lu[(k, i)] * z[k];
            }
            z[i] = s / self.lu[(i, i)];
        }
        for i in (0..n).rev() {
            let mut s = z[i];
            for k in i + 1..n {
                s -= self.lu[(k, i)] * z[k];
            }
            z[i] = s;
        }
        let mut x = vec![0.0; n];
        for (k, &p) in self.perm.iter().enumerate() {
            x[p] = z[k];
        }
        x
    }
}

/// Solves `AX = B` by row-pivoted Gaussian elimination.
pub fn solve_dense(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    PivotedLu::new(a)?.solve(b)
}

pub fn inverse(a: &DenseMatrix) -> Result<DenseMatrix> {
    let n = a.check_square("matrix")?;
    PivotedLu::new(a)?.solve(&DenseMatrix::identity(n))
}

/// Forward substitution with a lower triangular matrix (entries above the
/// diagonal are ignored).
pub fn solve_lower(l: &DenseMatrix, b: &[f64]) -> Result<Vec<f64>> {
    let n = l.check_square("triangular matrix")?;
    let mut x = b.to_vec();
    for i in 0..n {
        let row = l.row(i);
        let s: f64 = row[..i].iter().zip(&x[..i]).map(|(a, v)| a * v).sum();
        if row[i] == 0.0 {
            return Err(Error::SingularMatrix {
                step: i,
                pivot: 0.0,
            });
        }
        x[i] = (x[i] - s) / row[i];
    }
    Ok(x)
}

/// Back substitution with an upper triangular matrix (entries below the
/// diagonal are ignored).
pub fn solve_upper(u: &DenseMatrix, b: &[f64]) -> Result<Vec<f64>> {
    let n = u.check_square("triangular matrix")?;
    let mut x = b.to_vec();
    for i in (0..n).rev() {
        let row = u.row(i);
        let s: f64 = row[i + 1..]
            .iter()
            .zip(&x[i + 1..])
            .map(|(a, v)| a * v)
            .sum();
        if row[i] == 0.0 {
            return Err(Error::SingularMatrix {
                step: i,
                pivot: 0.0,
            });
        }
        x[i] = (x[i] - s) / row[i];
    }
    Ok(x)
}
