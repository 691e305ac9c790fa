use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::tolerances::{JACOBI_MAX_SWEEPS, JACOBI_OFF_REL, QR_SWEEPS_PER_DIM, SYMMETRY_REL};

/// Eigenvalues of a square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenReport {
    pub values: Vec<Complex64>,
    pub is_symmetric_input: bool,
}

impl EigenReport {
    /// Real parts, for reports of symmetric inputs.
    pub fn real_values(&self) -> Vec<f64> {
        self.values.iter().map(|z| z.re).collect()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Smallest real part.
    pub fn min_real(&self) -> f64 {
        self.values
            .iter()
            .map(|z| z.re)
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest real part.
    pub fn max_real(&self) -> f64 {
        self.values
            .iter()
            .map(|z| z.re)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Eigenvalues of a symmetric matrix in ascending order, by cyclic Jacobi rotations.
pub fn sym_eigenvalues(a: &DenseMatrix) -> Result<EigenReport> {
    sym_eigenvalues_with(a, SYMMETRY_REL, JACOBI_OFF_REL)
}

pub fn sym_eigenvalues_with(
    a: &DenseMatrix,
    symmetry_rel: f64,
    off_rel: f64,
) -> Result<EigenReport> {
    let n = a.check_square("matrix")?;
    let norm = a.frobenius_norm();
    let asymmetry = 2.0 * a.skew_part().frobenius_norm();
    if asymmetry > symmetry_rel * norm {
        return Err(Error::NotSymmetric { asymmetry, norm });
    }
    let mut m = a.sym_part();
    let target = off_rel * norm;
    let off_norm = |m: &DenseMatrix| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[(i, j)] * m[(i, j)];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off_norm(&m) > target {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                what: "cyclic Jacobi",
                iterations: sweeps,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, p, q);
            }
        }
        sweeps += 1;
    }
    let mut values = m.diagonal();
    values.sort_by(|x, y| x.total_cmp(y));
    Ok(EigenReport {
        values: values.into_iter().map(|v| Complex64::new(v, 0.0)).collect(),
        is_symmetric_input: true,
    })
}

/// Annihilates `m[(p, q)]` with a two-sided rotation.
fn rotate(m: &mut DenseMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    if apq == 0.0 {
        return;
    }
    let n = m.rows();
    let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for k in 0..n {
        let (kp, kq) = (m[(k, p)], m[(k, q)]);
        m[(k, p)] = c * kp - s * kq;
        m[(k, q)] = s * kp + c * kq;
    }
    for k in 0..n {
        let (pk, qk) = (m[(p, k)], m[(q, k)]);
        m[(p, k)] = c * pk - s * qk;
        m[(q, k)] = s * pk + c * qk;
    }
    m[(p, q)] = 0.0;
    m[(q, p)] = 0.0;
}

/// All eigenvalues of a general square matrix: balancing, Householder
/// reduction to Hessenberg form, then Francis double-shift QR.
///
/// Values are sorted by real part, then imaginary part. When the input is
/// exactly symmetric the imaginary parts are dropped.
pub fn eigenvalues_general(a: &DenseMatrix) -> Result<EigenReport> {
    let n = a.check_square("matrix")?;
    let symmetric = (0..n).all(|i| (0..i).all(|j| a[(i, j)] == a[(j, i)]));
    let mut h = a.clone();
    balance(&mut h);
    hessenberg(&mut h);
    let mut values = hqr(&mut h)?;
    if symmetric {
        for z in &mut values {
            z.im = 0.0;
        }
    }
    values.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    Ok(EigenReport {
        values,
        is_symmetric_input: symmetric,
    })
}

pub fn spectral_radius(a: &DenseMatrix) -> Result<f64> {
    Ok(eigenvalues_general(a)?.spectral_radius())
}

/// Diagonal similarity by powers of two so rows and columns have comparable norms.
fn balance(a: &mut DenseMatrix) {
    const RADIX: f64 = 2.0;
    let n = a.rows();
    let sqrdx = RADIX * RADIX;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].abs();
                    r += a[(i, j)].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= sqrdx;
            }
            g = r * RADIX;
            while c > g {
                f /= RADIX;
                c /= sqrdx;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                let ginv = 1.0 / f;
                for j in 0..n {
                    a[(i, j)] *= ginv;
                }
                for j in 0..n {
                    a[(j, i)] *= f;
                }
            }
        }
    }
}

/// In-place Householder reduction to upper Hessenberg form.
fn hessenberg(a: &mut DenseMatrix) {
    let n = a.rows();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        let mut v: Vec<f64> = (k + 1..n).map(|i| a[(i, k)]).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if v[0] > 0.0 { -norm } else { norm };
        v[0] -= alpha;
        let vnorm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for x in &mut v {
            *x /= vnorm;
        }
        // A ← (I − 2vvᵀ) A
        for j in 0..n {
            let s: f64 = v
                .iter()
                .enumerate()
                .map(|(i, vi)| vi * a[(k + 1 + i, j)])
                .sum();
            for (i, vi) in v.iter().enumerate() {
                a[(k + 1 + i, j)] -= 2.0 * vi * s;
            }
        }
        // A ← A (I − 2vvᵀ)
        for i in 0..n {
            let s: f64 = v
                .iter()
                .enumerate()
                .map(|(j, vj)| a[(i, k + 1 + j)] * vj)
                .sum();
            for (j, vj) in v.iter().enumerate() {
                a[(i, k + 1 + j)] -= 2.0 * s * vj;
            }
        }
        a[(k + 1, k)] = alpha;
        for i in k + 2..n {
            a[(i, k)] = 0.0;
        }
    }
}

fn sign(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

/// Eigenvalues of an upper Hessenberg matrix by the Francis double-shift QR
/// algorithm with deflation and exceptional shifts. Destroys `a`.
fn hqr(a: &mut DenseMatrix) -> Result<Vec<Complex64>> {
    let n = a.rows();
    let mut wr = vec![0.0; n];
    let mut wi = vec![0.0; n];
    let mut anorm = 0.0;
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            anorm += a[(i, j)].abs();
        }
    }
    let budget = QR_SWEEPS_PER_DIM * n;
    let mut total = 0usize;
    let mut nn = n as isize - 1;
    let mut t = 0.0;
    while nn >= 0 {
        let nu = nn as usize;
        let mut its = 0;
        loop {
            // Look for a single small subdiagonal element.
            let mut l = nu;
            while l > 0 {
                let mut s = a[(l - 1, l - 1)].abs() + a[(l, l)].abs();
                if s == 0.0 {
                    s = anorm;
                }
                if a[(l, l - 1)].abs() + s == s {
                    a[(l, l - 1)] = 0.0;
                    break;
                }
                l -= 1;
            }
            let mut x = a[(nu, nu)];
            if l == nu {
                wr[nu] = x + t;
                wi[nu] = 0.0;
                nn -= 1;
                break;
            }
            let mut y = a[(nu - 1, nu - 1)];
            let mut w = a[(nu, nu - 1)] * a[(nu - 1, nu)];
            if l == nu - 1 {
                let p = 0.5 * (y - x);
                let q = p * p + w;
                let mut z = q.abs().sqrt();
                x += t;
                if q >= 0.0 {
                    z = p + sign(z, p);
                    wr[nu - 1] = x + z;
                    wr[nu] = if z != 0.0 { x - w / z } else { x + z };
                    wi[nu - 1] = 0.0;
                    wi[nu] = 0.0;
                } else {
                    wr[nu - 1] = x + p;
                    wr[nu] = x + p;
                    wi[nu - 1] = -z;
                    wi[nu] = z;
                }
                nn -= 2;
                break;
            }
            if total >= budget {
                return Err(Error::NoConvergence {
                    what: "shifted QR",
                    iterations: total,
                });
            }
            if its == 10 || its == 20 {
                t += x;
                for i in 0..=nu {
                    a[(i, i)] -= x;
                }
                let s = a[(nu, nu - 1)].abs() + a[(nu - 1, nu - 2)].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;
            total += 1;
            // Form the shift and look for two consecutive small subdiagonal elements.
            let mut m = nu - 2;
            let (mut p, mut q, mut r);
            loop {
                let z = a[(m, m)];
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / a[(m + 1, m)] + a[(m, m + 1)];
                q = a[(m + 1, m + 1)] - z - rr - ss;
                r = a[(m + 2, m + 1)];
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                let u = a[(m, m - 1)].abs() * (q.abs() + r.abs());
                let v = p.abs() * (a[(m - 1, m - 1)].abs() + z.abs() + a[(m + 1, m + 1)].abs());
                if u + v == v {
                    break;
                }
                m -= 1;
            }
            for i in m + 2..=nu {
                a[(i, i - 2)] = 0.0;
                if i != m + 2 {
                    a[(i, i - 3)] = 0.0;
                }
            }
            // Double QR step on rows l..=nu and columns m..=nu.
            let mut k = m;
            while k < nu {
                if k != m {
                    p = a[(k, k - 1)];
                    q = a[(k + 1, k - 1)];
                    r = if k != nu - 1 { a[(k + 2, k - 1)] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                let s = sign((p * p + q * q + r * r).sqrt(), p);
                if s != 0.0 {
                    if k == m {
                        if l != m {
                            a[(k, k - 1)] = -a[(k, k - 1)];
                        }
                    } else {
                        a[(k, k - 1)] = -s * x;
                    }
                    p += s;
                    x = p / s;
                    y = q / s;
                    let z = r / s;
                    q /= p;
                    r /= p;
                    for j in k..=nu {
                        let mut pp = a[(k, j)] + q * a[(k + 1, j)];
                        if k != nu - 1 {
                            pp += r * a[(k + 2, j)];
                            a[(k + 2, j)] -= pp * z;
                        }
                        a[(k + 1, j)] -= pp * y;
                        a[(k, j)] -= pp * x;
                    }
                    let mmin = if nu < k + 3 { nu } else { k + 3 };
                    for i in l..=mmin {
                        let mut pp = x * a[(i, k)] + y * a[(i, k + 1)];
                        if k != nu - 1 {
                            pp += z * a[(i, k + 2)];
                            a[(i, k + 2)] -= pp * r;
                        }
                        a[(i, k + 1)] -= pp * q;
                        a[(i, k)] -= pp;
                    }
                }
                k += 1;
            }
        }
    }
    Ok(wr
        .into_iter()
        .zip(wi)
        .map(|(re, im)| Complex64::new(re, im))
        .collect())
}
