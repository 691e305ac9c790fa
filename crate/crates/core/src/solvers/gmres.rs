use crate::error::Result;
use crate::matrix::{axpy, dot, norm2, sub_vec, DenseMatrix};
use crate::structures::BilinearStructure;

use super::jhss::{optimal_alpha, JHssPreconditioner};
use super::{Monitor, Shift, SolveReport, SolverConfig};

/// Restarted GMRES(`restart`), right-preconditioned by the J-HSS
/// preconditioner when `precond` is given.
///
/// A happy breakdown ends the cycle and counts as convergence once the true
/// residual meets the tolerance. Exhausting `cfg.max_iter` inner iterations
/// returns a report with `converged = false`.
pub fn gmres_preconditioned(
    a: &DenseMatrix,
    b: &[f64],
    precond: Option<&BilinearStructure>,
    restart: usize,
    cfg: &SolverConfig,
) -> Result<SolveReport> {
    let n = a.check_square("matrix")?;
    if b.len() != n {
        return Err(crate::error::mismatch(
            format!("right-hand side of length {n}"),
            b.len().to_string(),
        ));
    }
    cfg.validate(n)?;
    let restart = restart.clamp(1, n);
    let pre = match precond {
        Some(j) => {
            let alpha = match cfg.alpha {
                Shift::Fixed(a) => a,
                Shift::Auto => optimal_alpha(a, j).unwrap_or(1.0),
            };
            Some(JHssPreconditioner::new(a, j, alpha)?)
        }
        None => None,
    };
    let apply_m = |v: &[f64]| match &pre {
        Some(p) => p.apply(v),
        None => v.to_vec(),
    };

    let mut monitor = Monitor::new(b, cfg.tol);
    let mut x = cfg.initial_guess(n);
    let mut r = sub_vec(b, &a.matvec(&x));
    let mut beta = norm2(&r);
    let mut converged = monitor.record(beta);
    let mut iterations = 0;

    while !converged && iterations < cfg.max_iter {
        let mut basis: Vec<Vec<f64>> = vec![r.iter().map(|v| v / beta).collect()];
        let mut hess = vec![vec![0.0; restart]; restart + 1];
        let mut cs = vec![0.0; restart];
        let mut sn = vec![0.0; restart];
        let mut g = vec![0.0; restart + 1];
        g[0] = beta;
        let mut k = 0;
        while k < restart && iterations < cfg.max_iter {
            let mut w = a.matvec(&apply_m(&basis[k]));
            for (i, v) in basis.iter().enumerate() {
                let hik = dot(&w, v);
                hess[i][k] = hik;
                axpy(-hik, v, &mut w);
            }
            let wn = norm2(&w);
            hess[k + 1][k] = wn;
            for i in 0..k {
                let (h0, h1) = (hess[i][k], hess[i + 1][k]);
                hess[i][k] = cs[i] * h0 + sn[i] * h1;
                hess[i + 1][k] = -sn[i] * h0 + cs[i] * h1;
            }
            let (h0, h1) = (hess[k][k], hess[k + 1][k]);
            let denom = h0.hypot(h1);
            if denom == 0.0 {
                cs[k] = 1.0;
                sn[k] = 0.0;
            } else {
                cs[k] = h0 / denom;
                sn[k] = h1 / denom;
            }
            hess[k][k] = denom;
            hess[k + 1][k] = 0.0;
            g[k + 1] = -sn[k] * g[k];
            g[k] *= cs[k];
            k += 1;
            iterations += 1;
            let estimate_ok = monitor.record(g[k].abs());
            if estimate_ok || wn <= 1e-14 * denom.max(f64::MIN_POSITIVE) {
                break;
            }
            basis.push(w.iter().map(|v| v / wn).collect());
        }
        // y = H⁻¹ g on the leading k×k triangle.
        let mut y = vec![0.0; k];
        for i in (0..k).rev() {
            let s: f64 = (i + 1..k).map(|j| hess[i][j] * y[j]).sum();
            y[i] = (g[i] - s) / hess[i][i];
        }
        let mut update = vec![0.0; n];
        for (yi, v) in y.iter().zip(&basis) {
            axpy(*yi, v, &mut update);
        }
        axpy(1.0, &apply_m(&update), &mut x);
        r = sub_vec(b, &a.matvec(&x));
        beta = norm2(&r);
        monitor.history.pop();
        converged = monitor.record(beta);
        if beta == 0.0 || !beta.is_finite() {
            break;
        }
    }
    Ok(SolveReport {
        method: if pre.is_some() { "gmres-jhss" } else { "gmres" },
        solution: x,
        iterations,
        residual_history: monitor.history,
        converged,
        alpha: pre.as_ref().map(|p| p.alpha()),
        rho_estimate: None,
        bound: None,
        hypothesis_holds: None,
    })
}
