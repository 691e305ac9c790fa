//! The five commands: split, factor, solve, analyze, verify.

use std::fs;
use std::time::Instant;

use serde::Serialize;

use liesplit_core::factorizations::{
    generalized_polar, linearization_check, lu_ldu, polar, qr_qdr, LinearizedPair, LuForm, QrForm,
};
use liesplit_core::solvers::{
    adi_solve, classical_solve, gmres_preconditioned, iteration_analysis, j_hss_solve,
    optimal_alpha, sts_solve, ClassicalMethod, Shift, SolveReport, SolverConfig, StsDirection,
};
use liesplit_core::splittings::{
    j_split, kron_sum_factors, kronecker_sum, triangular_split, TriangularMode,
};
use liesplit_core::structures::{AlgebraSide, BilinearStructure};
use liesplit_core::tolerances::{
    FACTOR_RESIDUAL_REL, KRON_RESIDUAL_REL, LINEARIZATION_MIN_ORDER, LINEARIZATION_STEPS,
    MEMBERSHIP_REL,
};
use liesplit_core::{generate, DenseMatrix, Error as CoreError, PartTag};

use crate::error::{CliError, EXIT_NUMERICAL, EXIT_OK};
use crate::manifest::{AlphaSpec, Command, JSelector, RunManifest};
use crate::mm;
use crate::report::{num, render, Outcome, RunOutput, Table};

const RECONSTRUCTION_REL: f64 = 1e-13;
const ORTHOGONALITY_REL: f64 = 1e-11;
const JPOLAR_RESIDUAL_REL: f64 = 1e-9;
const BOUND_SLACK: f64 = 1e-9;
/// Largest system for which solve forms the iteration matrix.
const ANALYZE_MAX_DIM: usize = 64;
const SWEEP_POINTS: usize = 41;

/// Runs the manifest, writes artifacts, prints the report and returns the
/// exit status.
pub fn execute(m: &RunManifest) -> i32 {
    match run(m).and_then(|out| emit(m, &out).map(|_| out)) {
        Ok(out) => match &out.failure {
            None => EXIT_OK,
            Some(reason) => {
                eprintln!("failed: {reason}");
                EXIT_NUMERICAL
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn emit(m: &RunManifest, out: &RunOutput) -> Result<(), CliError> {
    print!("{}", out.report);
    let Some(dir) = &m.out else {
        return Ok(());
    };
    let write = |name: &str, text: &str| {
        let path = dir.join(name);
        fs::write(&path, text).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        })
    };
    fs::create_dir_all(dir).map_err(|source| CliError::Write {
        path: dir.display().to_string(),
        source,
    })?;
    write("manifest.txt", &m.render())?;
    write("report.json", &out.report)?;
    if let Some(table) = &out.table {
        write("table.tsv", table)?;
    }
    for (name, a) in &out.matrices {
        write(&format!("{name}.mtx"), &mm::render(a))?;
    }
    Ok(())
}

/// Runs the manifest without touching the filesystem beyond reading inputs.
pub fn run(m: &RunManifest) -> Result<RunOutput, CliError> {
    m.validate()?;
    let start = Instant::now();
    let command = m.command.as_str();
    let elapsed = || (!m.no_timestamp).then(|| start.elapsed().as_secs_f64() * 1e3);
    Ok(match m.command {
        Command::Split => {
            let o = split(m)?;
            render(command, o, elapsed())
        }
        Command::Factor => {
            let o = factor(m)?;
            render(command, o, elapsed())
        }
        Command::Solve => {
            let o = solve(m)?;
            render(command, o, elapsed())
        }
        Command::Analyze => {
            let o = analyze(m)?;
            render(command, o, elapsed())
        }
        Command::Verify => {
            let o = verify(m)?;
            render(command, o, elapsed())
        }
    })
}

fn square(a: DenseMatrix, what: &str) -> Result<DenseMatrix, CliError> {
    if a.is_square() {
        Ok(a)
    } else {
        Err(CliError::Usage(format!(
            "{what} must be square, got {}x{}",
            a.rows(),
            a.cols()
        )))
    }
}

/// The `--matrix` input, or a seeded instance from `make` when absent.
fn input_matrix(
    m: &RunManifest,
    make: impl FnOnce(usize, &mut generate::SeededRng) -> Result<DenseMatrix, CliError>,
) -> Result<(DenseMatrix, bool), CliError> {
    match &m.matrix {
        Some(path) => Ok((square(mm::read(path)?, "--matrix")?, false)),
        None => Ok((make(m.size, &mut generate::rng(m.seed))?, true)),
    }
}

fn selector(m: &RunManifest) -> JSelector {
    m.j.clone().unwrap_or(JSelector::Identity)
}

fn unknown(what: &str, got: &str, options: &str) -> CliError {
    CliError::Usage(format!(
        "unknown {what} `{got}` (expected one of: {options})"
    ))
}

fn rel(x: f64, scale: f64) -> f64 {
    if scale > 0.0 {
        x / scale
    } else {
        x
    }
}

#[derive(Serialize)]
struct PartReport {
    tag: &'static str,
    frobenius_norm: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    membership_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<f64>,
}

#[derive(Serialize)]
struct SplitBody {
    scheme: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<String>,
    n: usize,
    reconstruction_residual: f64,
    parts: Vec<PartReport>,
}

fn split(m: &RunManifest) -> Result<Outcome<SplitBody>, CliError> {
    let scheme = m.scheme.clone().unwrap_or_else(|| "j-split".into());
    let mode =
        match scheme.as_str() {
            "j-split" | "kronecker" => None,
            "doolittle" => Some(TriangularMode::Doolittle),
            "crout" => Some(TriangularMode::Crout),
            "ldu" => Some(TriangularMode::Ldu),
            "jacobi" => Some(TriangularMode::Jacobi),
            "skew-upper" => Some(TriangularMode::SkewUpper),
            "skew-lower" => Some(TriangularMode::SkewLower),
            "levi" => Some(TriangularMode::Levi),
            other => return Err(unknown(
                "split scheme",
                other,
                "j-split, doolittle, crout, ldu, jacobi, skew-upper, skew-lower, levi, kronecker",
            )),
        };
    let (a, _) = input_matrix(m, |n, rng| {
        Ok(if scheme == "kronecker" {
            kronecker_sum(&generate::matrix(n, rng), &generate::matrix(n, rng))?
        } else {
            generate::unit_norm(n, rng)
        })
    })?;
    let n = a.rows();
    let scale = a.frobenius_norm();
    let mut failures = Vec::new();
    let mut matrices = Vec::new();

    if scheme == "kronecker" {
        let (fa, fb) = kron_sum_factors(&a)?;
        let residual = rel(kronecker_sum(&fa, &fb)?.dist(&a), scale);
        if residual > KRON_RESIDUAL_REL {
            failures.push(format!("Kronecker reconstruction residual {residual:e}"));
        }
        let parts = vec![
            PartReport {
                tag: PartTag::LeftFactor.as_str(),
                frobenius_norm: fa.frobenius_norm(),
                membership_residual: None,
                trace: Some(fa.trace()),
            },
            PartReport {
                tag: PartTag::RightFactor.as_str(),
                frobenius_norm: fb.frobenius_norm(),
                membership_residual: None,
                trace: Some(fb.trace()),
            },
        ];
        matrices.push(("factor_a".to_string(), fa));
        matrices.push(("factor_b".to_string(), fb));
        let mut o = Outcome::new(SplitBody {
            scheme,
            j: None,
            n,
            reconstruction_residual: residual,
            parts,
        });
        o.matrices = matrices;
        o.failure = (!failures.is_empty()).then(|| failures.join("; "));
        return Ok(o);
    }

    let (splitting, j) = match mode {
        Some(mode) => (triangular_split(&a, mode)?, None),
        None => {
            let j = selector(m).build(n)?;
            (j_split(&a, &j)?, Some(j))
        }
    };
    let residual = rel(splitting.reconstruction_residual(&a), scale);
    if residual > RECONSTRUCTION_REL {
        failures.push(format!("reconstruction residual {residual:e}"));
    }
    let mut parts = Vec::new();
    for (tag, p) in &splitting.parts {
        let side = match tag {
            PartTag::Lie => Some(AlgebraSide::Lie),
            PartTag::Jordan => Some(AlgebraSide::Jordan),
            _ => None,
        };
        let membership = match (side, &j) {
            (Some(side), Some(j)) => {
                Some(j.membership_residual(p, side)? / (1.0 + p.frobenius_norm()))
            }
            _ => None,
        };
        if let Some(r) = membership.filter(|r| *r > MEMBERSHIP_REL) {
            failures.push(format!("{tag} part membership residual {r:e}"));
        }
        let trace = (*tag == PartTag::Traceless).then(|| p.trace());
        if let Some(t) = trace.filter(|t| rel(t.abs(), scale) > RECONSTRUCTION_REL) {
            failures.push(format!("traceless part has trace {t:e}"));
        }
        parts.push(PartReport {
            tag: tag.as_str(),
            frobenius_norm: p.frobenius_norm(),
            membership_residual: membership,
            trace,
        });
        matrices.push((format!("part_{}", tag.as_str()), p.clone()));
    }
    let mut o = Outcome::new(SplitBody {
        scheme,
        j: j.map(|j| j.descriptor()),
        n,
        reconstruction_residual: residual,
        parts,
    });
    o.matrices = matrices;
    o.failure = (!failures.is_empty()).then(|| failures.join("; "));
    Ok(o)
}

#[derive(Serialize)]
struct FactorBody {
    scheme: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<String>,
    n: usize,
    factors: Vec<&'static str>,
    residual: f64,
    structural: Vec<f64>,
}

fn factor(m: &RunManifest) -> Result<Outcome<FactorBody>, CliError> {
    let scheme = m.scheme.clone().unwrap_or_else(|| "qr".into());
    let (a, _) = input_matrix(m, |n, rng| Ok(generate::near_identity(n, 0.5, rng)))?;
    let n = a.rows();
    let mut j_used = None;
    let result = match scheme.as_str() {
        "lu-doolittle" => lu_ldu(&a, LuForm::Doolittle)?,
        "lu-crout" => lu_ldu(&a, LuForm::Crout)?,
        "ldu" => lu_ldu(&a, LuForm::Ldu)?,
        "qr" => qr_qdr(&a, QrForm::Qr)?,
        "lq" => qr_qdr(&a, QrForm::Lq)?,
        "qdr" => qr_qdr(&a, QrForm::Qdr)?,
        "polar" => polar(&a)?,
        "jpolar" => {
            let j = selector(m).build(n)?;
            let f = generalized_polar(&a, &j)?;
            j_used = Some(j);
            f
        }
        other => {
            return Err(unknown(
                "factor scheme",
                other,
                "lu-doolittle, lu-crout, ldu, qr, lq, qdr, polar, jpolar",
            ))
        }
    };
    let limit = if j_used.is_some() {
        JPOLAR_RESIDUAL_REL
    } else {
        FACTOR_RESIDUAL_REL
    };
    let residual = rel(result.residual, a.frobenius_norm());
    let mut failures = Vec::new();
    if residual > limit {
        failures.push(format!("product residual {residual:e} exceeds {limit:e}"));
    }
    let names = result.scheme.factor_names();
    for (name, s) in names.iter().zip(&result.structural) {
        if *s > limit {
            failures.push(format!(
                "factor {name} structural residual {s:e} exceeds {limit:e}"
            ));
        }
    }
    let mut o = Outcome::new(FactorBody {
        scheme,
        j: j_used.map(|j| j.descriptor()),
        n,
        factors: names.to_vec(),
        residual,
        structural: result.structural.clone(),
    });
    o.matrices = names
        .iter()
        .zip(result.factors)
        .enumerate()
        .map(|(i, (name, f))| (format!("factor_{}_{name}", i + 1), f))
        .collect();
    o.failure = (!failures.is_empty()).then(|| failures.join("; "));
    Ok(o)
}

#[derive(Serialize)]
struct SolveBody {
    method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<String>,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    iterations: usize,
    converged: bool,
    final_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hypothesis_holds: Option<bool>,
}

fn read_rhs(
    m: &RunManifest,
    len: usize,
    default: impl FnOnce() -> Vec<f64>,
) -> Result<Vec<f64>, CliError> {
    let Some(path) = &m.rhs else {
        return Ok(default());
    };
    let b = mm::read(path)?;
    if b.rows().min(b.cols()) != 1 || b.rows() * b.cols() != len {
        return Err(CliError::Usage(format!(
            "--rhs must be a vector of length {len}, got {}x{}",
            b.rows(),
            b.cols()
        )));
    }
    Ok(b.into_vec())
}

fn solve(m: &RunManifest) -> Result<Outcome<SolveBody>, CliError> {
    let method = m.method.clone().unwrap_or_else(|| "j-hss".into());
    let cfg = SolverConfig {
        alpha: match m.alpha {
            AlphaSpec::Auto => Shift::Auto,
            AlphaSpec::Value(a) => Shift::Fixed(a),
        },
        tol: m.tol,
        max_iter: m.max_iter,
        x0: None,
        force: m.force,
        analyze: false,
    };
    let uses_j = matches!(method.as_str(), "j-hss" | "gmres-jhss");
    let mut j_used: Option<BilinearStructure> = None;
    let (report, n) = match method.as_str() {
        "j-hss" | "gmres" | "gmres-jhss" => {
            let sel = selector(m);
            let (a, _) = input_matrix(m, |n, rng| Ok(generate::definite_instance(&sel.build(n)?, rng)))?;
            let n = a.rows();
            let b = read_rhs(m, n, || a.matvec(&vec![1.0; n]))?;
            let cfg = SolverConfig { analyze: n <= ANALYZE_MAX_DIM, ..cfg };
            let report = if uses_j {
                let j = sel.build(n)?;
                let r = if method == "j-hss" {
                    j_hss_solve(&a, &b, &j, &cfg)?
                } else {
                    gmres_preconditioned(&a, &b, Some(&j), m.restart, &cfg)?
                };
                j_used = Some(j);
                r
            } else {
                gmres_preconditioned(&a, &b, None, m.restart, &cfg)?
            };
            (report, n)
        }
        "sts-upper" | "sts-lower" => {
            let (a, _) = input_matrix(m, |n, rng| Ok(generate::positive_definite_nonsymmetric(n, rng)))?;
            let n = a.rows();
            let b = read_rhs(m, n, || a.matvec(&vec![1.0; n]))?;
            let dir = if method == "sts-upper" { StsDirection::Upper } else { StsDirection::Lower };
            let cfg = SolverConfig { analyze: n <= ANALYZE_MAX_DIM, ..cfg };
            (sts_solve(&a, &b, &cfg, dir)?, n)
        }
        "adi" => {
            let (a, generated) = input_matrix(m, |n, rng| Ok(generate::spd(n, 0.5, 5.0, rng)))?;
            let n = a.rows();
            let b = match &m.matrix2 {
                Some(path) => square(mm::read(path)?, "--matrix2")?,
                None if generated => {
                    let mut rng = generate::rng(m.seed.wrapping_add(1));
                    generate::spd(n, 0.5, 5.0, &mut rng)
                }
                None => return Err(CliError::Usage("adi needs --matrix2 when --matrix is given".into())),
            };
            let sum = liesplit_core::KroneckerSum::new(a.clone(), b.clone())?;
            let rhs = read_rhs(m, n * n, || sum.apply(&vec![1.0; n * n]))?;
            let cfg = SolverConfig { analyze: n * n <= ANALYZE_MAX_DIM, ..cfg };
            (adi_solve(&a, &b, &rhs, &cfg)?, n * n)
        }
        "jacobi" | "gauss-seidel-forward" | "gauss-seidel-backward" => {
            let (a, _) = input_matrix(m, |n, rng| Ok(generate::diagonally_dominant(n, rng)))?;
            let n = a.rows();
            let b = read_rhs(m, n, || a.matvec(&vec![1.0; n]))?;
            let which = match method.as_str() {
                "jacobi" => ClassicalMethod::Jacobi,
                "gauss-seidel-forward" => ClassicalMethod::GaussSeidelForward,
                _ => ClassicalMethod::GaussSeidelBackward,
            };
            (classical_solve(&a, &b, which, &cfg)?, n)
        }
        other => {
            return Err(unknown(
                "method",
                other,
                "j-hss, gmres, gmres-jhss, sts-upper, sts-lower, adi, jacobi, gauss-seidel-forward, gauss-seidel-backward",
            ))
        }
    };
    Ok(solve_outcome(method, j_used, n, report))
}

fn solve_outcome(
    method: String,
    j: Option<BilinearStructure>,
    n: usize,
    r: SolveReport,
) -> Outcome<SolveBody> {
    let mut table = Table::new(vec!["iteration", "relative_residual"]);
    for (k, res) in r.residual_history.iter().enumerate() {
        table.push(vec![k.to_string(), num(*res)]);
    }
    let failure = (!r.converged).then(|| {
        format!(
            "{} did not reach the tolerance in {} iterations (residual {:e})",
            method,
            r.iterations,
            r.final_residual()
        )
    });
    let mut o = Outcome::new(SolveBody {
        method,
        j: j.map(|j| j.descriptor()),
        n,
        alpha: r.alpha,
        iterations: r.iterations,
        converged: r.converged,
        final_residual: r.final_residual(),
        rho_estimate: r.rho_estimate,
        bound: r.bound,
        hypothesis_holds: r.hypothesis_holds,
    });
    o.table = Some(table);
    o.matrices = vec![("solution".to_string(), DenseMatrix::column(&r.solution))];
    o.failure = failure;
    o
}

#[derive(Serialize)]
struct AnalyzeBody {
    j: String,
    n: usize,
    definite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_star: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho_at_alpha_star: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound_at_alpha_star: Option<f64>,
    best_alpha: f64,
    best_rho: f64,
    sweep_points: usize,
}

fn analyze(m: &RunManifest) -> Result<Outcome<AnalyzeBody>, CliError> {
    let sel = selector(m);
    let (a, _) = input_matrix(m, |n, rng| {
        Ok(generate::definite_instance(&sel.build(n)?, rng))
    })?;
    let n = a.rows();
    let j = sel.build(n)?;
    let star = match optimal_alpha(&a, &j) {
        Ok(s) => Some(s),
        Err(CoreError::NotPositiveDefinite { lambda_min }) if !m.force => {
            return Err(CoreError::WellDefinednessViolated { lambda_min }.into())
        }
        Err(CoreError::NotPositiveDefinite { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let center = star.unwrap_or(1.0);
    let mut table = Table::new(vec!["alpha", "rho", "bound"]);
    let mut failures = Vec::new();
    let mut best = (f64::NAN, f64::INFINITY);
    let mut at_star = None;
    for k in 0..SWEEP_POINTS {
        let exponent = -2.0 + 4.0 * k as f64 / (SWEEP_POINTS - 1) as f64;
        let alpha = center * 10f64.powf(exponent);
        let an = match iteration_analysis(&a, &j, alpha) {
            Ok(an) => an,
            Err(CoreError::SingularShift) => continue,
            Err(e) => return Err(e.into()),
        };
        let bound = star.map(|_| an.bound);
        table.push(vec![
            num(alpha),
            num(an.rho),
            bound.map_or_else(|| "-".to_string(), num),
        ]);
        if let Some(b) = bound.filter(|b| an.rho > b + BOUND_SLACK) {
            failures.push(format!(
                "rho {:e} exceeds bound {b:e} at alpha {alpha:e}",
                an.rho
            ));
        }
        if an.rho < best.1 {
            best = (alpha, an.rho);
        }
        if star.is_some() && k == SWEEP_POINTS / 2 {
            at_star = Some((an.rho, an.bound));
        }
    }
    match at_star {
        Some((rho, _)) if rho >= 1.0 => {
            failures.push(format!("rho at alpha* is {rho:e}, not a contraction"))
        }
        Some(_) => {}
        None => {
            failures.push("definite factor is not positive definite, so alpha* is undefined".into())
        }
    }
    let mut o = Outcome::new(AnalyzeBody {
        j: j.descriptor(),
        n,
        definite: star.is_some(),
        alpha_star: star,
        rho_at_alpha_star: at_star.map(|p| p.0),
        bound_at_alpha_star: at_star.map(|p| p.1),
        best_alpha: best.0,
        best_rho: best.1,
        sweep_points: table.rows.len(),
    });
    o.table = Some(table);
    o.failure = (!failures.is_empty()).then(|| failures.join("; "));
    Ok(o)
}

#[derive(Serialize)]
struct VerifyPart {
    factor: &'static str,
    tag: &'static str,
    exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<f64>,
    errors: Vec<f64>,
}

#[derive(Serialize)]
struct VerifyPair {
    pair: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    parts: Vec<VerifyPart>,
}

#[derive(Serialize)]
struct VerifyStructure {
    j: String,
    reconstruction: f64,
    lie_membership: f64,
    jordan_membership: f64,
    orthogonality: f64,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyBody {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    steps: Vec<f64>,
    min_order: f64,
    pairs: Vec<VerifyPair>,
    structures: Vec<VerifyStructure>,
}

fn verify_pairs(m: &RunManifest, n: usize) -> Result<Vec<LinearizedPair>, CliError> {
    let j_pairs = || -> Result<Vec<LinearizedPair>, CliError> {
        match &m.j {
            Some(sel) => Ok(vec![LinearizedPair::JPolar(sel.build(n)?)]),
            None => {
                let mut v = Vec::new();
                if n >= 2 {
                    v.push(LinearizedPair::JPolar(BilinearStructure::pseudo_euclidean(
                        n - n / 2,
                        n / 2,
                    )));
                }
                if n.is_multiple_of(2) {
                    v.push(LinearizedPair::JPolar(BilinearStructure::symplectic(n / 2)));
                }
                Ok(v)
            }
        }
    };
    let scheme = m.scheme.clone().unwrap_or_else(|| "all".into());
    let mut pairs = Vec::new();
    for name in scheme.split(',').map(str::trim) {
        match name {
            "all" => {
                pairs.push(LinearizedPair::Polar);
                pairs.extend(j_pairs()?);
                pairs.extend([LinearizedPair::Qr, LinearizedPair::Lq, LinearizedPair::Ldu]);
            }
            "polar" => pairs.push(LinearizedPair::Polar),
            "jpolar" => pairs.extend(j_pairs()?),
            "qr" => pairs.push(LinearizedPair::Qr),
            "lq" => pairs.push(LinearizedPair::Lq),
            "qdr" => pairs.push(LinearizedPair::Qdr),
            "ldu" => pairs.push(LinearizedPair::Ldu),
            other => {
                return Err(unknown(
                    "verify scheme",
                    other,
                    "all, polar, jpolar, qr, lq, qdr, ldu",
                ))
            }
        }
    }
    Ok(pairs)
}

fn verify(m: &RunManifest) -> Result<Outcome<VerifyBody>, CliError> {
    let (a, generated) = input_matrix(m, |n, rng| Ok(generate::unit_norm(n, rng)))?;
    let n = a.rows();
    let pairs = verify_pairs(m, n)?;
    let mut failures = Vec::new();
    let mut min_order = f64::INFINITY;
    let mut pair_reports = Vec::new();
    let mut structures = vec![BilinearStructure::identity(n)];

    for pair in &pairs {
        if let LinearizedPair::JPolar(j) = pair {
            structures.push(j.clone());
        }
        match linearization_check(pair, &a, &LINEARIZATION_STEPS) {
            Ok(report) => {
                let passed = report.passes();
                if !passed {
                    failures.push(format!(
                        "{} fitted order below {LINEARIZATION_MIN_ORDER}",
                        report.pair
                    ));
                }
                min_order = min_order.min(report.min_order());
                pair_reports.push(VerifyPair {
                    pair: report.pair,
                    passed,
                    error: None,
                    parts: report
                        .parts
                        .into_iter()
                        .map(|p| VerifyPart {
                            factor: p.factor,
                            tag: p.tag.as_str(),
                            exact: p.exact,
                            order: p.order,
                            errors: p.errors,
                        })
                        .collect(),
                });
            }
            Err(e @ CoreError::FactorizationFailed { .. }) => {
                failures.push(format!("{}: {e}", pair.name()));
                pair_reports.push(VerifyPair {
                    pair: pair.name(),
                    passed: false,
                    error: Some(e.to_string()),
                    parts: Vec::new(),
                });
            }
            Err(e) => return Err(e.into()),
        }
    }

    let scale = a.frobenius_norm();
    let mut structure_reports = Vec::new();
    for j in &structures {
        let s = j_split(&a, j)?;
        let lie = s.part(PartTag::Lie).expect("lie part");
        let jordan = s.part(PartTag::Jordan).expect("jordan part");
        let reconstruction = rel(s.reconstruction_residual(&a), scale);
        let lie_membership =
            j.membership_residual(lie, AlgebraSide::Lie)? / (1.0 + lie.frobenius_norm());
        let jordan_membership =
            j.membership_residual(jordan, AlgebraSide::Jordan)? / (1.0 + jordan.frobenius_norm());
        let orthogonality = rel(jordan.frobenius_dot(lie).abs(), scale * scale);
        let passed = reconstruction <= RECONSTRUCTION_REL
            && lie_membership <= MEMBERSHIP_REL
            && jordan_membership <= MEMBERSHIP_REL
            && orthogonality <= ORTHOGONALITY_REL;
        if !passed {
            failures.push(format!(
                "Lie-Jordan split under {} fails its membership checks",
                j.descriptor()
            ));
        }
        structure_reports.push(VerifyStructure {
            j: j.descriptor(),
            reconstruction,
            lie_membership,
            jordan_membership,
            orthogonality,
            passed,
        });
    }

    let mut o = Outcome::new(VerifyBody {
        n,
        seed: generated.then_some(m.seed),
        steps: LINEARIZATION_STEPS.to_vec(),
        min_order,
        pairs: pair_reports,
        structures: structure_reports,
    });
    o.failure = (!failures.is_empty()).then(|| failures.join("; "));
    Ok(o)
}
