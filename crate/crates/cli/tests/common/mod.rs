#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the binary from the crate directory so relative data paths resolve.
pub fn run(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_liesplit"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("binary runs");
    Output {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
}

pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase {
        name: "split_pq",
        args: &["split", "--j", "pq:4,2", "--seed", "7"],
    },
    GoldenCase {
        name: "split_skew_upper",
        args: &[
            "split",
            "--scheme",
            "skew-upper",
            "--seed",
            "11",
            "--size",
            "4",
        ],
    },
    GoldenCase {
        name: "solve_jhss_symplectic",
        args: &[
            "solve",
            "--method",
            "j-hss",
            "--j",
            "symplectic:3",
            "--seed",
            "7",
        ],
    },
    GoldenCase {
        name: "solve_sts_upper",
        args: &[
            "solve",
            "--method",
            "sts-upper",
            "--alpha",
            "2",
            "--seed",
            "3",
            "--size",
            "5",
        ],
    },
    GoldenCase {
        name: "analyze_diag",
        args: &["analyze", "--matrix", "tests/data/diag_1_4.mtx"],
    },
    GoldenCase {
        name: "analyze_pq",
        args: &["analyze", "--j", "pq:2,2", "--seed", "5", "--size", "4"],
    },
    GoldenCase {
        name: "verify_all",
        args: &["verify", "--schemes", "all", "--seed", "7", "--size", "4"],
    },
];

/// Artifacts of a run with `--out`, keyed by file name. The `out` line of
/// the manifest is dropped since it names a temporary directory.
fn artifacts(dir: &Path) -> BTreeMap<String, String> {
    let mut files = BTreeMap::new();
    for entry in fs::read_dir(dir).expect("output directory") {
        let path = entry.expect("entry").path();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let mut text = fs::read_to_string(&path).expect("artifact is text");
        if name == "manifest.txt" {
            text = text
                .lines()
                .filter(|l| !l.starts_with("out = "))
                .map(|l| format!("{l}\n"))
                .collect();
        }
        files.insert(name, text);
    }
    files
}

fn golden_dir(case: &GoldenCase) -> PathBuf {
    crate_dir().join("tests/golden").join(case.name)
}

/// Runs a golden case and compares every artifact byte for byte. With
/// `LIESPLIT_BLESS=1` the goldens are rewritten instead.
pub fn check_golden(case: &GoldenCase) -> Result<(), String> {
    let tmp = tempfile::tempdir().expect("tempdir");
    let out = tmp.path().to_str().unwrap().to_string();
    let mut args = case.args.to_vec();
    args.extend(["--no-timestamp", "--out", &out]);
    let result = run(&args);
    if result.code != 0 {
        return Err(format!(
            "{}: exit {} ({})",
            case.name,
            result.code,
            result.stderr.trim()
        ));
    }
    let got = artifacts(tmp.path());
    if got.get("report.json") != Some(&result.stdout) {
        return Err(format!("{}: stdout differs from report.json", case.name));
    }
    let dir = golden_dir(case);
    if std::env::var_os("LIESPLIT_BLESS").is_some() {
        let _ = fs::remove_dir_all(&dir);
        fs::create_dir_all(&dir).unwrap();
        for (name, text) in &got {
            fs::write(dir.join(name), text).unwrap();
        }
        return Ok(());
    }
    if !dir.is_dir() {
        return Err(format!(
            "{}: no golden directory (run with LIESPLIT_BLESS=1)",
            case.name
        ));
    }
    let want = artifacts(&dir);
    let names = |m: &BTreeMap<String, String>| m.keys().cloned().collect::<Vec<_>>();
    if names(&got) != names(&want) {
        return Err(format!(
            "{}: artifacts {:?}, golden has {:?}",
            case.name,
            names(&got),
            names(&want)
        ));
    }
    for (name, text) in &got {
        if want[name] != *text {
            return Err(format!("{}: {name} differs from golden", case.name));
        }
    }
    Ok(())
}

pub struct ExitCase {
    pub command: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
    /// Text the diagnostic on stderr must contain.
    pub stderr: &'static str,
}

/// One success, one input error and one numerical failure per command.
pub const EXIT_CASES: &[ExitCase] = &[
    ExitCase {
        command: "split",
        args: &["split", "--scheme", "ldu"],
        code: 0,
        stderr: "",
    },
    ExitCase {
        command: "split",
        args: &["split", "--matrix", "tests/data/complex.mtx"],
        code: 1,
        stderr: "UnsupportedField",
    },
    ExitCase {
        command: "split",
        args: &[
            "split",
            "--j",
            "custom:tests/data/j_nonunit.mtx",
            "--size",
            "2",
        ],
        code: 2,
        stderr: "membership",
    },
    ExitCase {
        command: "factor",
        args: &["factor", "--scheme", "polar"],
        code: 0,
        stderr: "",
    },
    ExitCase {
        command: "factor",
        args: &["factor", "--matrix", "tests/data/rect.mtx"],
        code: 1,
        stderr: "square",
    },
    ExitCase {
        command: "factor",
        args: &[
            "factor",
            "--matrix",
            "tests/data/tiny_pivot.mtx",
            "--scheme",
            "lu-doolittle",
        ],
        code: 2,
        stderr: "residual",
    },
    ExitCase {
        command: "solve",
        args: &[
            "solve", "--method", "j-hss", "--j", "pq:1,1", "--alpha", "auto", "--size", "2",
        ],
        code: 0,
        stderr: "",
    },
    ExitCase {
        command: "solve",
        args: &[
            "solve",
            "--method",
            "jacobi",
            "--matrix",
            "tests/data/zero_diagonal.mtx",
        ],
        code: 1,
        stderr: "ZeroDiagonal",
    },
    ExitCase {
        command: "solve",
        args: &["solve", "--max-iter", "1"],
        code: 2,
        stderr: "did not reach",
    },
    ExitCase {
        command: "analyze",
        args: &["analyze", "--matrix", "tests/data/diag_1_4.mtx"],
        code: 0,
        stderr: "",
    },
    ExitCase {
        command: "analyze",
        args: &["analyze", "--matrix", "tests/data/indefinite.mtx"],
        code: 1,
        stderr: "WellDefinednessViolated",
    },
    ExitCase {
        command: "analyze",
        args: &[
            "analyze",
            "--matrix",
            "tests/data/indefinite.mtx",
            "--force",
        ],
        code: 2,
        stderr: "not positive definite",
    },
    ExitCase {
        command: "verify",
        args: &["verify", "--size", "4"],
        code: 0,
        stderr: "",
    },
    ExitCase {
        command: "verify",
        args: &["verify", "--scheme", "cholesky"],
        code: 1,
        stderr: "unknown verify scheme",
    },
    ExitCase {
        command: "verify",
        args: &[
            "verify",
            "--j",
            "custom:tests/data/j_nonunit.mtx",
            "--size",
            "2",
        ],
        code: 2,
        stderr: "fitted order",
    },
];

pub fn check_exit(case: &ExitCase) -> Result<(), String> {
    let mut args = case.args.to_vec();
    args.push("--no-timestamp");
    let out = run(&args);
    if out.code != case.code {
        return Err(format!(
            "{:?}: exit {} != {} ({})",
            case.args,
            out.code,
            case.code,
            out.stderr.trim()
        ));
    }
    if !out.stderr.contains(case.stderr) {
        return Err(format!(
            "{:?}: stderr lacks {:?}: {}",
            case.args,
            case.stderr,
            out.stderr.trim()
        ));
    }
    if case.code != 1 && !out.stdout.starts_with('{') {
        return Err(format!("{:?}: no report on stdout", case.args));
    }
    Ok(())
}
