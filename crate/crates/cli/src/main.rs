use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use liesplit_cli::error::{CliError, EXIT_INPUT};
use liesplit_cli::manifest::{Command, DEFAULT_RESTART, DEFAULT_SEED, DEFAULT_SIZE};
use liesplit_cli::{execute, RunManifest};
use liesplit_core::tolerances::{SOLVER_MAX_ITER, SOLVER_TOL};

/// Splittings, structured factorizations and splitting-based solvers for
/// dense real matrices.
#[derive(Debug, Parser)]
#[command(name = "liesplit", version)]
struct Args {
    /// Command to run; may be omitted when --manifest is given.
    #[arg(value_enum)]
    command: Option<Command>,

    /// Replay a manifest written by an earlier run; other flags are ignored.
    #[arg(long, value_name = "PATH")]
    manifest: Option<PathBuf>,

    /// Input matrix (Matrix Market); a seeded instance is generated when absent.
    #[arg(long, value_name = "PATH")]
    matrix: Option<PathBuf>,

    /// Second Kronecker-sum factor for `solve --method adi`.
    #[arg(long, value_name = "PATH")]
    matrix2: Option<PathBuf>,

    /// Right-hand side vector (Matrix Market); defaults to A·1.
    #[arg(long, value_name = "PATH")]
    rhs: Option<PathBuf>,

    /// identity | pq:p,q | symplectic:m | custom:path
    #[arg(long, value_name = "SPEC")]
    j: Option<String>,

    /// Splitting, factorization or verification scheme(s).
    #[arg(long, visible_alias = "schemes", value_name = "NAME")]
    scheme: Option<String>,

    /// Solver for `solve`.
    #[arg(long, value_name = "NAME")]
    method: Option<String>,

    /// Shift: `auto` or a positive number.
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    alpha: String,

    #[arg(long, default_value_t = SOLVER_TOL)]
    tol: f64,

    #[arg(long, default_value_t = SOLVER_MAX_ITER)]
    max_iter: usize,

    /// GMRES restart length.
    #[arg(long, default_value_t = DEFAULT_RESTART)]
    restart: usize,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Dimension of generated inputs.
    #[arg(long, default_value_t = DEFAULT_SIZE)]
    size: usize,

    /// Run J-HSS even when its definiteness hypothesis fails.
    #[arg(long)]
    force: bool,

    /// Directory for report.json, table.tsv, matrices and the manifest.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Leave wall time out of the report so output is reproducible.
    #[arg(long)]
    no_timestamp: bool,
}

impl Args {
    fn into_manifest(self) -> Result<RunManifest, CliError> {
        if let Some(path) = &self.manifest {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            return RunManifest::parse(&text);
        }
        let command = self.command.ok_or_else(|| {
            CliError::Usage("a command is required (split, factor, solve, analyze, verify)".into())
        })?;
        let mut m = RunManifest::new(command);
        m.matrix = self.matrix;
        m.matrix2 = self.matrix2;
        m.rhs = self.rhs;
        m.j = self.j.as_deref().map(str::parse).transpose()?;
        m.scheme = self.scheme;
        m.method = self.method;
        m.alpha = self.alpha.parse()?;
        m.tol = self.tol;
        m.max_iter = self.max_iter;
        m.restart = self.restart;
        m.seed = self.seed;
        m.size = self.size;
        m.force = self.force;
        m.out = self.out;
        m.no_timestamp = self.no_timestamp;
        Ok(m)
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                code(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match args.into_manifest() {
        Ok(m) => code(execute(&m)),
        Err(e) => {
            eprintln!("error: {e}");
            code(e.exit_code())
        }
    }
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}
