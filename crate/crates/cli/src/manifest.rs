//! The full description of one run, renderable as `key = value` lines.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use liesplit_core::BilinearStructure;

use crate::error::CliError;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SIZE: usize = 6;
pub const DEFAULT_RESTART: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Split,
    Factor,
    Solve,
    Analyze,
    Verify,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Split => "split",
            Command::Factor => "factor",
            Command::Solve => "solve",
            Command::Analyze => "analyze",
            Command::Verify => "verify",
        }
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "split" => Command::Split,
            "factor" => Command::Factor,
            "solve" => Command::Solve,
            "analyze" => Command::Analyze,
            "verify" => Command::Verify,
            other => return Err(CliError::Usage(format!("unknown command `{other}`"))),
        })
    }
}

/// Which `J` to use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JSelector {
    Identity,
    Pq(usize, usize),
    Symplectic(usize),
    Custom(PathBuf),
}

impl JSelector {
    /// Realizes the structure for an `n×n` problem.
    pub fn build(&self, n: usize) -> Result<BilinearStructure, CliError> {
        let check = |dim: usize| {
            if dim == n {
                Ok(())
            } else {
                Err(CliError::Usage(format!(
                    "--j {self} has dimension {dim}, matrix has {n}"
                )))
            }
        };
        match self {
            JSelector::Identity => Ok(BilinearStructure::identity(n)),
            JSelector::Pq(p, q) => {
                check(p + q)?;
                Ok(BilinearStructure::pseudo_euclidean(*p, *q))
            }
            JSelector::Symplectic(m) => {
                check(2 * m)?;
                Ok(BilinearStructure::symplectic(*m))
            }
            JSelector::Custom(path) => {
                let j = crate::mm::read(path)?;
                if !j.is_square() {
                    return Err(CliError::Usage(format!(
                        "custom J in {} is not square",
                        path.display()
                    )));
                }
                check(j.rows())?;
                Ok(BilinearStructure::custom(j)?)
            }
        }
    }
}

impl fmt::Display for JSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JSelector::Identity => write!(f, "identity"),
            JSelector::Pq(p, q) => write!(f, "pq:{p},{q}"),
            JSelector::Symplectic(m) => write!(f, "symplectic:{m}"),
            JSelector::Custom(path) => write!(f, "custom:{}", path.display()),
        }
    }
}

impl FromStr for JSelector {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || {
            CliError::Usage(format!(
                "invalid J selector `{s}` (identity | pq:p,q | symplectic:m | custom:path)"
            ))
        };
        let positive = |t: &str| {
            t.trim()
                .parse::<usize>()
                .ok()
                .filter(|v| *v > 0)
                .ok_or_else(bad)
        };
        if s == "identity" {
            return Ok(JSelector::Identity);
        }
        if let Some(rest) = s.strip_prefix("pq:") {
            let (p, q) = rest.split_once(',').ok_or_else(bad)?;
            return Ok(JSelector::Pq(positive(p)?, positive(q)?));
        }
        if let Some(rest) = s.strip_prefix("symplectic:") {
            return Ok(JSelector::Symplectic(positive(rest)?));
        }
        if let Some(rest) = s.strip_prefix("custom:") {
            if !rest.is_empty() {
                return Ok(JSelector::Custom(PathBuf::from(rest)));
            }
        }
        Err(bad())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlphaSpec {
    Auto,
    Value(f64),
}

impl fmt::Display for AlphaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaSpec::Auto => write!(f, "auto"),
            AlphaSpec::Value(a) => write!(f, "{a:?}"),
        }
    }
}

impl FromStr for AlphaSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "auto" {
            return Ok(AlphaSpec::Auto);
        }
        match s.parse::<f64>() {
            Ok(a) if a > 0.0 && a.is_finite() => Ok(AlphaSpec::Value(a)),
            _ => Err(CliError::Usage(format!(
                "--alpha must be `auto` or a positive number, got `{s}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub command: Command,
    pub matrix: Option<PathBuf>,
    pub matrix2: Option<PathBuf>,
    pub rhs: Option<PathBuf>,
    pub j: Option<JSelector>,
    pub scheme: Option<String>,
    pub method: Option<String>,
    pub alpha: AlphaSpec,
    pub tol: f64,
    pub max_iter: usize,
    pub restart: usize,
    pub seed: u64,
    pub size: usize,
    pub force: bool,
    pub out: Option<PathBuf>,
    pub no_timestamp: bool,
}

impl RunManifest {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            matrix: None,
            matrix2: None,
            rhs: None,
            j: None,
            scheme: None,
            method: None,
            alpha: AlphaSpec::Auto,
            tol: liesplit_core::tolerances::SOLVER_TOL,
            max_iter: liesplit_core::tolerances::SOLVER_MAX_ITER,
            restart: DEFAULT_RESTART,
            seed: DEFAULT_SEED,
            size: DEFAULT_SIZE,
            force: false,
            out: None,
            no_timestamp: false,
        }
    }

    /// Checks the invariants that do not need the input matrix.
    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(CliError::Usage(format!(
                "--tol must be positive, got {}",
                self.tol
            )));
        }
        if self.max_iter == 0 {
            return Err(CliError::Usage("--max-iter must be at least 1".into()));
        }
        if self.restart == 0 {
            return Err(CliError::Usage("--restart must be at least 1".into()));
        }
        if self.size == 0 {
            return Err(CliError::Usage("--size must be at least 1".into()));
        }
        for path in [&self.matrix, &self.matrix2, &self.rhs]
            .into_iter()
            .flatten()
        {
            if !path.is_file() {
                return Err(CliError::Usage(format!(
                    "{} does not exist",
                    path.display()
                )));
            }
        }
        Ok(())
    }

    /// One `key = value` line per field; absent options are omitted.
    pub fn render(&self) -> String {
        let mut lines = vec![format!("command = {}", self.command.as_str())];
        let mut opt = |key: &str, v: Option<String>| {
            if let Some(v) = v {
                lines.push(format!("{key} = {v}"));
            }
        };
        opt(
            "matrix",
            self.matrix.as_ref().map(|p| p.display().to_string()),
        );
        opt(
            "matrix2",
            self.matrix2.as_ref().map(|p| p.display().to_string()),
        );
        opt("rhs", self.rhs.as_ref().map(|p| p.display().to_string()));
        opt("j", self.j.as_ref().map(|j| j.to_string()));
        opt("scheme", self.scheme.clone());
        opt("method", self.method.clone());
        lines.push(format!("alpha = {}", self.alpha));
        lines.push(format!("tol = {:?}", self.tol));
        lines.push(format!("max_iter = {}", self.max_iter));
        lines.push(format!("restart = {}", self.restart));
        lines.push(format!("seed = {}", self.seed));
        lines.push(format!("size = {}", self.size));
        lines.push(format!("force = {}", self.force));
        if let Some(out) = &self.out {
            lines.push(format!("out = {}", out.display()));
        }
        lines.push(format!("no_timestamp = {}", self.no_timestamp));
        lines.join("\n") + "\n"
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut manifest: Option<Self> = None;
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once(" = ").ok_or_else(|| {
                CliError::Usage(format!("manifest line {}: expected `key = value`", n + 1))
            })?;
            let bad = |what: &str| {
                CliError::Usage(format!("manifest line {}: invalid {what} `{value}`", n + 1))
            };
            if key == "command" {
                manifest = Some(Self::new(value.parse()?));
                continue;
            }
            let m = manifest
                .as_mut()
                .ok_or_else(|| CliError::Usage("manifest must start with `command`".into()))?;
            match key {
                "matrix" => m.matrix = Some(value.into()),
                "matrix2" => m.matrix2 = Some(value.into()),
                "rhs" => m.rhs = Some(value.into()),
                "j" => m.j = Some(value.parse()?),
                "scheme" => m.scheme = Some(value.into()),
                "method" => m.method = Some(value.into()),
                "alpha" => m.alpha = value.parse()?,
                "tol" => m.tol = value.parse().map_err(|_| bad("tol"))?,
                "max_iter" => m.max_iter = value.parse().map_err(|_| bad("max_iter"))?,
                "restart" => m.restart = value.parse().map_err(|_| bad("restart"))?,
                "seed" => m.seed = value.parse().map_err(|_| bad("seed"))?,
                "size" => m.size = value.parse().map_err(|_| bad("size"))?,
                "force" => m.force = value.parse().map_err(|_| bad("force"))?,
                "out" => m.out = Some(value.into()),
                "no_timestamp" => {
                    m.no_timestamp = value.parse().map_err(|_| bad("no_timestamp"))?
                }
                other => {
                    return Err(CliError::Usage(format!(
                        "manifest line {}: unknown key `{other}`",
                        n + 1
                    )))
                }
            }
        }
        manifest.ok_or_else(|| CliError::Usage("empty manifest".into()))
    }
}
