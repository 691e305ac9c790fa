//! Matrix Market reader and writer for the dense real subset.
//!
//! Reads `matrix coordinate real {general, symmetric, skew-symmetric}` and
//! `matrix array real general`; writes `array real general` with 17
//! significant digits so that a write/read cycle is bit-exact.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use liesplit_core::DenseMatrix;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MmError {
    #[error("ParseError at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("UnsupportedField: {0} matrices are not supported")]
    UnsupportedField(String),
}

fn parse_err(line: usize, reason: impl Into<String>) -> MmError {
    MmError::Parse {
        line,
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Layout {
    Coordinate,
    Array,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Symmetry {
    General,
    Symmetric,
    Skew,
}

fn parse_header(line: &str) -> Result<(Layout, Symmetry), MmError> {
    let words: Vec<String> = line
        .split_whitespace()
        .map(|w| w.to_ascii_lowercase())
        .collect();
    if words.len() != 5 || words[0] != "%%matrixmarket" {
        return Err(parse_err(
            1,
            "expected `%%MatrixMarket matrix <format> <field> <symmetry>`",
        ));
    }
    if words[1] != "matrix" {
        return Err(parse_err(1, format!("unsupported object `{}`", words[1])));
    }
    let layout = match words[2].as_str() {
        "coordinate" => Layout::Coordinate,
        "array" => Layout::Array,
        other => return Err(parse_err(1, format!("unknown format `{other}`"))),
    };
    match words[3].as_str() {
        "real" | "double" => {}
        "complex" | "pattern" | "integer" => {
            return Err(MmError::UnsupportedField(words[3].clone()))
        }
        other => return Err(parse_err(1, format!("unknown field `{other}`"))),
    }
    let symmetry = match words[4].as_str() {
        "general" => Symmetry::General,
        "symmetric" => Symmetry::Symmetric,
        "skew-symmetric" => Symmetry::Skew,
        other => return Err(parse_err(1, format!("unsupported symmetry `{other}`"))),
    };
    if layout == Layout::Array && symmetry != Symmetry::General {
        return Err(parse_err(
            1,
            "array storage is supported for general matrices only",
        ));
    }
    Ok((layout, symmetry))
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, MmError> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

fn parse_f64(tok: &str, line: usize) -> Result<f64, MmError> {
    let v: f64 = tok
        .parse()
        .map_err(|_| parse_err(line, format!("invalid value `{tok}`")))?;
    if !v.is_finite() {
        return Err(parse_err(line, format!("non-finite value `{tok}`")));
    }
    Ok(v)
}

/// Parses Matrix Market text into a dense matrix.
pub fn parse(text: &str) -> Result<DenseMatrix, MmError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let (layout, symmetry) = parse_header(header)?;
    let mut body = lines.filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('%')
    });

    let (size_line, size) = body
        .next()
        .ok_or_else(|| parse_err(1, "missing size line"))?;
    let dims: Vec<&str> = size.split_whitespace().collect();
    let expected = match layout {
        Layout::Coordinate => 3,
        Layout::Array => 2,
    };
    if dims.len() != expected {
        return Err(parse_err(
            size_line,
            format!("size line needs {expected} integers"),
        ));
    }
    let rows = parse_usize(dims[0], size_line, "row count")?;
    let cols = parse_usize(dims[1], size_line, "column count")?;
    if rows == 0 || cols == 0 {
        return Err(parse_err(size_line, "matrix dimensions must be positive"));
    }
    if symmetry != Symmetry::General && rows != cols {
        return Err(parse_err(
            size_line,
            "symmetric storage requires a square matrix",
        ));
    }
    let mut data = vec![0.0; rows * cols];

    match layout {
        Layout::Array => {
            let mut k = 0;
            for (line, l) in body {
                for tok in l.split_whitespace() {
                    if k == rows * cols {
                        return Err(parse_err(line, "more values than the declared size"));
                    }
                    // Column-major order.
                    let (i, j) = (k % rows, k / rows);
                    data[i * cols + j] = parse_f64(tok, line)?;
                    k += 1;
                }
            }
            if k != rows * cols {
                return Err(parse_err(
                    size_line,
                    format!("expected {} values, found {k}", rows * cols),
                ));
            }
        }
        Layout::Coordinate => {
            let nnz = parse_usize(dims[2], size_line, "entry count")?;
            let mut seen = 0;
            for (line, l) in body {
                let toks: Vec<&str> = l.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(parse_err(line, "entry needs `row col value`"));
                }
                let i = parse_usize(toks[0], line, "row index")?;
                let j = parse_usize(toks[1], line, "column index")?;
                if i == 0 || j == 0 || i > rows || j > cols {
                    return Err(parse_err(
                        line,
                        format!("index ({i}, {j}) outside {rows}x{cols}"),
                    ));
                }
                let v = parse_f64(toks[2], line)?;
                let (i, j) = (i - 1, j - 1);
                if symmetry == Symmetry::Skew && i == j {
                    return Err(parse_err(
                        line,
                        "skew-symmetric storage cannot hold diagonal entries",
                    ));
                }
                data[i * cols + j] += v;
                if i != j {
                    match symmetry {
                        Symmetry::General => {}
                        Symmetry::Symmetric => data[j * cols + i] += v,
                        Symmetry::Skew => data[j * cols + i] -= v,
                    }
                }
                seen += 1;
            }
            if seen != nnz {
                return Err(parse_err(
                    size_line,
                    format!("declared {nnz} entries, found {seen}"),
                ));
            }
        }
    }
    DenseMatrix::new(rows, cols, data).map_err(|e| parse_err(size_line, e.to_string()))
}

/// Renders `a` as `array real general`.
pub fn render(a: &DenseMatrix) -> String {
    let mut out = String::from("%%MatrixMarket matrix array real general\n");
    let _ = writeln!(out, "{} {}", a.rows(), a.cols());
    for j in 0..a.cols() {
        for i in 0..a.rows() {
            let _ = writeln!(out, "{:.16e}", a[(i, j)]);
        }
    }
    out
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: MmError },
}

pub fn read(path: &Path) -> Result<DenseMatrix, ReadError> {
    let text = fs::read_to_string(path).map_err(|source| ReadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text).map_err(|source| ReadError::Format {
        path: path.display().to_string(),
        source,
    })
}

pub fn write(path: &Path, a: &DenseMatrix) -> std::io::Result<()> {
    fs::write(path, render(a))
}
