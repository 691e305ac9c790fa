//! Structured JSON reports and plain tab-separated tables.

use serde::Serialize;

use liesplit_core::DenseMatrix;

/// A tab-separated table with a header row.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = self.header.join("\t");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }
}

/// Shortest round-trip scientific notation.
pub fn num(v: f64) -> String {
    format!("{v:e}")
}

/// What a command produced before it is rendered.
pub struct Outcome<T> {
    pub body: T,
    pub table: Option<Table>,
    pub matrices: Vec<(String, DenseMatrix)>,
    /// `None` when every check passed, otherwise why the run failed.
    pub failure: Option<String>,
}

impl<T> Outcome<T> {
    pub fn new(body: T) -> Self {
        Self {
            body,
            table: None,
            matrices: Vec::new(),
            failure: None,
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    #[serde(flatten)]
    body: &'a T,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<f64>,
}

/// A rendered run: report text, optional table, matrices to write.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub report: String,
    pub table: Option<String>,
    pub matrices: Vec<(String, DenseMatrix)>,
    pub failure: Option<String>,
}

impl RunOutput {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn render<T: Serialize>(
    command: &str,
    outcome: Outcome<T>,
    wall_time_ms: Option<f64>,
) -> RunOutput {
    let envelope = Envelope {
        command,
        body: &outcome.body,
        passed: outcome.failure.is_none(),
        failure: outcome.failure.as_deref(),
        wall_time_ms,
    };
    let mut report = serde_json::to_string_pretty(&envelope).expect("report serializes");
    report.push('\n');
    RunOutput {
        report,
        table: outcome.table.map(|t| t.render()),
        matrices: outcome.matrices,
        failure: outcome.failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Body {
        x: f64,
        label: &'static str,
    }

    #[test]
    fn envelope_keeps_field_order() {
        let out = render("split", Outcome::new(Body { x: 0.5, label: "a" }), None);
        let keys: Vec<&str> = out
            .report
            .lines()
            .filter_map(|l| l.trim().strip_prefix('"').and_then(|l| l.split('"').next()))
            .collect();
        assert_eq!(keys, ["command", "x", "label", "passed"]);
    }

    #[test]
    fn failure_is_reported() {
        let mut o = Outcome::new(Body { x: 1.0, label: "b" });
        o.failure = Some("did not converge".into());
        let out = render("solve", o, Some(3.0));
        assert!(!out.passed());
        assert!(out.report.contains("\"passed\": false"));
        assert!(out.report.contains("\"wall_time_ms\": 3.0"));
    }

    #[test]
    fn table_is_tab_separated() {
        let mut t = Table::new(vec!["iteration", "relative_residual"]);
        t.push(vec!["0".into(), num(1.0)]);
        t.push(vec!["1".into(), num(0.25)]);
        assert_eq!(
            t.render(),
            "iteration\trelative_residual\n0\t1e0\n1\t2.5e-1\n"
        );
    }
}
