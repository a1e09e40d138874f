//! Machine-readable output: a manifest describing the run plus count rows.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    /// Canonical form of the invocation, rebuilt from parsed arguments.
    pub command: String,
    pub patterns: Vec<String>,
    pub n_min: usize,
    pub n_max: usize,
    pub j: Option<usize>,
    pub methods: Vec<String>,
    pub degree: Option<usize>,
    pub threads: usize,
    pub wall_time_ms: u64,
    pub version: String,
}

/// One count. `j` is `None` on a row holding the total over all `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub n: usize,
    pub j: Option<usize>,
    pub pattern: String,
    pub method: String,
    /// Decimal string, so consumers never overflow.
    pub count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub manifest: RunManifest,
    pub rows: Vec<Row>,
}

impl Report {
    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(s)?)
    }

    /// Rows only; the manifest goes in a leading `#` comment line.
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut out = format!("# {}\n", serde_json::to_string(&self.manifest)?);
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        out.push_str(&String::from_utf8(bytes).expect("csv output is utf-8"));
        Ok(out)
    }

    pub fn to_human(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| r.count.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = String::new();
        let mut current = None;
        for row in &self.rows {
            let head = (&row.pattern, &row.method);
            if current != Some(head) {
                if current.is_some() {
                    out.push('\n');
                }
                let _ = writeln!(out, "pattern {} ({})", row.pattern, row.method);
                let _ = writeln!(out, "{:>3}  {:>5}  {:>width$}", "n", "j", "count");
                current = Some(head);
            }
            let j = row.j.map_or_else(|| "total".to_string(), |j| j.to_string());
            let _ = writeln!(out, "{:>3}  {:>5}  {:>width$}", row.n, j, row.count);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report {
            manifest: RunManifest {
                command: "count --n 1 --pattern 1234 --method brute".into(),
                patterns: vec!["1234".into()],
                n_min: 1,
                n_max: 1,
                j: None,
                methods: vec!["brute".into()],
                degree: None,
                threads: 1,
                wall_time_ms: 0,
                version: "0.1.0".into(),
            },
            rows: vec![
                Row {
                    n: 1,
                    j: Some(0),
                    pattern: "1234".into(),
                    method: "brute".into(),
                    count: "1".into(),
                },
                Row {
                    n: 1,
                    j: None,
                    pattern: "1234".into(),
                    method: "brute".into(),
                    count: "2".into(),
                },
            ],
        }
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let text = r.to_json().unwrap();
        assert!(text.contains("\"count\": \"2\""));
        assert_eq!(Report::from_json(&text).unwrap(), r);
    }

    #[test]
    fn human_marks_total() {
        let h = sample().to_human();
        assert!(h.starts_with("pattern 1234 (brute)\n"));
        assert!(h.lines().last().unwrap().contains("total"));
    }
}
