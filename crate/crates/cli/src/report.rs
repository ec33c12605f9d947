use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use grouprep::{Group, Matrix, QuadNumber};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// Output of one subcommand in all three renderings.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub text: String,
    pub csv: Vec<Vec<String>>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: json!({}),
            result: Value::Null,
            text: String::new(),
            csv: vec![],
            checks: vec![],
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: Format, group: &Group) -> String {
        match format {
            Format::Text => {
                let mut out = self.text.clone();
                if !out.ends_with('\n') {
                    out.push('\n');
                }
                if !self.checks.is_empty() {
                    out.push_str("\nchecks:\n");
                    for c in &self.checks {
                        out.push_str(&format!("  {}  {}\n", if c.passed { "pass" } else { "FAIL" }, c.name));
                    }
                }
                out
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().flexible(true).from_writer(vec![]);
                for row in &self.csv {
                    w.write_record(row).expect("in-memory csv");
                }
                String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
            }
            Format::Json => {
                let v = json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "group": { "order": group.order(), "labels": group.labels() },
                    "result": self.result,
                    "checks": self.checks,
                });
                let mut s = serde_json::to_string_pretty(&v).expect("json");
                s.push('\n');
                s
            }
        }
    }
}

/// Left-aligned columns separated by two spaces.
pub fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn matrix_cells(m: &Matrix<QuadNumber>) -> Vec<Vec<String>> {
    (0..m.nrows())
        .map(|r| m.row(r).iter().map(ToString::to_string).collect())
        .collect()
}

pub fn matrix_json(m: &Matrix<QuadNumber>) -> Value {
    json!(matrix_cells(m))
}

pub fn matrix_text(m: &Matrix<QuadNumber>) -> String {
    grid(&matrix_cells(m))
}

pub fn labels_of(group: &Group, members: &[usize]) -> Vec<String> {
    members.iter().map(|&i| group.label(i).to_string()).collect()
}

pub fn set_text(group: &Group, members: &[usize]) -> String {
    format!("{{{}}}", labels_of(group, members).join(", "))
}
