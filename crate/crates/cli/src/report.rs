use serde_json::{json, Value};
use std::fmt::Write;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
}

/// A failed run, carrying the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<curralg::Error> for Failure {
    fn from(e: curralg::Error) -> Self {
        // Internal errors mean a cross-check inside the library disagreed.
        let code = if matches!(e, curralg::Error::Internal(_)) { 1 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

pub struct Report {
    pub command: Vec<String>,
    pub inputs: Vec<Value>,
    pub results: Value,
    pub lines: Vec<String>,
    /// `None` for purely informational commands.
    pub verdict: Option<bool>,
    /// Raw text to print instead of a rendered report.
    pub raw: Option<String>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report { command, inputs: Vec::new(), results: Value::Null, lines: Vec::new(), verdict: None, raw: None }
    }

    pub fn passed(&self) -> bool {
        self.verdict.unwrap_or(true)
    }

    pub fn render(&self, format: Format, timing_ms: f64) -> String {
        if let Some(raw) = &self.raw {
            return raw.clone();
        }
        match format {
            Format::Json => {
                let v = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": self.command,
                    "inputs": self.inputs,
                    "verdict": self.verdict.map(|ok| if ok { "pass" } else { "fail" }),
                    "results": self.results,
                    "timing_ms": (timing_ms * 1000.0).round() / 1000.0,
                });
                let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Table => {
                let mut s = String::new();
                for i in &self.inputs {
                    let _ = writeln!(
                        s,
                        "input {} ({} {}, dim {}) sha256 {}",
                        i["reference"].as_str().unwrap_or(""),
                        i["kind"].as_str().unwrap_or(""),
                        i["name"].as_str().unwrap_or(""),
                        i["dim"],
                        i["sha256"].as_str().and_then(|h| h.get(..12)).unwrap_or(""),
                    );
                }
                for l in &self.lines {
                    let _ = writeln!(s, "{l}");
                }
                if let Some(ok) = self.verdict {
                    let _ = writeln!(s, "verdict: {}", if ok { "PASS" } else { "FAIL" });
                }
                let _ = writeln!(s, "time: {timing_ms:.1} ms");
                s
            }
        }
    }
}

/// Formats rows under a header with right-aligned columns.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> Vec<String> {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let fmt = |cells: Vec<&str>| {
        cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ")
    };
    let mut out = vec![fmt(header.to_vec())];
    out.extend(rows.iter().map(|r| fmt(r.iter().map(String::as_str).collect())));
    out
}
