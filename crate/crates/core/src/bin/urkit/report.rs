//! Report sink: every command produces a stream of self-describing check
//! records, rendered either as an aligned table or as line-delimited JSON
//! with stable field names. Rendering is free of timestamps and hash-map
//! ordering so identical runs produce identical bytes.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// A computed value disagrees with a recorded external claim; reported
    /// as data, not as a harness failure.
    Discrepancy,
    Info,
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub check: String,
    pub inputs: String,
    pub value: String,
    pub expected: String,
    pub tolerance: String,
    pub verdict: Verdict,
}

impl Record {
    pub fn new(check: &str) -> Self {
        Record {
            check: check.to_string(),
            inputs: String::new(),
            value: String::new(),
            expected: String::new(),
            tolerance: String::new(),
            verdict: Verdict::Info,
        }
    }

    pub fn inputs(mut self, s: impl Into<String>) -> Self {
        self.inputs = s.into();
        self
    }

    pub fn value(mut self, s: impl Into<String>) -> Self {
        self.value = s.into();
        self
    }

    pub fn expected(mut self, s: impl Into<String>) -> Self {
        self.expected = s.into();
        self
    }

    pub fn tolerance(mut self, s: impl Into<String>) -> Self {
        self.tolerance = s.into();
        self
    }

    pub fn verdict(mut self, v: Verdict) -> Self {
        self.verdict = v;
        self
    }

    /// Pass/fail from a boolean check.
    pub fn passed(mut self, ok: bool) -> Self {
        self.verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Records,
}

pub struct Report {
    format: Format,
    preamble: Vec<String>,
    records: Vec<Record>,
}

impl Report {
    pub fn new(format: Format) -> Self {
        Report {
            format,
            preamble: Vec::new(),
            records: Vec::new(),
        }
    }

    /// Free-form context line, shown in table mode only.
    pub fn line(&mut self, s: impl Into<String>) {
        self.preamble.push(s.into());
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
    }

    pub fn has_failure(&self) -> bool {
        self.records.iter().any(|r| r.verdict == Verdict::Fail)
    }

    pub fn render(&self) -> String {
        match self.format {
            Format::Records => {
                let mut out = String::new();
                for r in &self.records {
                    out.push_str(&serde_json::to_string(r).expect("records serialize"));
                    out.push('\n');
                }
                out
            }
            Format::Table => {
                let mut out = String::new();
                for line in &self.preamble {
                    out.push_str(line);
                    out.push('\n');
                }
                if !self.preamble.is_empty() {
                    out.push('\n');
                }
                let headers = ["check", "value", "expected", "tolerance", "verdict"];
                let width = |i: usize, f: fn(&Record) -> &str| {
                    self.records
                        .iter()
                        .map(|r| f(r).len())
                        .chain(std::iter::once(headers[i].len()))
                        .max()
                        .unwrap_or(0)
                };
                let w0 = width(0, |r| &r.check);
                let w1 = width(1, |r| &r.value);
                let w2 = width(2, |r| &r.expected);
                let w3 = width(3, |r| &r.tolerance);
                out.push_str(&format!(
                    "{:<w0$}  {:<w1$}  {:<w2$}  {:<w3$}  {}\n",
                    headers[0], headers[1], headers[2], headers[3], headers[4]
                ));
                for r in &self.records {
                    let verdict = match r.verdict {
                        Verdict::Pass => "pass",
                        Verdict::Fail => "FAIL",
                        Verdict::Discrepancy => "DISCREPANCY",
                        Verdict::Info => "info",
                    };
                    out.push_str(&format!(
                        "{:<w0$}  {:<w1$}  {:<w2$}  {:<w3$}  {}\n",
                        r.check, r.value, r.expected, r.tolerance, verdict
                    ));
                }
                let passed = self
                    .records
                    .iter()
                    .filter(|r| r.verdict == Verdict::Pass)
                    .count();
                let failed = self
                    .records
                    .iter()
                    .filter(|r| r.verdict == Verdict::Fail)
                    .count();
                out.push_str(&format!("\n{passed} passed, {failed} failed\n"));
                out
            }
        }
    }
}
