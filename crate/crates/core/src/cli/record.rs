use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::Serialize;

use crate::error::Error;
use crate::numeric::{Complex, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Ok,
    Nonconvergent,
    DomainError,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Nonconvergent => "NONCONVERGENT",
            Status::DomainError => "DOMAIN_ERROR",
        }
    }
}

/// One output row. Numbers are rendered with 17 significant digits, which
/// round-trips every `f64`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_re: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_im: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_estimate: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn decimal(x: Real) -> String {
    format!("{x:.16e}")
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            value_re: None,
            value_im: None,
            error_estimate: None,
            status: Status::Ok,
            exact: None,
            note: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn value(mut self, z: Complex) -> Self {
        self.value_re = Some(decimal(z.re));
        self.value_im = Some(decimal(z.im));
        self
    }

    pub fn error_estimate(mut self, e: Real) -> Self {
        self.error_estimate = Some(decimal(e));
        self
    }

    pub fn exact(mut self, s: impl Into<String>) -> Self {
        self.exact = Some(s.into());
        self
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.note = Some(s.into());
        self
    }

    /// Marks the record failed; value fields are dropped.
    pub fn failed(mut self, err: &Error) -> Self {
        self.status = status_of(err);
        self.value_re = None;
        self.value_im = None;
        self.error_estimate = None;
        self.note = Some(err.to_string());
        self
    }
}

pub fn status_of(err: &Error) -> Status {
    match err {
        Error::NonConvergence { .. } | Error::QuadratureFailure { .. } => Status::Nonconvergent,
        _ => Status::DomainError,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

const CSV_HEADER: &str = "command,inputs,value_re,value_im,error_estimate,status,exact,note";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Writes records as JSON lines or as CSV with a single header row.
pub struct RecordWriter<'a, W: Write> {
    out: &'a mut W,
    format: OutputFormat,
    header_done: bool,
}

impl<'a, W: Write> RecordWriter<'a, W> {
    pub fn new(out: &'a mut W, format: OutputFormat) -> Self {
        Self {
            out,
            format,
            header_done: false,
        }
    }

    pub fn write(&mut self, r: &OutputRecord) -> io::Result<()> {
        match self.format {
            OutputFormat::Json => {
                let line = serde_json::to_string(r).map_err(io::Error::other)?;
                writeln!(self.out, "{line}")
            }
            OutputFormat::Csv => {
                if !self.header_done {
                    writeln!(self.out, "{CSV_HEADER}")?;
                    self.header_done = true;
                }
                let inputs = r
                    .inputs
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(";");
                let empty = String::new();
                let fields = [
                    &r.command,
                    &inputs,
                    r.value_re.as_ref().unwrap_or(&empty),
                    r.value_im.as_ref().unwrap_or(&empty),
                    r.error_estimate.as_ref().unwrap_or(&empty),
                    &r.status.as_str().to_string(),
                    r.exact.as_ref().unwrap_or(&empty),
                    r.note.as_ref().unwrap_or(&empty),
                ];
                let row: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
                writeln!(self.out, "{}", row.join(","))
            }
        }
    }

    pub fn line(&mut self, s: &str) -> io::Result<()> {
        writeln!(self.out, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.0, 6.02214076e23, 5e-324, f64::MAX] {
            assert_eq!(decimal(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn failed_records_have_no_values() {
        let r = OutputRecord::new("eval")
            .value(Complex::new(1.0, 2.0))
            .failed(&Error::NonConvergence { terms: 3 });
        let json = serde_json::to_string(&r).unwrap();
        assert!(!json.contains("value_re"));
        assert!(json.contains("\"status\":\"NONCONVERGENT\""));
    }

    #[test]
    fn csv_quoting() {
        let mut buf = Vec::new();
        let mut w = RecordWriter::new(&mut buf, OutputFormat::Csv);
        w.write(&OutputRecord::new("x").note("a, \"b\"")).unwrap();
        w.write(&OutputRecord::new("y")).unwrap();
        let s = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines[1], "x,,,,,OK,,\"a, \"\"b\"\"\"");
        assert_eq!(lines.len(), 3);
    }
}
