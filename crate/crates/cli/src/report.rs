use std::fmt::Write;

use chanent::bounds::{InequalityCertificate, Seed};
use serde::Serialize;
use serde_json::Value;

use crate::{CliError, Format};

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub inputs: Value,
    pub quantities: Value,
    pub certificates: Vec<InequalityCertificate>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.certificates.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &InequalityCertificate> {
        self.certificates.iter().filter(|c| !c.holds)
    }
}

/// A report together with its text rendering.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub text: String,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => {
                let mut s = serde_json::to_string(&self.report).map_err(CliError::Serialize)?;
                s.push('\n');
                Ok(s)
            }
        }
    }
}

pub(crate) fn to_value<T: Serialize>(value: &T) -> Result<Value, CliError> {
    serde_json::to_value(value).map_err(CliError::Serialize)
}

/// Six decimals, without a sign on values that round to zero.
pub(crate) fn num(x: f64) -> String {
    let x = if x.abs() < 5e-7 { 0.0 } else { x };
    format!("{x:.6}")
}

pub(crate) fn nums(xs: &[f64]) -> String {
    xs.iter().map(|&x| num(x)).collect::<Vec<_>>().join(" ")
}

/// One line per certificate with everything needed to replay it.
pub(crate) fn describe_failure(c: &InequalityCertificate) -> String {
    let mut line = format!(
        "FAIL {} lhs={:e} rhs={:e} slack={:e} tolerance={:e}",
        c.name, c.lhs, c.rhs, c.slack, c.tolerance
    );
    for (k, v) in &c.params {
        let _ = write!(line, " {k}={v}");
    }
    if !c.descriptor.is_empty() {
        let _ = write!(line, " [{}]", c.descriptor);
    }
    match c.seed {
        Seed::Value(seed) => {
            let _ = write!(line, " seed={seed}");
        }
        Seed::Constructed => line.push_str(" seed=constructed"),
    }
    line
}

/// Closing summary shared by every command.
pub(crate) fn certificate_summary(out: &mut String, certs: &[InequalityCertificate]) {
    let failed = certs.iter().filter(|c| !c.holds).count();
    let _ = writeln!(
        out,
        "certificates: {} checked, {} failed",
        certs.len(),
        failed
    );
    for c in certs.iter().filter(|c| !c.holds) {
        let _ = writeln!(out, "  {}", describe_failure(c));
    }
}
