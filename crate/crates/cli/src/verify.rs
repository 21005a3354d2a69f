use std::fmt::Write;
use std::str::FromStr;

use chanent::suites::{Suite, SuiteReport};
use serde::Serialize;

use crate::report::{certificate_summary, to_value, Outcome, Report};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteSelection {
    All,
    One(Suite),
}

impl SuiteSelection {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            SuiteSelection::All => Suite::ALL.to_vec(),
            SuiteSelection::One(s) => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SuiteSelection::All => "all",
            SuiteSelection::One(s) => s.name(),
        }
    }
}

impl FromStr for SuiteSelection {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s == "all" {
            return Ok(SuiteSelection::All);
        }
        s.parse()
            .map(SuiteSelection::One)
            .map_err(|_| CliError::UnknownSuite(s.to_string()))
    }
}

#[derive(Serialize)]
struct Inputs {
    suite: &'static str,
    seed: u64,
    trials: usize,
}

#[derive(Serialize)]
struct SuiteSummary {
    suite: Suite,
    trials: usize,
    certificates: usize,
    failures: usize,
    expected_violations: usize,
    passed: bool,
}

impl SuiteSummary {
    fn of(r: &SuiteReport) -> Self {
        SuiteSummary {
            suite: r.suite,
            trials: r.trials,
            certificates: r.certificates.len(),
            failures: r.failures().count(),
            expected_violations: r
                .certificates
                .iter()
                .filter(|c| c.holds && c.name.contains("expected_violation"))
                .count(),
            passed: r.passed(),
        }
    }
}

#[derive(Serialize)]
struct Quantities {
    suites: Vec<SuiteSummary>,
}

pub fn verify(selection: &SuiteSelection, seed: u64, trials: usize) -> Result<Outcome, CliError> {
    let reports = selection
        .suites()
        .into_iter()
        .map(|s| s.run(seed, trials))
        .collect::<chanent::Result<Vec<_>>>()?;
    let summaries: Vec<SuiteSummary> = reports.iter().map(SuiteSummary::of).collect();

    let mut text = format!("verify {} seed={seed} trials={trials}\n", selection.name());
    let _ = writeln!(
        text,
        "{:<14}{:>8}{:>14}{:>10}{:>12}",
        "suite", "trials", "certificates", "failures", "result"
    );
    for s in &summaries {
        let _ = writeln!(
            text,
            "{:<14}{:>8}{:>14}{:>10}{:>12}",
            s.suite.name(),
            s.trials,
            s.certificates,
            s.failures,
            if s.passed { "PASS" } else { "FAIL" }
        );
        if s.expected_violations > 0 {
            let _ = writeln!(
                text,
                "  {} expected violations observed (q < 1 regime)",
                s.expected_violations
            );
        }
    }

    let certificates: Vec<_> = reports.into_iter().flat_map(|r| r.certificates).collect();
    certificate_summary(&mut text, &certificates);
    let report = Report {
        inputs: to_value(&Inputs {
            suite: selection.name(),
            seed,
            trials,
        })?,
        quantities: to_value(&Quantities { suites: summaries })?,
        certificates,
    };
    Ok(Outcome { report, text })
}
