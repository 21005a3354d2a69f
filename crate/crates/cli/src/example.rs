use std::fmt::Write;

use chanent::bounds::{
    certify_depolarizing_f, depolarizing_f, q_average_output_entropy, InequalityCertificate,
    CERT_TOL,
};
use chanent::channels::{bloch_state, depolarizing, BlochVector};
use chanent::entropies::{quantum_q_entropy, QParam};
use chanent::suites::{spectrum_gap, EXACT_TOL};
use serde::Serialize;

use crate::report::{certificate_summary, num, nums, to_value, Outcome, Report};
use crate::CliError;

pub const EXAMPLE_Q: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
pub const EXAMPLE_P: [f64; 11] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
const EXAMPLE_BLOCH: [f64; 3] = [0.3, 0.0, 0.4];

#[derive(Serialize)]
struct Inputs {
    bloch: [f64; 3],
    p_grid: Vec<f64>,
    q_grid: Vec<f64>,
}

#[derive(Serialize)]
struct ChannelRow {
    p: f64,
    probabilities: Vec<f64>,
    output_spectra: Vec<Vec<f64>>,
}

#[derive(Serialize)]
struct FRow {
    q: f64,
    p: f64,
    f: f64,
    q_average_ratio: f64,
    regime: &'static str,
}

#[derive(Serialize)]
struct Quantities {
    input_spectrum: Vec<f64>,
    channels: Vec<ChannelRow>,
    f_table: Vec<FRow>,
}

fn regime(f: f64) -> &'static str {
    if f == 1.0 {
        "= 1"
    } else if f < 1.0 {
        "< 1"
    } else {
        "> 1"
    }
}

fn expected_regime(q: f64) -> &'static str {
    if q < 1.0 {
        "f > 1 for p > 0"
    } else if q == 1.0 {
        "f = 1"
    } else {
        "f < 1 for p > 0"
    }
}

/// Qubit depolarizing channel acting on a fixed mixed qubit state.
pub fn example_depolarizing() -> Result<Outcome, CliError> {
    let [x, y, z] = EXAMPLE_BLOCH;
    let rho = bloch_state(BlochVector::new(x, y, z))?;
    let input_spectrum = rho.eigenvalues()?;
    let mut certificates: Vec<InequalityCertificate> = Vec::new();

    let mut channels = Vec::with_capacity(EXAMPLE_P.len());
    for &p in &EXAMPLE_P {
        let ch = depolarizing(p)?;
        let expected = [1.0 - p, p / 3.0, p / 3.0, p / 3.0];
        let probabilities = ch.effect_probabilities(&rho)?.into_inner();
        for (j, (&got, &want)) in probabilities.iter().zip(&expected).enumerate() {
            certificates.push(
                InequalityCertificate::equality("depolarizing_probability", got, want, EXACT_TOL)?
                    .with_param("p", p)
                    .with_param("j", j as f64),
            );
        }
        let mut output_spectra = Vec::new();
        for out in ch.particular_outputs(&rho)? {
            let spectrum = out.state.eigenvalues()?;
            certificates.push(
                InequalityCertificate::equality(
                    "depolarizing_output_spectrum",
                    spectrum_gap(&spectrum, &input_spectrum),
                    0.0,
                    EXACT_TOL,
                )?
                .with_param("p", p)
                .with_param("j", out.index as f64),
            );
            output_spectra.push(spectrum);
        }
        channels.push(ChannelRow {
            p,
            probabilities,
            output_spectra,
        });
    }

    let mut f_table = Vec::with_capacity(EXAMPLE_Q.len() * EXAMPLE_P.len());
    for &q in &EXAMPLE_Q {
        let h = quantum_q_entropy(&rho, QParam::new(q)?)?;
        for &p in &EXAMPLE_P {
            let f = depolarizing_f(q, p)?;
            let ratio = q_average_output_entropy(&depolarizing(p)?, &rho, q)? / h;
            certificates.push(
                InequalityCertificate::equality("depolarizing_ratio", ratio, f, CERT_TOL)?
                    .with_param("q", q)
                    .with_param("p", p),
            );
            f_table.push(FRow {
                q,
                p,
                f,
                q_average_ratio: ratio,
                regime: regime(f),
            });
        }
        certificates.extend(certify_depolarizing_f(q)?);
    }

    let quantities = Quantities {
        input_spectrum,
        channels,
        f_table,
    };
    let text = render(&quantities, &certificates);
    let report = Report {
        inputs: to_value(&Inputs {
            bloch: EXAMPLE_BLOCH,
            p_grid: EXAMPLE_P.to_vec(),
            q_grid: EXAMPLE_Q.to_vec(),
        })?,
        quantities: to_value(&quantities)?,
        certificates: certificates
            .into_iter()
            .map(|c| c.with_descriptor("depolarizing"))
            .collect(),
    };
    Ok(Outcome { report, text })
}

fn render(q: &Quantities, certs: &[InequalityCertificate]) -> String {
    let [x, y, z] = EXAMPLE_BLOCH;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "qubit depolarizing channel, input Bloch vector ({x}, {y}, {z})"
    );
    let _ = writeln!(out, "input spectrum  {}", nums(&q.input_spectrum));
    let _ = writeln!(out, "{:>5}  {:<40}  output spectra", "p", "probabilities");
    for row in &q.channels {
        let spectra: Vec<String> = row
            .output_spectra
            .iter()
            .map(|s| format!("({})", nums(s)))
            .collect();
        let _ = writeln!(
            out,
            "{:>5}  {:<40}  {}",
            row.p,
            nums(&row.probabilities),
            spectra.join(" ")
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "f_q(p) = (1-p)^q + 3^(1-q) p^q");
    for &qv in &EXAMPLE_Q {
        let _ = writeln!(out, "q = {qv}  (expected {})", expected_regime(qv));
        for r in q.f_table.iter().filter(|r| r.q == qv) {
            let _ = writeln!(out, "  p = {:<4} f = {}  {}", r.p, num(r.f), r.regime);
        }
    }
    certificate_summary(&mut out, certs);
    out
}
