use std::collections::BTreeSet;
use std::fmt::Write;
use std::path::PathBuf;

use chanent::bounds::{
    certify_prop1, certify_prop3, certify_prop4, compare_map_bounds, fano_bound_general,
    fano_bound_simple, in_simple_fano_domain, map_bound, InequalityCertificate,
};
use chanent::channels::json::{matrix_to_json, MatrixJson};
use chanent::entropies::{quantum_unified, EntropyParams, QParam};
use chanent::exchange::{entanglement_fidelity, entropy_exchange, exchange_matrix, map_entropy};
use clap::Args;
use serde::Serialize;

use crate::input::{load_channel, load_state, StateSource};
use crate::report::{certificate_summary, num, nums, to_value, Outcome, Report};
use crate::CliError;

pub const DEFAULT_Q: [f64; 3] = [0.5, 1.0, 2.0];
pub const DEFAULT_S: [f64; 2] = [0.0, 1.0];

#[derive(Debug, Clone, Args)]
pub struct AnalyzeArgs {
    /// Channel JSON file.
    pub channel: PathBuf,

    /// State JSON file; defaults to the completely mixed state.
    #[arg(long, conflicts_with = "bloch")]
    pub state: Option<PathBuf>,

    /// Qubit input state by its Bloch vector.
    #[arg(
        long,
        num_args = 3,
        value_names = ["SX", "SY", "SZ"],
        allow_negative_numbers = true
    )]
    pub bloch: Option<Vec<f64>>,

    /// Entropy parameter q (repeatable).
    #[arg(long = "q", allow_negative_numbers = true)]
    pub q: Vec<f64>,

    /// Entropy parameter s (repeatable).
    #[arg(long = "s", allow_negative_numbers = true)]
    pub s: Vec<f64>,
}

impl AnalyzeArgs {
    pub fn new(channel: impl Into<PathBuf>) -> Self {
        AnalyzeArgs {
            channel: channel.into(),
            state: None,
            bloch: None,
            q: Vec::new(),
            s: Vec::new(),
        }
    }

    /// The `q × s` grid, falling back to the defaults for an empty axis.
    pub fn grid(&self) -> Result<Vec<EntropyParams>, CliError> {
        let qs = if self.q.is_empty() {
            &DEFAULT_Q[..]
        } else {
            &self.q
        };
        let ss = if self.s.is_empty() {
            &DEFAULT_S[..]
        } else {
            &self.s
        };
        let mut grid = Vec::with_capacity(qs.len() * ss.len());
        for &q in qs {
            for &s in ss {
                grid.push(
                    EntropyParams::new(q, s)
                        .map_err(|e| CliError::Usage(format!("--q {q} --s {s}: {e}")))?,
                );
            }
        }
        Ok(grid)
    }

    fn state_source(&self) -> StateSource<'_> {
        match (&self.state, &self.bloch) {
            (Some(path), _) => StateSource::File(path),
            (None, Some(v)) => StateSource::Bloch([v[0], v[1], v[2]]),
            (None, None) => StateSource::CompletelyMixed,
        }
    }
}

#[derive(Serialize)]
struct Inputs {
    channel: String,
    dim_in: usize,
    dim_out: usize,
    kraus_count: usize,
    state_source: String,
    state: MatrixJson,
    grid: Vec<EntropyParams>,
}

#[derive(Serialize)]
struct GridRow {
    q: f64,
    s: f64,
    input_entropy: f64,
    output_entropy: f64,
    entropy_exchange: f64,
    fano_bound_general: Option<f64>,
    fano_bound_simple: Option<f64>,
    map_entropy: f64,
    map_bound: f64,
    extension_map_bound: Option<f64>,
}

#[derive(Serialize)]
struct Quantities {
    effect_probabilities: Vec<f64>,
    output_state: MatrixJson,
    output_spectrum: Vec<f64>,
    entanglement_fidelity: Option<f64>,
    exchange_spectrum: Vec<f64>,
    entropies: Vec<GridRow>,
}

pub fn analyze(args: &AnalyzeArgs) -> Result<Outcome, CliError> {
    let channel = load_channel(&args.channel)?;
    let source = args.state_source();
    let rho = load_state(&source, channel.dim_in())?;
    let grid = args.grid()?;
    let descriptor = args.channel.display().to_string();

    let output = channel.apply(&rho)?;
    let square = channel.dim_in() == channel.dim_out();
    let fidelity = if square {
        Some(entanglement_fidelity(&channel, &rho)?)
    } else {
        None
    };
    let d = channel.dim_in();

    let mut certificates: Vec<InequalityCertificate> = Vec::new();
    let mut rows = Vec::with_capacity(grid.len());
    for &params in &grid {
        let (fano_general, fano_simple) = match fidelity {
            Some(f) => {
                let f = f.clamp(0.0, 1.0);
                certificates.extend(certify_prop3(&channel, &rho, params)?);
                let simple = if in_simple_fano_domain(params) {
                    Some(fano_bound_simple(params, f, d)?)
                } else {
                    None
                };
                (Some(fano_bound_general(params, f, d)?), simple)
            }
            None => (None, None),
        };
        certificates.push(certify_prop4(&channel, params)?);
        let extension = match compare_map_bounds(&channel, params) {
            Ok(cmp) => {
                certificates.push(cmp.certificate);
                Some(cmp.old_bound)
            }
            Err(chanent::Error::ParameterOutOfDomain(_)) => None,
            Err(e) => return Err(e.into()),
        };
        rows.push(GridRow {
            q: params.q.value(),
            s: params.s.value(),
            input_entropy: quantum_unified(&rho, params)?,
            output_entropy: quantum_unified(&output, params)?,
            entropy_exchange: entropy_exchange(&channel, &rho, params)?,
            fano_bound_general: fano_general,
            fano_bound_simple: fano_simple,
            map_entropy: map_entropy(&channel, params)?,
            map_bound: map_bound(&channel, params)?,
            extension_map_bound: extension,
        });
    }
    let prop1_q: BTreeSet<u64> = grid
        .iter()
        .filter_map(|p| match p.q {
            QParam::One => Some(1.0f64),
            QParam::Value(q) if q >= 1.0 => Some(q),
            QParam::Value(_) => None,
        })
        .map(f64::to_bits)
        .collect();
    for q in prop1_q.into_iter().map(f64::from_bits) {
        certificates.push(certify_prop1(&channel, &rho, q)?);
    }
    let certificates: Vec<_> = certificates
        .into_iter()
        .map(|c| c.with_descriptor(descriptor.clone()))
        .collect();

    let quantities = Quantities {
        effect_probabilities: channel.effect_probabilities(&rho)?.into_inner(),
        output_state: matrix_to_json(output.matrix()),
        output_spectrum: output.eigenvalues()?,
        entanglement_fidelity: fidelity,
        exchange_spectrum: exchange_matrix(&channel, &rho)?.as_state().eigenvalues()?,
        entropies: rows,
    };
    let state_source = match source {
        StateSource::CompletelyMixed => "completely mixed".to_string(),
        StateSource::File(p) => p.display().to_string(),
        StateSource::Bloch(v) => format!("bloch {} {} {}", v[0], v[1], v[2]),
    };

    let text = render(
        &descriptor,
        &channel_line(&channel),
        &state_source,
        &quantities,
        &certificates,
    );
    let report = Report {
        inputs: to_value(&Inputs {
            channel: descriptor,
            dim_in: channel.dim_in(),
            dim_out: channel.dim_out(),
            kraus_count: channel.kraus_count(),
            state_source,
            state: matrix_to_json(rho.matrix()),
            grid,
        })?,
        quantities: to_value(&quantities)?,
        certificates,
    };
    Ok(Outcome { report, text })
}

fn channel_line(ch: &chanent::channels::QuantumChannel) -> String {
    format!(
        "{} -> {}, {} Kraus operators",
        ch.dim_in(),
        ch.dim_out(),
        ch.kraus_count()
    )
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), num)
}

fn render(
    descriptor: &str,
    shape: &str,
    state: &str,
    q: &Quantities,
    certs: &[InequalityCertificate],
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "channel  {descriptor} ({shape})");
    let _ = writeln!(out, "state    {state}");
    let _ = writeln!(
        out,
        "effect probabilities  {}",
        nums(&q.effect_probabilities)
    );
    let _ = writeln!(out, "output state");
    for row in &q.output_state {
        let cells: Vec<String> = row
            .iter()
            .map(|[re, im]| format!("{:>10.6}{:+.6}i", re + 0.0, im + 0.0))
            .collect();
        let _ = writeln!(out, "  {}", cells.join("  "));
    }
    let _ = writeln!(out, "output spectrum  {}", nums(&q.output_spectrum));
    let _ = writeln!(
        out,
        "entanglement fidelity  {}",
        opt(q.entanglement_fidelity)
    );
    let _ = writeln!(out, "exchange spectrum  {}", nums(&q.exchange_spectrum));
    let _ = writeln!(
        out,
        "{:>6} {:>6} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "q", "s", "exchange", "fano", "fano_simp", "map", "map_bound", "ext_bound", "output"
    );
    for r in &q.entropies {
        let _ = writeln!(
            out,
            "{:>6} {:>6} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
            r.q,
            r.s,
            num(r.entropy_exchange),
            opt(r.fano_bound_general),
            opt(r.fano_bound_simple),
            num(r.map_entropy),
            num(r.map_bound),
            opt(r.extension_map_bound),
            num(r.output_entropy)
        );
    }
    certificate_summary(&mut out, certs);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid() {
        let grid = AnalyzeArgs::new("x.json").grid().unwrap();
        assert_eq!(grid.len(), 6);
        assert_eq!(grid[0], EntropyParams::new(0.5, 0.0).unwrap());
        assert_eq!(grid[5], EntropyParams::new(2.0, 1.0).unwrap());
    }

    #[test]
    fn explicit_axis_replaces_default() {
        let mut args = AnalyzeArgs::new("x.json");
        args.s = vec![2.0];
        let grid = args.grid().unwrap();
        assert_eq!(grid.len(), 3);
        assert!(grid.iter().all(|p| p.s.value() == 2.0));
        args.q = vec![-1.0];
        assert!(matches!(args.grid(), Err(CliError::Usage(_))));
    }
}
