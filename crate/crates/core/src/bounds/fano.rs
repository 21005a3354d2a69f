use super::{InequalityCertificate, CERT_TOL};
use crate::channels::QuantumChannel;
use crate::entropies::{
    binary_tsallis, q_log, quantum_unified, unified_from_tsallis, DensityMatrix, EntropyParams,
    QParam,
};
use crate::error::{Error, Result};
use crate::exchange::{entanglement_fidelity, entropy_exchange};

/// `{0 < q ≤ 1, s ≤ 1} ∪ {q ≥ 1, s ≥ 1}`.
pub fn in_simple_fano_domain(params: EntropyParams) -> bool {
    let s = params.s.value();
    match params.q {
        QParam::One => true,
        QParam::Value(q) if q < 1.0 => s <= 1.0,
        QParam::Value(_) => s >= 1.0,
    }
}

/// Tsallis-type Fano quantity `h_q(F) + (1−F)^q ln_q(d² − 1)`.
pub fn fano_base(q: QParam, fidelity: f64, d: usize) -> Result<f64> {
    if !(0.0..=1.0).contains(&fidelity) {
        return Err(Error::OutOfRange {
            name: "fidelity",
            value: fidelity,
        });
    }
    if d == 0 {
        return Err(Error::InvalidParameter(
            "dimension must be at least 1".into(),
        ));
    }
    let h = binary_tsallis(fidelity, q)?;
    let miss = 1.0 - fidelity;
    if miss == 0.0 || d == 1 {
        return Ok(h);
    }
    let others = (d * d - 1) as f64;
    Ok(h + miss.powf(q.value()) * q_log(others, q)?)
}

/// Fano-type upper bound on the `(q,s)`-entropy exchange, valid for every
/// `q > 0` and real `s`.
pub fn fano_bound_general(params: EntropyParams, fidelity: f64, d: usize) -> Result<f64> {
    unified_from_tsallis(fano_base(params.q, fidelity, d)?, params)
}

/// The Tsallis form of the bound, which dominates the unified entropy
/// exchange inside [`in_simple_fano_domain`].
pub fn fano_bound_simple(params: EntropyParams, fidelity: f64, d: usize) -> Result<f64> {
    if !in_simple_fano_domain(params) {
        return Err(Error::ParameterOutOfDomain(format!(
            "the simplified Fano bound does not apply at {params}"
        )));
    }
    fano_base(params.q, fidelity, d)
}

/// `E(ρ,Φ) ≤ general bound`, plus `E(ρ,Φ) ≤ simple bound` where it applies.
pub fn certify_prop3(
    channel: &QuantumChannel,
    rho: &DensityMatrix,
    params: EntropyParams,
) -> Result<Vec<InequalityCertificate>> {
    let f = entanglement_fidelity(channel, rho)?.clamp(0.0, 1.0);
    let d = channel.dim_in();
    let exchange = entropy_exchange(channel, rho, params)?;
    let mut certs = vec![InequalityCertificate::new(
        "prop3_fano_general",
        exchange,
        fano_bound_general(params, f, d)?,
        CERT_TOL,
    )?
    .with_entropy_params(params)
    .with_param("fidelity", f)];
    if in_simple_fano_domain(params) {
        certs.push(
            InequalityCertificate::new(
                "prop3_fano_simple",
                exchange,
                fano_bound_simple(params, f, d)?,
                CERT_TOL,
            )?
            .with_entropy_params(params)
            .with_param("fidelity", f),
        );
    }
    Ok(certs)
}

/// Triangle-type relations between `A = E(Φ(ρ))`, `B = E(ρ)` and the
/// exchange `C = E(ρ,Φ)` for `q > 1`, `s ≥ 1/q`: `|A − B| ≤ C ≤ A + B`,
/// `A ≤ B + C` and `B ≤ A + C`.
pub fn certify_lindblad_extension(
    channel: &QuantumChannel,
    rho: &DensityMatrix,
    params: EntropyParams,
) -> Result<Vec<InequalityCertificate>> {
    let in_domain = match params.q {
        QParam::Value(q) if q > 1.0 => params.s.value() >= 1.0 / q,
        _ => false,
    };
    if !in_domain {
        return Err(Error::ParameterOutOfDomain(format!(
            "the entropy-exchange triangle relations need q > 1 and s >= 1/q, got {params}"
        )));
    }
    let a = quantum_unified(&channel.apply(rho)?, params)?;
    let b = quantum_unified(rho, params)?;
    let c = entropy_exchange(channel, rho, params)?;
    [
        ("lindblad_lower", (a - b).abs(), c),
        ("lindblad_upper", c, a + b),
        ("lindblad_output", a, b + c),
        ("lindblad_input", b, a + c),
    ]
    .into_iter()
    .map(|(name, lhs, rhs)| {
        Ok(InequalityCertificate::new(name, lhs, rhs, CERT_TOL)?.with_entropy_params(params))
    })
    .collect()
}
