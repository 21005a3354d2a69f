use serde::Serialize;

use super::{InequalityCertificate, CERT_TOL};
use crate::channels::QuantumChannel;
use crate::entropies::{
    max_entropy, quantum_unified, DensityMatrix, EntropyParams, QParam, SParam,
};
use crate::error::{Error, Result};
use crate::exchange::{final_joint_state, map_entropy};

/// `d^{(1−q)s}`, which is one on the Rényi and von Neumann branches.
fn dimension_factor(d: usize, params: EntropyParams) -> f64 {
    match (params.q, params.s) {
        (QParam::One, _) | (_, SParam::Zero) => 1.0,
        (QParam::Value(q), SParam::Value(s)) => (d as f64).powf((1.0 - q) * s),
    }
}

/// `d^{(1−q)s} H(Φ(ρ*)) + (1/s) ln_q(d^s)`, or `R_q(Φ(ρ*)) + ln d` at
/// `s = 0`, with `d` the input dimension.
pub fn map_bound(channel: &QuantumChannel, params: EntropyParams) -> Result<f64> {
    let d = channel.dim_in();
    let output = channel.apply(&DensityMatrix::completely_mixed(d)?)?;
    Ok(dimension_factor(d, params) * quantum_unified(&output, params)? + max_entropy(d, params)?)
}

/// `H(Φ(ρ*)) + (1/s) ln_q(d^s)`, the bound obtained from the triangle
/// relations for `q > 1`, `s ≥ 1/q`.
pub fn extension_map_bound(channel: &QuantumChannel, params: EntropyParams) -> Result<f64> {
    let d = channel.dim_in();
    let output = channel.apply(&DensityMatrix::completely_mixed(d)?)?;
    Ok(quantum_unified(&output, params)? + max_entropy(d, params)?)
}

/// `M(Φ) ≤ map_bound(Φ)`.
pub fn certify_prop4(
    channel: &QuantumChannel,
    params: EntropyParams,
) -> Result<InequalityCertificate> {
    Ok(InequalityCertificate::new(
        "prop4_map_entropy",
        map_entropy(channel, params)?,
        map_bound(channel, params)?,
        CERT_TOL,
    )?
    .with_entropy_params(params))
}

/// `H(ρ^{RQ'}) ≤ d^{(1−q)s} H(Φ(ρ)) + (1/s) ln_q(d^s)` for the final joint
/// state, `d` being the dimension of the reference.
pub fn certify_subsystem_bound(
    channel: &QuantumChannel,
    rho: &DensityMatrix,
    params: EntropyParams,
) -> Result<InequalityCertificate> {
    let d = channel.dim_in();
    let joint = final_joint_state(channel, rho)?;
    let marginal = channel.apply(rho)?;
    let rhs =
        dimension_factor(d, params) * quantum_unified(&marginal, params)? + max_entropy(d, params)?;
    Ok(InequalityCertificate::new(
        "prop4_subsystem",
        quantum_unified(&joint, params)?,
        rhs,
        CERT_TOL,
    )?
    .with_entropy_params(params))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MapBoundComparison {
    pub map_entropy: f64,
    pub new_bound: f64,
    pub old_bound: f64,
    /// `new_bound ≤ old_bound`.
    pub certificate: InequalityCertificate,
}

/// Compares [`map_bound`] with [`extension_map_bound`] where both apply.
pub fn compare_map_bounds(
    channel: &QuantumChannel,
    params: EntropyParams,
) -> Result<MapBoundComparison> {
    let applies = match params.q {
        QParam::Value(q) if q > 1.0 => params.s.value() >= 1.0 / q,
        _ => false,
    };
    if !applies {
        return Err(Error::ParameterOutOfDomain(format!(
            "the extension bound on the map entropy needs q > 1 and s >= 1/q, got {params}"
        )));
    }
    let new_bound = map_bound(channel, params)?;
    let old_bound = extension_map_bound(channel, params)?;
    Ok(MapBoundComparison {
        map_entropy: map_entropy(channel, params)?,
        new_bound,
        old_bound,
        certificate: InequalityCertificate::new(
            "prop4_new_le_old",
            new_bound,
            old_bound,
            CERT_TOL,
        )?
        .with_entropy_params(params),
    })
}
