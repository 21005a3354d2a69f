use super::{InequalityCertificate, CERT_TOL};
use crate::channels::QuantumChannel;
use crate::entropies::{DensityMatrix, EntropyParams, QParam};
use crate::error::{Error, Result};
use crate::exchange::entropy_exchange;

/// `{0 < q ≤ 1, s ≤ 1/q} ∪ {q ≥ 1, s ≥ 1/q}`.
pub fn in_concavity_domain(params: EntropyParams) -> bool {
    let s = params.s.value();
    match params.q {
        QParam::One => true,
        QParam::Value(q) if q < 1.0 => s <= 1.0 / q,
        QParam::Value(q) => s >= 1.0 / q,
    }
}

fn check(params: EntropyParams, theta: f64) -> Result<()> {
    if !in_concavity_domain(params) {
        return Err(Error::ParameterOutOfDomain(format!(
            "concavity of the entropy exchange is not established at {params}"
        )));
    }
    if !(0.0..=1.0).contains(&theta) {
        return Err(Error::OutOfRange {
            name: "theta",
            value: theta,
        });
    }
    Ok(())
}

/// `θ E(ρ,Φ) + (1−θ) E(υ,Φ) ≤ E(θρ + (1−θ)υ, Φ)`.
pub fn certify_concavity_state(
    channel: &QuantumChannel,
    rho: &DensityMatrix,
    upsilon: &DensityMatrix,
    theta: f64,
    params: EntropyParams,
) -> Result<InequalityCertificate> {
    check(params, theta)?;
    let lhs = theta * entropy_exchange(channel, rho, params)?
        + (1.0 - theta) * entropy_exchange(channel, upsilon, params)?;
    let rhs = entropy_exchange(channel, &rho.mix(upsilon, theta)?, params)?;
    Ok(
        InequalityCertificate::new("prop2_concavity_state", lhs, rhs, CERT_TOL)?
            .with_entropy_params(params)
            .with_param("theta", theta),
    )
}

/// `θ E(ρ,Φ) + (1−θ) E(ρ,Ψ) ≤ E(ρ, θΦ + (1−θ)Ψ)`.
pub fn certify_concavity_channel(
    phi: &QuantumChannel,
    psi: &QuantumChannel,
    rho: &DensityMatrix,
    theta: f64,
    params: EntropyParams,
) -> Result<InequalityCertificate> {
    check(params, theta)?;
    let lhs = theta * entropy_exchange(phi, rho, params)?
        + (1.0 - theta) * entropy_exchange(psi, rho, params)?;
    let rhs = entropy_exchange(&phi.convex_mixture(psi, theta)?, rho, params)?;
    Ok(
        InequalityCertificate::new("prop2_concavity_channel", lhs, rhs, CERT_TOL)?
            .with_entropy_params(params)
            .with_param("theta", theta),
    )
}
