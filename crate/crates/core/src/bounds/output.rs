use super::{q_of, InequalityCertificate, CERT_TOL};
use crate::channels::QuantumChannel;
use crate::entropies::{quantum_q_entropy, DensityMatrix, QParam};
use crate::error::{Error, Result};
use crate::kernel::{partial_trace_factor, CMatrix};

/// `Σ_j p_j^q H_q(ρ'_j)` over the effects with non-negligible probability.
pub fn q_average_output_entropy(
    channel: &QuantumChannel,
    rho: &DensityMatrix,
    q: f64,
) -> Result<f64> {
    let qp = q_of(q)?;
    let mut total = 0.0;
    for out in channel.particular_outputs(rho)? {
        let weight = match qp {
            QParam::One => out.probability,
            QParam::Value(q) => out.probability.powf(q),
        };
        total += weight * quantum_q_entropy(&out.state, qp)?;
    }
    Ok(total)
}

/// `Σ_j p_j^q H_q(ρ'_j) ≤ H_q(ρ)` for `q ≥ 1`.
pub fn certify_prop1(
    channel: &QuantumChannel,
    rho: &DensityMatrix,
    q: f64,
) -> Result<InequalityCertificate> {
    if !(q >= 1.0) || !q.is_finite() {
        return Err(Error::ParameterOutOfDomain(format!(
            "the q-average output bound is stated for q >= 1, got {q}"
        )));
    }
    let lhs = q_average_output_entropy(channel, rho, q)?;
    let rhs = quantum_q_entropy(rho, q_of(q)?)?;
    Ok(
        InequalityCertificate::new("prop1_q_average_output", lhs, rhs, CERT_TOL)?
            .with_param("q", q),
    )
}

/// Three-partite state `Ω = VρV†` on `Q' ⊗ R ⊗ S` with
/// `V|ψ⟩ = Σ_j K_j|ψ⟩ ⊗ |j⟩ ⊗ |j⟩`; `R` and `S` have the Kraus count as
/// dimension.
#[derive(Debug, Clone)]
pub struct OmegaExtension {
    pub state: DensityMatrix,
    /// `A_jj = K_j ρ K_j†`.
    pub blocks: Vec<CMatrix>,
    pub dim_out: usize,
    pub kraus_count: usize,
}

impl OmegaExtension {
    fn dims(&self) -> [usize; 3] {
        [self.dim_out, self.kraus_count, self.kraus_count]
    }

    /// `Ω^{Q'S}`, block diagonal with blocks `A_jj`.
    pub fn marginal_qs(&self) -> Result<DensityMatrix> {
        let m = partial_trace_factor(self.state.matrix(), &self.dims(), 1)?;
        Ok(DensityMatrix::from_trusted(m))
    }

    /// `Ω^R = diag(p_j)`.
    pub fn marginal_r(&self) -> Result<DensityMatrix> {
        let without_s = partial_trace_factor(self.state.matrix(), &self.dims(), 2)?;
        let m = partial_trace_factor(&without_s, &[self.dim_out, self.kraus_count], 0)?;
        Ok(DensityMatrix::from_trusted(m))
    }

    /// `H_q(Ω^{Q'S}) − H_q(Ω^R)`, which equals the q-average output entropy.
    pub fn conditional_entropy(&self, q: f64) -> Result<f64> {
        let qp = q_of(q)?;
        Ok(quantum_q_entropy(&self.marginal_qs()?, qp)?
            - quantum_q_entropy(&self.marginal_r()?, qp)?)
    }
}

pub fn omega_extension(channel: &QuantumChannel, rho: &DensityMatrix) -> Result<OmegaExtension> {
    let blocks = channel.effect_blocks(rho)?;
    let n = channel.kraus_count();
    let d = channel.dim_out();
    let mut v = CMatrix::zeros(d * n * n, channel.dim_in());
    for (j, k) in channel.kraus().iter().enumerate() {
        for a in 0..d {
            for nu in 0..channel.dim_in() {
                v[(a * n * n + j * n + j, nu)] = k[(a, nu)];
            }
        }
    }
    let omega = v.sandwich(rho.matrix())?.hermitian_part();
    Ok(OmegaExtension {
        state: DensityMatrix::from_trusted(omega),
        blocks,
        dim_out: d,
        kraus_count: n,
    })
}

/// `f_q(p) = (1−p)^q + 3^{1−q} p^q`, the ratio of the q-average output
/// entropy of the qubit depolarizing channel to the input entropy.
pub fn depolarizing_f(q: f64, p: f64) -> Result<f64> {
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::OutOfRange {
            name: "q",
            value: q,
        });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
        });
    }
    if q == 1.0 {
        return Ok(1.0);
    }
    Ok((1.0 - p).powf(q) + 3f64.powf(1.0 - q) * p.powf(q))
}

/// Number of intervals in the `p` grid swept by [`certify_depolarizing_f`].
const F_GRID: usize = 100;
const F_ENDPOINT_TOL: f64 = 1e-12;

/// Sweeps `p = 0, 0.01, …, 1`: `f_q ≤ 1` for `q ≥ 1` (strictly below one
/// for `q > 1`, `p > 0`) and `f_q > 1` for `q < 1`, `p > 0`. Also records
/// the endpoint values `f_q(0) = 1` and `f_q(1) = 3^{1−q}`.
pub fn certify_depolarizing_f(q: f64) -> Result<Vec<InequalityCertificate>> {
    let f0 = depolarizing_f(q, 0.0)?;
    let f1 = depolarizing_f(q, 1.0)?;
    let mut certs = vec![
        InequalityCertificate::equality("depolarizing_f_at_0", f0, 1.0, F_ENDPOINT_TOL)?
            .with_param("q", q),
        InequalityCertificate::equality(
            "depolarizing_f_at_1",
            f1,
            3f64.powf(1.0 - q),
            F_ENDPOINT_TOL,
        )?
        .with_param("q", q),
    ];
    for i in 0..=F_GRID {
        let p = i as f64 / F_GRID as f64;
        let f = depolarizing_f(q, p)?;
        let cert = if i == 0 {
            InequalityCertificate::new("depolarizing_f_le_1", f, 1.0, F_ENDPOINT_TOL)?
        } else if q > 1.0 {
            InequalityCertificate::strict("depolarizing_f_lt_1", f, 1.0)?
        } else if q == 1.0 {
            InequalityCertificate::new("depolarizing_f_le_1", f, 1.0, F_ENDPOINT_TOL)?
        } else {
            InequalityCertificate::strict("depolarizing_f_gt_1_expected_violation", 1.0, f)?
        };
        certs.push(cert.with_param("q", q).with_param("p", p));
    }
    Ok(certs)
}
