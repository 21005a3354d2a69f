//! Purification-based quantities: entanglement fidelity, the exchange
//! matrix, the (q,s)-entropy exchange and the map (q,s)-entropy.

use crate::channels::QuantumChannel;
use crate::entropies::{quantum_unified, DensityMatrix, EntropyParams};
use crate::error::{Error, Result};
use crate::kernel::{hermitian_eig, CMatrix, C64};

/// Unit vector `|ψ⟩` on `Q ⊗ R` (index `i·d + k`) whose `Q` marginal is the
/// purified state.
#[derive(Debug, Clone, PartialEq)]
pub struct Purification {
    vector: Vec<C64>,
    dim: usize,
}

impl Purification {
    pub fn vector(&self) -> &[C64] {
        &self.vector
    }

    /// Dimension of each factor.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn projector(&self) -> DensityMatrix {
        DensityMatrix::from_trusted(CMatrix::outer(&self.vector, &self.vector))
    }

    /// `(I ⊗ U)|ψ⟩`: another purification of the same state.
    pub fn rotate_reference(&self, u: &CMatrix) -> Result<Purification> {
        let d = self.dim;
        if (u.rows(), u.cols()) != (d, d) {
            return Err(Error::DimensionMismatch(format!(
                "reference unitary must be {d}x{d}"
            )));
        }
        let mut out = vec![C64::new(0.0, 0.0); d * d];
        for i in 0..d {
            let block = &self.vector[i * d..(i + 1) * d];
            let rotated = u.mul_vec(block)?;
            out[i * d..(i + 1) * d].copy_from_slice(&rotated);
        }
        Ok(Purification {
            vector: out,
            dim: d,
        })
    }
}

/// Spectral purification `Σ_k √λ_k |v_k⟩ ⊗ |k⟩`.
pub fn purify(rho: &DensityMatrix) -> Result<Purification> {
    let d = rho.dim();
    let spectrum = hermitian_eig(rho.matrix())?;
    let mut vector = vec![C64::new(0.0, 0.0); d * d];
    for (k, &l) in spectrum.eigenvalues.iter().enumerate() {
        if l <= 0.0 {
            continue;
        }
        let w = l.sqrt();
        for i in 0..d {
            vector[i * d + k] = spectrum.eigenvectors[(i, k)] * w;
        }
    }
    let norm = vector.iter().map(C64::norm_sqr).sum::<f64>().sqrt();
    vector.iter_mut().for_each(|x| *x /= norm);
    Ok(Purification { vector, dim: d })
}

fn check_dims(channel: &QuantumChannel, rho: &DensityMatrix) -> Result<()> {
    if channel.dim_in() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state of dimension {} fed to a channel with input dimension {}",
            rho.dim(),
            channel.dim_in()
        )));
    }
    Ok(())
}

fn check_endomorphism(channel: &QuantumChannel) -> Result<()> {
    if channel.dim_in() != channel.dim_out() {
        return Err(Error::DimensionMismatch(format!(
            "entanglement fidelity needs equal input and output dimensions, got {} and {}",
            channel.dim_in(),
            channel.dim_out()
        )));
    }
    Ok(())
}

/// `(K ⊗ I)|ψ⟩` for a purification with reference dimension `d`.
fn act_on_system(k: &CMatrix, psi: &Purification) -> Vec<C64> {
    let d = psi.dim;
    let mut out = vec![C64::new(0.0, 0.0); k.rows() * d];
    for a in 0..k.rows() {
        for nu in 0..k.cols() {
            let c = k[(a, nu)];
            if c == C64::new(0.0, 0.0) {
                continue;
            }
            for r in 0..d {
                out[a * d + r] += c * psi.vector[nu * d + r];
            }
        }
    }
    out
}

/// `ρ^{RQ'} = (Φ ⊗ id)(|ψ⟩⟨ψ|)` for a given purification, on `Q' ⊗ R`.
pub fn final_joint_state_of(channel: &QuantumChannel, psi: &Purification) -> Result<DensityMatrix> {
    if channel.dim_in() != psi.dim {
        return Err(Error::DimensionMismatch(format!(
            "purification of dimension {} fed to a channel with input dimension {}",
            psi.dim,
            channel.dim_in()
        )));
    }
    let n = channel.dim_out() * psi.dim;
    let mut out = CMatrix::zeros(n, n);
    for k in channel.kraus() {
        let phi = act_on_system(k, psi);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] += phi[i] * phi[j].conj();
            }
        }
    }
    Ok(DensityMatrix::from_trusted(out.hermitian_part()))
}

/// Final joint state for the canonical purification of `ρ`.
pub fn final_joint_state(channel: &QuantumChannel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    check_dims(channel, rho)?;
    final_joint_state_of(channel, &purify(rho)?)
}

/// `F = Σ_j |Tr(ρ K_j)|²`.
pub fn entanglement_fidelity(channel: &QuantumChannel, rho: &DensityMatrix) -> Result<f64> {
    check_dims(channel, rho)?;
    check_endomorphism(channel)?;
    let mut f = 0.0;
    for k in channel.kraus() {
        f += rho.matrix().matmul(k)?.trace().norm_sqr();
    }
    Ok(f)
}

/// `F = ⟨ψ| ρ^{RQ'} |ψ⟩`.
pub fn entanglement_fidelity_of(channel: &QuantumChannel, psi: &Purification) -> Result<f64> {
    check_endomorphism(channel)?;
    let joint = final_joint_state_of(channel, psi)?;
    let v = joint.matrix().mul_vec(&psi.vector)?;
    Ok(psi
        .vector
        .iter()
        .zip(&v)
        .map(|(a, b)| a.conj() * b)
        .sum::<C64>()
        .re)
}

/// Environment state `W`, `w_ij = Tr(K_i ρ K_j†)`, indexed by Kraus labels.
#[derive(Debug, Clone, PartialEq)]
pub struct ExchangeMatrix {
    state: DensityMatrix,
}

impl ExchangeMatrix {
    pub fn matrix(&self) -> &CMatrix {
        self.state.matrix()
    }

    pub fn as_state(&self) -> &DensityMatrix {
        &self.state
    }

    pub fn dim(&self) -> usize {
        self.state.dim()
    }
}

pub fn exchange_matrix(channel: &QuantumChannel, rho: &DensityMatrix) -> Result<ExchangeMatrix> {
    check_dims(channel, rho)?;
    let n = channel.kraus_count();
    let left: Vec<CMatrix> = channel
        .kraus()
        .iter()
        .map(|k| k.matmul(rho.matrix()))
        .collect::<Result<_>>()?;
    let mut w = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            // Tr(A B†) = Σ A_ab conj(B_ab)
            let kj = &channel.kraus()[j];
            w[(i, j)] = left[i]
                .as_slice()
                .iter()
                .zip(kj.as_slice())
                .map(|(a, b)| a * b.conj())
                .sum();
        }
    }
    Ok(ExchangeMatrix {
        state: DensityMatrix::from_trusted(w.hermitian_part()),
    })
}

/// `E(ρ, Φ) = H_{q,s}(W)`.
pub fn entropy_exchange(
    channel: &QuantumChannel,
    rho: &DensityMatrix,
    params: EntropyParams,
) -> Result<f64> {
    quantum_unified(exchange_matrix(channel, rho)?.as_state(), params)
}

/// `E(ρ, Φ)` evaluated on the final joint state instead of `W`.
pub fn entropy_exchange_joint(
    channel: &QuantumChannel,
    rho: &DensityMatrix,
    params: EntropyParams,
) -> Result<f64> {
    quantum_unified(&final_joint_state(channel, rho)?, params)
}

/// `M(Φ) = H_{q,s}(σ(Φ))`.
pub fn map_entropy(channel: &QuantumChannel, params: EntropyParams) -> Result<f64> {
    quantum_unified(&channel.choi().rescaled(), params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{bloch_state, depolarizing, BlochVector};
    use crate::kernel::{partial_trace, Subsystem};
    use approx::assert_abs_diff_eq;

    fn p(q: f64, s: f64) -> EntropyParams {
        EntropyParams::new(q, s).unwrap()
    }

    #[test]
    fn maximally_mixed_purifies_to_bell_state() {
        let psi = purify(&DensityMatrix::completely_mixed(2).unwrap()).unwrap();
        let proj = psi.projector();
        let marginal = partial_trace(proj.matrix(), Subsystem::Second, (2, 2)).unwrap();
        assert!(marginal.max_abs_diff(&CMatrix::identity(2).scale_real(0.5)) < 1e-15);
        let other = partial_trace(proj.matrix(), Subsystem::First, (2, 2)).unwrap();
        assert!(other.max_abs_diff(&CMatrix::identity(2).scale_real(0.5)) < 1e-15);
    }

    #[test]
    fn identity_channel_quantities() {
        let rho = bloch_state(BlochVector::new(0.2, 0.1, -0.4)).unwrap();
        let id = QuantumChannel::identity(2);
        assert_abs_diff_eq!(
            entanglement_fidelity(&id, &rho).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        let w = exchange_matrix(&id, &rho).unwrap();
        assert_eq!(w.dim(), 1);
        assert_abs_diff_eq!(w.matrix()[(0, 0)].re, 1.0, epsilon = 1e-15);
        for params in [p(0.5, 1.0), p(1.0, 1.0), p(2.0, 0.0)] {
            assert_abs_diff_eq!(
                entropy_exchange(&id, &rho, params).unwrap(),
                0.0,
                epsilon = 1e-14
            );
        }
        let joint = final_joint_state(&id, &rho).unwrap();
        assert!(
            joint
                .matrix()
                .max_abs_diff(purify(&rho).unwrap().projector().matrix())
                < 1e-15
        );
    }

    #[test]
    fn depolarizing_exchange_values() {
        let ch = depolarizing(0.3).unwrap();
        let rho = DensityMatrix::completely_mixed(2).unwrap();
        assert_abs_diff_eq!(
            entanglement_fidelity(&ch, &rho).unwrap(),
            0.7,
            epsilon = 1e-15
        );
        let w = exchange_matrix(&ch, &rho).unwrap();
        assert!(
            w.matrix()
                .max_abs_diff(&CMatrix::from_diag(&[0.7, 0.1, 0.1, 0.1]))
                < 1e-15
        );
        let shannon = -(0.7f64 * 0.7f64.ln() + 0.3 * 0.1f64.ln());
        assert_abs_diff_eq!(
            entropy_exchange(&ch, &rho, p(1.0, 1.0)).unwrap(),
            shannon,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(shannon, 0.94045, epsilon = 1e-5);
        assert_abs_diff_eq!(
            entropy_exchange(&ch, &rho, p(2.0, 1.0)).unwrap(),
            0.48,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            map_entropy(&ch, p(2.0, 1.0)).unwrap(),
            0.48,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            map_entropy(&QuantumChannel::identity(3), p(2.0, 1.0)).unwrap(),
            0.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn fidelity_forms_agree_for_depolarizing() {
        let ch = depolarizing(0.4).unwrap();
        let rho = bloch_state(BlochVector::new(0.3, -0.2, 0.5)).unwrap();
        let psi = purify(&rho).unwrap();
        assert_abs_diff_eq!(
            entanglement_fidelity(&ch, &rho).unwrap(),
            entanglement_fidelity_of(&ch, &psi).unwrap(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn fidelity_needs_square_kraus() {
        let k = CMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let ch = QuantumChannel::new(vec![k]).unwrap();
        let rho = DensityMatrix::completely_mixed(2).unwrap();
        assert!(matches!(
            entanglement_fidelity(&ch, &rho),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(exchange_matrix(&ch, &rho).is_ok());
        assert!(matches!(
            exchange_matrix(&ch, &DensityMatrix::completely_mixed(3).unwrap()),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
