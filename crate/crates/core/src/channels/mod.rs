//! Completely positive trace-preserving maps in Kraus form, their
//! Choi–Jamiołkowski (dynamical) matrices and Stinespring isometries.
//!
//! Index conventions: the dynamical matrix lives on `C^{d_out} ⊗ C^{d_in}`
//! with the output factor first, i.e.
//! `D = Σ_{ν,μ} Φ(|ν⟩⟨μ|) ⊗ |ν⟩⟨μ| = Σ_j vec(K_j) vec(K_j)†`, where `vec`
//! stacks the rows of a Kraus operator. The transpose in
//! `Φ(X) = Tr_R[D (I ⊗ Xᵀ)]` is taken in the same computational basis.

pub mod json;

use serde::{Deserialize, Serialize};

use crate::entropies::{DensityMatrix, ProbVector, PROB_CLIP};
use crate::error::{Error, Result};
use crate::kernel::{hermitian_eig, partial_trace, CMatrix, Subsystem, C64};

/// Frobenius tolerance on `Σ K†K − I`.
pub const TP_TOL: f64 = 1e-9;
/// Effects with probability below this are skipped in [`QuantumChannel::particular_outputs`].
pub const ZERO_PROBABILITY: f64 = 1e-12;
/// Relative eigenvalue cutoff used when extracting Kraus operators.
pub const RANK_TOL: f64 = 1e-10;

/// Ordered Kraus operators `{K_j}` with `Σ K_j†K_j = I`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumChannel {
    kraus: Vec<CMatrix>,
    dim_in: usize,
    dim_out: usize,
}

impl QuantumChannel {
    /// Validates shapes and the trace-preservation condition.
    pub fn new(kraus: Vec<CMatrix>) -> Result<Self> {
        let first = kraus.first().ok_or(Error::EmptyKrausList)?;
        let (dim_out, dim_in) = (first.rows(), first.cols());
        if let Some((j, k)) = kraus
            .iter()
            .enumerate()
            .find(|(_, k)| (k.rows(), k.cols()) != (dim_out, dim_in))
        {
            return Err(Error::DimensionMismatch(format!(
                "Kraus operator {j} is {}x{}, expected {dim_out}x{dim_in}",
                k.rows(),
                k.cols()
            )));
        }
        let mut gram = CMatrix::zeros(dim_in, dim_in);
        for k in &kraus {
            gram.add_assign_matrix(&k.adjoint().matmul(k)?);
        }
        let deviation = gram.frobenius_distance(&CMatrix::identity(dim_in));
        if !(deviation <= TP_TOL) {
            return Err(Error::NotTracePreserving { deviation });
        }
        Ok(QuantumChannel {
            kraus,
            dim_in,
            dim_out,
        })
    }

    pub fn identity(d: usize) -> Self {
        QuantumChannel {
            kraus: vec![CMatrix::identity(d)],
            dim_in: d,
            dim_out: d,
        }
    }

    /// `ρ ↦ U ρ U†`; fails unless `U` is unitary.
    pub fn unitary(u: CMatrix) -> Result<Self> {
        Self::new(vec![u])
    }

    pub fn kraus(&self) -> &[CMatrix] {
        &self.kraus
    }

    pub fn kraus_count(&self) -> usize {
        self.kraus.len()
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    fn check_input(&self, rho: &DensityMatrix) -> Result<()> {
        if rho.dim() != self.dim_in {
            return Err(Error::DimensionMismatch(format!(
                "state of dimension {} fed to a channel with input dimension {}",
                rho.dim(),
                self.dim_in
            )));
        }
        Ok(())
    }

    /// `Φ(X) = Σ K_j X K_j†` on an arbitrary operator.
    pub fn apply_operator(&self, x: &CMatrix) -> Result<CMatrix> {
        if (x.rows(), x.cols()) != (self.dim_in, self.dim_in) {
            return Err(Error::DimensionMismatch(format!(
                "operator {}x{} vs input dimension {}",
                x.rows(),
                x.cols(),
                self.dim_in
            )));
        }
        let mut out = CMatrix::zeros(self.dim_out, self.dim_out);
        for k in &self.kraus {
            out.add_assign_matrix(&k.sandwich(x)?);
        }
        Ok(out)
    }

    /// `Φ(ρ)`.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        self.check_input(rho)?;
        Ok(DensityMatrix::from_trusted(
            self.apply_operator(rho.matrix())?,
        ))
    }

    /// The blocks `A_jj = K_j ρ K_j†`.
    pub fn effect_blocks(&self, rho: &DensityMatrix) -> Result<Vec<CMatrix>> {
        self.check_input(rho)?;
        self.kraus
            .iter()
            .map(|k| k.sandwich(rho.matrix()))
            .collect()
    }

    /// `p_j = Tr(K_j†K_j ρ)`.
    pub fn effect_probabilities(&self, rho: &DensityMatrix) -> Result<ProbVector> {
        let p = self
            .effect_blocks(rho)?
            .iter()
            .map(|a| {
                let t = a.trace().re;
                if (-PROB_CLIP..0.0).contains(&t) {
                    0.0
                } else {
                    t
                }
            })
            .collect();
        ProbVector::new(p)
    }

    /// Normalized outputs `ρ'_j = K_jρK_j†/p_j` for every effect with
    /// `p_j ≥ ZERO_PROBABILITY`, tagged with the Kraus index.
    pub fn particular_outputs(&self, rho: &DensityMatrix) -> Result<Vec<ParticularOutput>> {
        Ok(self
            .effect_blocks(rho)?
            .into_iter()
            .enumerate()
            .filter_map(|(index, a)| {
                let p = a.trace().re;
                (p >= ZERO_PROBABILITY).then(|| ParticularOutput {
                    index,
                    probability: p,
                    state: DensityMatrix::from_trusted(a.scale_real(1.0 / p)),
                })
            })
            .collect())
    }

    /// Dynamical matrix `D(Φ) = d·(Φ ⊗ id)(|φ+⟩⟨φ+|)`.
    pub fn choi(&self) -> DynamicalMatrix {
        let n = self.dim_out * self.dim_in;
        let mut d = CMatrix::zeros(n, n);
        for k in &self.kraus {
            let v = k.as_slice();
            d.add_assign_matrix(&CMatrix::outer(v, v));
        }
        DynamicalMatrix {
            matrix: d.hermitian_part(),
            dim_in: self.dim_in,
            dim_out: self.dim_out,
        }
    }

    /// Stinespring isometry `V: ψ ↦ Σ_j K_jψ ⊗ e_j` onto `C^{d_out} ⊗ C^{n}`,
    /// the environment dimension `n` being the Kraus count.
    pub fn stinespring_isometry(&self) -> CMatrix {
        let n = self.kraus.len();
        let mut v = CMatrix::zeros(self.dim_out * n, self.dim_in);
        for (j, k) in self.kraus.iter().enumerate() {
            for a in 0..self.dim_out {
                for nu in 0..self.dim_in {
                    v[(a * n + j, nu)] = k[(a, nu)];
                }
            }
        }
        v
    }

    /// `θΦ + (1−θ)Ψ`, realized by the Kraus list `{√θ K_j} ∪ {√(1−θ) L_k}`.
    pub fn convex_mixture(&self, other: &QuantumChannel, theta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&theta) {
            return Err(Error::OutOfRange {
                name: "theta",
                value: theta,
            });
        }
        if (self.dim_in, self.dim_out) != (other.dim_in, other.dim_out) {
            return Err(Error::DimensionMismatch(
                "mixed channels must share dimensions".into(),
            ));
        }
        let a = theta.sqrt();
        let b = (1.0 - theta).sqrt();
        let kraus = self
            .kraus
            .iter()
            .map(|k| k.scale_real(a))
            .chain(other.kraus.iter().map(|k| k.scale_real(b)))
            .collect();
        QuantumChannel::new(kraus)
    }
}

/// One branch of the operator-sum decomposition.
#[derive(Debug, Clone)]
pub struct ParticularOutput {
    pub index: usize,
    pub probability: f64,
    pub state: DensityMatrix,
}

/// How a matrix handed to [`DynamicalMatrix::from_matrix`] is normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChoiNormalization {
    /// `D(Φ)`, trace `d_in`.
    Dynamical,
    /// `σ(Φ) = D(Φ)/d_in`, unit trace.
    Rescaled,
}

/// Choi–Jamiołkowski matrix of a channel, stored unnormalized.
#[derive(Debug, Clone, PartialEq)]
pub struct DynamicalMatrix {
    matrix: CMatrix,
    dim_in: usize,
    dim_out: usize,
}

impl DynamicalMatrix {
    /// Validates positivity and `Tr_Q D = I`.
    pub fn from_matrix(
        matrix: CMatrix,
        dim_in: usize,
        dim_out: usize,
        normalization: ChoiNormalization,
    ) -> Result<Self> {
        let n = matrix.ensure_square()?;
        if n != dim_in * dim_out {
            return Err(Error::DimensionMismatch(format!(
                "{n}x{n} matrix for dimensions {dim_out}·{dim_in}"
            )));
        }
        let matrix = match normalization {
            ChoiNormalization::Dynamical => matrix,
            ChoiNormalization::Rescaled => matrix.scale_real(dim_in as f64),
        };
        let spectrum = hermitian_eig(&matrix)?;
        let min = spectrum.eigenvalues.last().copied().unwrap_or(0.0);
        if min < -crate::kernel::spectral::CLIP_TOL * matrix.frobenius_norm() {
            return Err(Error::NotPositive {
                min_eigenvalue: min,
            });
        }
        let marginal = partial_trace(&matrix, Subsystem::First, (dim_out, dim_in))?;
        let deviation = marginal.frobenius_distance(&CMatrix::identity(dim_in));
        if deviation > TP_TOL * dim_in as f64 {
            return Err(Error::NotTracePreserving { deviation });
        }
        Ok(DynamicalMatrix {
            matrix: matrix.hermitian_part(),
            dim_in,
            dim_out,
        })
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    /// `D(Φ)`.
    pub fn dynamical(&self) -> &CMatrix {
        &self.matrix
    }

    /// `σ(Φ) = D(Φ)/d_in` as a density matrix on `Q ⊗ R`.
    pub fn rescaled(&self) -> DensityMatrix {
        DensityMatrix::from_trusted(self.matrix.scale_real(1.0 / self.dim_in as f64))
    }

    /// `Φ(X) = Tr_R[D (I ⊗ Xᵀ)]`.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        Ok(DensityMatrix::from_trusted(
            self.apply_operator(rho.matrix())?,
        ))
    }

    pub fn apply_operator(&self, x: &CMatrix) -> Result<CMatrix> {
        if (x.rows(), x.cols()) != (self.dim_in, self.dim_in) {
            return Err(Error::DimensionMismatch(format!(
                "operator {}x{} vs input dimension {}",
                x.rows(),
                x.cols(),
                self.dim_in
            )));
        }
        let lifted = crate::kernel::tensor(&CMatrix::identity(self.dim_out), &x.transpose());
        partial_trace(
            &self.matrix.matmul(&lifted)?,
            Subsystem::Second,
            (self.dim_out, self.dim_in),
        )
    }

    /// Kraus operators `√λ_k · unvec(v_k)` from the eigenvectors of `D`
    /// with `λ_k > RANK_TOL·Tr D`.
    pub fn kraus_from_choi(&self) -> Result<QuantumChannel> {
        let spectrum = hermitian_eig(&self.matrix)?;
        let cutoff = RANK_TOL * self.matrix.trace().re;
        let kraus = spectrum
            .eigenvalues
            .iter()
            .enumerate()
            .take_while(|(_, &l)| l > cutoff)
            .map(|(k, &l)| {
                let v = spectrum.eigenvector(k);
                let scaled: Vec<C64> = v.iter().map(|z| z * l.sqrt()).collect();
                CMatrix::from_vec(self.dim_out, self.dim_in, scaled)
            })
            .collect::<Result<Vec<_>>>()?;
        QuantumChannel::new(kraus)
    }
}

/// Bloch vector `s⃗` of a qubit state `(I + s⃗·σ⃗)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        BlochVector { x, y, z }
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Reads off `s_k = Tr(ρσ_k)` from a qubit density matrix.
    pub fn of_state(rho: &DensityMatrix) -> Result<Self> {
        if rho.dim() != 2 {
            return Err(Error::DimensionMismatch(
                "Bloch vectors describe qubits".into(),
            ));
        }
        let m = rho.matrix();
        let [sx, sy, sz] = pauli();
        let comp = |s: &CMatrix| m.matmul(s).expect("2x2").trace().re;
        Ok(BlochVector::new(comp(&sx), comp(&sy), comp(&sz)))
    }
}

/// Pauli matrices `σ_x, σ_y, σ_z`.
pub fn pauli() -> [CMatrix; 3] {
    let c = C64::new;
    [
        CMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ]),
        CMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ]),
        CMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(-1.0, 0.0)],
        ]),
    ]
    .map(|m| m.expect("2x2 literal"))
}

/// Qubit state `(I + s⃗·σ⃗)/2`.
pub fn bloch_state(v: BlochVector) -> Result<DensityMatrix> {
    let r = v.norm();
    if !r.is_finite() || r > 1.0 + 1e-12 {
        return Err(Error::OutOfBall(r));
    }
    let [sx, sy, sz] = pauli();
    let m = CMatrix::identity(2)
        .try_add(&sx.scale_real(v.x))?
        .try_add(&sy.scale_real(v.y))?
        .try_add(&sz.scale_real(v.z))?
        .scale_real(0.5);
    Ok(DensityMatrix::from_trusted(m))
}

/// Qubit depolarizing channel with Kraus operators `√(1−p) I`, `√(p/3) σ_k`.
pub fn depolarizing(p: f64) -> Result<QuantumChannel> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
        });
    }
    let [sx, sy, sz] = pauli();
    let w = (p / 3.0).sqrt();
    QuantumChannel::new(vec![
        CMatrix::identity(2).scale_real((1.0 - p).sqrt()),
        sx.scale_real(w),
        sy.scale_real(w),
        sz.scale_real(w),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn identity_channel_is_valid() {
        let ch = QuantumChannel::new(vec![CMatrix::identity(2)]).unwrap();
        let rho = bloch_state(BlochVector::new(0.1, 0.2, 0.3)).unwrap();
        assert!(ch.apply(&rho).unwrap().matrix().max_abs_diff(rho.matrix()) < 1e-15);
    }

    #[test]
    fn depolarizing_kraus_list() {
        let [sx, sy, sz] = pauli();
        let kraus = vec![
            CMatrix::identity(2).scale_real(0.7f64.sqrt()),
            sx.scale_real(0.1f64.sqrt()),
            sy.scale_real(0.1f64.sqrt()),
            sz.scale_real(0.1f64.sqrt()),
        ];
        let ch = QuantumChannel::new(kraus).unwrap();
        assert_eq!(ch, depolarizing(0.3).unwrap());
    }

    #[test]
    fn rejects_non_trace_preserving() {
        let err = QuantumChannel::new(vec![CMatrix::identity(2).scale_real(0.5)]).unwrap_err();
        match err {
            Error::NotTracePreserving { deviation } => {
                // ‖I/4 − I‖_F = 0.75·√2
                assert_abs_diff_eq!(deviation, 0.75 * 2f64.sqrt(), epsilon = 1e-15)
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(QuantumChannel::new(vec![]), Err(Error::EmptyKrausList));
        assert!(matches!(
            QuantumChannel::new(vec![CMatrix::identity(2), CMatrix::identity(3)]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn depolarizing_three_quarters_is_fully_depolarizing() {
        let ch = depolarizing(0.75).unwrap();
        for v in [
            BlochVector::new(0.0, 0.0, 1.0),
            BlochVector::new(0.3, -0.4, 0.5),
            BlochVector::new(0.6, 0.0, -0.8),
        ] {
            let out = ch.apply(&bloch_state(v).unwrap()).unwrap();
            assert!(
                out.matrix()
                    .max_abs_diff(&CMatrix::identity(2).scale_real(0.5))
                    < 1e-15
            );
        }
    }

    #[test]
    fn depolarizing_shrinks_bloch_vector() {
        for p in [0.1, 0.3, 0.9] {
            let ch = depolarizing(p).unwrap();
            let v = BlochVector::new(0.2, -0.5, 0.4);
            let out = BlochVector::of_state(&ch.apply(&bloch_state(v).unwrap()).unwrap()).unwrap();
            let f = 1.0 - 4.0 * p / 3.0;
            assert_abs_diff_eq!(out.x, f * v.x, epsilon = 1e-15);
            assert_abs_diff_eq!(out.y, f * v.y, epsilon = 1e-15);
            assert_abs_diff_eq!(out.z, f * v.z, epsilon = 1e-15);
        }
    }

    #[test]
    fn depolarizing_zero_is_identity() {
        let ch = depolarizing(0.0).unwrap();
        assert!(
            ch.choi()
                .dynamical()
                .max_abs_diff(QuantumChannel::identity(2).choi().dynamical())
                < 1e-15
        );
        assert!(depolarizing(1.2).is_err());
    }

    #[test]
    fn effect_probabilities_of_depolarizing() {
        let ch = depolarizing(0.3).unwrap();
        let rho = bloch_state(BlochVector::new(0.1, 0.5, -0.2)).unwrap();
        let p = ch.effect_probabilities(&rho).unwrap();
        for (x, e) in p.as_slice().iter().zip([0.7, 0.1, 0.1, 0.1]) {
            assert_abs_diff_eq!(*x, e, epsilon = 1e-15);
        }
        let outs = ch.particular_outputs(&rho).unwrap();
        assert_eq!(outs.len(), 4);
        let input = rho.eigenvalues().unwrap();
        for o in &outs {
            let spec = o.state.eigenvalues().unwrap();
            assert_abs_diff_eq!(spec[0], input[0], epsilon = 1e-14);
            assert_abs_diff_eq!(spec[1], input[1], epsilon = 1e-14);
        }
    }

    #[test]
    fn zero_probability_effects_are_skipped() {
        // Amplitude-damping-like channel with γ = 1 on |0⟩⟨0| input.
        let k0 = CMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap();
        let k1 = CMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let ch = QuantumChannel::new(vec![k0, k1]).unwrap();
        let rho = bloch_state(BlochVector::new(0.0, 0.0, 1.0)).unwrap();
        let outs = ch.particular_outputs(&rho).unwrap();
        assert_eq!(outs.len(), 1);
        assert_eq!(outs[0].index, 0);
    }

    #[test]
    fn identity_choi_is_maximally_entangled() {
        let sigma = QuantumChannel::identity(2).choi().rescaled();
        let spec = sigma.eigenvalues().unwrap();
        assert_abs_diff_eq!(spec[0], 1.0, epsilon = 1e-14);
        assert!(spec[1..].iter().all(|&x| x.abs() < 1e-14));
        assert_abs_diff_eq!(sigma.matrix()[(0, 3)].re, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn depolarizing_choi_spectrum() {
        let p = 0.3;
        let spec = depolarizing(p)
            .unwrap()
            .choi()
            .rescaled()
            .eigenvalues()
            .unwrap();
        let expected = [1.0 - p, p / 3.0, p / 3.0, p / 3.0];
        for (x, e) in spec.iter().zip(expected) {
            assert_abs_diff_eq!(*x, e, epsilon = 1e-14);
        }
    }

    #[test]
    fn apply_via_choi_examples() {
        let rho = bloch_state(BlochVector::new(0.0, 0.0, 1.0)).unwrap();
        let d = QuantumChannel::identity(2).choi();
        assert!(d.apply(&rho).unwrap().matrix().max_abs_diff(rho.matrix()) < 1e-15);
        let out = depolarizing(0.3).unwrap().choi().apply(&rho).unwrap();
        assert!(out.matrix().max_abs_diff(&CMatrix::from_diag(&[0.8, 0.2])) < 1e-15);
    }

    #[test]
    fn identity_kraus_from_choi() {
        let ch = QuantumChannel::identity(3)
            .choi()
            .kraus_from_choi()
            .unwrap();
        assert_eq!(ch.kraus_count(), 1);
        let k = &ch.kraus()[0];
        // I up to a global phase.
        let phase = k[(0, 0)];
        assert_abs_diff_eq!(phase.norm(), 1.0, epsilon = 1e-14);
        assert!(k.max_abs_diff(&CMatrix::identity(3).scale(phase)) < 1e-14);
    }

    #[test]
    fn dynamical_matrix_validation() {
        let bad = CMatrix::identity(4).scale_real(0.25);
        assert!(matches!(
            DynamicalMatrix::from_matrix(bad, 2, 2, ChoiNormalization::Dynamical),
            Err(Error::NotTracePreserving { .. })
        ));
        let neg = CMatrix::from_diag(&[1.5, -0.5, 1.0, 0.0]);
        assert!(matches!(
            DynamicalMatrix::from_matrix(neg, 2, 2, ChoiNormalization::Dynamical),
            Err(Error::NotPositive { .. })
        ));
        let sigma = depolarizing(0.2).unwrap().choi().rescaled().into_matrix();
        let d = DynamicalMatrix::from_matrix(sigma, 2, 2, ChoiNormalization::Rescaled).unwrap();
        assert!(
            d.dynamical()
                .max_abs_diff(depolarizing(0.2).unwrap().choi().dynamical())
                < 1e-15
        );
    }

    #[test]
    fn identity_isometry() {
        let v = QuantumChannel::identity(2).stinespring_isometry();
        assert_eq!(v, CMatrix::identity(2));
    }

    #[test]
    fn bloch_state_examples() {
        assert!(
            bloch_state(BlochVector::new(0.0, 0.0, 0.0))
                .unwrap()
                .matrix()
                .max_abs_diff(&CMatrix::identity(2).scale_real(0.5))
                < 1e-16
        );
        assert!(
            bloch_state(BlochVector::new(0.0, 0.0, 1.0))
                .unwrap()
                .matrix()
                .max_abs_diff(&CMatrix::from_diag(&[1.0, 0.0]))
                < 1e-16
        );
        let spec = bloch_state(BlochVector::new(0.3, 0.0, 0.4))
            .unwrap()
            .eigenvalues()
            .unwrap();
        assert_abs_diff_eq!(spec[0], 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(spec[1], 0.25, epsilon = 1e-15);
        assert!(matches!(
            bloch_state(BlochVector::new(1.0, 1.0, 0.0)),
            Err(Error::OutOfBall(_))
        ));
    }

    #[test]
    fn mixture_validates_theta() {
        let a = depolarizing(0.1).unwrap();
        assert!(a.convex_mixture(&a, 1.5).is_err());
        assert!(a.convex_mixture(&QuantumChannel::identity(3), 0.5).is_err());
        assert_eq!(a.convex_mixture(&a, 0.25).unwrap().kraus_count(), 8);
    }
}
