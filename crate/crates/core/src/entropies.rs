//! Classical and quantum generalized entropies parameterized by `(q, s)`.
//!
//! The unified `(q,s)`-entropy of a distribution `p` is
//! `[(Σ p^q)^s − 1] / ((1−q)s)`. It reduces to the Tsallis entropy at `s = 1`,
//! to the Rényi entropy as `s → 0` and to the Shannon entropy at `q = 1`.
//! Quantum versions apply the same functional to the spectrum of a density
//! matrix. Natural logarithms throughout.
//!
//! The limits `q = 1` and `s = 0` are carried as exact tags ([`QParam::One`],
//! [`SParam::Zero`]) so no code path ever divides by a tiny `1 − q` or `s`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::spectral::{clip_spectrum, power_sum};
use crate::kernel::{hermitian_eigenvalues, CMatrix, C64};

/// Tolerance on the total probability of a [`ProbVector`].
pub const PROB_SUM_TOL: f64 = 1e-9;
/// Probabilities in `[-PROB_CLIP, 0)` are clamped to zero.
pub const PROB_CLIP: f64 = 1e-12;
/// Tolerance on the trace of a [`DensityMatrix`].
pub const TRACE_TOL: f64 = 1e-9;

/// Entropic degree `q > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QParam {
    /// The von Neumann / Shannon limit.
    One,
    /// Any other positive value; never exactly 1.
    Value(f64),
}

impl QParam {
    pub fn new(q: f64) -> Result<Self> {
        if !(q > 0.0) || !q.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "q must be positive and finite, got {q}"
            )));
        }
        Ok(if q == 1.0 {
            QParam::One
        } else {
            QParam::Value(q)
        })
    }

    pub fn value(self) -> f64 {
        match self {
            QParam::One => 1.0,
            QParam::Value(q) => q,
        }
    }
}

/// Unified-entropy exponent `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SParam {
    /// The Rényi limit.
    Zero,
    /// Any other finite value; never exactly 0.
    Value(f64),
}

impl SParam {
    pub fn new(s: f64) -> Result<Self> {
        if !s.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "s must be finite, got {s}"
            )));
        }
        Ok(if s == 0.0 {
            SParam::Zero
        } else {
            SParam::Value(s)
        })
    }

    pub fn value(self) -> f64 {
        match self {
            SParam::Zero => 0.0,
            SParam::Value(s) => s,
        }
    }
}

/// The pair `(q, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "RawParams", try_from = "RawParams")]
pub struct EntropyParams {
    pub q: QParam,
    pub s: SParam,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    q: f64,
    s: f64,
}

impl From<EntropyParams> for RawParams {
    fn from(p: EntropyParams) -> Self {
        RawParams {
            q: p.q.value(),
            s: p.s.value(),
        }
    }
}

impl TryFrom<RawParams> for EntropyParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        EntropyParams::new(raw.q, raw.s)
    }
}

impl EntropyParams {
    pub fn new(q: f64, s: f64) -> Result<Self> {
        Ok(EntropyParams {
            q: QParam::new(q)?,
            s: SParam::new(s)?,
        })
    }

    /// Tsallis entropy of degree `q` (`s = 1`).
    pub fn tsallis(q: f64) -> Result<Self> {
        Self::new(q, 1.0)
    }

    /// Rényi entropy of order `q` (`s = 0`).
    pub fn renyi(q: f64) -> Result<Self> {
        Self::new(q, 0.0)
    }

    pub fn von_neumann() -> Self {
        EntropyParams {
            q: QParam::One,
            s: SParam::Value(1.0),
        }
    }
}

impl std::fmt::Display for EntropyParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(q={}, s={})", self.q.value(), self.s.value())
    }
}

/// Probability distribution with non-negative entries summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVector(Vec<f64>);

impl ProbVector {
    pub fn new(mut p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::NotNormalized(0.0));
        }
        for x in p.iter_mut() {
            if !x.is_finite() {
                return Err(Error::NonFinite);
            }
            if *x < -PROB_CLIP {
                return Err(Error::NegativeProbability(*x));
            }
            if *x < 0.0 {
                *x = 0.0;
            }
        }
        let total: f64 = p.iter().sum();
        if (total - 1.0).abs() > PROB_SUM_TOL {
            return Err(Error::NotNormalized(total));
        }
        Ok(ProbVector(p))
    }

    pub fn uniform(n: usize) -> Result<Self> {
        Self::new(vec![1.0 / n as f64; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

/// `ln_a(x) = (x^{1−a} − 1)/(1 − a)` for any real `a`, `ln x` at `a = 1`.
pub fn q_log_general(x: f64, a: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::NonPositiveArgument(x));
    }
    let ln = x.ln();
    if a == 1.0 {
        Ok(ln)
    } else {
        Ok(((1.0 - a) * ln).exp_m1() / (1.0 - a))
    }
}

/// The q-logarithm.
pub fn q_log(x: f64, q: QParam) -> Result<f64> {
    q_log_general(x, q.value())
}

fn shannon_of(values: &[f64]) -> f64 {
    -values
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * x.ln())
        .sum::<f64>()
}

/// Shannon entropy in nats.
pub fn shannon(p: &ProbVector) -> f64 {
    shannon_of(&p.0)
}

/// Tsallis entropy `(Σ p^q − 1)/(1 − q)`; Shannon at `q = 1`.
pub fn tsallis(p: &ProbVector, q: QParam) -> f64 {
    unified_of_spectrum(
        &p.0,
        EntropyParams {
            q,
            s: SParam::Value(1.0),
        },
    )
}

/// Binary Tsallis entropy `−p^q ln_q p − (1−p)^q ln_q(1−p)`.
pub fn binary_tsallis(p: f64, q: QParam) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
        });
    }
    let term = |x: f64| -> f64 {
        if x == 0.0 {
            0.0
        } else {
            -x.powf(q.value()) * q_log(x, q).expect("x > 0")
        }
    };
    Ok(term(p) + term(1.0 - p))
}

/// Unnormalized q-average `Σ p_j^q a_j`.
pub fn q_average(values: &[f64], p: &ProbVector, q: QParam) -> Result<f64> {
    if values.len() != p.len() {
        return Err(Error::LengthMismatch(values.len(), p.len()));
    }
    let q = q.value();
    Ok(values
        .iter()
        .zip(&p.0)
        .filter(|(_, &pj)| pj > 0.0)
        .map(|(a, &pj)| if q == 1.0 { pj * a } else { pj.powf(q) * a })
        .sum())
}

/// Rényi entropy `ln(Σ p^q)/(1 − q)`; Shannon at `q = 1`.
pub fn renyi(p: &ProbVector, q: QParam) -> f64 {
    unified_of_spectrum(&p.0, EntropyParams { q, s: SParam::Zero })
}

/// Unified `(q,s)`-entropy of a distribution.
pub fn unified_classical(p: &ProbVector, params: EntropyParams) -> f64 {
    unified_of_spectrum(&p.0, params)
}

/// Unified `(q,s)`-entropy of a non-negative tuple (a distribution or the
/// clipped spectrum of a density matrix). Zero entries contribute nothing.
pub fn unified_of_spectrum(values: &[f64], params: EntropyParams) -> f64 {
    let q = match params.q {
        QParam::One => return shannon_of(values),
        QParam::Value(q) => q,
    };
    let t = power_sum(values, q);
    let ln_t = t.ln();
    match params.s {
        SParam::Zero => ln_t / (1.0 - q),
        SParam::Value(s) => (s * ln_t).exp_m1() / ((1.0 - q) * s),
    }
}

/// Maps a Tsallis value `x = H_q` to the unified value with the same
/// `Tr ρ^q`: `[(1 + (1−q)x)^s − 1]/((1−q)s)`, `ln(1 + (1−q)x)/(1−q)` at
/// `s = 0` and the identity at `q = 1`. Requires `1 + (1−q)x > 0`.
pub fn unified_from_tsallis(x: f64, params: EntropyParams) -> Result<f64> {
    let q = match params.q {
        QParam::One => return Ok(x),
        QParam::Value(q) => q,
    };
    let y = 1.0 + (1.0 - q) * x;
    if !(y > 0.0) {
        return Err(Error::NonPositiveArgument(y));
    }
    Ok(match params.s {
        SParam::Zero => y.ln() / (1.0 - q),
        SParam::Value(s) => (s * y.ln()).exp_m1() / ((1.0 - q) * s),
    })
}

/// Maximum of the unified entropy in dimension `d`, attained by `I/d`:
/// `(1/s) ln_q(d^s)`, which is `ln d` at `s = 0` or `q = 1`.
pub fn max_entropy(d: usize, params: EntropyParams) -> Result<f64> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "dimension must be at least 1".into(),
        ));
    }
    let ln_d = (d as f64).ln();
    Ok(match (params.q, params.s) {
        (QParam::One, _) | (_, SParam::Zero) => ln_d,
        (QParam::Value(q), SParam::Value(s)) => ((1.0 - q) * s * ln_d).exp_m1() / ((1.0 - q) * s),
    })
}

/// Unit-trace positive semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, positivity (up to the clipping tolerance) and
    /// unit trace.
    pub fn new(matrix: CMatrix) -> Result<Self> {
        let values = hermitian_eigenvalues(&matrix)?;
        let min = values.last().copied().unwrap_or(0.0);
        clip_spectrum(values, matrix.frobenius_norm()).map_err(|_| Error::NotPositive {
            min_eigenvalue: min,
        })?;
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL {
            return Err(Error::NotUnitTrace(tr.re));
        }
        Ok(DensityMatrix {
            matrix: matrix.hermitian_part(),
        })
    }

    /// Wraps a matrix known to be a state by construction (channel outputs,
    /// purifications); only Hermiticity is enforced.
    pub(crate) fn from_trusted(matrix: CMatrix) -> Self {
        debug_assert!(matrix.is_square());
        DensityMatrix {
            matrix: matrix.hermitian_part(),
        }
    }

    /// The completely mixed state `I/d`.
    pub fn completely_mixed(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::DimensionMismatch(
                "dimension must be positive".into(),
            ));
        }
        Ok(DensityMatrix {
            matrix: CMatrix::identity(d).scale_real(1.0 / d as f64),
        })
    }

    /// `|ψ⟩⟨ψ|/⟨ψ|ψ⟩`.
    pub fn pure(psi: &[C64]) -> Result<Self> {
        let norm_sqr: f64 = psi.iter().map(C64::norm_sqr).sum();
        if !(norm_sqr > 0.0) {
            return Err(Error::NonPositiveArgument(norm_sqr));
        }
        Ok(DensityMatrix::from_trusted(
            CMatrix::outer(psi, psi).scale_real(1.0 / norm_sqr),
        ))
    }

    pub fn from_diag(p: &ProbVector) -> Self {
        DensityMatrix {
            matrix: CMatrix::from_diag(p.as_slice()),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    /// Clipped non-increasing spectrum.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        crate::kernel::clipped_eigenvalues(&self.matrix)
    }

    /// `U ρ U†`.
    pub fn conjugate_by(&self, u: &CMatrix) -> Result<Self> {
        Ok(DensityMatrix::from_trusted(u.sandwich(&self.matrix)?))
    }

    /// `θρ + (1−θ)υ`.
    pub fn mix(&self, other: &DensityMatrix, theta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&theta) {
            return Err(Error::OutOfRange {
                name: "theta",
                value: theta,
            });
        }
        let m = self
            .matrix
            .scale_real(theta)
            .try_add(&other.matrix.scale_real(1.0 - theta))?;
        Ok(DensityMatrix::from_trusted(m))
    }
}

/// Quantum Tsallis entropy `(Tr ρ^q − 1)/(1 − q)`.
pub fn quantum_q_entropy(rho: &DensityMatrix, q: QParam) -> Result<f64> {
    quantum_unified(
        rho,
        EntropyParams {
            q,
            s: SParam::Value(1.0),
        },
    )
}

/// Quantum Rényi entropy `ln Tr ρ^q/(1 − q)`.
pub fn quantum_renyi(rho: &DensityMatrix, q: QParam) -> Result<f64> {
    quantum_unified(rho, EntropyParams { q, s: SParam::Zero })
}

/// Von Neumann entropy `−Tr ρ ln ρ`.
pub fn von_neumann(rho: &DensityMatrix) -> Result<f64> {
    Ok(shannon_of(&rho.eigenvalues()?))
}

/// Quantum unified `(q,s)`-entropy.
pub fn quantum_unified(rho: &DensityMatrix, params: EntropyParams) -> Result<f64> {
    Ok(unified_of_spectrum(&rho.eigenvalues()?, params))
}
