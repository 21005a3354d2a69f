//! Spectral functionals of positive semidefinite matrices.

use super::eig::hermitian_eigenvalues;
use super::matrix::CMatrix;
use crate::error::{Error, Result};

/// Eigenvalues in `[-CLIP_TOL·‖A‖_F, 0)` are treated as roundoff and clamped.
pub const CLIP_TOL: f64 = 1e-10;

/// Non-increasing eigenvalues of a positive semidefinite matrix with
/// roundoff-level negatives clamped to zero.
pub fn clipped_eigenvalues(a: &CMatrix) -> Result<Vec<f64>> {
    let values = hermitian_eigenvalues(a)?;
    clip_spectrum(values, a.frobenius_norm())
}

/// Eigenvalues with magnitude below `ROUNDOFF_ULPS·ε·d·‖A‖_F` are
/// indistinguishable from zero after diagonalization and are set to zero.
pub const ROUNDOFF_ULPS: f64 = 8.0;

pub(crate) fn clip_spectrum(mut values: Vec<f64>, norm: f64) -> Result<Vec<f64>> {
    let floor = -CLIP_TOL * norm;
    let noise = ROUNDOFF_ULPS * f64::EPSILON * values.len() as f64 * norm;
    for v in values.iter_mut() {
        if *v < floor {
            return Err(Error::NegativeEigenvalue { value: *v });
        }
        if *v <= noise {
            *v = 0.0;
        }
    }
    Ok(values)
}

/// `Σ_k λ_k^q` over the clipped spectrum, with `0^q = 0`.
pub fn trace_power(a: &CMatrix, q: f64) -> Result<f64> {
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "trace_power exponent must be positive, got {q}"
        )));
    }
    Ok(power_sum(&clipped_eigenvalues(a)?, q))
}

pub(crate) fn power_sum(values: &[f64], q: f64) -> f64 {
    values
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| if q == 1.0 { x } else { x.powf(q) })
        .sum()
}

/// `G_q(x) = (Σ x_j^q)^{1/q}` for a tuple of non-negative numbers.
///
/// Negative `q` requires strictly positive entries.
pub fn g_functional(x: &[f64], q: f64) -> Result<f64> {
    if q == 0.0 || !q.is_finite() {
        return Err(Error::ParameterOutOfDomain(format!(
            "G_q is defined for finite non-zero q, got {q}"
        )));
    }
    if q < 0.0 {
        if let Some(&m) = x.iter().min_by(|a, b| a.total_cmp(b)) {
            if m <= 0.0 {
                return Err(Error::SingularForNegativeQ { min_eigenvalue: m });
            }
        }
        let s: f64 = x.iter().map(|&v| v.powf(q)).sum();
        return Ok(s.powf(1.0 / q));
    }
    Ok(power_sum(x, q).powf(1.0 / q))
}

/// `[Tr(A^q)]^{1/q}`: the Schatten q-norm for `q ≥ 1`, the q-anti-norm for
/// `q < 1`. For `q < 0` the matrix must be strictly positive.
pub fn schatten_q(a: &CMatrix, q: f64) -> Result<f64> {
    if q == 0.0 || !q.is_finite() {
        return Err(Error::ParameterOutOfDomain(format!(
            "schatten_q requires finite non-zero q, got {q}"
        )));
    }
    let values = clipped_eigenvalues(a)?;
    if q < 0.0 {
        let threshold = CLIP_TOL * a.frobenius_norm();
        let min = values.last().copied().unwrap_or(0.0);
        if min <= threshold {
            return Err(Error::SingularForNegativeQ {
                min_eigenvalue: min,
            });
        }
    }
    g_functional(&values, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn mixed_qubit_purity() {
        let half = CMatrix::identity(2).scale_real(0.5);
        assert_abs_diff_eq!(trace_power(&half, 2.0).unwrap(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn projector_trace_power_is_one() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let v = [
            crate::kernel::matrix::C64::new(r, 0.0),
            crate::kernel::matrix::C64::new(0.0, r),
        ];
        let p = CMatrix::outer(&v, &v);
        for q in [0.3, 1.0, 2.0, 7.5] {
            assert_abs_diff_eq!(trace_power(&p, q).unwrap(), 1.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn diagonal_power_sum() {
        let d = CMatrix::from_diag(&[0.7, 0.1, 0.1, 0.1]);
        // 0.49 + 3·0.01
        assert_abs_diff_eq!(trace_power(&d, 2.0).unwrap(), 0.52, epsilon = 1e-15);
    }

    #[test]
    fn negative_eigenvalue_rejected() {
        let d = CMatrix::from_diag(&[1.0, -0.1]);
        assert!(matches!(
            trace_power(&d, 2.0),
            Err(Error::NegativeEigenvalue { .. })
        ));
        // Roundoff-size negatives are clamped.
        let d = CMatrix::from_diag(&[1.0, -1e-14]);
        assert_abs_diff_eq!(trace_power(&d, 2.0).unwrap(), 1.0);
    }

    #[test]
    fn schatten_examples() {
        assert_abs_diff_eq!(
            schatten_q(&CMatrix::from_diag(&[3.0, 4.0]), 2.0).unwrap(),
            5.0,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            schatten_q(&CMatrix::identity(2), 0.5).unwrap(),
            4.0,
            epsilon = 1e-14
        );
        let a = CMatrix::from_real_rows(&[vec![2.0, 0.5], vec![0.5, 1.0]]).unwrap();
        assert_abs_diff_eq!(schatten_q(&a, 1.0).unwrap(), 3.0, epsilon = 1e-14);
    }

    #[test]
    fn schatten_negative_q_needs_strict_positivity() {
        let d = CMatrix::from_diag(&[1.0, 0.0]);
        assert!(matches!(
            schatten_q(&d, -1.0),
            Err(Error::SingularForNegativeQ { .. })
        ));
        let d = CMatrix::from_diag(&[1.0, 1.0]);
        assert_abs_diff_eq!(schatten_q(&d, -1.0).unwrap(), 0.5, epsilon = 1e-15);
        assert!(matches!(
            schatten_q(&d, 0.0),
            Err(Error::ParameterOutOfDomain(_))
        ));
    }
}
