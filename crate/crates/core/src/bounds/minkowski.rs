use super::{InequalityCertificate, CERT_TOL};
use crate::entropies::{quantum_q_entropy, DensityMatrix, QParam};
use crate::error::{Error, Result};
use crate::kernel::spectral::CLIP_TOL;
use crate::kernel::{
    check_majorization, clipped_eigenvalues, hermitian_eigenvalues, partial_trace, schatten_q,
    CMatrix, Subsystem,
};

/// Gap allowed in the `q = 1` additivity check.
pub const ADDITIVITY_TOL: f64 = 1e-12;

fn strictly_positive(a: &CMatrix) -> Result<()> {
    let values = hermitian_eigenvalues(a)?;
    let min = values.last().copied().unwrap_or(0.0);
    if min <= CLIP_TOL * a.frobenius_norm() {
        return Err(Error::NotStrictlyPositive {
            min_eigenvalue: min,
        });
    }
    Ok(())
}

/// Minkowski-type relation for `G_q(X) = [Tr X^q]^{1/q}`: super-additive
/// for `q < 1` (strictly positive inputs), subadditive for `q > 1` and
/// additive at `q = 1`.
pub fn certify_minkowski(a: &CMatrix, z: &CMatrix, q: f64) -> Result<InequalityCertificate> {
    if q == 0.0 || !q.is_finite() {
        return Err(Error::ParameterOutOfDomain(format!(
            "the Minkowski functional needs finite non-zero q, got {q}"
        )));
    }
    let sum = a.try_add(z)?;
    if q > 0.0 && q < 1.0 {
        strictly_positive(a)?;
        strictly_positive(z)?;
    }
    let ga = schatten_q(a, q)?;
    let gz = schatten_q(z, q)?;
    let gs = schatten_q(&sum, q)?;
    let cert = if q < 1.0 {
        InequalityCertificate::new("minkowski_superadditive", ga + gz, gs, CERT_TOL)?
    } else if q > 1.0 {
        InequalityCertificate::new("minkowski_triangle", gs, ga + gz, CERT_TOL)?
    } else {
        InequalityCertificate::equality("minkowski_additive", gs, ga + gz, ADDITIVITY_TOL)?
    };
    Ok(cert.with_param("q", q))
}

/// `λ(A + Z) ≺ λ(A)↓ + λ(Z)↓`.
pub fn ky_fan_premise(a: &CMatrix, z: &CMatrix) -> Result<bool> {
    let sum = clipped_eigenvalues(&a.try_add(z)?)?;
    let la = clipped_eigenvalues(a)?;
    let lz = clipped_eigenvalues(z)?;
    let combined: Vec<f64> = la.iter().zip(&lz).map(|(x, y)| x + y).collect();
    check_majorization(&sum, &combined)
}

/// `H_q(ρ^{AB}) ≤ H_q(ρ^A) + H_q(ρ^B)` for `q ≥ 1`.
pub fn certify_subadditivity(
    rho: &DensityMatrix,
    dims: (usize, usize),
    q: f64,
) -> Result<InequalityCertificate> {
    if !(q >= 1.0) || !q.is_finite() {
        return Err(Error::ParameterOutOfDomain(format!(
            "subadditivity of the q-entropy is certified for q >= 1, got {q}"
        )));
    }
    let qp = QParam::new(q)?;
    let a = DensityMatrix::from_trusted(partial_trace(rho.matrix(), Subsystem::Second, dims)?);
    let b = DensityMatrix::from_trusted(partial_trace(rho.matrix(), Subsystem::First, dims)?);
    let lhs = quantum_q_entropy(rho, qp)?;
    let rhs = quantum_q_entropy(&a, qp)? + quantum_q_entropy(&b, qp)?;
    Ok(InequalityCertificate::new("subadditivity", lhs, rhs, CERT_TOL)?.with_param("q", q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_density, random_positive};
    use approx::assert_abs_diff_eq;

    #[test]
    fn identity_pair_at_half() {
        let i = CMatrix::identity(2);
        let c = certify_minkowski(&i, &i, 0.5).unwrap();
        assert_abs_diff_eq!(c.lhs, 8.0, epsilon = 1e-13);
        assert_abs_diff_eq!(c.rhs, 8.0, epsilon = 1e-13);
        assert!(c.holds);
    }

    #[test]
    fn additive_at_one() {
        let a = random_positive(3, 1);
        let z = random_positive(3, 2);
        let c = certify_minkowski(&a, &z, 1.0).unwrap();
        assert!(c.lhs < 1e-13);
        assert!(c.holds);
    }

    #[test]
    fn random_pairs_hold() {
        let a = random_positive(3, 3);
        let z = random_positive(3, 4);
        for q in [-1.0, 0.25, 0.5, 0.75, 2.0, 3.0] {
            assert!(certify_minkowski(&a, &z, q).unwrap().holds, "q = {q}");
        }
        assert!(ky_fan_premise(&a, &z).unwrap());
    }

    #[test]
    fn singular_inputs_rejected_below_one() {
        let a = CMatrix::from_diag(&[1.0, 0.0]);
        let z = CMatrix::identity(2);
        assert!(matches!(
            certify_minkowski(&a, &z, 0.5),
            Err(Error::NotStrictlyPositive { .. })
        ));
        assert!(matches!(
            certify_minkowski(&a, &z, -1.0),
            Err(Error::SingularForNegativeQ { .. })
        ));
        assert!(certify_minkowski(&a, &z, 2.0).unwrap().holds);
        assert!(matches!(
            certify_minkowski(&a, &z, 0.0),
            Err(Error::ParameterOutOfDomain(_))
        ));
    }

    #[test]
    fn subadditivity_random() {
        let rho = random_density(6, 77).unwrap();
        for q in [1.0, 1.5, 2.0, 3.0] {
            assert!(certify_subadditivity(&rho, (2, 3), q).unwrap().holds);
        }
        assert!(certify_subadditivity(&rho, (2, 3), 0.5).is_err());
    }
}
