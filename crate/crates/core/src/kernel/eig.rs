//! Cyclic Jacobi eigensolver for dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` and then applies a
//! real plane rotation, so the combined transform `U = diag(1, e^{-iφ})·R` is
//! unitary and zeroes `a_pq` exactly. Intended for the small (d ≤ 64) matrices
//! that occur in channel computations.

use super::matrix::{CMatrix, C64, ZERO};
use crate::error::{Error, Result};

/// Maximum number of full cyclic sweeps before giving up.
pub const SWEEP_BUDGET: usize = 100;

/// Relative tolerance of the Hermiticity precondition.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Eigen-decomposition `A = V·diag(λ)·V†` of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Eigenvalues, non-increasing.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors stored as columns, in eigenvalue order.
    pub eigenvectors: CMatrix,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvector(&self, k: usize) -> Vec<C64> {
        self.eigenvectors.column(k)
    }

    /// `V·diag(λ)·V†`.
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.dim();
        let mut out = CMatrix::zeros(n, n);
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let v = self.eigenvector(k);
            for i in 0..n {
                let vi = v[i] * lambda;
                for j in 0..n {
                    out[(i, j)] += vi * v[j].conj();
                }
            }
        }
        out
    }
}

fn check_hermitian(a: &CMatrix) -> Result<usize> {
    let n = a.ensure_square()?;
    let deviation = a.hermitian_deviation();
    if deviation > HERMITIAN_TOL * a.max_abs() {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(n)
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn hermitian_eig(a: &CMatrix) -> Result<Spectrum> {
    let n = check_hermitian(a)?;
    let (values, vectors) = jacobi(a.hermitian_part(), n, true)?;
    let vectors = vectors.expect("vectors requested");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    let mut sorted_vectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for i in 0..n {
            sorted_vectors[(i, dst)] = vectors[(i, src)];
        }
    }
    Ok(Spectrum {
        eigenvalues: order.iter().map(|&i| values[i]).collect(),
        eigenvectors: sorted_vectors,
    })
}

/// Eigenvalues only, non-increasing.
pub fn hermitian_eigenvalues(a: &CMatrix) -> Result<Vec<f64>> {
    let n = check_hermitian(a)?;
    let (mut values, _) = jacobi(a.hermitian_part(), n, false)?;
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

fn off_diagonal_norm(a: &CMatrix, n: usize) -> f64 {
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn jacobi(mut a: CMatrix, n: usize, want_vectors: bool) -> Result<(Vec<f64>, Option<CMatrix>)> {
    let mut v = want_vectors.then(|| CMatrix::identity(n));
    let scale = a.frobenius_norm();
    let target = 1e-15 * scale;

    let mut converged = n <= 1 || off_diagonal_norm(&a, n) <= target;
    let mut sweeps = 0;
    while !converged {
        if sweeps == SWEEP_BUDGET {
            return Err(Error::NoConvergence {
                sweeps: SWEEP_BUDGET,
            });
        }
        sweeps += 1;
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, v.as_mut(), n, p, q);
            }
        }
        converged = off_diagonal_norm(&a, n) <= target;
    }
    let values = (0..n).map(|i| a[(i, i)].re).collect();
    Ok((values, v))
}

fn rotate(a: &mut CMatrix, v: Option<&mut CMatrix>, n: usize, p: usize, q: usize) {
    let apq = a[(p, q)];
    let magnitude = apq.norm();
    if magnitude == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Pivot negligible against both diagonal entries: drop it.
    let g = 100.0 * magnitude;
    if app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
        a[(p, q)] = ZERO;
        a[(q, p)] = ZERO;
        return;
    }

    let phase = apq / magnitude;
    let tau = (aqq - app) / (2.0 * magnitude);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // U restricted to (p, q): [[c, s], [-s·e^{-iφ}, c·e^{-iφ}]].
    let conj_phase = phase.conj();
    let u_pp = C64::new(c, 0.0);
    let u_pq = C64::new(s, 0.0);
    let u_qp = -conj_phase * s;
    let u_qq = conj_phase * c;

    // A ← A·U
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * u_pp + akq * u_qp;
        a[(k, q)] = akp * u_pq + akq * u_qq;
    }
    // A ← U†·A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
        a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(app - t * magnitude, 0.0);
    a[(q, q)] = C64::new(aqq + t * magnitude, 0.0);

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * u_pp + vkq * u_qp;
            v[(k, q)] = vkp * u_pq + vkq * u_qq;
        }
    }
}

/// `max |V†V − I|` for the eigenvector matrix.
pub fn orthonormality_error(spectrum: &Spectrum) -> f64 {
    let v = &spectrum.eigenvectors;
    let gram = v.adjoint().matmul(v).expect("square");
    gram.max_abs_diff(&CMatrix::identity(v.rows()))
}
