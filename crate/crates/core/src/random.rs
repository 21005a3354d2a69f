//! Seeded random ensembles: states, channels, unitaries and doubly stochastic
//! matrices. Every generator takes an explicit 64-bit seed and is bit-exact
//! reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::channels::QuantumChannel;
use crate::entropies::DensityMatrix;
use crate::error::{Error, Result};
use crate::kernel::{CMatrix, DoublyStochastic, C64};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Per-trial seed derived from a master seed (splitmix64 finalizer).
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn complex_gaussian<R: Rng>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Ginibre matrix with i.i.d. standard complex Gaussian entries.
pub fn ginibre<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    let data = (0..rows * cols).map(|_| complex_gaussian(rng)).collect();
    CMatrix::from_vec(rows, cols, data).expect("positive dimensions")
}

/// Orthonormalizes the columns of a tall matrix (modified Gram–Schmidt,
/// applied twice).
pub(crate) fn orthonormalize_columns(m: &CMatrix) -> Result<CMatrix> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows < cols {
        return Err(Error::DimensionMismatch(format!(
            "cannot orthonormalize {cols} columns in dimension {rows}"
        )));
    }
    let mut q: Vec<Vec<C64>> = (0..cols).map(|j| m.column(j)).collect();
    for _pass in 0..2 {
        for j in 0..cols {
            for k in 0..j {
                let (done, rest) = q.split_at_mut(j);
                let overlap: C64 = done[k]
                    .iter()
                    .zip(&rest[0])
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                for (x, y) in rest[0].iter_mut().zip(&done[k]) {
                    *x -= overlap * y;
                }
            }
            let norm = q[j].iter().map(C64::norm_sqr).sum::<f64>().sqrt();
            if norm < 1e-12 {
                return Err(Error::DimensionMismatch("rank-deficient column set".into()));
            }
            for x in q[j].iter_mut() {
                *x /= norm;
            }
        }
    }
    let mut out = CMatrix::zeros(rows, cols);
    for (j, col) in q.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            out[(i, j)] = x;
        }
    }
    Ok(out)
}

/// `G G† / Tr(G G†)` for a seeded Ginibre matrix `G`; full rank almost surely.
pub fn random_density(dim: usize, seed: u64) -> Result<DensityMatrix> {
    if dim == 0 {
        return Err(Error::DimensionMismatch(
            "dimension must be positive".into(),
        ));
    }
    let mut rng = rng_from_seed(seed);
    let g = ginibre(dim, dim, &mut rng);
    let w = g.matmul(&g.adjoint())?;
    let tr = w.trace().re;
    DensityMatrix::new(w.scale_real(1.0 / tr))
}

/// Haar-like random unitary from the orthonormalized columns of a Ginibre matrix.
pub fn random_unitary(dim: usize, seed: u64) -> Result<CMatrix> {
    let mut rng = rng_from_seed(seed);
    orthonormalize_columns(&ginibre(dim, dim, &mut rng))
}

/// Random channel built from a seeded Stinespring isometry: a
/// `(dim_out·kraus_count) × dim_in` Gaussian block column is orthonormalized
/// and cut into `kraus_count` blocks.
pub fn random_channel(
    dim_in: usize,
    dim_out: usize,
    kraus_count: usize,
    seed: u64,
) -> Result<QuantumChannel> {
    if dim_in == 0 || dim_out == 0 || kraus_count == 0 {
        return Err(Error::DimensionMismatch(
            "dimensions and Kraus count must be positive".into(),
        ));
    }
    if dim_out * kraus_count < dim_in {
        return Err(Error::DimensionMismatch(format!(
            "isometry needs dim_out·kraus_count >= dim_in ({dim_out}·{kraus_count} < {dim_in})"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let v = orthonormalize_columns(&ginibre(dim_out * kraus_count, dim_in, &mut rng))?;
    let kraus = (0..kraus_count)
        .map(|j| {
            let mut k = CMatrix::zeros(dim_out, dim_in);
            for a in 0..dim_out {
                for nu in 0..dim_in {
                    k[(a, nu)] = v[(j * dim_out + a, nu)];
                }
            }
            k
        })
        .collect();
    QuantumChannel::new(kraus)
}

/// Strictly positive matrix `G G† + ε I` with ε drawn from `[0.05, 0.55)`.
pub fn random_positive(dim: usize, seed: u64) -> CMatrix {
    let mut rng = rng_from_seed(seed);
    let g = ginibre(dim, dim, &mut rng);
    let eps: f64 = 0.05 + 0.5 * rng.random::<f64>();
    let mut m = g.matmul(&g.adjoint()).expect("square");
    for i in 0..dim {
        m[(i, i)] += C64::new(eps, 0.0);
    }
    m.hermitian_part()
}

/// Doubly stochastic matrix from alternating row/column normalization of a
/// positive random matrix.
pub fn random_doubly_stochastic(dim: usize, seed: u64) -> Result<DoublyStochastic> {
    let mut rng = rng_from_seed(seed);
    let mut m: Vec<Vec<f64>> = (0..dim)
        .map(|_| (0..dim).map(|_| 0.01 + rng.random::<f64>()).collect())
        .collect();
    for _ in 0..10_000 {
        for row in m.iter_mut() {
            let s: f64 = row.iter().sum();
            row.iter_mut().for_each(|x| *x /= s);
        }
        for j in 0..dim {
            let s: f64 = m.iter().map(|r| r[j]).sum();
            m.iter_mut().for_each(|r| r[j] /= s);
        }
        let row_err = m
            .iter()
            .map(|r| (r.iter().sum::<f64>() - 1.0).abs())
            .fold(0.0, f64::max);
        if row_err < 1e-14 {
            break;
        }
    }
    DoublyStochastic::new(m)
}
