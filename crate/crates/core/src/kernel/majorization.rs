//! Majorization and Birkhoff decomposition of doubly stochastic matrices.

use serde::Serialize;

use crate::error::{Error, Result};

/// Absolute tolerance for majorization partial sums and totals.
pub const MAJORIZATION_TOL: f64 = 1e-9;

/// Absolute tolerance on row/column sums of a doubly stochastic matrix.
pub const STOCHASTIC_TOL: f64 = 1e-9;

/// Largest dimension accepted by the exhaustive matching search.
pub const MAX_BIRKHOFF_DIM: usize = 8;

/// True iff `x ≺ y`: every partial sum of `x↓` is at most the corresponding
/// partial sum of `y↓`, and the totals agree.
pub fn check_majorization(x: &[f64], y: &[f64]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(|a, b| b.total_cmp(a));
    ys.sort_by(|a, b| b.total_cmp(a));
    let (mut sx, mut sy) = (0.0, 0.0);
    for (a, b) in xs.iter().zip(&ys) {
        sx += a;
        sy += b;
        if sx > sy + MAJORIZATION_TOL {
            return Ok(false);
        }
    }
    Ok((sx - sy).abs() <= MAJORIZATION_TOL)
}

/// Square matrix with non-negative entries and unit row and column sums.
#[derive(Debug, Clone, PartialEq)]
pub struct DoublyStochastic {
    n: usize,
    entries: Vec<f64>,
}

impl DoublyStochastic {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotDoublyStochastic(
                "matrix must be square and non-empty".into(),
            ));
        }
        let entries: Vec<f64> = rows.into_iter().flatten().collect();
        if let Some(&bad) = entries
            .iter()
            .find(|&&x| !(x >= -STOCHASTIC_TOL) || !x.is_finite())
        {
            return Err(Error::NotDoublyStochastic(format!("entry {bad}")));
        }
        for i in 0..n {
            let row: f64 = entries[i * n..(i + 1) * n].iter().sum();
            let col: f64 = (0..n).map(|k| entries[k * n + i]).sum();
            if (row - 1.0).abs() > STOCHASTIC_TOL {
                return Err(Error::NotDoublyStochastic(format!("row {i} sums to {row}")));
            }
            if (col - 1.0).abs() > STOCHASTIC_TOL {
                return Err(Error::NotDoublyStochastic(format!(
                    "column {i} sums to {col}"
                )));
            }
        }
        let entries = entries.into_iter().map(|x| x.max(0.0)).collect();
        Ok(DoublyStochastic { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// `S·x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }
}

/// A permutation written as `row → column`: `P[i][perm[i]] = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn to_matrix(&self) -> Vec<Vec<f64>> {
        let n = self.0.len();
        let mut m = vec![vec![0.0; n]; n];
        for (i, &j) in self.0.iter().enumerate() {
            m[i][j] = 1.0;
        }
        m
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BirkhoffTerm {
    pub permutation: Permutation,
    pub weight: f64,
}

/// Residual entries below this are treated as exhausted.
const RESIDUAL_ZERO: f64 = 1e-13;

/// Writes `S = Σ_i α_i P_i` by repeatedly peeling off the permutation with
/// the largest bottleneck entry on the residual support.
pub fn birkhoff_decompose(s: &DoublyStochastic) -> Result<Vec<BirkhoffTerm>> {
    let n = s.n;
    if n > MAX_BIRKHOFF_DIM {
        return Err(Error::InvalidParameter(format!(
            "exhaustive Birkhoff extraction supports d <= {MAX_BIRKHOFF_DIM}, got {n}"
        )));
    }
    let mut residual = s.entries.clone();
    let mut terms = Vec::new();
    for _ in 0..=n * n {
        let remaining: f64 = residual[..n].iter().sum();
        if residual.iter().all(|&x| x <= RESIDUAL_ZERO) {
            break;
        }
        let Some((perm, bottleneck)) = best_bottleneck_matching(&residual, n) else {
            return Err(Error::NoPerfectMatching {
                residual: remaining,
            });
        };
        for (i, &j) in perm.iter().enumerate() {
            let e = &mut residual[i * n + j];
            *e -= bottleneck;
            if *e < RESIDUAL_ZERO {
                *e = 0.0;
            }
        }
        terms.push(BirkhoffTerm {
            permutation: Permutation(perm),
            weight: bottleneck,
        });
    }
    if residual.iter().any(|&x| x > RESIDUAL_ZERO) {
        return Err(Error::NoPerfectMatching {
            residual: residual[..n].iter().sum(),
        });
    }
    Ok(terms)
}

/// Permutation maximizing `min_i R[i][σ(i)]` over permutations supported on
/// entries above the residual threshold; `None` if no such permutation exists.
fn best_bottleneck_matching(residual: &[f64], n: usize) -> Option<(Vec<usize>, f64)> {
    struct Search<'a> {
        r: &'a [f64],
        n: usize,
        used: Vec<bool>,
        current: Vec<usize>,
        best: Option<(Vec<usize>, f64)>,
    }

    impl Search<'_> {
        fn go(&mut self, row: usize, bottleneck: f64) {
            let best_value = self.best.as_ref().map_or(RESIDUAL_ZERO, |b| b.1);
            if bottleneck <= best_value {
                return;
            }
            if row == self.n {
                self.best = Some((self.current.clone(), bottleneck));
                return;
            }
            // Visit larger entries first so good bounds are found early.
            let mut cols: Vec<usize> = (0..self.n).filter(|&j| !self.used[j]).collect();
            cols.sort_by(|&a, &b| self.r[row * self.n + b].total_cmp(&self.r[row * self.n + a]));
            for j in cols {
                let v = self.r[row * self.n + j];
                self.used[j] = true;
                self.current.push(j);
                self.go(row + 1, bottleneck.min(v));
                self.current.pop();
                self.used[j] = false;
            }
        }
    }

    let mut search = Search {
        r: residual,
        n,
        used: vec![false; n],
        current: Vec::with_capacity(n),
        best: None,
    };
    search.go(0, f64::INFINITY);
    search.best
}

/// `Σ α_i P_i` as a dense real matrix.
pub fn birkhoff_reconstruct(terms: &[BirkhoffTerm], n: usize) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; n]; n];
    for t in terms {
        for (i, &j) in t.permutation.0.iter().enumerate() {
            m[i][j] += t.weight;
        }
    }
    m
}

/// Largest entrywise gap between `S` and its Birkhoff reconstruction.
pub fn birkhoff_reconstruction_error(s: &DoublyStochastic, terms: &[BirkhoffTerm]) -> f64 {
    let r = birkhoff_reconstruct(terms, s.n);
    let mut err: f64 = 0.0;
    for (i, row) in r.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            err = err.max((v - s.get(i, j)).abs());
        }
    }
    err
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_majorized_by_deterministic() {
        assert!(check_majorization(&[0.5, 0.5], &[1.0, 0.0]).unwrap());
        assert!(!check_majorization(&[1.0, 0.0], &[0.5, 0.5]).unwrap());
    }

    #[test]
    fn majorization_requires_equal_totals() {
        assert!(!check_majorization(&[0.5, 0.4], &[1.0, 0.0]).unwrap());
        assert_eq!(
            check_majorization(&[1.0], &[1.0, 0.0]),
            Err(Error::LengthMismatch(1, 2))
        );
    }

    #[test]
    fn two_by_two_closed_form() {
        let s = DoublyStochastic::new(vec![vec![0.3, 0.7], vec![0.7, 0.3]]).unwrap();
        let terms = birkhoff_decompose(&s).unwrap();
        assert_eq!(terms.len(), 2);
        let swap = terms
            .iter()
            .find(|t| t.permutation.0 == vec![1, 0])
            .unwrap();
        let id = terms
            .iter()
            .find(|t| t.permutation.0 == vec![0, 1])
            .unwrap();
        assert!((swap.weight - 0.7).abs() < 1e-15);
        assert!((id.weight - 0.3).abs() < 1e-15);
    }

    #[test]
    fn permutation_is_its_own_decomposition() {
        let p = Permutation(vec![2, 0, 3, 1]);
        let s = DoublyStochastic::new(p.to_matrix()).unwrap();
        let terms = birkhoff_decompose(&s).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].permutation, p);
        assert_eq!(terms[0].weight, 1.0);
    }

    #[test]
    fn rejects_non_stochastic() {
        assert!(matches!(
            DoublyStochastic::new(vec![vec![0.5, 0.5], vec![0.6, 0.4]]),
            Err(Error::NotDoublyStochastic(_))
        ));
        assert!(matches!(
            DoublyStochastic::new(vec![vec![1.5, -0.5], vec![-0.5, 1.5]]),
            Err(Error::NotDoublyStochastic(_))
        ));
    }

    #[test]
    fn uniform_matrix_decomposes() {
        let n = 4;
        let s = DoublyStochastic::new(vec![vec![0.25; n]; n]).unwrap();
        let terms = birkhoff_decompose(&s).unwrap();
        assert!(birkhoff_reconstruction_error(&s, &terms) < 1e-15);
        assert!(terms.len() <= (n - 1) * (n - 1) + 1);
    }
}
