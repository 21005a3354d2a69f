//! JSON interchange for channels and complex matrices.
//!
//! Complex numbers are written as `[re, im]` pairs and matrices as lists of
//! rows. A channel file looks like
//!
//! ```json
//! {"dim_in": 2, "dim_out": 2, "kraus": [[[[1,0],[0,0]],[[0,0],[1,0]]]]}
//! ```

use serde::{Deserialize, Serialize};

use super::QuantumChannel;
use crate::error::{Error, Result};
use crate::kernel::{CMatrix, C64};

/// Row-major matrix of `[re, im]` pairs.
pub type MatrixJson = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelJson {
    pub dim_in: usize,
    pub dim_out: usize,
    pub kraus: Vec<MatrixJson>,
}

pub fn matrix_to_json(m: &CMatrix) -> MatrixJson {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

/// Builds a matrix from `[re, im]` rows, requiring every row to have the
/// same length.
pub fn matrix_from_json(rows: &MatrixJson) -> Result<CMatrix> {
    let cols = rows.first().map_or(0, Vec::len);
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!(
            "row {i} has {} entries, expected {cols}",
            r.len()
        )));
    }
    let data = rows
        .iter()
        .flatten()
        .map(|&[re, im]| C64::new(re, im))
        .collect();
    CMatrix::from_vec(rows.len(), cols, data)
}

impl ChannelJson {
    pub fn from_channel(ch: &QuantumChannel) -> Self {
        ChannelJson {
            dim_in: ch.dim_in(),
            dim_out: ch.dim_out(),
            kraus: ch.kraus().iter().map(matrix_to_json).collect(),
        }
    }

    /// Checks the declared dimensions against every operator, then the
    /// trace-preservation condition.
    pub fn into_channel(self) -> Result<QuantumChannel> {
        let kraus = self
            .kraus
            .iter()
            .enumerate()
            .map(|(j, rows)| {
                let k = matrix_from_json(rows)
                    .map_err(|e| Error::DimensionMismatch(format!("Kraus operator {j}: {e}")))?;
                if (k.rows(), k.cols()) != (self.dim_out, self.dim_in) {
                    return Err(Error::DimensionMismatch(format!(
                        "Kraus operator {j} is {}x{}, declared {}x{}",
                        k.rows(),
                        k.cols(),
                        self.dim_out,
                        self.dim_in
                    )));
                }
                Ok(k)
            })
            .collect::<Result<Vec<_>>>()?;
        QuantumChannel::new(kraus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::depolarizing;

    #[test]
    fn round_trip() {
        let ch = depolarizing(0.3).unwrap();
        let text = serde_json::to_string(&ChannelJson::from_channel(&ch)).unwrap();
        let back: ChannelJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_channel().unwrap(), ch);
    }

    #[test]
    fn declared_dimensions_are_checked() {
        let text = r#"{"dim_in": 3, "dim_out": 2, "kraus": [[[[1,0],[0,0]],[[0,0],[1,0]]]]}"#;
        let parsed: ChannelJson = serde_json::from_str(text).unwrap();
        assert!(matches!(
            parsed.into_channel(),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![[1.0, 0.0], [0.0, 0.0]], vec![[1.0, 0.0]]];
        assert!(matrix_from_json(&rows).is_err());
    }

    #[test]
    fn non_cptp_rejected() {
        let text = r#"{"dim_in": 1, "dim_out": 1, "kraus": [[[[0.5,0]]]]}"#;
        let parsed: ChannelJson = serde_json::from_str(text).unwrap();
        assert!(matches!(
            parsed.into_channel(),
            Err(Error::NotTracePreserving { .. })
        ));
    }
}
