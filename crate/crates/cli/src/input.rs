use std::fs;
use std::path::Path;

use chanent::channels::json::{matrix_from_json, ChannelJson, MatrixJson};
use chanent::channels::{bloch_state, BlochVector, QuantumChannel};
use chanent::entropies::DensityMatrix;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// State file contents: an explicit density matrix or a qubit Bloch vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateJson {
    Matrix(MatrixState),
    Bloch(BlochState),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixState {
    pub dim: usize,
    pub matrix: MatrixJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlochState {
    pub bloch: [f64; 3],
}

/// Where the input state of `analyze` comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum StateSource<'a> {
    CompletelyMixed,
    File(&'a Path),
    Bloch([f64; 3]),
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_channel(path: &Path) -> Result<QuantumChannel, CliError> {
    let parsed: ChannelJson = read_json(path)?;
    parsed
        .into_channel()
        .map_err(|source| CliError::Validation {
            context: format!("{}: invalid channel", path.display()),
            source,
        })
}

fn bloch(v: [f64; 3], dim: usize, context: &str) -> Result<DensityMatrix, CliError> {
    if dim != 2 {
        return Err(CliError::Usage(format!(
            "{context}: a Bloch vector needs a qubit channel, the channel input dimension is {dim}"
        )));
    }
    bloch_state(BlochVector::new(v[0], v[1], v[2])).map_err(|source| CliError::Validation {
        context: context.to_string(),
        source,
    })
}

/// Loads the state and checks it against the channel input dimension.
pub fn load_state(source: &StateSource<'_>, dim: usize) -> Result<DensityMatrix, CliError> {
    match source {
        StateSource::CompletelyMixed => Ok(DensityMatrix::completely_mixed(dim)?),
        StateSource::Bloch(v) => bloch(*v, dim, "--bloch"),
        StateSource::File(path) => {
            let context = format!("{}: invalid state", path.display());
            match read_json::<StateJson>(path)? {
                StateJson::Bloch(b) => bloch(b.bloch, dim, &context),
                StateJson::Matrix(m) => {
                    let invalid = |source| CliError::Validation {
                        context: context.clone(),
                        source,
                    };
                    let matrix = matrix_from_json(&m.matrix).map_err(invalid)?;
                    if (matrix.rows(), matrix.cols()) != (m.dim, m.dim) {
                        return Err(CliError::Usage(format!(
                            "{context}: matrix is {}x{}, declared dim {}",
                            matrix.rows(),
                            matrix.cols(),
                            m.dim
                        )));
                    }
                    if m.dim != dim {
                        return Err(CliError::Usage(format!(
                            "{context}: state dimension {} does not match the channel input dimension {dim}",
                            m.dim
                        )));
                    }
                    DensityMatrix::new(matrix).map_err(invalid)
                }
            }
        }
    }
}
