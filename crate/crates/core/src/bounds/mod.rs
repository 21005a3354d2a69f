//! Numerical certificates for entropic inequalities on channels.

mod concavity;
mod fano;
mod map;
mod minkowski;
mod output;

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::entropies::{EntropyParams, QParam};
use crate::error::{Error, Result};

pub use concavity::{certify_concavity_channel, certify_concavity_state, in_concavity_domain};
pub use fano::{
    certify_lindblad_extension, certify_prop3, fano_base, fano_bound_general, fano_bound_simple,
    in_simple_fano_domain,
};
pub use map::{
    certify_prop4, certify_subsystem_bound, compare_map_bounds, extension_map_bound, map_bound,
    MapBoundComparison,
};
pub use minkowski::{certify_minkowski, certify_subadditivity, ky_fan_premise};
pub use output::{
    certify_depolarizing_f, certify_prop1, depolarizing_f, omega_extension,
    q_average_output_entropy, OmegaExtension,
};

/// Absolute slack tolerance for non-strict inequalities.
pub const CERT_TOL: f64 = 1e-9;
/// Required margin for strict inequalities.
pub const STRICT_MARGIN: f64 = 1e-12;

/// Where the inputs of a certificate came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Seed {
    Constructed,
    Value(u64),
}

impl Serialize for Seed {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Seed::Constructed => serializer.serialize_str("constructed"),
            Seed::Value(v) => serializer.serialize_u64(*v),
        }
    }
}

/// One evaluated inequality `lhs ≤ rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityCertificate {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
    pub params: BTreeMap<String, f64>,
    pub descriptor: String,
    pub seed: Seed,
    pub tolerance: f64,
}

impl InequalityCertificate {
    /// `lhs ≤ rhs` up to `tolerance`. A negative tolerance demands a strict
    /// margin.
    pub fn new(name: &str, lhs: f64, rhs: f64, tolerance: f64) -> Result<Self> {
        if !lhs.is_finite() || !rhs.is_finite() {
            return Err(Error::NonFinite);
        }
        let slack = rhs - lhs;
        Ok(InequalityCertificate {
            name: name.to_owned(),
            lhs,
            rhs,
            slack,
            holds: slack >= -tolerance,
            params: BTreeMap::new(),
            descriptor: String::new(),
            seed: Seed::Constructed,
            tolerance,
        })
    }

    /// `lhs < rhs` with a margin of at least [`STRICT_MARGIN`].
    pub fn strict(name: &str, lhs: f64, rhs: f64) -> Result<Self> {
        Self::new(name, lhs, rhs, -STRICT_MARGIN)
    }

    /// `a = b` up to `tolerance`, recorded as `|a − b| ≤ 0`.
    pub fn equality(name: &str, a: f64, b: f64, tolerance: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonFinite);
        }
        Self::new(name, (a - b).abs(), 0.0, tolerance)
    }

    pub fn with_param(mut self, key: &str, value: f64) -> Self {
        self.params.insert(key.to_owned(), value);
        self
    }

    pub fn with_entropy_params(self, params: EntropyParams) -> Self {
        self.with_param("q", params.q.value())
            .with_param("s", params.s.value())
    }

    pub fn with_descriptor(mut self, descriptor: impl Into<String>) -> Self {
        self.descriptor = descriptor.into();
        self
    }

    pub fn with_seed(mut self, seed: Seed) -> Self {
        self.seed = seed;
        self
    }
}

/// Rejects `q ≤ 0` or a non-finite `q` for operations stated for `q > 0`.
pub(crate) fn q_of(q: f64) -> Result<QParam> {
    QParam::new(q).map_err(|_| Error::ParameterOutOfDomain(format!("q must be positive, got {q}")))
}
