#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod channels;
pub mod entropies;
pub mod error;
pub mod exchange;
pub mod kernel;
pub mod random;
pub mod suites;

pub use error::{Error, Result};
