//! Dense complex linear algebra and majorization primitives.

pub mod eig;
pub mod majorization;
pub mod matrix;
pub mod spectral;

pub use eig::{hermitian_eig, hermitian_eigenvalues, Spectrum};
pub use majorization::{
    birkhoff_decompose, birkhoff_reconstruct, birkhoff_reconstruction_error, check_majorization,
    BirkhoffTerm, DoublyStochastic, Permutation,
};
pub use matrix::{partial_trace, partial_trace_factor, tensor, CMatrix, Subsystem, C64};
pub use spectral::{clipped_eigenvalues, g_functional, schatten_q, trace_power};
