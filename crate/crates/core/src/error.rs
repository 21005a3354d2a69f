use thiserror::Error;

/// Errors raised by the numerical kernel, the entropy functionals and the
/// channel/bound layers built on top of them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("eigenvalue {value:e} is below the clipping tolerance")]
    NegativeEigenvalue { value: f64 },

    #[error("negative exponent requires a strictly positive matrix (smallest eigenvalue {min_eigenvalue:e})")]
    SingularForNegativeQ { min_eigenvalue: f64 },

    #[error("matrix must be strictly positive (smallest eigenvalue {min_eigenvalue:e})")]
    NotStrictlyPositive { min_eigenvalue: f64 },

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("matrix is not doubly stochastic: {0}")]
    NotDoublyStochastic(String),

    #[error("no perfect matching on the remaining support (residual mass {residual:e})")]
    NoPerfectMatching { residual: f64 },

    #[error("argument must be positive, got {0}")]
    NonPositiveArgument(f64),

    #[error("{name} = {value} is out of range")]
    OutOfRange { name: &'static str, value: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parameter outside the admissible domain: {0}")]
    ParameterOutOfDomain(String),

    #[error("negative probability {0}")]
    NegativeProbability(f64),

    #[error("probabilities sum to {0}, expected 1")]
    NotNormalized(f64),

    #[error("trace is {0}, expected 1")]
    NotUnitTrace(f64),

    #[error("Kraus operators are not trace preserving (Frobenius deviation {deviation:e})")]
    NotTracePreserving { deviation: f64 },

    #[error("empty Kraus list")]
    EmptyKrausList,

    #[error("matrix is not positive semidefinite (smallest eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("Bloch vector has norm {0} > 1")]
    OutOfBall(f64),

    #[error("non-finite entry encountered")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, Error>;
