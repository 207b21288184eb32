use std::fmt;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Matrix dimensions do not match what the operation requires.
    DimensionMismatch(String),
    /// Input violates the Hermiticity tolerance of the eigensolver.
    NotHermitian { deviation: f64, tol: f64 },
    /// Input fails density-operator validation (trace, Hermiticity or positivity).
    NotDensityOperator(String),
    /// The cyclic Jacobi iteration did not reach its off-diagonal target.
    NoConvergence { sweeps: usize },
    /// A scalar argument is outside its allowed range.
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::NotHermitian { deviation, tol } => {
                write!(
                    f,
                    "matrix is not Hermitian: deviation {deviation:.3e} exceeds tolerance {tol:.3e}"
                )
            }
            Error::NotDensityOperator(msg) => write!(f, "not a density operator: {msg}"),
            Error::NoConvergence { sweeps } => {
                write!(f, "eigensolver did not converge within {sweeps} sweeps")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
