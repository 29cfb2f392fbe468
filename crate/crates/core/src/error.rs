use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    NotSquare { rows: usize, cols: usize },
    ShapeMismatch { expected: (usize, usize), found: (usize, usize) },
    BadEntryCount { expected: usize, found: usize },
    NonFinite,
    NotNormal { residual: f64 },
    NotSymmetric { residual: f64 },
    NotTraceless { trace: f64 },
    EmptySignature,
    OddSignature { m: usize },
    SignatureTooLarge { m: usize, max: usize },
    UnknownExemplar,
    BadParameters { reason: &'static str },
    RefinementIsIdentity,
    NotInvolution { residual: f64 },
    NotSelfAdjoint { residual: f64 },
    NonzeroTrace { trace: f64 },
    WeightsNotNormalized { sum: f64 },
    NotPositive { min_eigenvalue: f64 },
    BadAlgebra { reason: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            Error::ShapeMismatch { expected, found } => write!(
                f,
                "shape mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::BadEntryCount { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Error::NonFinite => write!(f, "matrix has non-finite entries"),
            Error::NotNormal { residual } => {
                write!(f, "matrix is not normal: ‖AA^⋇ − A^⋇A‖ = {residual:e}")
            }
            Error::NotSymmetric { residual } => {
                write!(f, "matrix is not symmetric: ‖R − Rᵀ‖ = {residual:e}")
            }
            Error::NotTraceless { trace } => write!(f, "Weyl block has trace {trace:e}"),
            Error::EmptySignature => write!(f, "signature (0,0) has no generators"),
            Error::OddSignature { m } => write!(f, "r+s = {m} must be even"),
            Error::SignatureTooLarge { m, max } => write!(f, "r+s = {m} exceeds {max}"),
            Error::UnknownExemplar => {
                write!(f, "unknown exemplar (expected s4, t4_flat, s2xs2 or cp2)")
            }
            Error::BadParameters { reason } => write!(f, "bad parameters: {reason}"),
            Error::RefinementIsIdentity => write!(f, "refinement star must differ from 1"),
            Error::NotInvolution { residual } => {
                write!(f, "star is not an involution: ‖*² − 1‖ = {residual:e}")
            }
            Error::NotSelfAdjoint { residual } => {
                write!(f, "operator is not self-adjoint: residual {residual:e}")
            }
            Error::NonzeroTrace { trace } => write!(f, "star has normalized trace {trace:e}, need 0"),
            Error::WeightsNotNormalized { sum } => write!(f, "weights sum to {sum}, need 1"),
            Error::NotPositive { min_eigenvalue } => {
                write!(f, "functional is not positive (eigenvalue {min_eigenvalue:e})")
            }
            Error::BadAlgebra { reason } => write!(f, "bad algebra: {reason}"),
        }
    }
}

impl core::error::Error for Error {}
