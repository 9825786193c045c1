use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable count mismatch: expected at most x{expected}, found x{found}")]
    VariableCount { expected: usize, found: usize },

    #[error("operands live in different algebras (g = {left} vs g = {right})")]
    AlgebraMismatch { left: usize, right: usize },

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("zero generator in ideal presentation")]
    ZeroGenerator,

    #[error("completion degree {bound} is below generator degree {degree}")]
    DegreeBelowGenerators { bound: usize, degree: usize },

    #[error("degree {requested} exceeds the certified bound {bound}")]
    DegreeBound { requested: usize, bound: usize },

    #[error("the ideal is the whole algebra")]
    ImproperIdeal,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not hermitian")]
    NotHermitian,

    #[error("no positive constant c_{degree} found after {attempts} doublings")]
    NoPositiveConstant { degree: usize, attempts: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}
