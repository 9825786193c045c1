use thiserror::Error;

/// Exit codes of the command line tool.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] freestar::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use freestar::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Library(e) => match e {
                E::Parse { .. } | E::VariableCount { .. } | E::AlgebraMismatch { .. } => EXIT_USAGE,
                E::NoPositiveConstant { .. } => EXIT_NEGATIVE,
                _ => EXIT_PRECONDITION,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        use freestar::Error as E;
        match self {
            CliError::Usage(_) => "usage",
            CliError::Library(e) => match e {
                E::Parse { .. } => "parse",
                E::VariableCount { .. } => "variable_count",
                E::AlgebraMismatch { .. } => "algebra_mismatch",
                E::ZeroPolynomial => "zero_polynomial",
                E::ZeroGenerator => "zero_generator",
                E::DegreeBelowGenerators { .. } => "degree_below_generators",
                E::DegreeBound { .. } => "degree_bound",
                E::ImproperIdeal => "improper_ideal",
                E::Precondition(_) => "precondition",
                E::Dimension(_) => "dimension",
                E::NotHermitian => "not_hermitian",
                E::NoPositiveConstant { .. } => "no_positive_constant",
                E::Internal(_) => "internal",
            },
        }
    }
}
