use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported rank {rank} for family {family}")]
    UnsupportedRank { family: String, rank: usize },

    #[error("unsupported family {0} for this operation")]
    UnsupportedFamily(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("element is not trace-free (coordinate sum {0})")]
    NotTraceFree(String),

    #[error("invalid root subsystem: {0}")]
    InvalidSubsystem(String),

    #[error("inner subsystem is not contained in the outer subsystem")]
    NotIncluded,

    #[error("root {0:?} restricts to zero on the kernel (inner subsystem is not Levi)")]
    ZeroRestriction(Vec<i64>),

    #[error("unclassifiable arrangement block: {0}")]
    Unclassifiable(String),

    #[error("malformed fission tree: {0}")]
    MalformedTree(String),

    #[error("root systems differ: {0} vs {1}")]
    RootSystemMismatch(String, String),

    #[error("p >= 1 required")]
    EmptyCoefficients,

    #[error("braid word is not pure")]
    NotPure,

    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("singular matrix")]
    Singular,

    #[error("invalid Stokes tuple: {0}")]
    InvalidStokes(String),

    #[error("tree and arrangement paths disagree: tree gives {tree}, arrangements give {oracle}")]
    PathDisagreement { tree: String, oracle: String },

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },
}

impl Error {
    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }

    /// Stable snake-case name of the variant, for machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnsupportedRank { .. } => "unsupported_rank",
            Error::UnsupportedFamily(_) => "unsupported_family",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::NotTraceFree(_) => "not_trace_free",
            Error::InvalidSubsystem(_) => "invalid_subsystem",
            Error::NotIncluded => "not_included",
            Error::ZeroRestriction(_) => "zero_restriction",
            Error::Unclassifiable(_) => "unclassifiable",
            Error::MalformedTree(_) => "malformed_tree",
            Error::RootSystemMismatch(..) => "root_system_mismatch",
            Error::EmptyCoefficients => "empty_coefficients",
            Error::NotPure => "not_pure",
            Error::StrandMismatch(..) => "strand_mismatch",
            Error::ArityMismatch { .. } => "arity_mismatch",
            Error::GeneratorOutOfRange { .. } => "generator_out_of_range",
            Error::Singular => "singular",
            Error::InvalidStokes(_) => "invalid_stokes",
            Error::PathDisagreement { .. } => "path_disagreement",
            Error::Parse { .. } => "parse",
        }
    }

    /// Whether the error stems from malformed input rather than a failed check.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::PathDisagreement { .. })
    }
}
