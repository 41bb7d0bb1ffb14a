use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Each variant maps onto a stable machine-readable code (see [`Error::code`])
/// which the CLI prints on stderr and the HTTP service returns in error bodies.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cost criterion `{criterion}` of `{alternative}` must be > 1e-12, got {value}")]
    NonPositiveCostValue {
        alternative: String,
        criterion: String,
        value: f64,
    },
    #[error("benefit criterion `{criterion}` of `{alternative}` must be >= 0, got {value}")]
    NegativeBenefitValue {
        alternative: String,
        criterion: String,
        value: f64,
    },
    #[error("weights sum to {sum}, expected 1 within 1e-6")]
    WeightSumViolation { sum: f64 },
    #[error("weight {index} must be positive and finite, got {value}")]
    NonPositiveWeight { index: usize, value: f64 },
    #[error("{what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("column `{criterion}` has a non-positive sum and cannot be normalized")]
    DegenerateColumn { criterion: String },
    #[error("value at row {row}, column {column} is not finite")]
    NonFiniteValue { row: usize, column: usize },
    #[error("matrix needs at least one alternative and one criterion")]
    EmptyMatrix,
    #[error("{what} name must not be empty")]
    EmptyName { what: &'static str },
    #[error("duplicate {what} name `{name}`")]
    DuplicateName { what: &'static str, name: String },

    #[error("pairwise matrix is not square ({rows} rows, row {row} has {columns} entries)")]
    NotSquare { rows: usize, row: usize, columns: usize },
    #[error("entries ({row},{column}) and ({column},{row}) are not reciprocal")]
    ReciprocityViolation { row: usize, column: usize },
    #[error("entry ({row},{column}) = {value} lies outside the 1/9..9 scale")]
    ScaleViolation { row: usize, column: usize, value: f64 },
    #[error("pairwise matrices have different orders ({expected} vs {found})")]
    OrderMismatch { expected: usize, found: usize },
    #[error("no pairwise matrices supplied")]
    EmptyInput,
    #[error("power iteration stopped after {iterations} iterations with L1 change {delta}")]
    NoConvergence { iterations: usize, delta: f64 },

    #[error("optimal alternative score S0 = {s0} is not positive")]
    DegenerateOptimal { s0: f64 },

    #[error("unknown criterion `{name}`")]
    UnknownCriterion { name: String },
    #[error("grid value {value} outside (0, 1)")]
    GridOutOfRange { value: f64 },
    #[error("baseline top alternative is tied between `{first}` and `{second}`")]
    AmbiguousTop { first: String, second: String },

    #[error("line {line}, column {column}: {message}")]
    Parse { line: u64, column: usize, message: String },
    #[error("line {line}: unknown direction `{token}` (expected max or min)")]
    Direction { line: u64, token: String },
    #[error("line {line}: expected {expected} fields, found {found}")]
    RaggedRow { line: u64, expected: usize, found: usize },
}

impl Error {
    /// Stable identifier used by the CLI (`code: message`) and HTTP error bodies.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonPositiveCostValue { .. } => "NonPositiveCostValue",
            Error::NegativeBenefitValue { .. } => "NegativeBenefitValue",
            Error::WeightSumViolation { .. } => "WeightSumViolation",
            Error::NonPositiveWeight { .. } => "NonPositiveWeight",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::DegenerateColumn { .. } => "DegenerateColumn",
            Error::NonFiniteValue { .. } => "NonFiniteValue",
            Error::EmptyMatrix => "EmptyMatrix",
            Error::EmptyName { .. } => "EmptyName",
            Error::DuplicateName { .. } => "DuplicateName",
            Error::NotSquare { .. } => "NotSquare",
            Error::ReciprocityViolation { .. } => "ReciprocityViolation",
            Error::ScaleViolation { .. } => "ScaleViolation",
            Error::OrderMismatch { .. } => "OrderMismatch",
            Error::EmptyInput => "EmptyInput",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::DegenerateOptimal { .. } => "DegenerateOptimal",
            Error::UnknownCriterion { .. } => "UnknownCriterion",
            Error::GridOutOfRange { .. } => "GridOutOfRange",
            Error::AmbiguousTop { .. } => "AmbiguousTop",
            Error::Parse { .. } => "ParseError",
            Error::Direction { .. } => "DirectionError",
            Error::RaggedRow { .. } => "RaggedRow",
        }
    }

    pub(crate) fn parse(line: u64, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
