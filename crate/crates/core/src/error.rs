//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong while building or evaluating a presentation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parameter count {0} is outside the supported range 1..=32")]
    InvalidParameterCount(usize),

    #[error("no element of {antichain} lies below {grade}")]
    NoGeneratorBelow { antichain: String, grade: String },

    #[error("the empty antichain does not generate a monomial ideal")]
    EmptyIdeal,

    #[error("not a multifiltration: {label} is present at {present} but absent at {absent}")]
    NotAMultifiltration {
        label: String,
        present: String,
        absent: String,
    },

    #[error("tabulated grid has no entry for grade {0}")]
    MissingGrade(String),

    #[error("tabulated grid lists grade {0} twice")]
    DuplicateGrade(String),

    #[error("grade {grade} lies outside the box {bound}")]
    OutsideBox { grade: String, bound: String },

    #[error("label {0} has an empty birth antichain")]
    EmptyBirths(String),

    #[error("simplex {0} has no birth antichain")]
    MissingBirths(String),

    #[error("simplex {0} is listed twice")]
    DuplicateSimplex(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("vertex {0} is listed twice")]
    DuplicateVertex(String),

    #[error("simplex {0} is empty or repeats a vertex")]
    MalformedSimplex(String),

    #[error("simplex with {0} vertices exceeds the dimension cap of 31")]
    SimplexTooLarge(usize),

    #[error("face {face} of simplex {simplex} is not part of the complex")]
    NotClosed { simplex: String, face: String },

    #[error("face index {index} out of range for a simplex with {len} vertices")]
    FaceIndexOutOfRange { index: usize, len: usize },

    #[error("face condition fails: {sigma} is born at {grade} but its face {tau} is not present there")]
    FaceCondition { sigma: String, tau: String, grade: String },

    #[error(
        "entry ({row}, {col}) is nonzero but the column grade {col_grade} does not dominate the row grade {row_grade}"
    )]
    NotHomogeneous {
        row: usize,
        col: usize,
        row_grade: String,
        col_grade: String,
    },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("internal inconsistency: composite g*f is nonzero at ({row}, {col})")]
    NonZeroComposition { row: usize, col: usize },

    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),

    #[error("unrecognized field `{0}` (expected `q` or `gf:<prime>`)")]
    InvalidField(String),

    #[error("unsupported export dialect `{0}`")]
    UnsupportedDialect(String),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("schema violation: {0}")]
    Schema(String),

    #[error("validation failed: {}", summarize(.0))]
    Validation(Vec<crate::simplicial::Violation>),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn summarize(violations: &[crate::simplicial::Violation]) -> String {
    match violations {
        [] => "no violations recorded".to_string(),
        [only] => only.to_string(),
        [first, rest @ ..] => format!("{first} (and {} more)", rest.len()),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
