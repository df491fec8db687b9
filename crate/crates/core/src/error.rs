use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("Frobenius exponent {s} outside 1..={e}")]
    InvalidExponent { s: u32, e: u32 },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("the zero code is not accepted here")]
    ZeroCode,
    #[error("enumeration of {size} words exceeds budget {budget}")]
    TooLarge { size: u128, budget: u128 },
    #[error("incompatible operands: {0}")]
    Incompatible(String),
    #[error("rank formulas disagree ({context}: {left} vs {right})")]
    FormulaMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },
    #[error("defining matrix does not have full row rank")]
    DegenerateDefiningMatrix,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not monomial")]
    NotMonomial,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("field too small: q = {q}, need q > 2")]
    FieldTooSmall { q: u32 },
    #[error("target {h} outside admissible range {lo}..={hi}")]
    TargetOutOfRange { h: usize, lo: usize, hi: usize },
    #[error("no witness found after {trials} trials")]
    SearchExhausted { trials: usize },
    #[error("code is not MDS (d = {d}, n - k + 1 = {singleton})")]
    NotMds { d: usize, singleton: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
