use thiserror::Error;

/// Errors raised by the exact arithmetic tower and the expansion engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd(0, 0) is undefined")]
    ZeroGcd,
    #[error("denominator vanishes at q = {q0}")]
    Pole { q0: String },
    #[error("series has nonzero constant term and is not divisible by w")]
    NotDivisibleByW,
    #[error("series inversion failed: zero constant term{}", level_suffix(*.level))]
    Inversion { level: Option<usize> },
    #[error("expansion breaks down at depth {depth}: zero constant term")]
    Breakdown { depth: usize },
    #[error("insufficient order: {what}")]
    InsufficientOrder { what: String },
    #[error("q-exponent {exponent} exceeds the supported bound {bound}")]
    ExponentOutOfRange { exponent: i64, bound: i64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid rational literal {0:?}")]
    Parse(String),
    #[error("evaluation of {object} failed: {reason}")]
    Evaluation { object: String, reason: String },
}

fn level_suffix(level: Option<usize>) -> String {
    match level {
        Some(l) => format!(" at level {l}"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
