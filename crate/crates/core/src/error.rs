use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("variable count {n} is outside the supported range {min}..={max}")]
    VariableCountOutOfRange { n: usize, min: usize, max: usize },

    #[error("variable index {j} is outside 1..={n}")]
    VariableIndexOutOfRange { j: usize, n: usize },

    #[error("point {x} is outside the cube of {n} variables")]
    PointOutOfRange { x: usize, n: usize },

    #[error("invalid hex truth table {0:?}")]
    InvalidHex(String),

    #[error("truth table value does not fit in 2^{n} bits")]
    HexValueTooLarge { n: usize },

    #[error("function is not monotone")]
    NotMonotone,

    #[error("parity case {case} does not apply to n = {n}")]
    ParityMismatch { n: usize, case: &'static str },

    #[error("offset {name} = {value} is outside the window |{name}| <= {bound}")]
    OffsetOutsideWindow {
        name: &'static str,
        value: i64,
        bound: f64,
    },

    #[error("invalid chain configuration: {0}")]
    InvalidConfig(&'static str),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
