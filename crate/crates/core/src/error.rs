//! Error type shared across the library.

use thiserror::Error;

/// Errors reported by ring construction, parsing and ideal arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range [2, 2^31 - 1]")]
    InvalidCharacteristic(u64),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariableName(String),
    #[error("block({0}) needs 1 <= k < {1} (number of variables)")]
    InvalidBlock(usize, usize),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("exponent exceeds the 2^20 cap")]
    ExponentOverflow,
    #[error("arithmetic overflow computing {0}")]
    ArithmeticOverflow(&'static str),
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("colon by the zero ideal")]
    ColonByZero,
    #[error("saturation by the zero polynomial")]
    SaturateByZero,
    #[error("eliminate({0}) needs 0 < k < {1} (number of variables)")]
    InvalidElimination(usize, usize),
    #[error("expected a proper ideal, got the unit ideal")]
    UnitIdeal,
    #[error("ideal is not contained in the given ideal")]
    NotContained,
    #[error("`u` does not lie in the Frobenius adjoint (a^[p] : a)")]
    InvalidU,
    #[error("descending chain violated at step {0}; this indicates a bug")]
    ChainViolation(usize),
    #[error("`d` lies in the defining ideal")]
    DInDefiningIdeal,
    #[error("level bound h = {h} is below the computed stabilization index {hsl}")]
    HBelowHsl { h: usize, hsl: usize },
    #[error("minimal primes are not supplied; cannot decide membership in R\u{00b0}")]
    MinPrimesMissing,
    #[error("minimal prime #{0} does not contain the defining ideal")]
    MinPrimeDoesNotContain(usize),
    #[error("supplied minimal primes #{0} and #{1} are comparable")]
    MinPrimesComparable(usize, usize),
    #[error("witness lies inside a supplied minimal prime; not in R\u{00b0}")]
    NotInRCirc,
    #[error("separator #{0} violates its membership precondition")]
    InvalidSeparator(usize),
    #[error("empty ideal family")]
    EmptyFamily,
    #[error("supplied list has {0} entries, which does not match the ideal family")]
    FamilyShapeMismatch(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
