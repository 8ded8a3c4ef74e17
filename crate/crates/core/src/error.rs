use thiserror::Error;

/// Parameter and parsing errors surfaced by the library.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("step m must be >= 1 (got {0})")]
    StepOutOfRange(i64),
    #[error("step m must be nonzero")]
    ZeroStep,
    #[error("offset r must be >= 0 (got {0})")]
    OffsetOutOfRange(i64),
    #[error("exponent n must be >= 1")]
    ExponentOutOfRange,
    #[error("von Staudt-Clausen denominator is defined for positive even indices (got {0})")]
    VonStaudtIndex(u64),
    #[error("rad(n) requires n >= 1")]
    ZeroRadicand,
    #[error("f(n, j) requires even j with 2 <= j <= n (got n = {n}, j = {j})")]
    ContributionIndex { n: u32, j: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}
