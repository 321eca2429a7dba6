use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("symbol {symbol} at position {position} is outside the alphabet of size {q}")]
    SymbolOutOfRange { symbol: u8, position: usize, q: u8 },

    #[error("alphabet size must be at least {min}, got {q}")]
    AlphabetTooSmall { q: u32, min: u32 },

    #[error("malformed word {text:?}: {reason}")]
    MalformedWord { text: String, reason: String },

    #[error("pattern must be non-empty")]
    EmptyPattern,

    #[error("oracle input of length {len} exceeds the cap of {cap}")]
    OracleCapExceeded { len: usize, cap: usize },

    #[error("work budget exceeded: estimated {estimated} units, budget is {budget}")]
    BudgetExceeded { estimated: u128, budget: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("iterated logarithm undefined: level {level} evaluates to {value} (not positive) for n = {n}")]
    Domain { level: u32, value: f64, n: f64 },

    #[error("n = {n} is below the validity threshold N_{j} = {threshold}")]
    BelowThreshold { j: u32, n: f64, threshold: u64 },

    #[error("empty range: {0}")]
    EmptyRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
