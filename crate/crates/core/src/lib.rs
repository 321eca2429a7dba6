//! Privileged and closed words: detection, exhaustive census, factor-avoidance
//! counting, and numeric checks of the iterated-logarithm upper bounds on the
//! number of privileged words.
//!
//! Symbols are small integers `0..q`. Letters `a`, `b`, ... are only used at
//! the text boundary (see [`Word::from_letters`]).

pub mod avoidance;
pub mod bounds;
pub mod enumeration;
pub mod error;
pub mod output;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use word::Word;

/// Default work budget: words scanned by a census, patterns swept by `mu`.
pub const DEFAULT_BUDGET: u128 = 1 << 34;
