//! Counting words that avoid a fixed factor.
//!
//! `A_w(n)` is computed by a dynamic program over the states of the
//! pattern-matching automaton of `w`: state `s` means the longest suffix of
//! the input read so far that is a prefix of `w` has length `s`. Reaching
//! state `|w|` means `w` occurred, so that state is dropped from the DP.

use std::collections::HashMap;
use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::word::{border_array, Word};
use crate::DEFAULT_BUDGET;

#[derive(Clone, Debug)]
pub struct AvoidanceAutomaton {
    pattern: Word,
    // delta[s * q + a] for live states s in 0..m; value m is the dead state
    delta: Vec<usize>,
}

impl AvoidanceAutomaton {
    pub fn new(pattern: &Word) -> Result<Self> {
        let m = pattern.len();
        if m == 0 {
            return Err(Error::EmptyPattern);
        }
        let q = pattern.q() as usize;
        let fail = border_array(pattern);
        let mut delta = vec![0; m * q];
        for s in 0..m {
            for a in 0..q {
                delta[s * q + a] = if pattern[s] as usize == a {
                    s + 1
                } else if s == 0 {
                    0
                } else {
                    // fail[s - 1] < s, already filled
                    delta[fail[s - 1] * q + a]
                };
            }
        }
        Ok(AvoidanceAutomaton {
            pattern: pattern.clone(),
            delta,
        })
    }

    pub fn pattern(&self) -> &Word {
        &self.pattern
    }

    /// Index of the absorbing state reached when the pattern completes.
    pub fn dead_state(&self) -> usize {
        self.pattern.len()
    }

    pub fn transition(&self, state: usize, symbol: u8) -> usize {
        if state == self.dead_state() {
            return state;
        }
        self.delta[state * self.pattern.q() as usize + symbol as usize]
    }

    /// Number of length-`n` words that never reach the dead state.
    pub fn count(&self, n: usize) -> BigUint {
        let q = self.pattern.q() as u128;
        let fits = u32::try_from(n)
            .ok()
            .and_then(|n| q.checked_pow(n))
            .is_some();
        if fits {
            BigUint::from(self.run::<u128>(n))
        } else {
            self.run::<BigUint>(n)
        }
    }

    fn run<T>(&self, n: usize) -> T
    where
        T: Clone + Zero + One + for<'a> AddAssign<&'a T>,
    {
        let m = self.pattern.len();
        let q = self.pattern.q() as usize;
        let mut cur = vec![T::zero(); m];
        let mut next = vec![T::zero(); m];
        cur[0] = T::one();
        for _ in 0..n {
            next.iter_mut().for_each(|c| c.set_zero());
            for (s, count) in cur.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                for &t in &self.delta[s * q..(s + 1) * q] {
                    if t < m {
                        next[t] += count;
                    }
                }
            }
            std::mem::swap(&mut cur, &mut next);
        }
        let mut total = T::zero();
        for c in &cur {
            total += c;
        }
        total
    }
}

/// `A_w(n)`: the number of length-`n` words over `w`'s alphabet without `w`
/// as a factor.
pub fn count_avoiding(w: &Word, n: usize) -> Result<BigUint> {
    Ok(AvoidanceAutomaton::new(w)?.count(n))
}

/// Bitmask of the periods of `w`: bit `i` is set iff `w[i..]` is a prefix of
/// `w`. Bit 0 is always set for a non-empty word.
pub fn autocorrelation(w: &[u8]) -> u64 {
    assert!(w.len() <= 64, "autocorrelation mask holds at most 64 periods");
    let m = w.len();
    (0..m)
        .filter(|&i| w[i..] == w[..m - i])
        .fold(0, |mask, i| mask | 1 << i)
}

#[derive(Clone, Debug)]
pub struct MuOptions {
    /// Evaluate one representative per autocorrelation class instead of
    /// every pattern.
    pub group_by_autocorrelation: bool,
    /// Maximum number of patterns swept.
    pub budget: u128,
}

impl Default for MuOptions {
    fn default() -> Self {
        MuOptions {
            group_by_autocorrelation: false,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuResult {
    pub value: BigUint,
    /// Lexicographically least pattern attaining the maximum.
    pub witness: Word,
}

/// `mu(n, m)`: the largest `A_w(n)` over all patterns `w` of length `m`.
pub fn mu(q: u8, n: usize, m: usize) -> Result<MuResult> {
    mu_with(q, n, m, &MuOptions::default())
}

pub fn mu_with(q: u8, n: usize, m: usize, opts: &MuOptions) -> Result<MuResult> {
    if q == 0 {
        return Err(Error::AlphabetTooSmall { q: 0, min: 1 });
    }
    if m == 0 {
        return Err(Error::EmptyPattern);
    }
    let patterns = u32::try_from(m)
        .ok()
        .and_then(|m| (q as u128).checked_pow(m))
        .filter(|&p| p <= opts.budget)
        .ok_or(Error::BudgetExceeded {
            estimated: (q as f64).powf(m as f64).min(u128::MAX as f64) as u128,
            budget: opts.budget,
        })?;
    let patterns = patterns as u64;

    let candidates: Vec<u64> = if opts.group_by_autocorrelation && m <= 64 {
        let mut first_of_class: HashMap<u64, u64> = HashMap::new();
        let mut buf = vec![0u8; m];
        for idx in 0..patterns {
            decode_pattern(idx, q, &mut buf);
            first_of_class.entry(autocorrelation(&buf)).or_insert(idx);
        }
        let mut reps: Vec<u64> = first_of_class.into_values().collect();
        reps.sort_unstable();
        reps
    } else {
        (0..patterns).collect()
    };

    let (value, idx) = candidates
        .into_par_iter()
        .map(|idx| {
            let mut buf = vec![0u8; m];
            decode_pattern(idx, q, &mut buf);
            let w = Word::new(buf, q).expect("decoded symbols are below q");
            let count = AvoidanceAutomaton::new(&w)
                .expect("pattern is non-empty")
                .count(n);
            (count, idx)
        })
        .reduce_with(|a, b| {
            // larger count wins, ties go to the smaller index
            if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                b
            } else {
                a
            }
        })
        .expect("at least one pattern");

    let mut buf = vec![0u8; m];
    decode_pattern(idx, q, &mut buf);
    Ok(MuResult {
        value,
        witness: Word::new(buf, q)?,
    })
}

// Base-q digits, most significant first, so index order is lexicographic.
fn decode_pattern(mut idx: u64, q: u8, buf: &mut [u8]) {
    for slot in buf.iter_mut().rev() {
        *slot = (idx % q as u64) as u8;
        idx /= q as u64;
    }
}

/// Closed-form upper bound `q^n (1 - q^-m)^floor(n/m)` on `mu(n, m)`.
///
/// Panics if `m == 0`.
pub fn mu_upper_bound(q: u32, n: u64, m: u64) -> f64 {
    assert!(m >= 1, "pattern length must be positive");
    let q = q as f64;
    let keep = 1.0 - q.powf(-(m as f64));
    q.powf(n as f64) * keep.powf((n / m) as f64)
}
