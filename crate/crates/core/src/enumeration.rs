//! Exhaustive census of privileged and closed words.
//!
//! Words are enumerated as base-`q` counters. Since both predicates are
//! invariant under renaming letters, the first symbol can be fixed to `0`
//! and every count multiplied by `q`. The remaining free positions are split
//! on a short prefix into disjoint blocks which workers scan independently;
//! partial rows are added up in block order.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Pow;
use rayon::prelude::*;
use serde::Serialize;

use crate::avoidance::mu;
use crate::error::{Error, Result};
use crate::word::{is_privileged, Classifier, Word};
use crate::DEFAULT_BUDGET;

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub threads: usize,
    /// Maximum number of words scanned.
    pub budget: u128,
    /// Fix the first symbol and multiply by `q`.
    pub symmetry: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            budget: DEFAULT_BUDGET,
            symmetry: true,
        }
    }
}

impl CensusConfig {
    pub fn with_threads(threads: usize) -> Self {
        CensusConfig {
            threads: threads.max(1),
            ..Self::default()
        }
    }
}

/// Counts for one word length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub q: u8,
    /// `B(n)`, privileged words of length `n`.
    #[serde(rename = "B")]
    pub privileged: u64,
    /// `C(n)`, closed words of length `n`.
    #[serde(rename = "C")]
    pub closed: u64,
    /// `priv(n, m)` for every `1 <= m <= n - 1`, zeros included.
    pub priv_by_border: BTreeMap<usize, u64>,
}

impl CountRow {
    fn zero(q: u8, n: usize) -> Self {
        CountRow {
            n,
            q,
            privileged: 0,
            closed: 0,
            priv_by_border: (1..n).map(|m| (m, 0)).collect(),
        }
    }

    /// `priv(n, m)`; zero outside `1..n`.
    pub fn priv_with_border(&self, m: usize) -> u64 {
        self.priv_by_border.get(&m).copied().unwrap_or(0)
    }

    fn add(&mut self, other: &CountRow) {
        self.privileged += other.privileged;
        self.closed += other.closed;
        for (m, c) in &other.priv_by_border {
            *self.priv_by_border.get_mut(m).expect("rows share n") += c;
        }
    }

    fn scale(&mut self, factor: u64) {
        self.privileged *= factor;
        self.closed *= factor;
        self.priv_by_border.values_mut().for_each(|c| *c *= factor);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub q: u8,
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn row(&self, n: usize) -> Option<&CountRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// `B(n)` when `n` is covered.
    pub fn privileged(&self, n: usize) -> Option<u64> {
        self.row(n).map(|r| r.privileged)
    }

    pub fn max_n(&self) -> Option<usize> {
        self.rows.iter().map(|r| r.n).max()
    }
}

fn check_q(q: u8) -> Result<()> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall { q: q as u32, min: 2 });
    }
    Ok(())
}

fn pow_u128(q: u8, e: usize) -> Option<u128> {
    u32::try_from(e).ok().and_then(|e| (q as u128).checked_pow(e))
}

/// Number of words a census of length `n` scans.
pub fn census_work(q: u8, n: usize, symmetry: bool) -> Option<u128> {
    let free = if symmetry { n.saturating_sub(1) } else { n };
    pow_u128(q, free)
}

pub fn census(q: u8, n: usize) -> Result<CountRow> {
    census_with(q, n, &CensusConfig::default())
}

pub fn census_with(q: u8, n: usize, cfg: &CensusConfig) -> Result<CountRow> {
    check_q(q)?;
    if n == 0 {
        return Err(Error::Precondition("census requires n >= 1".into()));
    }
    let estimated = census_work(q, n, cfg.symmetry);
    let total = match estimated {
        Some(w) if w <= cfg.budget => w as u64,
        _ => {
            return Err(Error::BudgetExceeded {
                estimated: estimated.unwrap_or(u128::MAX),
                budget: cfg.budget,
            })
        }
    };
    let free = if cfg.symmetry { n - 1 } else { n };

    // smallest split with at least 4 blocks per worker
    let threads = cfg.threads.max(1);
    let mut split = 0;
    while split < free && (q as u64).pow(split as u32) < 4 * threads as u64 {
        split += 1;
    }
    let blocks = (q as u64).pow(split as u32);
    let block_len = total / blocks;
    let fixed = usize::from(cfg.symmetry);

    let scan = |block: u64| -> CountRow {
        let mut row = CountRow::zero(q, n);
        let mut word = vec![0u8; n];
        let mut b = block;
        for slot in word[fixed..fixed + split].iter_mut().rev() {
            *slot = (b % q as u64) as u8;
            b /= q as u64;
        }
        let mut clf = Classifier::new();
        for _ in 0..block_len {
            let c = clf.classify(&word);
            if c.closed {
                row.closed += 1;
            }
            if c.privileged {
                row.privileged += 1;
                if c.maximal_border > 0 {
                    *row.priv_by_border.get_mut(&c.maximal_border).expect("m < n") += 1;
                }
            }
            // odometer over the unsplit tail
            for slot in word[fixed + split..].iter_mut().rev() {
                *slot += 1;
                if *slot < q {
                    break;
                }
                *slot = 0;
            }
        }
        row
    };

    let partials: Vec<CountRow> = if threads == 1 {
        (0..blocks).map(scan).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
        pool.install(|| (0..blocks).into_par_iter().map(scan).collect())
    };

    let mut row = CountRow::zero(q, n);
    for p in &partials {
        row.add(p);
    }
    if cfg.symmetry {
        row.scale(q as u64);
    }
    Ok(row)
}

pub fn census_table(q: u8, lengths: std::ops::RangeInclusive<usize>, cfg: &CensusConfig) -> Result<CountTable> {
    let rows = lengths
        .map(|n| census_with(q, n, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(CountTable { q, rows })
}

/// `priv(n, m)` for `1 <= m <= n - 1`.
pub fn priv_table(q: u8, n: usize) -> Result<BTreeMap<usize, u64>> {
    Ok(census(q, n)?.priv_by_border)
}

/// Every word of length `n` over `0..q` in lexicographic order.
pub fn all_words(q: u8, n: usize) -> impl Iterator<Item = Word> {
    let total = pow_u128(q, n).expect("q^n fits in u128") as u64;
    (0..total).map(move |mut idx| {
        let mut s = vec![0u8; n];
        for slot in s.iter_mut().rev() {
            *slot = (idx % q as u64) as u8;
            idx /= q as u64;
        }
        Word::new(s, q).expect("symbols below q")
    })
}

/// The set `{ w u w : |u| = n - 2m, w privileged of length m, w not a factor of u }`,
/// sorted.
pub fn construct_t(q: u8, n: usize, m: usize) -> Result<Vec<Word>> {
    construct_t_with(q, n, m, DEFAULT_BUDGET)
}

pub fn construct_t_with(q: u8, n: usize, m: usize, budget: u128) -> Result<Vec<Word>> {
    check_q(q)?;
    if m < 1 || 2 * m > n {
        return Err(Error::Precondition(format!(
            "T(n, m) needs n >= 2m >= 2, got n = {n}, m = {m}"
        )));
    }
    if pow_u128(q, m).is_none_or(|w| w > budget) {
        return Err(Error::BudgetExceeded {
            estimated: pow_u128(q, m).unwrap_or(u128::MAX),
            budget,
        });
    }
    let borders: Vec<Word> = all_words(q, m).filter(|w| is_privileged(w)).collect();
    let estimated = pow_u128(q, n - 2 * m).and_then(|c| c.checked_mul(borders.len() as u128));
    match estimated {
        Some(e) if e <= budget => {}
        _ => {
            return Err(Error::BudgetExceeded {
                estimated: estimated.unwrap_or(u128::MAX),
                budget,
            })
        }
    }
    let middles: Vec<Word> = all_words(q, n - 2 * m).collect();
    let mut out = Vec::new();
    for w in &borders {
        for u in &middles {
            if u.windows(m).any(|f| f == &w[..]) {
                continue;
            }
            let mut s = Vec::with_capacity(n);
            s.extend_from_slice(w);
            s.extend_from_slice(u);
            s.extend_from_slice(w);
            out.push(Word::new(s, q)?);
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundBranch {
    /// `2m > n`: prefix and suffix overlap, bound `q^ceil(n/2)`.
    Overlapping,
    /// `2m <= n`: bound `priv(m) * mu(n - 2m, m)`.
    Split,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursiveBoundCheck {
    pub n: usize,
    pub m: usize,
    pub branch: BoundBranch,
    pub lhs: u64,
    #[serde(serialize_with = "crate::output::serialize_display")]
    pub rhs: BigUint,
    pub ok: bool,
}

/// Checks the recursive bound on `priv(n, m)` for every `1 <= m < n`.
pub fn verify_recursive_bound(q: u8, n: usize) -> Result<Vec<RecursiveBoundCheck>> {
    let table = census_table(q, 1..=n, &CensusConfig::default())?;
    recursive_bound_checks(&table, n)
}

/// Same as [`verify_recursive_bound`] against a precomputed table covering
/// `1..=n`.
pub fn recursive_bound_checks(table: &CountTable, n: usize) -> Result<Vec<RecursiveBoundCheck>> {
    let q = table.q;
    let row = table
        .row(n)
        .ok_or_else(|| Error::Precondition(format!("table does not cover n = {n}")))?;
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for m in 1..n {
        let lhs = row.priv_with_border(m);
        let (branch, rhs) = if 2 * m > n {
            (BoundBranch::Overlapping, BigUint::from(q).pow(n.div_ceil(2)))
        } else {
            let b_m = table
                .privileged(m)
                .ok_or_else(|| Error::Precondition(format!("table does not cover n = {m}")))?;
            (BoundBranch::Split, BigUint::from(b_m) * mu(q, n - 2 * m, m)?.value)
        };
        let ok = BigUint::from(lhs) <= rhs;
        out.push(RecursiveBoundCheck {
            n,
            m,
            branch,
            lhs,
            rhs,
            ok,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::is_closed;

    fn brute_row(q: u8, n: usize) -> CountRow {
        let mut row = CountRow::zero(q, n);
        for w in all_words(q, n) {
            if is_closed(&w) {
                row.closed += 1;
            }
            if is_privileged(&w) {
                row.privileged += 1;
                if let Some(b) = crate::word::maximal_border(&w) {
                    *row.priv_by_border.get_mut(&b.len()).unwrap() += 1;
                }
            }
        }
        row
    }

    #[test]
    fn small_rows() {
        let r1 = census(2, 1).unwrap();
        assert_eq!((r1.privileged, r1.closed), (2, 0));
        assert!(r1.priv_by_border.is_empty());
        let r3 = census(2, 3).unwrap();
        assert_eq!((r3.privileged, r3.closed), (4, 4));
        assert_eq!(priv_table(2, 2).unwrap(), BTreeMap::from([(1, 2)]));
        assert_eq!(priv_table(2, 3).unwrap(), BTreeMap::from([(1, 2), (2, 2)]));
    }

    #[test]
    fn symmetry_reduction_matches_full_enumeration() {
        for q in 2..=3u8 {
            let max_n = if q == 2 { 10 } else { 7 };
            for n in 1..=max_n {
                let full = CensusConfig {
                    symmetry: false,
                    threads: 1,
                    ..CensusConfig::default()
                };
                let reduced = census_with(q, n, &CensusConfig::with_threads(1)).unwrap();
                assert_eq!(reduced, census_with(q, n, &full).unwrap(), "q={q} n={n}");
                assert_eq!(reduced, brute_row(q, n), "q={q} n={n}");
            }
        }
    }

    #[test]
    fn thread_count_does_not_change_rows() {
        for threads in [1, 2, 3, 8] {
            assert_eq!(
                census_with(2, 13, &CensusConfig::with_threads(threads)).unwrap(),
                census_with(2, 13, &CensusConfig::with_threads(1)).unwrap()
            );
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(census(1, 3), Err(Error::AlphabetTooSmall { .. })));
        assert!(matches!(census(2, 0), Err(Error::Precondition(_))));
        let tight = CensusConfig {
            budget: 1 << 10,
            ..CensusConfig::default()
        };
        assert!(census_with(2, 11, &tight).is_ok());
        assert_eq!(
            census_with(2, 12, &tight),
            Err(Error::BudgetExceeded {
                estimated: 1 << 11,
                budget: 1 << 10
            })
        );
        assert!(construct_t(2, 3, 2).is_err());
        assert!(construct_t(2, 3, 0).is_err());
    }

    #[test]
    fn t_examples() {
        let t = construct_t(2, 2, 1).unwrap();
        let letters: Vec<String> = t.iter().map(Word::to_letters).collect();
        assert_eq!(letters, ["aa", "bb"]);
        // "a" + "a" + "a" is excluded since u = "a" contains w
        let t = construct_t(2, 3, 1).unwrap();
        let letters: Vec<String> = t.iter().map(Word::to_letters).collect();
        assert_eq!(letters, ["aba", "bab"]);
    }

    #[test]
    fn recursive_bound_examples() {
        let checks = verify_recursive_bound(2, 8).unwrap();
        let m2 = &checks[1];
        assert_eq!((m2.m, m2.branch), (2, BoundBranch::Split));
        assert_eq!(m2.rhs, BigUint::from(16u32));
        assert!(m2.ok);

        let checks = verify_recursive_bound(2, 6).unwrap();
        let m4 = &checks[3];
        assert_eq!((m4.m, m4.branch), (4, BoundBranch::Overlapping));
        assert_eq!(m4.rhs, BigUint::from(8u32));
        assert!(m4.ok);

        let checks = verify_recursive_bound(2, 2).unwrap();
        assert_eq!(checks.len(), 1);
        assert_eq!((checks[0].lhs, checks[0].rhs.clone()), (2, BigUint::from(2u32)));
    }
}
