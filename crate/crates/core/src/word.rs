//! Words over a small integer alphabet, borders, and the closed/privileged
//! predicates.
//!
//! Two independent routes decide privilege. The chain route walks the
//! maximal-border chain (a maximal border of a privileged word is itself
//! privileged, so only one border per level needs checking) and counts
//! occurrences through a Z-array. The oracle route follows the recursive
//! definition literally, trying every border at every level.

use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default length cap for [`is_privileged_oracle`].
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// A finite word with symbols in `0..q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u8>,
    q: u8,
}

impl Word {
    pub fn new(symbols: Vec<u8>, q: u8) -> Result<Self> {
        if q == 0 {
            return Err(Error::AlphabetTooSmall { q: 0, min: 1 });
        }
        if let Some((position, &symbol)) = symbols.iter().enumerate().find(|(_, &s)| s >= q) {
            return Err(Error::SymbolOutOfRange {
                symbol,
                position,
                q,
            });
        }
        Ok(Word { symbols, q })
    }

    pub fn empty(q: u8) -> Result<Self> {
        Word::new(Vec::new(), q)
    }

    /// Parses letters `a`, `b`, ... as symbols `0`, `1`, ....
    ///
    /// Without an explicit `q` the alphabet is the smallest one covering the
    /// word (at least 1, so the empty word parses with `q = 1`).
    pub fn from_letters(text: &str, q: Option<u8>) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.len());
        for c in text.chars() {
            if !c.is_ascii_lowercase() {
                return Err(Error::MalformedWord {
                    text: text.to_string(),
                    reason: format!("unexpected character {c:?}, expected letters a-z"),
                });
            }
            symbols.push(c as u8 - b'a');
        }
        let q = match q {
            Some(q) => q,
            None => symbols.iter().max().map_or(1, |&s| s + 1),
        };
        Word::new(symbols, q).map_err(|e| Error::MalformedWord {
            text: text.to_string(),
            reason: e.to_string(),
        })
    }

    /// Letter rendering, only meaningful for `q <= 26`.
    pub fn to_letters(&self) -> String {
        self.symbols.iter().map(|&s| (b'a' + s) as char).collect()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word {
            symbols: self.symbols[..len].to_vec(),
            q: self.q,
        }
    }

    /// Applies the alphabet map `s -> perm[s]`. `perm` must be a permutation
    /// of `0..q`.
    pub fn permuted(&self, perm: &[u8]) -> Result<Word> {
        let mut seen = vec![false; self.q as usize];
        if perm.len() != self.q as usize
            || perm
                .iter()
                .any(|&p| (p as usize) >= seen.len() || std::mem::replace(&mut seen[p as usize], true))
        {
            return Err(Error::Precondition(format!(
                "{perm:?} is not a permutation of 0..{}",
                self.q
            )));
        }
        Ok(Word {
            symbols: self.symbols.iter().map(|&s| perm[s as usize]).collect(),
            q: self.q,
        })
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.symbols
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q <= 26 {
            f.write_str(&self.to_letters())
        } else {
            write!(f, "{:?}", self.symbols)
        }
    }
}

/// Entry `i - 1` is the length of the maximal border of the length-`i`
/// prefix of `u` (0 when that prefix is unbordered).
pub fn border_array(u: &[u8]) -> Vec<usize> {
    let mut out = vec![0; u.len()];
    let mut k = 0;
    for i in 1..u.len() {
        while k > 0 && u[i] != u[k] {
            k = out[k - 1];
        }
        if u[i] == u[k] {
            k += 1;
        }
        out[i] = k;
    }
    out
}

/// `z[i]` is the length of the longest common prefix of `u` and `u[i..]`;
/// `z[0] = |u|`.
pub fn z_array(u: &[u8]) -> Vec<usize> {
    let mut z = Vec::new();
    fill_z(u, &mut z);
    z
}

fn fill_z(u: &[u8], z: &mut Vec<usize>) {
    let n = u.len();
    z.clear();
    z.resize(n, 0);
    if n == 0 {
        return;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        let mut k = if i < r { (r - i).min(z[i - l]) } else { 0 };
        while i + k < n && u[k] == u[i + k] {
            k += 1;
        }
        z[i] = k;
        if i + k > r {
            l = i;
            r = i + k;
        }
    }
}

/// Number of (possibly overlapping) occurrences of `w` in `u`.
pub fn count_occurrences(w: &[u8], u: &[u8]) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let fail = border_array(w);
    let mut count = 0;
    let mut k = 0;
    for &c in u {
        while k > 0 && (k == w.len() || w[k] != c) {
            k = fail[k - 1];
        }
        if w[k] == c {
            k += 1;
        }
        if k == w.len() {
            count += 1;
        }
    }
    Ok(count)
}

/// Border array of a word together with its chain of borders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorderChain {
    pub border_array: Vec<usize>,
    /// Border lengths `m_1 > m_2 > ...`, every border of the word exactly once.
    pub chain: Vec<usize>,
    /// `occurrences[k]` counts occurrences of the length-`chain[k]` prefix in
    /// the whole word.
    pub occurrences: Vec<usize>,
}

impl BorderChain {
    pub fn new(u: &[u8]) -> Self {
        let border_array = border_array(u);
        let mut chain = Vec::new();
        let mut len = u.len();
        while len > 0 && border_array[len - 1] > 0 {
            len = border_array[len - 1];
            chain.push(len);
        }
        let z = z_array(u);
        let occurrences = chain
            .iter()
            .map(|&m| (0..=u.len() - m).filter(|&i| z[i] >= m).count())
            .collect();
        BorderChain {
            border_array,
            chain,
            occurrences,
        }
    }

    pub fn maximal_border(&self) -> Option<usize> {
        self.chain.first().copied()
    }
}

/// Result of classifying a single word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub privileged: bool,
    pub closed: bool,
    /// Length of the maximal border, 0 when unbordered.
    pub maximal_border: usize,
}

/// Chain-based classifier with reusable scratch buffers, meant for hot
/// enumeration loops.
#[derive(Debug, Default)]
pub struct Classifier {
    // border[i] = maximal border of the length-i prefix
    border: Vec<usize>,
    z: Vec<usize>,
}

impl Classifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn classify(&mut self, u: &[u8]) -> Classification {
        let n = u.len();
        if n <= 1 {
            return Classification {
                privileged: true,
                closed: false,
                maximal_border: 0,
            };
        }
        self.fill_border(u);
        let m = self.border[n];
        if m == 0 {
            return Classification {
                privileged: false,
                closed: false,
                maximal_border: 0,
            };
        }
        fill_z(u, &mut self.z);

        let closed = self.occurs_exactly_twice(m, n);
        let mut privileged = closed;
        let mut b = m;
        while privileged && b > 1 {
            let len = b;
            b = self.border[len];
            privileged = b > 0 && self.occurs_exactly_twice(b, len);
        }
        Classification {
            privileged,
            closed,
            maximal_border: m,
        }
    }

    fn fill_border(&mut self, u: &[u8]) {
        let n = u.len();
        self.border.clear();
        self.border.resize(n + 1, 0);
        let mut k = 0;
        for i in 1..n {
            while k > 0 && u[i] != u[k] {
                k = self.border[k];
            }
            if u[i] == u[k] {
                k += 1;
            }
            self.border[i + 1] = k;
        }
    }

    /// Whether the length-`m` prefix occurs exactly twice inside the
    /// length-`len` prefix. Stops scanning at the third hit.
    fn occurs_exactly_twice(&self, m: usize, len: usize) -> bool {
        let mut hits = 0;
        for &z in &self.z[..=len - m] {
            if z >= m {
                hits += 1;
                if hits > 2 {
                    return false;
                }
            }
        }
        hits == 2
    }
}

pub fn classify(u: &[u8]) -> Classification {
    Classifier::new().classify(u)
}

/// True iff `|u| >= 2` and the maximal border of `u` occurs exactly twice.
pub fn is_closed(u: &[u8]) -> bool {
    classify(u).closed
}

/// True iff `|u| <= 1`, or the maximal border occurs exactly twice and is
/// itself privileged.
pub fn is_privileged(u: &[u8]) -> bool {
    classify(u).privileged
}

pub fn maximal_border(u: &Word) -> Option<Word> {
    match border_array(u).last() {
        Some(&m) if m > 0 => Some(u.prefix(m)),
        _ => None,
    }
}

// Oracle route: direct comparisons and window counts only, nothing shared
// with the chain route above.

fn naive_borders(u: &[u8]) -> impl Iterator<Item = usize> + '_ {
    (1..u.len()).filter(move |&k| u[..k] == u[u.len() - k..])
}

fn naive_occurrences(w: &[u8], u: &[u8]) -> usize {
    if w.len() > u.len() {
        return 0;
    }
    u.windows(w.len()).filter(|win| *win == w).count()
}

/// Lengths of all borders of `u` in increasing order, by direct comparison.
pub fn all_border_lengths(u: &[u8]) -> Vec<usize> {
    naive_borders(u).collect()
}

/// Closedness tested over every border rather than only the maximal one.
pub fn is_closed_any_border(u: &[u8]) -> bool {
    naive_borders(u).any(|k| naive_occurrences(&u[..k], u) == 2)
}

/// Literal recursive definition of privilege over all borders. Inputs longer
/// than `cap` are rejected since the recursion may branch at every level.
pub fn is_privileged_oracle(u: &[u8], cap: usize) -> Result<bool> {
    if u.len() > cap {
        return Err(Error::OracleCapExceeded { len: u.len(), cap });
    }
    Ok(oracle_rec(u))
}

fn oracle_rec(u: &[u8]) -> bool {
    u.len() <= 1
        || naive_borders(u).any(|k| naive_occurrences(&u[..k], u) == 2 && oracle_rec(&u[..k]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::from_letters(s, None).unwrap()
    }

    #[test]
    fn border_array_examples() {
        assert_eq!(border_array(&w("abaab")), vec![0, 0, 1, 1, 2]);
        assert_eq!(border_array(&w("aaaa")), vec![0, 1, 2, 3]);
        assert_eq!(border_array(&w("abc")), vec![0, 0, 0]);
        assert!(border_array(&[]).is_empty());
    }

    #[test]
    fn occurrence_examples() {
        assert_eq!(count_occurrences(&w("aa"), &w("aaaa")), Ok(3));
        assert_eq!(count_occurrences(&w("aa"), &w("aabaa")), Ok(2));
        assert_eq!(count_occurrences(&w("ab"), &w("abab")), Ok(2));
        assert_eq!(count_occurrences(&[], &w("abab")), Err(Error::EmptyPattern));
        assert_eq!(count_occurrences(&w("abc"), &w("ab")), Ok(0));
    }

    #[test]
    fn closed_examples() {
        assert!(is_closed(&w("abab")));
        assert!(!is_closed(&w("a")));
        assert!(is_closed(&w("aaa")));
        assert!(!is_closed(&[]));
    }

    #[test]
    fn privileged_examples() {
        assert!(is_privileged(&w("a")));
        assert!(!is_privileged(&w("abab")));
        assert!(is_privileged(&w("aabaa")));
        assert!(is_privileged(&[]));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(is_privileged_oracle(&w("aa"), DEFAULT_ORACLE_CAP), Ok(true));
        assert_eq!(is_privileged_oracle(&w("ab"), DEFAULT_ORACLE_CAP), Ok(false));
        assert_eq!(is_privileged_oracle(&w("abab"), DEFAULT_ORACLE_CAP), Ok(false));
        assert_eq!(
            is_privileged_oracle(&[0; 21], DEFAULT_ORACLE_CAP),
            Err(Error::OracleCapExceeded { len: 21, cap: 20 })
        );
    }

    #[test]
    fn maximal_border_examples() {
        let letters = |s: &str| maximal_border(&w(s)).map(|b| b.to_letters());
        assert_eq!(letters("aabaa").as_deref(), Some("aa"));
        assert_eq!(letters("ab"), None);
        assert_eq!(letters("aaaa").as_deref(), Some("aaa"));
        assert_eq!(maximal_border(&w("aabaa")).unwrap().q(), 2);
        assert_eq!(maximal_border(&w("")), None);
    }

    #[test]
    fn chain_of_aabaa() {
        let chain = BorderChain::new(&w("aabaa"));
        assert_eq!(chain.chain, vec![2, 1]);
        assert_eq!(chain.occurrences, vec![2, 4]);
    }

    #[test]
    fn word_validation() {
        assert!(Word::new(vec![0, 2], 2).is_err());
        assert!(Word::new(vec![], 0).is_err());
        assert!(Word::from_letters("aB", None).is_err());
        assert_eq!(Word::from_letters("", None).unwrap().q(), 1);
        assert_eq!(w("abc").q(), 3);
        assert!(Word::from_letters("abc", Some(2)).is_err());
        assert!(w("ab").permuted(&[0, 0]).is_err());
    }

    #[test]
    fn binary_length_14_agrees_with_oracle() {
        let n = 14;
        let mut clf = Classifier::new();
        let mut u = vec![0u8; n];
        for bits in 0u32..1 << n {
            for (i, s) in u.iter_mut().enumerate() {
                *s = ((bits >> (n - 1 - i)) & 1) as u8;
            }
            assert_eq!(
                clf.classify(&u).privileged,
                is_privileged_oracle(&u, DEFAULT_ORACLE_CAP).unwrap(),
                "{u:?}"
            );
        }
    }

    fn word_strategy(max_q: u8, max_len: usize) -> impl Strategy<Value = Word> {
        (1..=max_q).prop_flat_map(move |q| {
            prop::collection::vec(0..q, 0..=max_len).prop_map(move |s| Word::new(s, q).unwrap())
        })
    }

    proptest! {
        #[test]
        fn border_array_matches_direct_scan(u in word_strategy(3, 24)) {
            let fast = border_array(&u);
            for i in 1..=u.len() {
                prop_assert_eq!(fast[i - 1], all_border_lengths(&u[..i]).last().copied().unwrap_or(0));
            }
        }

        #[test]
        fn chain_enumerates_all_borders(u in word_strategy(3, 24)) {
            let mut chain = BorderChain::new(&u).chain;
            chain.reverse();
            prop_assert_eq!(chain, all_border_lengths(&u));
        }

        #[test]
        fn occurrences_match_windows(w in word_strategy(2, 4), u in word_strategy(2, 30)) {
            prop_assume!(!w.is_empty());
            prop_assert_eq!(count_occurrences(&w, &u).unwrap(), naive_occurrences(&w, &u));
        }

        #[test]
        fn z_array_matches_definition(u in word_strategy(3, 24)) {
            let z = z_array(&u);
            for i in 0..u.len() {
                let lcp = u.iter().zip(&u[i..]).take_while(|(a, b)| a == b).count();
                prop_assert_eq!(z[i], lcp);
            }
        }

        #[test]
        fn alphabet_permutation_preserves_classes(
            (u, perm) in word_strategy(5, 20).prop_flat_map(|u| {
                let q = u.q();
                (Just(u), Just((0..q).collect::<Vec<_>>()).prop_shuffle())
            })
        ) {
            let v = u.permuted(&perm).unwrap();
            prop_assert_eq!(is_privileged(&u), is_privileged(&v));
            prop_assert_eq!(is_closed(&u), is_closed(&v));
        }
    }
}
