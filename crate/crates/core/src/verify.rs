//! Verification suites. Each suite sweeps a finite range and turns one
//! inequality or identity into check records (`lhs`, `rhs`, verdict);
//! quantities that can only be estimated (fitted constants, crossovers) go to
//! a separate list of estimates and never count as violations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::avoidance::{count_avoiding, mu, mu_upper_bound, mu_with, MuOptions};
use crate::bounds::{
    count_within, empirical_alpha, empirical_closed_constant, h, hbar, iter_ln, ratio_diagnostics, rho,
    up_membership_check, validity_threshold, BoundParams,
};
use crate::enumeration::{all_words, census_table, census_with, construct_t, recursive_bound_checks, BoundBranch, CensusConfig, CountTable};
use crate::error::{Error, Result};
use crate::word::{
    all_border_lengths, is_closed_any_border, is_privileged_oracle, BorderChain, Classifier, Word,
    DEFAULT_ORACLE_CAP,
};
use crate::DEFAULT_BUDGET;

/// Expected `N_1..N_4`.
pub const THRESHOLD_TABLE: [u64; 4] = [2, 3, 16, 3_814_280];

/// Grid for the limit diagnostics.
pub const LIMIT_GRID: [u64; 4] = [
    1_000_000,
    1_000_000_000,
    1_000_000_000_000,
    1_000_000_000_000_000,
];

/// Relative tolerance of the technical-lemma ratio against `sqrt(kappa ln q)`.
pub const TECHNICAL_TOLERANCE: f64 = 0.25;

/// Relative tolerance for the closed-form identities of the envelope.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Definitions,
    RecursiveBound,
    Avoidance,
    Partition,
    Bounds,
    Limits,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Definitions,
        Suite::RecursiveBound,
        Suite::Avoidance,
        Suite::Partition,
        Suite::Bounds,
        Suite::Limits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Definitions => "definitions",
            Suite::RecursiveBound => "recursive-bound",
            Suite::Avoidance => "avoidance",
            Suite::Partition => "partition",
            Suite::Bounds => "bounds",
            Suite::Limits => "limits",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub q: u8,
    pub max_n: usize,
    pub kappa: f64,
    pub threads: usize,
    pub budget: u128,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            q: 2,
            max_n: 14,
            kappa: 2.0,
            threads: CensusConfig::default().threads,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl VerifyConfig {
    fn census(&self) -> CensusConfig {
        CensusConfig {
            threads: self.threads,
            budget: self.budget,
            symmetry: true,
        }
    }

    fn params(&self) -> Result<BoundParams> {
        BoundParams::new(self.q as u32, self.kappa)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub suite: Suite,
    pub id: String,
    pub params: String,
    pub lhs: f64,
    pub rhs: f64,
    pub verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub suite: Suite,
    pub id: String,
    pub params: String,
    pub value: Option<f64>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checks_run: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub config: VerifyConfig,
    pub records: Vec<CheckRecord>,
    pub estimates: Vec<Estimate>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn violations(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.verdict)
    }

    pub fn is_clean(&self) -> bool {
        self.summary.violations == 0
    }
}

struct Sink {
    suite: Suite,
    records: Vec<CheckRecord>,
    estimates: Vec<Estimate>,
}

impl Sink {
    fn new(suite: Suite) -> Self {
        Sink {
            suite,
            records: Vec::new(),
            estimates: Vec::new(),
        }
    }

    fn check(&mut self, id: &str, params: String, lhs: f64, rhs: f64, verdict: bool) {
        self.records.push(CheckRecord {
            suite: self.suite,
            id: id.to_string(),
            params,
            lhs,
            rhs,
            verdict,
        });
    }

    /// Records a violation count, which must be zero.
    fn none(&mut self, id: &str, params: String, violations: usize) {
        self.check(id, params, violations as f64, 0.0, violations == 0);
    }

    fn estimate(&mut self, id: &str, params: String, value: Option<f64>, note: impl Into<String>) {
        self.estimates.push(Estimate {
            suite: self.suite,
            id: id.to_string(),
            params,
            value,
            note: note.into(),
        });
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<VerifyReport> {
    if cfg.q < 2 {
        return Err(Error::AlphabetTooSmall { q: cfg.q as u32, min: 2 });
    }
    if cfg.max_n < 2 {
        return Err(Error::Precondition(format!("max-n must be at least 2, got {}", cfg.max_n)));
    }
    cfg.params()?;
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    // shared by the census-based suites
    let needs_table = suites
        .iter()
        .any(|s| matches!(s, Suite::RecursiveBound | Suite::Partition | Suite::Bounds));
    let table = if needs_table {
        Some(census_table(cfg.q, 1..=cfg.max_n, &cfg.census())?)
    } else {
        None
    };

    let mut records = Vec::new();
    let mut estimates = Vec::new();
    for s in suites {
        let mut sink = Sink::new(s);
        match s {
            Suite::Definitions => definitions(cfg, &mut sink)?,
            Suite::RecursiveBound => recursive_bound(cfg, table.as_ref().expect("table"), &mut sink)?,
            Suite::Avoidance => avoidance(cfg, &mut sink)?,
            Suite::Partition => partition(cfg, table.as_ref().expect("table"), &mut sink)?,
            Suite::Bounds => bounds(cfg, table.as_ref().expect("table"), &mut sink)?,
            Suite::Limits => limits(cfg, &mut sink)?,
            Suite::All => unreachable!(),
        }
        records.append(&mut sink.records);
        estimates.append(&mut sink.estimates);
    }
    let violations = records.iter().filter(|r| !r.verdict).count();
    Ok(VerifyReport {
        suite,
        config: cfg.clone(),
        summary: Summary {
            checks_run: records.len(),
            violations,
        },
        records,
        estimates,
    })
}

fn guard_words(cfg: &VerifyConfig, max_len: usize) -> Result<()> {
    let total: u128 = (1..=max_len as u32)
        .map(|n| (cfg.q as u128).saturating_pow(n))
        .fold(0u128, u128::saturating_add);
    if total > cfg.budget {
        return Err(Error::BudgetExceeded {
            estimated: total,
            budget: cfg.budget,
        });
    }
    Ok(())
}

/// Closed/privileged cross-checks over every word of length `1..=max_n`.
fn definitions(cfg: &VerifyConfig, sink: &mut Sink) -> Result<()> {
    if cfg.max_n > DEFAULT_ORACLE_CAP {
        return Err(Error::OracleCapExceeded {
            len: cfg.max_n,
            cap: DEFAULT_ORACLE_CAP,
        });
    }
    guard_words(cfg, cfg.max_n)?;
    let mut clf = Classifier::new();
    for n in 1..=cfg.max_n {
        let (mut oracle, mut closed_eq, mut implies, mut lemma, mut chain) = (0, 0, 0, 0, 0);
        for u in all_words(cfg.q, n) {
            let c = clf.classify(&u);
            if c.privileged != is_privileged_oracle(&u, DEFAULT_ORACLE_CAP)? {
                oracle += 1;
            }
            if c.closed != is_closed_any_border(&u) {
                closed_eq += 1;
            }
            if n >= 2 && c.privileged && !c.closed {
                implies += 1;
            }
            if n >= 2 && c.privileged && !clf.classify(&u[..c.maximal_border]).privileged {
                lemma += 1;
            }
            if n <= 12 {
                let mut found = BorderChain::new(&u).chain;
                found.reverse();
                if found != all_border_lengths(&u) {
                    chain += 1;
                }
            }
        }
        let p = format!("q={},n={n}", cfg.q);
        sink.none("oracle-equivalence", p.clone(), oracle);
        sink.none("closed-maximal-vs-any-border", p.clone(), closed_eq);
        if n >= 2 {
            sink.none("privileged-implies-closed", p.clone(), implies);
            sink.none("maximal-border-privileged", p.clone(), lemma);
        }
        if n <= 12 {
            sink.none("border-chain-complete", p, chain);
        }
    }
    Ok(())
}

fn mu_f64(q: u8, n: usize, m: usize) -> Result<(f64, num_bigint::BigUint)> {
    let v = mu(q, n, m)?.value;
    Ok((v.to_f64().unwrap_or(f64::INFINITY), v))
}

fn recursive_bound(cfg: &VerifyConfig, table: &CountTable, sink: &mut Sink) -> Result<()> {
    for n in 2..=cfg.max_n {
        for c in recursive_bound_checks(table, n)? {
            let id = match c.branch {
                BoundBranch::Overlapping => "overlapping-border-bound",
                BoundBranch::Split => "split-border-bound",
            };
            sink.check(
                id,
                format!("q={},n={n},m={}", cfg.q, c.m),
                c.lhs as f64,
                c.rhs.to_f64().unwrap_or(f64::INFINITY),
                c.ok,
            );
        }
    }

    let mut clf = Classifier::new();
    for n in 2..=cfg.max_n.min(12) {
        guard_words(cfg, n)?;
        let mut by_border: Vec<BTreeSet<Word>> = vec![BTreeSet::new(); n / 2 + 1];
        for u in all_words(cfg.q, n) {
            let c = clf.classify(&u);
            if c.privileged && 2 * c.maximal_border <= n {
                by_border[c.maximal_border].insert(u);
            }
        }
        for m in 1..=n / 2 {
            let t: BTreeSet<Word> = construct_t(cfg.q, n, m)?.into_iter().collect();
            let missing = by_border[m].difference(&t).count();
            let p = format!("q={},n={n},m={m}", cfg.q);
            sink.none("privileged-subset-of-t", p.clone(), missing);
            let b_m = table.privileged(m).expect("table covers m");
            let (_, mu_exact) = mu_f64(cfg.q, n - 2 * m, m)?;
            let rhs = num_bigint::BigUint::from(b_m) * mu_exact;
            let ok = num_bigint::BigUint::from(t.len()) <= rhs;
            sink.check("t-size-bound", p, t.len() as f64, rhs.to_f64().unwrap_or(f64::INFINITY), ok);
        }
    }
    Ok(())
}

fn avoidance(cfg: &VerifyConfig, sink: &mut Sink) -> Result<()> {
    let q = cfg.q;
    let dp_max_n = cfg.max_n.min(12);
    guard_words(cfg, dp_max_n)?;
    for m in 1..=4usize {
        let patterns: Vec<Word> = all_words(q, m).collect();
        for n in 0..=dp_max_n {
            let words: Vec<Word> = all_words(q, n).collect();
            let mismatches = patterns
                .iter()
                .filter(|w| {
                    let brute = words.iter().filter(|u| !u.windows(m).any(|f| f == &w[..])).count();
                    count_avoiding(w, n).expect("non-empty").to_usize() != Some(brute)
                })
                .count();
            sink.none("dp-matches-exhaustive", format!("q={q},m={m},n={n}"), mismatches);
        }
        let mut growth = 0;
        for w in &patterns {
            for n in 0..cfg.max_n {
                let a = count_avoiding(w, n)?;
                let b = count_avoiding(w, n + 1)?;
                if b > &a * q as u32 || b < a {
                    growth += 1;
                }
            }
        }
        sink.none("count-growth-between-1-and-q", format!("q={q},m={m},n<{}", cfg.max_n), growth);
    }

    for m in 1..=6usize {
        for n in 1..=cfg.max_n {
            let (value, _) = mu_f64(q, n, m)?;
            let bound = mu_upper_bound(q as u32, n as u64, m as u64);
            sink.check(
                "mu-closed-form-bound",
                format!("q={q},n={n},m={m}"),
                value,
                bound,
                count_within(value, bound),
            );
        }
    }

    for n in 1..=cfg.max_n {
        for m in 1..8usize {
            let (_, a) = mu_f64(q, n, m)?;
            let (_, b) = mu_f64(q, n, m + 1)?;
            sink.check(
                "mu-non-decreasing-in-m",
                format!("q={q},n={n},m={m}"),
                a.to_f64().unwrap_or(f64::INFINITY),
                b.to_f64().unwrap_or(f64::INFINITY),
                a <= b,
            );
        }
    }

    let grouped = MuOptions {
        group_by_autocorrelation: true,
        budget: cfg.budget,
    };
    for m in 1..=5usize {
        let mismatches = (0..=cfg.max_n)
            .filter(|&n| mu(q, n, m).ok() != mu_with(q, n, m, &grouped).ok())
            .count();
        sink.none("autocorrelation-grouping", format!("q={q},m={m},n<={}", cfg.max_n), mismatches);
    }
    Ok(())
}

fn partition(cfg: &VerifyConfig, table: &CountTable, sink: &mut Sink) -> Result<()> {
    for row in &table.rows {
        let p = format!("q={},n={}", cfg.q, row.n);
        let qn = (cfg.q as f64).powi(row.n as i32);
        if row.n >= 2 {
            let sum: u64 = row.priv_by_border.values().sum();
            sink.check("border-partition-sum", p.clone(), sum as f64, row.privileged as f64, sum == row.privileged);
            sink.check(
                "privileged-at-most-closed",
                p.clone(),
                row.privileged as f64,
                row.closed as f64,
                row.privileged <= row.closed,
            );
        }
        let max_count = row.privileged.max(row.closed) as f64;
        sink.check("counts-at-most-q-pow-n", p, max_count, qn, max_count <= qn);
    }
    let full = CensusConfig {
        symmetry: false,
        ..cfg.census()
    };
    for n in 1..=cfg.max_n.min(10) {
        let reduced = table.row(n).expect("table covers n");
        let mismatched = census_with(cfg.q, n, &full)? != *reduced;
        sink.none("symmetry-reduction", format!("q={},n={n}", cfg.q), mismatched as usize);
    }
    let single = CensusConfig {
        threads: 1,
        ..cfg.census()
    };
    let n = cfg.max_n;
    let mismatched = census_with(cfg.q, n, &single)? != *table.row(n).expect("table covers max_n");
    sink.none(
        "parallel-equals-serial",
        format!("q={},n={n},threads={}", cfg.q, cfg.threads),
        mismatched as usize,
    );
    Ok(())
}

fn relative_error(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Sample points for the closed-form identities.
pub const IDENTITY_SAMPLES: [f64; 10] = [3.0, 10.0, 20.0, 50.0, 100.0, 1e3, 1e4, 1e6, 1e9, 1e12];

fn bounds(cfg: &VerifyConfig, table: &CountTable, sink: &mut Sink) -> Result<()> {
    let params = cfg.params()?;
    let q = cfg.q as f64;

    for (idx, &expected) in THRESHOLD_TABLE.iter().enumerate() {
        let j = idx as u32 + 1;
        let n_j = validity_threshold(j).unwrap_or(u64::MAX);
        let p = format!("j={j}");
        sink.check("threshold-value", p.clone(), n_j as f64, expected as f64, n_j == expected);
        let at = iter_ln(j, expected as f64)?;
        sink.check("threshold-positive-at-n-j", p.clone(), at, 0.0, at > 0.0);
        let below = iter_ln(j, (expected - 1) as f64).unwrap_or(f64::NEG_INFINITY);
        sink.check("threshold-non-positive-below", p, below, 0.0, below <= 0.0);
    }

    for n in IDENTITY_SAMPLES {
        let p = format!("n={n}");
        let lhs = rho(1, n)?;
        let rhs = n.ln() / n.sqrt();
        sink.check("rho1-closed-form", p.clone(), lhs, rhs, relative_error(lhs, rhs) <= IDENTITY_TOLERANCE);
        let lhs = rho(2, n)?;
        let rhs = n.ln().sqrt() * n.ln().ln() / n.sqrt();
        sink.check("rho2-closed-form", p, lhs, rhs, relative_error(lhs, rhs) <= IDENTITY_TOLERANCE);
    }

    let up_end = (cfg.max_n as u64).max(30);
    for j in 1..=2u32 {
        let fit = empirical_alpha(j, table, &params)?;
        sink.estimate(
            "alpha",
            format!("j={j},q={},n<={}", cfg.q, cfg.max_n),
            Some(fit.alpha),
            format!("attained at n={}", fit.argmax_n),
        );
        for &(n, slack) in &fit.slack {
            let b = table.privileged(n).expect("row") as f64;
            let bound = fit.alpha * rho(j, n as f64)? * q.powi(n as i32);
            sink.check("privileged-below-alpha-rho", format!("j={j},n={n},slack={slack:.6}"), b, bound, count_within(b, bound));
        }

        let n_j = validity_threshold(j).expect("small j");
        let report = up_membership_check(|n| rho(j, n as f64), fit.alpha, n_j..=up_end, &params, Some(table))?;
        for (id, from) in [
            ("up-non-increasing-from", report.non_increasing_from),
            ("up-scaled-non-decreasing-from", report.scaled_non_decreasing_from),
        ] {
            sink.estimate(
                id,
                format!("j={j},n in [{n_j},{up_end}]"),
                from.map(|n| n as f64),
                "smallest n from which the property holds through the end of the range",
            );
        }
        for row in &report.rows {
            let p = format!("j={j},n={}", row.n);
            if let Some(ok) = row.dominates_count {
                sink.check("up-dominates-count", p.clone(), ok as u8 as f64, 1.0, ok);
            }
            if report.non_increasing_from.is_some_and(|from| row.n >= from) {
                sink.check("up-non-increasing", p.clone(), rho(j, (row.n + 1) as f64)?, rho(j, row.n as f64)?, row.non_increasing);
            }
            if report.scaled_non_decreasing_from.is_some_and(|from| row.n >= from) {
                sink.check(
                    "up-scaled-non-decreasing",
                    p,
                    rho(j, row.n as f64)?,
                    q * rho(j, (row.n + 1) as f64)?,
                    row.scaled_non_decreasing,
                );
            }
        }
        // the tail found on the short range keeps holding much further out
        if let Some(from) = report.non_increasing_from {
            let far = up_membership_check(|n| rho(j, n as f64), fit.alpha, from..=10_000, &params, None)?;
            let broken = far.rows.iter().filter(|r| !r.non_increasing).count();
            sink.none("up-non-increasing-extends", format!("j={j},n in [{from},10000]"), broken);
        }
    }

    let (c_hat, at) = empirical_closed_constant(table, &params)?;
    sink.estimate(
        "closed-word-constant",
        format!("q={},n in [2,{}]", cfg.q, cfg.max_n),
        Some(c_hat),
        format!("sup of C(n) sqrt(n) / (ln n q^n), attained at n={at}"),
    );

    // long maximal borders, hbar(n) <= m <= ceil(n/2), with the explicit
    // constant q / (1 - 1/q)
    let c_long = q / (1.0 - 1.0 / q);
    let mut short_sup: Option<(f64, usize)> = None;
    let alpha1 = empirical_alpha(1, table, &params)?.alpha;
    for row in table.rows.iter().filter(|r| r.n >= 2) {
        let n = row.n;
        let nf = n as f64;
        let hb = hbar(n as u64, &params)? as usize;
        let long: u64 = (hb..=n.div_ceil(2)).map(|m| row.priv_with_border(m)).sum();
        let bound = c_long * q.powi(n as i32) * nf.ln().powf(1.0 / cfg.kappa) * nf.powf(-1.0 / cfg.kappa);
        sink.check("long-border-sum", format!("n={n},hbar={hb}"), long as f64, bound, count_within(long as f64, bound));

        let short: u64 = (1..hb).map(|m| row.priv_with_border(m)).sum();
        if hb >= 2 {
            let shape = nf.ln() / cfg.kappa * q.powi(n as i32) * nf.powf(1.0 / cfg.kappa - 1.0) * alpha1 * rho(1, hb as f64)?;
            let ratio = short as f64 / shape;
            if short_sup.is_none_or(|(best, _)| ratio > best) {
                short_sup = Some((ratio, n));
            }
        }
    }
    sink.estimate(
        "short-border-constant",
        format!("q={},kappa={},n<={}", cfg.q, cfg.kappa, cfg.max_n),
        short_sup.map(|(v, _)| v),
        match short_sup {
            Some((_, n)) => format!("sup ratio attained at n={n}"),
            None => "no n in range has hbar(n) >= 2, the short-border sum is empty".to_string(),
        },
    );

    let mut n = 16.0f64;
    let mut broken = 0;
    while n <= 1e6 {
        let k = n.round() as u64;
        if hbar(k, &params)? > h(k, &params)? {
            broken += 1;
        }
        n *= 1.05;
    }
    sink.none("hbar-at-most-h", format!("q={},n in [16,1e6] geometric", cfg.q), broken);
    Ok(())
}

fn limits(cfg: &VerifyConfig, sink: &mut Sink) -> Result<()> {
    let params = cfg.params()?;
    for j in 1..=3u32 {
        let points = ratio_diagnostics(j, &LIMIT_GRID, &params)?;
        for pt in &points {
            sink.estimate(
                "limit-ratio",
                format!("j={j},n={},hbar={}", pt.n, pt.hbar),
                Some(pt.y),
                if pt.within_threshold { "" } else { "below validity threshold" },
            );
        }
        for pair in points.windows(2) {
            let (a, b) = ((pair[0].y - 1.0).abs(), (pair[1].y - 1.0).abs());
            sink.check("limit-ratio-approaches-one", format!("j={j},n={}", pair[1].n), b, a, b < a);
        }
    }
    let target = (cfg.kappa * (cfg.q as f64).ln()).sqrt();
    let last = *LIMIT_GRID.last().expect("grid");
    let pt = &ratio_diagnostics(1, &[last], &params)?[0];
    let err = relative_error(pt.technical, target);
    sink.estimate("technical-ratio", format!("n={last}"), Some(pt.technical), format!("target {target}"));
    sink.check("technical-ratio-near-limit", format!("n={last}"), err, TECHNICAL_TOLERANCE, err <= TECHNICAL_TOLERANCE);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_n: 8,
            threads: 2,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn each_suite_is_clean_at_small_scale() {
        for s in Suite::EACH {
            let r = run_suite(s, &small()).unwrap();
            assert!(r.summary.checks_run > 0, "{s}");
            let bad: Vec<_> = r.violations().collect();
            assert!(bad.is_empty(), "{s}: {bad:?}");
            assert_eq!(r.summary.violations, 0);
        }
    }

    #[test]
    fn summary_counts_false_verdicts() {
        let mut r = run_suite(Suite::Limits, &small()).unwrap();
        r.records[0].verdict = false;
        assert_eq!(r.violations().count(), 1);
    }

    #[test]
    fn rejects_bad_config() {
        let cfg = VerifyConfig { q: 1, ..small() };
        assert!(run_suite(Suite::Definitions, &cfg).is_err());
        let cfg = VerifyConfig { kappa: 0.5, ..small() };
        assert!(run_suite(Suite::Limits, &cfg).is_err());
        let cfg = VerifyConfig { max_n: 21, ..small() };
        assert!(matches!(run_suite(Suite::Definitions, &cfg), Err(Error::OracleCapExceeded { .. })));
        let cfg = VerifyConfig { budget: 100, ..small() };
        assert!(matches!(run_suite(Suite::Partition, &cfg), Err(Error::BudgetExceeded { .. })));
    }
}
