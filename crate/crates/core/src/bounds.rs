//! The iterated-logarithm bound family and the threshold functions used to
//! split short from long borders.
//!
//! `ln^[j]` is the `j`-fold natural logarithm. The envelope functions are
//!
//! ```text
//! sigma_1(n) = sqrt(ln n)
//! sigma_2(n) = ln ln n
//! sigma_j(n) = ln^[j](n) * prod_{i=2}^{j-1} sqrt(ln^[i](n))      (j >= 3)
//! rho_j(n)   = sigma_j(n) * sqrt(ln n) / sqrt(n)
//! ```
//!
//! and `rho_j(n) * q^n` is the upper-bound shape for the number of
//! privileged words of length `n`. Everything here is evaluated in `f64`.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::enumeration::CountTable;
use crate::error::{Error, Result};

/// Relative margin by which a floating-point bound is rounded up before it
/// is compared with an exact count.
pub const BOUND_MARGIN: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundParams {
    pub q: u32,
    pub kappa: f64,
}

impl Default for BoundParams {
    fn default() -> Self {
        BoundParams { q: 2, kappa: 2.0 }
    }
}

impl BoundParams {
    pub fn new(q: u32, kappa: f64) -> Result<Self> {
        if q < 2 {
            return Err(Error::AlphabetTooSmall { q, min: 2 });
        }
        if !(kappa > 1.0) || !kappa.is_finite() {
            return Err(Error::Precondition(format!("kappa must be a finite real > 1, got {kappa}")));
        }
        Ok(BoundParams { q, kappa })
    }

    /// `1 / ln q`.
    pub fn beta(&self) -> f64 {
        1.0 / (self.q as f64).ln()
    }
}

/// `count <= bound`, with the bound rounded up by [`BOUND_MARGIN`].
pub fn count_within(count: f64, bound: f64) -> bool {
    count <= bound * (1.0 + BOUND_MARGIN)
}

/// `ln^[j](n)`. Fails when some intermediate `ln^[k](n)`, `k < j`, is not
/// positive; the returned value itself may be negative.
pub fn iter_ln(j: u32, n: f64) -> Result<f64> {
    let mut x = n;
    for level in 0..j {
        if !(x > 0.0) {
            return Err(Error::Domain { level, value: x, n });
        }
        x = x.ln();
    }
    Ok(x)
}

/// `N_j`, the smallest integer `n` with `ln^[j](n) > 0`, or `None` when it
/// does not fit in a `u64` (from `j = 5` on).
pub fn validity_threshold(j: u32) -> Option<u64> {
    let holds = |n: u64| iter_ln(j, n as f64).is_ok_and(|v| v > 0.0);
    let mut hi = 1u64;
    while !holds(hi) {
        hi = hi.checked_mul(2).filter(|&h| h < 1 << 62)?;
    }
    let mut lo = hi / 2;
    // holds(hi) and (lo == 0 or !holds(lo))
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if holds(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ValidityThreshold {
    pub j: u32,
    pub n_j: u64,
}

/// `N_1 ..= N_max_j`, stopping early at the first threshold beyond `u64`.
pub fn threshold_table(max_j: u32) -> Vec<ValidityThreshold> {
    (1..=max_j)
        .map_while(|j| validity_threshold(j).map(|n_j| ValidityThreshold { j, n_j }))
        .collect()
}

fn check_j(j: u32) -> Result<()> {
    if j == 0 {
        return Err(Error::Precondition("the bound family starts at j = 1".into()));
    }
    Ok(())
}

fn check_threshold(j: u32, n: f64) -> Result<()> {
    if !iter_ln(j, n).is_ok_and(|v| v > 0.0) {
        return Err(Error::BelowThreshold {
            j,
            n,
            threshold: validity_threshold(j).unwrap_or(u64::MAX),
        });
    }
    Ok(())
}

/// The formula for `sigma_j` evaluated wherever its logarithms are defined,
/// including below `N_j` where the value may be zero or negative.
pub fn sigma_unchecked(j: u32, n: f64) -> Result<f64> {
    check_j(j)?;
    match j {
        1 => {
            let l = iter_ln(1, n)?;
            if l < 0.0 {
                return Err(Error::Domain { level: 1, value: l, n });
            }
            Ok(l.sqrt())
        }
        2 => iter_ln(2, n),
        _ => {
            let mut value = iter_ln(j, n)?;
            for i in 2..j {
                value *= iter_ln(i, n)?.sqrt();
            }
            Ok(value)
        }
    }
}

/// `sigma_j(n)` given `ln n` instead of `n`, for arguments far beyond the
/// `f64` range. Same domain rules as [`sigma_unchecked`].
pub fn sigma_from_ln(j: u32, ln_n: f64) -> Result<f64> {
    check_j(j)?;
    // ln^[i](n) = ln^[i-1](ln n)
    let lvl = |i: u32| iter_ln(i - 1, ln_n);
    match j {
        1 => {
            if ln_n < 0.0 {
                return Err(Error::Domain { level: 1, value: ln_n, n: ln_n.exp() });
            }
            Ok(ln_n.sqrt())
        }
        2 => lvl(2),
        _ => {
            let mut value = lvl(j)?;
            for i in 2..j {
                value *= lvl(i)?.sqrt();
            }
            Ok(value)
        }
    }
}

/// `sigma_j(n)`, defined for `n >= N_j`.
pub fn sigma(j: u32, n: f64) -> Result<f64> {
    check_j(j)?;
    check_threshold(j, n)?;
    sigma_unchecked(j, n)
}

/// `rho_j(n) = sigma_j(n) * sqrt(ln n / n)`, defined for `n >= N_j`.
pub fn rho(j: u32, n: f64) -> Result<f64> {
    Ok(sigma(j, n)? * (n.ln() / n).sqrt())
}

/// `log10(rho_j(n) * q^n)`; the product itself overflows quickly.
pub fn log10_rho_qn(j: u32, n: f64, params: &BoundParams) -> Result<f64> {
    Ok(rho(j, n)?.log10() + n * (params.q as f64).log10())
}

/// `omega(n) = (ln n - ln ln n) / ln q`, for `n >= 2`.
pub fn omega(n: f64, params: &BoundParams) -> Result<f64> {
    if !(n >= 2.0) {
        return Err(Error::Domain {
            level: 1,
            value: n.ln(),
            n,
        });
    }
    Ok((n.ln() - n.ln().ln()) * params.beta())
}

/// `h(n) = floor(ln n / ln q)`, computed exactly as the largest `k` with
/// `q^k <= n`.
pub fn h(n: u64, params: &BoundParams) -> Result<u64> {
    if n < 2 {
        return Err(Error::Precondition(format!("h(n) needs n >= 2, got {n}")));
    }
    let q = params.q as u64;
    let (mut k, mut p) = (0, 1u64);
    while let Some(next) = p.checked_mul(q).filter(|&x| x <= n) {
        p = next;
        k += 1;
    }
    Ok(k)
}

/// `hbar(n) = max(1, floor(omega(n) / kappa))`.
pub fn hbar(n: u64, params: &BoundParams) -> Result<u64> {
    let w = omega(n as f64, params)?;
    Ok(((w / params.kappa).floor() as u64).max(1))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaFit {
    pub j: u32,
    /// Largest `B(n) / (rho_j(n) q^n)` over the covered range.
    pub alpha: f64,
    pub argmax_n: usize,
    /// `(n, B(n) / (alpha rho_j(n) q^n))`; at most 1 up to rounding.
    pub slack: Vec<(usize, f64)>,
}

/// Smallest constant making `B(n) <= alpha * rho_j(n) * q^n` hold on every
/// covered `n >= N_j`.
pub fn empirical_alpha(j: u32, table: &CountTable, params: &BoundParams) -> Result<AlphaFit> {
    check_j(j)?;
    if table.q as u32 != params.q {
        return Err(Error::Precondition(format!(
            "table has q = {} but parameters have q = {}",
            table.q, params.q
        )));
    }
    let n_j = validity_threshold(j).unwrap_or(u64::MAX);
    let ratios = table
        .rows
        .iter()
        .filter(|r| r.n as u64 >= n_j)
        .map(|r| {
            let density = r.privileged as f64 / (params.q as f64).powi(r.n as i32);
            Ok((r.n, density / rho(j, r.n as f64)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let &(argmax_n, alpha) = ratios
        .iter()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .ok_or_else(|| Error::EmptyRange(format!("no census row with n >= N_{j} = {n_j}")))?;
    Ok(AlphaFit {
        j,
        alpha,
        argmax_n,
        slack: ratios.iter().map(|&(n, r)| (n, r / alpha)).collect(),
    })
}

/// Sup-ratio of `C(n)` against the shape `ln n * q^n / sqrt(n)` of the older
/// bound for closed words, over covered `n >= 2`.
pub fn empirical_closed_constant(table: &CountTable, params: &BoundParams) -> Result<(f64, usize)> {
    table
        .rows
        .iter()
        .filter(|r| r.n >= 2)
        .map(|r| {
            let n = r.n as f64;
            let density = r.closed as f64 / (params.q as f64).powi(r.n as i32);
            (density / (n.ln() / n.sqrt()), r.n)
        })
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .ok_or_else(|| Error::EmptyRange("no census row with n >= 2".into()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UpRow {
    pub n: u64,
    /// `q^n alpha rho(n) >= B(n)`; absent when the census does not cover `n`.
    pub dominates_count: Option<bool>,
    /// `rho(n) >= rho(n + 1)`.
    pub non_increasing: bool,
    /// `q^n rho(n) <= q^(n+1) rho(n + 1)`.
    pub scaled_non_decreasing: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UpReport {
    pub alpha: f64,
    pub rows: Vec<UpRow>,
    /// Smallest `n0` in range such that the property holds for every
    /// `n >= n0` in range; `None` if it fails at the last point.
    pub non_increasing_from: Option<u64>,
    pub scaled_non_decreasing_from: Option<u64>,
    /// All checked rows dominate the census; `None` when none were checked.
    pub dominates_count: Option<bool>,
}

fn tail_start(range: &RangeInclusive<u64>, holds: impl Fn(u64) -> bool) -> Option<u64> {
    let mut start = None;
    for n in range.clone().rev() {
        if !holds(n) {
            break;
        }
        start = Some(n);
    }
    start
}

/// Evaluates the three membership properties of `alpha * rho` at every `n`
/// in `range`.
pub fn up_membership_check(
    rho_fn: impl Fn(u64) -> Result<f64>,
    alpha: f64,
    range: RangeInclusive<u64>,
    params: &BoundParams,
    table: Option<&CountTable>,
) -> Result<UpReport> {
    if range.is_empty() {
        return Err(Error::EmptyRange(format!("{range:?}")));
    }
    let q = params.q as f64;
    let mut rows = Vec::new();
    for n in range.clone() {
        let here = alpha * rho_fn(n)?;
        let next = alpha * rho_fn(n + 1)?;
        let dominates_count = table.and_then(|t| t.privileged(n as usize)).map(|b| {
            let density = b as f64 / q.powi(n as i32);
            count_within(density, here)
        });
        rows.push(UpRow {
            n,
            dominates_count,
            non_increasing: here >= next,
            scaled_non_decreasing: here <= q * next,
        });
    }
    let at = |n: u64| &rows[(n - range.start()) as usize];
    let non_increasing_from = tail_start(&range, |n| at(n).non_increasing);
    let scaled_non_decreasing_from = tail_start(&range, |n| at(n).scaled_non_decreasing);
    let checked: Vec<bool> = rows.iter().filter_map(|r| r.dominates_count).collect();
    let dominates_count = (!checked.is_empty()).then(|| checked.iter().all(|&b| b));
    Ok(UpReport {
        alpha,
        rows,
        non_increasing_from,
        scaled_non_decreasing_from,
        dominates_count,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioPoint {
    pub n: u64,
    pub hbar: u64,
    /// `sigma_j(hbar(n)) sqrt(ln hbar(n)) / sigma_{j+1}(n)`, tends to 1.
    pub y: f64,
    /// `sqrt(ln n) / sqrt(hbar(n))`, tends to `sqrt(kappa ln q)`.
    pub technical: f64,
    /// `hbar(n) >= N_j` and `n >= N_{j+1}`. Points outside still get the
    /// closed form evaluated.
    pub within_threshold: bool,
}

/// Evaluates the limit ratios on `grid`. No assertion is made here.
pub fn ratio_diagnostics(j: u32, grid: &[u64], params: &BoundParams) -> Result<Vec<RatioPoint>> {
    check_j(j)?;
    let n_j = validity_threshold(j).unwrap_or(u64::MAX);
    let n_next = validity_threshold(j + 1).unwrap_or(u64::MAX);
    grid.iter()
        .map(|&n| {
            let hb = hbar(n, params)?;
            let hbf = hb as f64;
            let nf = n as f64;
            let y = sigma_unchecked(j, hbf)? * hbf.ln().sqrt() / sigma_unchecked(j + 1, nf)?;
            Ok(RatioPoint {
                n,
                hbar: hb,
                y,
                technical: (nf.ln() / hbf).sqrt(),
                within_threshold: hb >= n_j && n >= n_next,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn iter_ln_examples() {
        assert_eq!(iter_ln(0, 7.0).unwrap(), 7.0);
        assert!((iter_ln(2, E.powf(E)).unwrap() - 1.0).abs() < 1e-15);
        // a negative final value is returned, not rejected
        let v = iter_ln(3, 15.0).unwrap();
        assert!(v < 0.0 && v > -0.01, "{v}");
        match iter_ln(3, E) {
            Err(Error::Domain { level: 2, value, .. }) => assert!(value.abs() < 1e-15),
            other => panic!("{other:?}"),
        }
        assert!(matches!(iter_ln(1, 0.0), Err(Error::Domain { level: 0, .. })));
    }

    #[test]
    fn thresholds() {
        let table: Vec<u64> = threshold_table(4).iter().map(|t| t.n_j).collect();
        assert_eq!(table, [2, 3, 16, 3_814_280]);
        assert_eq!(validity_threshold(0), Some(1));
        assert_eq!(validity_threshold(5), None);
        assert_eq!(threshold_table(6).len(), 4);
    }

    #[test]
    fn sigma_rho_examples() {
        let n = 100.0f64;
        assert!(rel(rho(1, n).unwrap(), n.ln() / n.sqrt()) < 1e-12);
        let n = 1000.0f64;
        assert!(rel(rho(2, n).unwrap(), n.ln().sqrt() * n.ln().ln() / n.sqrt()) < 1e-12);
        let n = 1e6;
        let direct = iter_ln(3, n).unwrap() * iter_ln(2, n).unwrap().sqrt();
        assert!(rel(sigma(3, n).unwrap(), direct) < 1e-15);
        assert!(rel(sigma(2, 1000.0).unwrap(), 1.93264) < 1e-5);
        assert!(rel(rho(1, 100.0).unwrap(), 0.460517) < 1e-5);
    }

    #[test]
    fn below_threshold_is_rejected() {
        assert_eq!(
            sigma(3, 15.0),
            Err(Error::BelowThreshold {
                j: 3,
                n: 15.0,
                threshold: 16
            })
        );
        assert!(rho(2, 2.0).is_err());
        assert!(rho(2, 3.0).is_ok());
        assert!(sigma(0, 10.0).is_err());
        // the unchecked form still evaluates
        assert!(sigma_unchecked(3, 8.0).unwrap() < 0.0);
    }

    #[test]
    fn threshold_functions() {
        let p = BoundParams::default();
        assert!((omega(100.0, &p).unwrap() - 4.440602).abs() < 1e-6);
        assert_eq!(h(100, &p).unwrap(), 6);
        assert_eq!(hbar(100, &p).unwrap(), 2);
        assert!((omega(2.0, &p).unwrap() - 1.5288).abs() < 1e-4);
        assert_eq!(hbar(2, &p).unwrap(), 1);
        assert!(omega(1.0, &p).is_err());
        assert!(h(1, &p).is_err());
        assert_eq!(h(1000, &BoundParams::new(10, 2.0).unwrap()).unwrap(), 3);
        assert_eq!(h(1024, &p).unwrap(), 10);
        assert_eq!(h(1023, &p).unwrap(), 9);
    }

    #[test]
    fn hbar_never_exceeds_h() {
        let p = BoundParams::default();
        let mut n = 16.0f64;
        while n <= 1e6 {
            let k = n.round() as u64;
            assert!(hbar(k, &p).unwrap() <= h(k, &p).unwrap(), "n={k}");
            n *= 1.05;
        }
    }

    #[test]
    fn params_validation() {
        assert!(BoundParams::new(1, 2.0).is_err());
        assert!(BoundParams::new(2, 1.0).is_err());
        assert!(BoundParams::new(2, f64::NAN).is_err());
        assert!((BoundParams::default().beta() - 1.0 / 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn log_domain_sigma_agrees() {
        for j in 1..=4 {
            for n in [4e6, 1e9, 1e50, 1e300] {
                let direct = sigma(j, n).unwrap();
                assert!(rel(sigma_from_ln(j, n.ln()).unwrap(), direct) < 1e-12, "j={j} n={n}");
            }
        }
    }

    #[test]
    fn larger_j_is_tighter() {
        // sigma_j / sigma_{j+1} = sqrt(L) / ln L with L = ln^[j](n), which
        // only starts growing once L > e^2
        let start = E.powf(E * E);
        let mut prev = f64::NEG_INFINITY;
        let mut n = start;
        while n < 1e300 {
            let ratio = rho(1, n).unwrap() / rho(2, n).unwrap();
            assert!(ratio > prev, "n={n}");
            prev = ratio;
            n *= 10.0;
        }
        assert!(rho(1, 30.0).unwrap() / rho(2, 30.0).unwrap() > rho(1, 300.0).unwrap() / rho(2, 300.0).unwrap());

        for j in 2..=3 {
            // ln n grid starting where ln^[j](n) exceeds e^2
            let mut t = E * E;
            for _ in 1..j {
                t = t.exp();
            }
            let mut prev = f64::NEG_INFINITY;
            while t < 1e300 {
                let ratio = sigma_from_ln(j, t).unwrap() / sigma_from_ln(j + 1, t).unwrap();
                assert!(ratio > prev, "j={j} ln n={t}");
                prev = ratio;
                t *= 10.0;
            }
        }
    }

    #[test]
    fn up_crossover_for_first_envelope() {
        let p = BoundParams::default();
        let report = up_membership_check(|n| rho(1, n as f64), 1.0, 2..=30, &p, None).unwrap();
        // ln n / sqrt n peaks at e^2; rho(7) >= rho(8) already
        assert_eq!(report.non_increasing_from, Some(7));
        assert_eq!(report.scaled_non_decreasing_from, Some(2));
        assert_eq!(report.dominates_count, None);
    }

    #[test]
    fn ratio_grid() {
        let p = BoundParams::default();
        let pts = ratio_diagnostics(1, &[1_000_000, 1_000_000_000_000_000], &p).unwrap();
        assert_eq!(pts[0].hbar, 8);
        assert_eq!(pts[1].hbar, 22);
        assert!((pts[1].y - 1.0).abs() < (pts[0].y - 1.0).abs());
        assert!(pts[1].within_threshold);
    }
}
