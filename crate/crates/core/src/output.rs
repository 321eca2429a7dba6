//! Serialization of census tables and verification reports.
//!
//! Every emitted document has a metadata header (tool version and a
//! timestamp) kept apart from the data section, so two runs can be compared
//! on the data alone. CSV puts the header in `#` comment lines; JSON puts it
//! under `"meta"`.

use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Serialize, Serializer};

use crate::enumeration::CountTable;
use crate::verify::VerifyReport;

pub fn serialize_display<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub tool: &'static str,
    pub version: &'static str,
    /// Seconds since the Unix epoch.
    pub generated_at: u64,
}

impl Meta {
    pub fn now() -> Self {
        Meta {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            generated_at: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
        }
    }

    fn csv_header(&self) -> String {
        format!(
            "# {} {}\n# generated_at={}\n",
            self.tool, self.version, self.generated_at
        )
    }
}

#[derive(Serialize)]
struct Document<'a, T: Serialize> {
    meta: &'a Meta,
    data: &'a T,
}

pub fn to_json<T: Serialize>(meta: &Meta, data: &T) -> String {
    let mut s = serde_json::to_string_pretty(&Document { meta, data }).expect("serializable");
    s.push('\n');
    s
}

/// Six significant digits, `%g` style.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    // exponent after rounding to six digits
    let sci = format!("{x:.5e}");
    let (mantissa, e) = sci.split_once('e').expect("scientific form");
    let exp: i32 = e.parse().expect("integer exponent");
    if (-5..6).contains(&exp) {
        let decimals = (5 - exp) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{}", trim_zeros(mantissa.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// CSV data section: `n,q,B,C,m1,...,m<max_n - 1>`; cells for `m >= n` are
/// left empty.
pub fn census_csv_data(table: &CountTable) -> String {
    let max_n = table.max_n().unwrap_or(0);
    let mut out = String::from("n,q,B,C");
    for m in 1..max_n {
        write!(out, ",m{m}").unwrap();
    }
    out.push('\n');
    for row in &table.rows {
        write!(out, "{},{},{},{}", row.n, row.q, row.privileged, row.closed).unwrap();
        for m in 1..max_n {
            out.push(',');
            if m < row.n {
                write!(out, "{}", row.priv_with_border(m)).unwrap();
            }
        }
        out.push('\n');
    }
    out
}

pub fn census_csv(meta: &Meta, table: &CountTable) -> String {
    meta.csv_header() + &census_csv_data(table)
}

pub fn census_json(meta: &Meta, table: &CountTable) -> String {
    to_json(meta, &table.rows)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn report_csv_data(report: &VerifyReport) -> String {
    let mut out = String::from("suite,id,params,lhs,rhs,verdict\n");
    for r in &report.records {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.suite,
            r.id,
            csv_field(&r.params),
            sig6(r.lhs),
            sig6(r.rhs),
            r.verdict
        )
        .unwrap();
    }
    out
}

pub fn report_csv(meta: &Meta, report: &VerifyReport) -> String {
    let mut head = meta.csv_header();
    writeln!(
        head,
        "# suite={} q={} max_n={} kappa={} checks={} violations={}",
        report.suite, report.config.q, report.config.max_n, report.config.kappa, report.summary.checks_run, report.summary.violations
    )
    .unwrap();
    head + &report_csv_data(report)
}

pub fn report_json(meta: &Meta, report: &VerifyReport) -> String {
    to_json(meta, report)
}

/// Strips `#` comment lines, leaving the data section.
pub fn strip_csv_meta(csv: &str) -> String {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect()
}
