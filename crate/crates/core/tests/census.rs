mod common;

use privword::enumeration::{census_table, census_with, CensusConfig, CountRow};

fn assert_matches(row: &CountRow, golden: &(usize, u64, u64, &[u64])) {
    let &(n, b, c, by_border) = golden;
    assert_eq!(row.n, n);
    assert_eq!((row.privileged, row.closed), (b, c), "n={n}");
    let got: Vec<u64> = row.priv_by_border.values().copied().collect();
    assert_eq!(got, by_border, "n={n}");
}

#[test]
fn binary_census_matches_golden_counts() {
    let table = census_table(2, 1..=16, &CensusConfig::default()).unwrap();
    for (row, golden) in table.rows.iter().zip(common::BINARY) {
        assert_matches(row, golden);
    }
}

#[test]
fn ternary_census_matches_golden_counts() {
    let table = census_table(3, 1..=8, &CensusConfig::with_threads(3)).unwrap();
    for (row, golden) in table.rows.iter().zip(common::TERNARY) {
        assert_matches(row, golden);
    }
}

#[test]
fn analytic_anchors() {
    let b: Vec<u64> = (1..=3).map(|n| census_with(2, n, &CensusConfig::default()).unwrap().privileged).collect();
    assert_eq!(b, [2, 2, 4]);
}

#[test]
fn json_rows_carry_named_counts() {
    let table = census_table(2, 2..=3, &CensusConfig::with_threads(1)).unwrap();
    let v = serde_json::to_value(&table.rows).unwrap();
    assert_eq!(v[1]["B"], 4);
    assert_eq!(v[1]["C"], 4);
    assert_eq!(v[1]["priv_by_border"]["2"], 2);
}
