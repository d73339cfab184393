use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use symfun::partition::all_partitions;
use symfun::repmodules::{lie, lie2};
use symfun::schur::{to_schur, SchurExpansion};
use symfun::verify::{golden_table, run_check, GoldenCell, Options, Status};
use symfun::Partition;

fn hook_length_dim(l: &Partition) -> u64 {
    let parts = l.parts();
    let conj = l.conjugate();
    let mut hooks = 1u64;
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row as usize {
            hooks *= (row as usize - j - 1 + conj.parts()[j] as usize - i - 1 + 1) as u64;
        }
    }
    (1..=l.size() as u64).product::<u64>() / hooks
}

fn stirling_first(n: usize) -> Vec<u64> {
    // Coefficients of x(x+1)...(x+n-1).
    let mut c = vec![1u64];
    for m in 0..n as u64 {
        let mut next = vec![0u64; c.len() + 1];
        for (k, &v) in c.iter().enumerate() {
            next[k + 1] += v;
            next[k] += v * m;
        }
        c = next;
    }
    c
}

fn dim(s: &SchurExpansion) -> i64 {
    s.terms().map(|(l, c)| c.to_i64().unwrap() * hook_length_dim(l) as i64).sum()
}

fn cell<'a>(cells: &'a [GoldenCell], row: &str, col: &str) -> &'a SchurExpansion {
    &cells.iter().find(|c| c.row == row && c.column == col).unwrap().value
}

#[test]
fn all_table_checks_verify() {
    for name in ["tables.table1", "tables.table2", "tables.table3", "tables.table4"] {
        let r = run_check(name, None, &Options::default()).unwrap();
        assert_eq!(r.status, Status::Verified, "{name}: {:?}", r.per_degree);
    }
}

#[test]
fn regular_tables_have_expected_shape_and_sums() {
    for (name, n, cells_expected) in [("table1", 4, 12), ("table2", 5, 15)] {
        let (deg, cells) = golden_table(name).unwrap();
        assert_eq!(deg, n);
        assert_eq!(cells.len(), cells_expected);
        let stirling = stirling_first(n);
        for col in ["pbw", "ext", "whitney"] {
            let mut total: BTreeMap<Partition, i64> = BTreeMap::new();
            for l in 1..=n {
                let v = cell(&cells, &format!("l{l}"), col);
                assert_eq!(dim(v), stirling[l] as i64, "{name} {col} l{l}");
                for (p, c) in v.terms() {
                    *total.entry(p.clone()).or_default() += c.to_i64().unwrap();
                }
            }
            for lam in all_partitions(n) {
                assert_eq!(total.get(&lam).copied().unwrap_or(0), hook_length_dim(&lam) as i64, "{name} {col} {lam}");
            }
        }
    }
}

#[test]
fn poincare_coefficients_match_stated_values() {
    assert_eq!(stirling_first(4)[1..].iter().rev().copied().collect::<Vec<_>>(), vec![1, 6, 11, 6]);
    assert_eq!(stirling_first(5)[1..].iter().rev().copied().collect::<Vec<_>>(), vec![1, 10, 35, 50, 24]);
}

#[test]
fn alternating_tables_end_in_lie_modules() {
    let (n3, t3) = golden_table("table3").unwrap();
    let (n4, t4) = golden_table("table4").unwrap();
    assert_eq!((n3, n4), (6, 7));
    assert_eq!(cell(&t3, "k4", "U"), &to_schur(&lie2(6).unwrap(), 6));
    assert_eq!(cell(&t4, "k5", "U"), &to_schur(&lie(7).unwrap(), 7));
    assert_eq!(dim(cell(&t3, "k3", "U")), 154);
    assert_eq!(dim(cell(&t3, "k0", "U")), 1);
    assert_eq!(dim(cell(&t4, "k0", "U")), 1);
    for (t, n) in [(&t3, 6usize), (&t4, 7)] {
        for k in 0..n - 1 {
            let v = cell(t, &format!("k{k}"), "U");
            assert!(v.terms().all(|(_, c)| c.to_i64().unwrap() > 0));
        }
    }
}
