use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::schur::to_schur;
use crate::symfunc::{int, PowerSumPoly};
use crate::verify::checks::conj::u_values;
use crate::verify::common::*;
use crate::verify::golden::golden_table;
use crate::verify::{Ctx, Recorder};

fn compare(r: &mut Recorder, name: &str, computed: Vec<(String, String, PowerSumPoly)>) -> Result<()> {
    let (n, cells) = golden_table(name)?;
    let golden_keys: BTreeSet<(String, String)> = cells.iter().map(|c| (c.row.clone(), c.column.clone())).collect();
    let computed_keys: BTreeSet<(String, String)> = computed.iter().map(|(a, b, _)| (a.clone(), b.clone())).collect();
    r.truth("table cells cover the same rows and columns", n, golden_keys == computed_keys, || {
        format!("golden {golden_keys:?} vs computed {computed_keys:?}")
    });
    for cell in &cells {
        if let Some((_, _, f)) = computed.iter().find(|(a, b, _)| *a == cell.row && *b == cell.column) {
            r.schur_eq(&format!("cell ({}, {})", cell.row, cell.column), n, &to_schur(f, n), &cell.value);
        }
    }
    Ok(())
}

fn regular_cells(n: usize) -> Result<Vec<(String, String, PowerSumPoly)>> {
    let lie = lie(n)?;
    let sym = h_pieces(&lie)?;
    let ext_lie = e_pieces(&lie)?;
    let ext = e_pieces(&lie2(n)?)?;
    let mut cells = Vec::new();
    for l in (1..=n).rev() {
        let mut whitney = ext_lie[l].component(n).clone();
        if (n - l) % 2 == 1 {
            whitney = whitney.omega();
        }
        let row = format!("l{l}");
        cells.push((row.clone(), "pbw".to_string(), sym[l].component(n).clone()));
        cells.push((row.clone(), "ext".to_string(), ext[l].component(n).clone()));
        cells.push((row, "whitney".to_string(), whitney));
    }
    Ok(cells)
}

fn regular(r: &mut Recorder, name: &str, n: usize, poincare: &[i64]) -> Result<()> {
    let cells = regular_cells(n)?;
    for (row, col, f) in &cells {
        let l: usize = row[1..].parse().expect("row label l<k>");
        let want = int(poincare[n - l]);
        let d = f.dimension(n);
        r.truth(&format!("row {row} has dimension {want}"), n, d == want, || format!("{col}: {d}"));
    }
    for col in ["pbw", "ext", "whitney"] {
        let total = cells
            .iter()
            .filter(|(_, c, _)| c == col)
            .fold(PowerSumPoly::zero(), |acc, (_, _, f)| &acc + f);
        r.poly_eq(&format!("column {col} sums to p1^n"), n, &total, &PowerSumPoly::p1_power(n));
    }
    compare(r, name, cells)
}

pub fn table1(_: &Ctx, r: &mut Recorder) -> Result<()> {
    regular(r, "table1", 4, &[1, 6, 11, 6])
}

pub fn table2(_: &Ctx, r: &mut Recorder) -> Result<()> {
    regular(r, "table2", 5, &[1, 10, 35, 50, 24])
}

fn alternating_cells(n: usize) -> Result<Vec<(String, String, PowerSumPoly)>> {
    let u = u_values(&h_pieces(&lie2(n)?)?, n);
    Ok((0..=n - 2).map(|k| (format!("k{k}"), "U".to_string(), u[k].clone())).collect())
}

fn alternating(r: &mut Recorder, name: &str, n: usize) -> Result<()> {
    let cells = alternating_cells(n)?;
    let lie2 = lie2(n)?;
    r.poly_eq("U_(n-2)(n) = Lie2_n", n, &cells[n - 2].2, lie2.component(n));
    if n % 2 == 1 && crate::numtheory::is_prime(n as u64) {
        r.poly_eq("U_(n-2)(n) = Lie_n", n, &cells[n - 2].2, lie(n)?.component(n));
    }
    compare(r, name, cells)
}

/// Recomputed cells `(row, column, value)` of `table1` .. `table4`, with the table degree.
pub fn table_values(name: &str) -> Result<(usize, Vec<(String, String, PowerSumPoly)>)> {
    match name {
        "table1" => Ok((4, regular_cells(4)?)),
        "table2" => Ok((5, regular_cells(5)?)),
        "table3" => Ok((6, alternating_cells(6)?)),
        "table4" => Ok((7, alternating_cells(7)?)),
        _ => Err(Error::Domain(format!("unknown table `{name}` (expected table1..table4)"))),
    }
}

pub fn table3(_: &Ctx, r: &mut Recorder) -> Result<()> {
    alternating(r, "table3", 6)
}

pub fn table4(_: &Ctx, r: &mut Recorder) -> Result<()> {
    alternating(r, "table4", 7)
}
