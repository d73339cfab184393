use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur::SchurExpansion;
use crate::symfunc::Rational;

const TABLES: [(&str, usize, &str); 4] = [
    ("table1", 4, include_str!("../../data/table1.txt")),
    ("table2", 5, include_str!("../../data/table2.txt")),
    ("table3", 6, include_str!("../../data/table3.txt")),
    ("table4", 7, include_str!("../../data/table4.txt")),
];

const SIGMA: &str = include_str!("../../data/sigma.txt");

/// One cell of an embedded table, keyed by row and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenCell {
    pub row: String,
    pub column: String,
    pub value: SchurExpansion,
}

fn data_lines(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect())
}

fn bad(line: &[&str]) -> Error {
    Error::Domain(format!("malformed golden line {:?}", line.join(" ")))
}

fn term(coeff: &str, lambda: &str, line: &[&str]) -> Result<(Partition, Rational)> {
    let c: Rational = coeff.parse().map_err(|_| bad(line))?;
    let l: Partition = lambda.parse().map_err(|_| bad(line))?;
    Ok((l, c))
}

/// The degree and cells of `table1` .. `table4`, in file order of first appearance.
pub fn golden_table(name: &str) -> Result<(usize, Vec<GoldenCell>)> {
    let &(_, degree, text) = TABLES
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| Error::Domain(format!("no golden table {name}")))?;
    let mut order: Vec<(String, String)> = Vec::new();
    let mut cells: BTreeMap<(String, String), Vec<(Partition, Rational)>> = BTreeMap::new();
    for line in data_lines(text) {
        let [row, col, coeff, lambda] = line[..] else {
            return Err(bad(&line));
        };
        let key = (row.to_string(), col.to_string());
        if !cells.contains_key(&key) {
            order.push(key.clone());
        }
        cells.entry(key).or_default().push(term(coeff, lambda, &line)?);
    }
    let out = order
        .into_iter()
        .map(|key| {
            let terms = cells.remove(&key).unwrap_or_default();
            Ok(GoldenCell {
                row: key.0,
                column: key.1,
                value: SchurExpansion::new(degree, terms)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok((degree, out))
}

/// Schur expansions of sigma_2 .. sigma_6.
pub fn golden_sigma() -> Result<BTreeMap<usize, SchurExpansion>> {
    let mut terms: BTreeMap<usize, Vec<(Partition, Rational)>> = BTreeMap::new();
    for line in data_lines(SIGMA) {
        let [n, coeff, lambda] = line[..] else {
            return Err(bad(&line));
        };
        let n: usize = n.parse().map_err(|_| bad(&line))?;
        terms.entry(n).or_default().push(term(coeff, lambda, &line)?);
    }
    terms
        .into_iter()
        .map(|(n, t)| Ok((n, SchurExpansion::new(n, t)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_parse_with_expected_cell_counts() {
        assert_eq!(golden_table("table1").unwrap().1.len(), 12);
        assert_eq!(golden_table("table2").unwrap().1.len(), 15);
        assert_eq!(golden_table("table3").unwrap().1.len(), 5);
        assert_eq!(golden_table("table4").unwrap().1.len(), 6);
        assert!(golden_table("table5").is_err());
    }

    #[test]
    fn sigma_values_cover_two_through_six() {
        let s = golden_sigma().unwrap();
        assert_eq!(s.keys().copied().collect::<Vec<_>>(), vec![2, 3, 4, 5, 6]);
    }
}
