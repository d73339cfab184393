use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() || (i > 0 && row.len() > rows[i - 1].len()) {
                return Err(Error::Domain("rows must form a partition shape".into()));
            }
            for (j, &x) in row.iter().enumerate() {
                let fresh = (x as usize) >= 1 && (x as usize) <= n && !seen[x as usize];
                let row_ok = j == 0 || row[j - 1] < x;
                let col_ok = i == 0 || rows[i - 1][j] < x;
                if !(fresh && row_ok && col_ok) {
                    return Err(Error::Domain("not a standard Young tableau".into()));
                }
                seen[x as usize] = true;
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_sorted(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    fn row_of(&self) -> Vec<usize> {
        let n: usize = self.rows.iter().map(Vec::len).sum();
        let mut row = vec![0; n + 1];
        for (i, r) in self.rows.iter().enumerate() {
            for &x in r {
                row[x as usize] = i;
            }
        }
        row
    }

    /// Entries `i` such that `i + 1` sits in a strictly lower row.
    pub fn descents(&self) -> Vec<u32> {
        let row = self.row_of();
        (1..row.len().saturating_sub(1))
            .filter(|&i| row[i + 1] > row[i])
            .map(|i| i as u32)
            .collect()
    }
}

pub fn maj(t: &StandardTableau) -> u32 {
    t.descents().iter().sum()
}

/// All standard Young tableaux of shape `lambda`: the largest entry is placed in each
/// removable corner in turn, scanning rows top to bottom.
pub fn syt_enumerate(lambda: &Partition) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = lambda.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let mut shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    fill(&mut rows, &mut shape, lambda.size() as u32, &mut out);
    out
}

fn fill(rows: &mut Vec<Vec<u32>>, shape: &mut Vec<usize>, next: u32, out: &mut Vec<StandardTableau>) {
    if next == 0 {
        out.push(StandardTableau { rows: rows.clone() });
        return;
    }
    for i in 0..shape.len() {
        let len = shape[i];
        let corner = len > 0 && shape.get(i + 1).is_none_or(|&below| below < len);
        if corner {
            rows[i][len - 1] = next;
            shape[i] -= 1;
            fill(rows, shape, next - 1, out);
            shape[i] += 1;
        }
    }
}

/// Number of SYT of shape `lambda` with major index congruent to `r` mod `n`.
pub fn foulkes_oracle(lambda: &Partition, r: usize, n: usize) -> Result<usize> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch(lambda.size(), n));
    }
    if r == 0 || r > n {
        return Err(Error::Domain(format!("r={r} must lie in 1..={n}")));
    }
    Ok(syt_enumerate(lambda)
        .iter()
        .filter(|t| maj(t) as usize % n == r % n)
        .count())
}
