use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::schur::{to_schur, SchurExpansion};
use crate::series::SymSeries;
use crate::symfunc::{PowerSumPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Refuted,
    PositivityReport,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Identity,
    Table,
    Conjecture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DetailKind {
    /// A nonzero term of `lhs - rhs`.
    Difference,
    /// A negative Schur coefficient.
    Witness,
    /// A scalar or structural mismatch described by `note`.
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detail {
    pub identity: String,
    pub kind: DetailKind,
    /// `p` (power sums) or `s` (Schur functions) for term-valued details.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub basis: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub partition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coeff: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl Detail {
    fn term(identity: &str, kind: DetailKind, basis: &str, lambda: &Partition, c: &Rational) -> Self {
        Detail {
            identity: identity.into(),
            kind,
            basis: Some(basis.into()),
            partition: Some(lambda.to_string()),
            coeff: Some(c.to_string()),
            note: None,
        }
    }

    /// The witness as a CLI term, e.g. `-1*s[1,1,1,1]`.
    pub fn as_term(&self) -> Option<String> {
        Some(format!("{}*{}{}", self.coeff.as_ref()?, self.basis.as_ref()?, self.partition.as_ref()?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub degree: usize,
    pub pass: bool,
    pub detail: Option<Detail>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub max_degree: usize,
    pub status: Status,
    pub per_degree: Vec<DegreeRecord>,
    pub runtime_ms: u64,
}

impl CheckReport {
    pub fn failing_degrees(&self) -> Vec<usize> {
        self.per_degree.iter().filter(|r| !r.pass).map(|r| r.degree).collect()
    }

    pub fn all_pass(&self) -> bool {
        self.per_degree.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// Collects the first failure per degree over a fixed degree window.
pub(crate) struct Recorder {
    lo: usize,
    hi: usize,
    fails: BTreeMap<usize, Detail>,
}

impl Recorder {
    pub fn new(lo: usize, hi: usize) -> Self {
        Recorder {
            lo,
            hi,
            fails: BTreeMap::new(),
        }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    pub fn fail(&mut self, n: usize, detail: Detail) {
        if (self.lo..=self.hi).contains(&n) {
            self.fails.entry(n).or_insert(detail);
        }
    }

    pub fn truth(&mut self, id: &str, n: usize, ok: bool, note: impl FnOnce() -> String) -> bool {
        if !ok {
            self.fail(
                n,
                Detail {
                    identity: id.into(),
                    kind: DetailKind::Mismatch,
                    basis: None,
                    partition: None,
                    coeff: None,
                    note: Some(note()),
                },
            );
        }
        ok
    }

    pub fn poly_eq(&mut self, id: &str, n: usize, lhs: &PowerSumPoly, rhs: &PowerSumPoly) -> bool {
        let diff = lhs - rhs;
        match diff.first_term() {
            None => true,
            Some((l, c)) => {
                self.fail(n, Detail::term(id, DetailKind::Difference, "p", &l, &c));
                false
            }
        }
    }

    /// Compares components `from..=hi` (capped at the series truncation).
    pub fn series_eq_from(&mut self, id: &str, from: usize, lhs: &SymSeries, rhs: &SymSeries) -> bool {
        let top = self.hi.min(lhs.trunc()).min(rhs.trunc());
        let mut ok = true;
        for n in from.max(self.lo)..=top {
            ok &= self.poly_eq(id, n, lhs.component(n), rhs.component(n));
        }
        ok
    }

    pub fn series_eq(&mut self, id: &str, lhs: &SymSeries, rhs: &SymSeries) -> bool {
        self.series_eq_from(id, 0, lhs, rhs)
    }

    pub fn schur_eq(&mut self, id: &str, n: usize, got: &SchurExpansion, want: &SchurExpansion) -> bool {
        match got.difference(want) {
            None => true,
            Some((l, c)) => {
                self.fail(n, Detail::term(id, DetailKind::Difference, "s", &l, &c));
                false
            }
        }
    }

    /// Schur-positivity of the degree-`n` function `f`; records the most negative coefficient.
    pub fn positive(&mut self, id: &str, n: usize, f: &PowerSumPoly) -> bool {
        let s = to_schur(f, n);
        self.positive_schur(id, n, &s)
    }

    pub fn positive_schur(&mut self, id: &str, n: usize, s: &SchurExpansion) -> bool {
        let pos = s.positivity();
        if let Some((l, c)) = &pos.witness {
            self.fail(n, Detail::term(id, DetailKind::Witness, "s", l, c));
        }
        pos.positive
    }

    pub fn finish(self, name: &str, kind: CheckKind, started: Instant) -> CheckReport {
        let mut fails = self.fails;
        let per_degree: Vec<DegreeRecord> = (self.lo..=self.hi)
            .map(|n| {
                let detail = fails.remove(&n);
                DegreeRecord {
                    degree: n,
                    pass: detail.is_none(),
                    detail,
                }
            })
            .collect();
        let status = match kind {
            CheckKind::Conjecture => Status::PositivityReport,
            _ if per_degree.iter().all(|r| r.pass) => Status::Verified,
            _ => Status::Refuted,
        };
        CheckReport {
            name: name.into(),
            max_degree: self.hi,
            status,
            per_degree,
            runtime_ms: started.elapsed().as_millis() as u64,
        }
    }
}
