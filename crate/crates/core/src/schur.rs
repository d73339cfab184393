use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::partition::{all_partitions, Partition};
use crate::symfunc::{PowerSumPoly, Rational};

static CHAR_MEMO: Lazy<RwLock<HashMap<(Partition, Partition), i64>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Irreducible character value `chi^lambda(mu)` by the Murnaghan-Nakayama rule.
pub fn char_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(mn(lambda, mu))
}

fn mn(lambda: &Partition, mu: &Partition) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    if lambda.len() <= 1 {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = CHAR_MEMO.read().get(&key) {
        return v;
    }
    let k = mu.parts()[0];
    let rest = mu.tail();
    let value = remove_rim_hooks(lambda, k)
        .into_iter()
        .map(|(sign, smaller)| sign * mn(&smaller, &rest))
        .sum();
    CHAR_MEMO.write().insert(key, value);
    value
}

/// All ways to remove a rim hook of length `k`, as (sign, remaining shape).
fn remove_rim_hooks(lambda: &Partition, k: u32) -> Vec<(i64, Partition)> {
    let len = lambda.len() as u32;
    let beta: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u32)
        .collect();
    let mut out = Vec::new();
    for &b in &beta {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next: Vec<u32> = beta.iter().map(|&x| if x == b { target } else { x }).collect();
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = next
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i as u32))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::from_sorted(parts)));
    }
    out
}

/// A degree-`n` symmetric function in the Schur basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Partition, Rational>,
    degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positivity {
    pub positive: bool,
    pub witness: Option<(Partition, Rational)>,
}

impl SchurExpansion {
    pub fn new(degree: usize, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (l, c) in terms {
            if l.size() != degree {
                return Err(Error::SizeMismatch(l.size(), degree));
            }
            let entry = coeffs.entry(l).or_insert_with(Rational::zero);
            *entry += c;
        }
        coeffs.retain(|_, c: &mut Rational| !c.is_zero());
        Ok(SchurExpansion { coeffs, degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in reverse-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter().rev()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Most negative coefficient, earliest in reverse-lex order among ties.
    pub fn positivity(&self) -> Positivity {
        let mut witness: Option<(&Partition, &Rational)> = None;
        for (l, c) in self.terms() {
            if c.is_negative() && witness.is_none_or(|(_, w)| c < w) {
                witness = Some((l, c));
            }
        }
        Positivity {
            positive: witness.is_none(),
            witness: witness.map(|(l, c)| (l.clone(), c.clone())),
        }
    }

    pub fn to_power_sum(&self) -> PowerSumPoly {
        let mut out = PowerSumPoly::zero();
        for (l, c) in &self.coeffs {
            out += &from_schur(l).scale(c);
        }
        out
    }

    pub fn difference(&self, other: &SchurExpansion) -> Option<(Partition, Rational)> {
        let keys: std::collections::BTreeSet<&Partition> =
            self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter().rev().find_map(|l| {
            let d = self.coeff(l) - other.coeff(l);
            (!d.is_zero()).then(|| (l.clone(), d))
        })
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "s{l}")?;
            } else {
                write!(f, "{c}*s{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Schur expansion of the degree-`n` component of `f`.
pub fn to_schur(f: &PowerSumPoly, n: usize) -> SchurExpansion {
    let comp = f.component(n);
    let mut coeffs = BTreeMap::new();
    for lambda in all_partitions(n) {
        let mut c = Rational::zero();
        for (mu, x) in comp.terms() {
            let chi = mn(&lambda, mu);
            if chi != 0 {
                c += x * Rational::from_integer(BigInt::from(chi));
            }
        }
        if !c.is_zero() {
            coeffs.insert(lambda, c);
        }
    }
    SchurExpansion { coeffs, degree: n }
}

/// `s_lambda` in the power-sum basis.
pub fn from_schur(lambda: &Partition) -> PowerSumPoly {
    all_partitions(lambda.size())
        .into_iter()
        .filter_map(|mu| {
            let chi = mn(lambda, &mu);
            (chi != 0).then(|| {
                let c = Rational::new(BigInt::from(chi), mu.z());
                (mu, c)
            })
        })
        .collect()
}

pub fn is_schur_positive(f: &PowerSumPoly, n: usize) -> Positivity {
    to_schur(f, n).positivity()
}
