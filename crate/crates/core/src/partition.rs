use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. Ordered lexicographically,
/// so iterating a sorted collection in reverse gives reverse-lex order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
    size: u32,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    /// Builds from parts already in weakly decreasing order.
    pub fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn single(n: u32) -> Self {
        Self::from_sorted(vec![n])
    }

    /// The partition `(k^m)`.
    pub fn rectangle(k: u32, m: usize) -> Self {
        Self::from_sorted(vec![k; m])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// (part, multiplicity) pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Centralizer order `prod i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (p, m) in self.multiplicities() {
            for k in 1..=m {
                z *= BigInt::from(p) * BigInt::from(k);
            }
        }
        z
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Self::from_sorted(parts)
    }

    /// Multiset union of parts; the index of `p_self * p_other`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition {
            parts,
            size: self.size + other.size,
        }
    }

    /// Every part multiplied by `k`; the index of `p_k[p_self]`.
    pub fn scale(&self, k: u32) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| p * k).collect(),
            size: self.size * k,
        }
    }

    /// Removes one part equal to `part`, if present.
    pub fn without_part(&self, part: u32) -> Option<Partition> {
        let pos = self.parts.iter().rposition(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition {
            parts,
            size: self.size - part,
        })
    }

    /// Removes the first (largest) part.
    pub fn tail(&self) -> Partition {
        if self.parts.is_empty() {
            return self.clone();
        }
        Partition {
            parts: self.parts[1..].to_vec(),
            size: self.size - self.parts[0],
        }
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Domain(format!("partition `{s}` must look like [a,b,...]")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Domain(format!("bad part `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("partition `{s}` is not weakly decreasing")));
        }
        Partition::new(parts)
    }
}

/// Restriction on which part sizes may appear.
#[derive(Clone)]
pub enum PartRule {
    InSet(Vec<u32>),
    Odd,
    PowerOf(u32),
    Custom(Arc<dyn Fn(u32) -> bool + Send + Sync>),
}

impl PartRule {
    pub fn custom(f: impl Fn(u32) -> bool + Send + Sync + 'static) -> Self {
        PartRule::Custom(Arc::new(f))
    }

    pub fn allows(&self, part: u32) -> bool {
        match self {
            PartRule::InSet(set) => set.contains(&part),
            PartRule::Odd => part % 2 == 1,
            PartRule::PowerOf(q) => is_power_of(part, *q),
            PartRule::Custom(f) => f(part),
        }
    }
}

impl fmt::Debug for PartRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartRule::InSet(s) => write!(f, "InSet({s:?})"),
            PartRule::Odd => f.write_str("Odd"),
            PartRule::PowerOf(q) => write!(f, "PowerOf({q})"),
            PartRule::Custom(_) => f.write_str("Custom"),
        }
    }
}

/// `part == q^a` for some `a >= 0`.
pub fn is_power_of(mut part: u32, q: u32) -> bool {
    if q < 2 {
        return part == 1;
    }
    while part.is_multiple_of(q) {
        part /= q;
    }
    part == 1
}

/// A conjunction of part rules, optionally requiring distinct parts.
#[derive(Clone, Debug, Default)]
pub struct PartFilter {
    pub distinct: bool,
    pub rules: Vec<PartRule>,
}

impl PartFilter {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn distinct() -> Self {
        PartFilter {
            distinct: true,
            rules: Vec::new(),
        }
    }

    pub fn with(mut self, rule: PartRule) -> Self {
        self.rules.push(rule);
        self
    }

    pub fn allows_part(&self, part: u32) -> bool {
        self.rules.iter().all(|r| r.allows(part))
    }

    pub fn accepts(&self, lambda: &Partition) -> bool {
        (!self.distinct || lambda.is_distinct()) && lambda.parts().iter().all(|&p| self.allows_part(p))
    }
}

/// Lazily enumerates the partitions of `n` passing `filter`, in reverse-lex order.
pub fn partitions_of(n: usize, filter: &PartFilter) -> Partitions {
    let allowed = (1..=n as u32).rev().filter(|&p| filter.allows_part(p)).collect();
    Partitions {
        allowed,
        distinct: filter.distinct,
        stack: Vec::new(),
        rem: n as u32,
        started: false,
        done: false,
    }
}

pub fn all_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n, &PartFilter::none()).collect()
}

pub struct Partitions {
    allowed: Vec<u32>,
    distinct: bool,
    stack: Vec<usize>,
    rem: u32,
    started: bool,
    done: bool,
}

impl Partitions {
    fn descend(&mut self, mut from: usize) -> bool {
        while self.rem > 0 {
            match (from..self.allowed.len()).find(|&k| self.allowed[k] <= self.rem) {
                Some(k) => {
                    self.stack.push(k);
                    self.rem -= self.allowed[k];
                    from = if self.distinct { k + 1 } else { k };
                }
                None => return false,
            }
        }
        true
    }

    fn current(&self) -> Partition {
        Partition::from_sorted(self.stack.iter().map(|&k| self.allowed[k]).collect())
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.descend(0) {
                return Some(self.current());
            }
        }
        while let Some(k) = self.stack.pop() {
            self.rem += self.allowed[k];
            if self.descend(k + 1) {
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn factorial(n: usize) -> BigInt {
        (1..=n).map(BigInt::from).product()
    }

    #[test]
    fn counts_match_partition_numbers() {
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(all_partitions(n).len(), c, "n={n}");
        }
    }

    #[test]
    fn order_is_reverse_lex() {
        let got: Vec<String> = all_partitions(4).iter().map(|l| l.to_string()).collect();
        assert_eq!(got, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        for n in 0..=10 {
            let ps = all_partitions(n);
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn filtered_enumeration() {
        let pow2 = PartFilter::none().with(PartRule::PowerOf(2));
        let got: Vec<Partition> = partitions_of(4, &pow2).collect();
        assert_eq!(got, vec![p(&[4]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        let both = PartFilter::distinct().with(PartRule::PowerOf(2));
        assert_eq!(partitions_of(6, &both).collect::<Vec<_>>(), vec![p(&[4, 2])]);
        // brute force: filter the unrestricted list
        for n in 0..=12 {
            for f in [
                PartFilter::distinct(),
                PartFilter::none().with(PartRule::Odd),
                PartFilter::distinct().with(PartRule::InSet(vec![1, 3, 4])),
            ] {
                let brute: Vec<Partition> =
                    all_partitions(n).into_iter().filter(|l| f.accepts(l)).collect();
                assert_eq!(partitions_of(n, &f).collect::<Vec<_>>(), brute);
            }
        }
    }

    #[test]
    fn z_examples() {
        assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(p(&[3]).z(), BigInt::from(3));
        assert_eq!(p(&[2, 1, 1]).z(), BigInt::from(2 * 2));
    }

    #[test]
    fn class_equation() {
        for n in 0..=12 {
            let total: BigInt = all_partitions(n).iter().map(|l| factorial(n) / l.z()).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        for n in 0..=12 {
            for l in all_partitions(n) {
                assert_eq!(l.conjugate().conjugate(), l);
                assert_eq!(l.conjugate().size(), n);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert!("[1,3]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        for l in all_partitions(7) {
            assert_eq!(l.to_string().parse::<Partition>().unwrap(), l);
        }
    }

    #[test]
    fn union_and_scale() {
        assert_eq!(p(&[2]).union(&p(&[1])), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).union(&p(&[2, 2])), p(&[3, 2, 2, 1]));
        assert_eq!(p(&[2, 1]).scale(3), p(&[6, 3]));
        assert_eq!(p(&[2, 1, 1]).without_part(1), Some(p(&[2, 1])));
        assert_eq!(p(&[2]).without_part(1), None);
    }
}
