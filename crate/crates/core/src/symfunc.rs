use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{all_partitions, Partition};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn sign(negative: bool) -> Rational {
    if negative {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// `(-1)^(|lambda| - l(lambda))`, the sign of a permutation of cycle type `lambda`.
pub fn omega_sign(lambda: &Partition) -> Rational {
    sign((lambda.size() - lambda.len()) % 2 == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    P,
    H,
    E,
}

/// A symmetric function in the power-sum basis with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PowerSumPoly {
    terms: BTreeMap<Partition, Rational>,
}

impl PowerSumPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Partition::empty(), Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Partition::empty(), c)
    }

    pub fn term(lambda: Partition, c: Rational) -> Self {
        let mut f = Self::zero();
        f.add_term(lambda, c);
        f
    }

    /// `p_lambda`.
    pub fn p_lambda(lambda: Partition) -> Self {
        Self::term(lambda, Rational::one())
    }

    pub fn p(n: u32) -> Self {
        Self::p_lambda(Partition::single(n))
    }

    pub fn p1_power(n: usize) -> Self {
        Self::p_lambda(Partition::rectangle(1, n))
    }

    pub fn generator(kind: GenKind, n: usize) -> Result<Self> {
        match kind {
            GenKind::P if n == 0 => Err(Error::Domain("p_0 is not defined".into())),
            GenKind::P => Ok(Self::p(n as u32)),
            GenKind::H => Ok(Self::h(n)),
            GenKind::E => Ok(Self::e(n)),
        }
    }

    pub fn h(n: usize) -> Self {
        all_partitions(n)
            .into_iter()
            .map(|l| {
                let c = Rational::new(BigInt::one(), l.z());
                (l, c)
            })
            .collect()
    }

    pub fn e(n: usize) -> Self {
        Self::h(n).omega()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        terms.into_iter().collect()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in increasing lexicographic partition order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Partition::empty())
    }

    pub fn component(&self, n: usize) -> PowerSumPoly {
        self.filter(|l| l.size() == n)
    }

    pub fn truncate(&self, n: usize) -> PowerSumPoly {
        self.filter(|l| l.size() <= n)
    }

    pub fn filter(&self, keep: impl Fn(&Partition) -> bool) -> PowerSumPoly {
        PowerSumPoly {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|l| l.size()).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|l| l.size()).min()
    }

    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.terms.keys().all(|l| l.size() == n)
    }

    pub fn scale(&self, c: &Rational) -> PowerSumPoly {
        if c.is_zero() {
            return Self::zero();
        }
        PowerSumPoly {
            terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect(),
        }
    }

    /// Applies a coefficient map `c -> c * w(lambda)`.
    pub fn reweight(&self, w: impl Fn(&Partition) -> Rational) -> PowerSumPoly {
        self.terms
            .iter()
            .map(|(l, c)| (l.clone(), c * w(l)))
            .collect()
    }

    pub fn multiply(&self, other: &PowerSumPoly, trunc: Option<usize>) -> PowerSumPoly {
        let mut out = PowerSumPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if trunc.is_some_and(|t| a.size() + b.size() > t) {
                    continue;
                }
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }

    pub fn pow(&self, m: usize, trunc: Option<usize>) -> PowerSumPoly {
        let mut acc = PowerSumPoly::one();
        for _ in 0..m {
            acc = acc.multiply(self, trunc);
        }
        acc
    }

    pub fn omega(&self) -> PowerSumPoly {
        self.reweight(omega_sign)
    }

    /// `p_k[f]`: every `p_i` replaced by `p_{k i}`.
    pub fn adams(&self, k: u32) -> PowerSumPoly {
        PowerSumPoly {
            terms: self.terms.iter().map(|(l, c)| (l.scale(k), c.clone())).collect(),
        }
    }

    /// `f[g]` truncated at degree `trunc`.
    pub fn plethysm(&self, g: &PowerSumPoly, trunc: usize) -> Result<PowerSumPoly> {
        if !g.constant_term().is_zero() {
            return Err(Error::ConstantTerm);
        }
        let Some(low) = g.min_degree() else {
            return Ok(PowerSumPoly::constant(self.constant_term()));
        };
        let mut powers: HashMap<(u32, usize), PowerSumPoly> = HashMap::new();
        let mut out = PowerSumPoly::zero();
        for (lambda, c) in &self.terms {
            if lambda.size() * low > trunc {
                continue;
            }
            let mut acc = PowerSumPoly::constant(c.clone());
            for (k, m) in lambda.multiplicities() {
                let piece = cached_power(&mut powers, g, k, m, trunc);
                acc = acc.multiply(piece, Some(trunc));
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        Ok(out)
    }

    pub fn hall_inner_product(&self, other: &PowerSumPoly) -> Rational {
        self.terms
            .iter()
            .filter_map(|(l, x)| {
                other
                    .terms
                    .get(l)
                    .map(|y| x * y * Rational::from_integer(l.z()))
            })
            .sum()
    }

    /// Formal partial derivative with respect to `p_1`.
    pub fn p1_derivative(&self) -> PowerSumPoly {
        let mut out = PowerSumPoly::zero();
        for (l, c) in &self.terms {
            let m = l.multiplicity(1);
            if m > 0 {
                out.add_term(l.without_part(1).unwrap(), c * int(m as i64));
            }
        }
        out
    }

    /// Value after substituting `p_d -> t` for every `d`.
    pub fn specialize_t(&self, t: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(l, c)| c * num_traits::pow(t.clone(), l.len()))
            .sum()
    }

    /// `n!` times the coefficient of `p_{1^n}`.
    pub fn dimension(&self, n: usize) -> Rational {
        self.coeff(&Partition::rectangle(1, n)) * Rational::from_integer(factorial(n))
    }

    /// The leading term of a nonzero difference, for reporting.
    pub fn first_term(&self) -> Option<(Partition, Rational)> {
        self.terms.iter().next_back().map(|(l, c)| (l.clone(), c.clone()))
    }

    pub fn has_negative(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }
}

fn cached_power<'a>(
    cache: &'a mut HashMap<(u32, usize), PowerSumPoly>,
    g: &PowerSumPoly,
    k: u32,
    m: usize,
    trunc: usize,
) -> &'a PowerSumPoly {
    if !cache.contains_key(&(k, m)) {
        let value = if m == 0 {
            PowerSumPoly::one()
        } else {
            let base = g.adams(k).truncate(trunc);
            if m == 1 {
                base
            } else {
                let prev = cached_power(cache, g, k, m - 1, trunc).clone();
                prev.multiply(&base, Some(trunc))
            }
        };
        cache.insert((k, m), value);
    }
    &cache[&(k, m)]
}

impl FromIterator<(Partition, Rational)> for PowerSumPoly {
    fn from_iter<I: IntoIterator<Item = (Partition, Rational)>>(iter: I) -> Self {
        let mut f = PowerSumPoly::zero();
        for (l, c) in iter {
            f.add_term(l, c);
        }
        f
    }
}

impl AddAssign<&PowerSumPoly> for PowerSumPoly {
    fn add_assign(&mut self, rhs: &PowerSumPoly) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c.clone());
        }
    }
}

impl SubAssign<&PowerSumPoly> for PowerSumPoly {
    fn sub_assign(&mut self, rhs: &PowerSumPoly) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), -c.clone());
        }
    }
}

impl Add<&PowerSumPoly> for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn add(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&PowerSumPoly> for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn sub(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for PowerSumPoly {
    type Output = PowerSumPoly;
    fn add(mut self, rhs: PowerSumPoly) -> PowerSumPoly {
        self += &rhs;
        self
    }
}

impl Sub for PowerSumPoly {
    type Output = PowerSumPoly;
    fn sub(mut self, rhs: PowerSumPoly) -> PowerSumPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn neg(self) -> PowerSumPoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for PowerSumPoly {
    type Output = PowerSumPoly;
    fn neg(self) -> PowerSumPoly {
        -&self
    }
}

impl Mul<&PowerSumPoly> for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn mul(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        self.multiply(rhs, None)
    }
}

impl Mul for PowerSumPoly {
    type Output = PowerSumPoly;
    fn mul(self, rhs: PowerSumPoly) -> PowerSumPoly {
        self.multiply(&rhs, None)
    }
}

impl fmt::Display for PowerSumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*p{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PowerSumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
