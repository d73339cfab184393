use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::repmodules::{from_psi, PsiSpec};
use crate::symfunc::{int, GenKind, PowerSumPoly, Rational};

/// A formal sum of symmetric functions truncated after degree `trunc`;
/// component `d` is homogeneous of degree `d`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymSeries {
    comps: Vec<PowerSumPoly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    H,
    E,
    Hpm,
    Epm,
    GeomP1,
}

impl SymSeries {
    pub fn zero(trunc: usize) -> Self {
        SymSeries {
            comps: vec![PowerSumPoly::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        Self::from_poly(&PowerSumPoly::one(), trunc)
    }

    pub fn from_fn(trunc: usize, mut f: impl FnMut(usize) -> PowerSumPoly) -> Self {
        SymSeries {
            comps: (0..=trunc).map(|n| f(n).component(n)).collect(),
        }
    }

    pub fn try_from_fn(trunc: usize, mut f: impl FnMut(usize) -> Result<PowerSumPoly>) -> Result<Self> {
        let comps = (0..=trunc)
            .map(|n| f(n).map(|p| p.component(n)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymSeries { comps })
    }

    pub fn from_poly(f: &PowerSumPoly, trunc: usize) -> Self {
        let mut comps = vec![PowerSumPoly::zero(); trunc + 1];
        for (l, c) in f.terms() {
            if l.size() <= trunc {
                comps[l.size()].add_term(l.clone(), c.clone());
            }
        }
        SymSeries { comps }
    }

    pub fn trunc(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn component(&self, n: usize) -> &PowerSumPoly {
        &self.comps[n]
    }

    pub fn components(&self) -> &[PowerSumPoly] {
        &self.comps
    }

    pub fn to_poly(&self) -> PowerSumPoly {
        let mut out = PowerSumPoly::zero();
        for c in &self.comps {
            out += c;
        }
        out
    }

    pub fn truncate(&self, trunc: usize) -> SymSeries {
        SymSeries {
            comps: self.comps.iter().take(trunc + 1).cloned().collect(),
        }
    }

    pub fn map(&self, f: impl Fn(usize, &PowerSumPoly) -> PowerSumPoly) -> SymSeries {
        SymSeries {
            comps: self.comps.iter().enumerate().map(|(n, c)| f(n, c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymSeries {
        self.map(|_, f| f.scale(c))
    }

    pub fn omega(&self) -> SymSeries {
        self.map(|_, f| f.omega())
    }

    /// Component `n` becomes `(-1)^(n-1) omega(f_n)`.
    pub fn alt(&self) -> SymSeries {
        self.map(|n, f| if n % 2 == 1 { f.omega() } else { -f.omega() })
    }

    /// Component `n` picks up the sign `(-1)^n`; the substitution `p_i -> -p_i` on a series in `p_1`.
    pub fn signed(&self) -> SymSeries {
        self.map(|n, f| if n % 2 == 0 { f.clone() } else { -f })
    }

    pub fn p1_derivative(&self) -> SymSeries {
        let t = self.trunc();
        SymSeries::from_fn(t.saturating_sub(1), |n| self.comps[n + 1].p1_derivative())
    }

    /// `G[p_k]` (equivalently `p_k[G]`), truncated at the same order.
    pub fn adams(&self, k: u32) -> SymSeries {
        let mut out = SymSeries::zero(self.trunc());
        for (n, c) in self.comps.iter().enumerate() {
            let m = n * k as usize;
            if m <= self.trunc() {
                out.comps[m] = c.adams(k);
            }
        }
        out
    }

    /// Drops the components of degree below `d`.
    pub fn from_degree(&self, d: usize) -> SymSeries {
        self.map(|n, f| if n < d { PowerSumPoly::zero() } else { f.clone() })
    }

    /// `F_{>=2}`: the series with its linear component removed.
    pub fn ge2(&self) -> SymSeries {
        self.map(|n, f| if n == 1 { PowerSumPoly::zero() } else { f.clone() })
    }

    pub fn mul(&self, other: &SymSeries) -> SymSeries {
        let t = self.trunc().min(other.trunc());
        let mut out = SymSeries::zero(t);
        for i in 0..=t {
            if self.comps[i].is_zero() {
                continue;
            }
            for j in 0..=(t - i) {
                if !other.comps[j].is_zero() {
                    let prod = self.comps[i].multiply(&other.comps[j], None);
                    out.comps[i + j] += &prod;
                }
            }
        }
        out
    }

    pub fn pow(&self, m: usize) -> SymSeries {
        let mut acc = SymSeries::one(self.trunc());
        for _ in 0..m {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn recip(&self) -> Result<SymSeries> {
        let c = self.comps[0].constant_term();
        if c.is_zero() {
            return Err(Error::Domain("series with zero constant term is not invertible".into()));
        }
        let inv_c = Rational::one() / c;
        let t = self.trunc();
        let mut out = SymSeries::zero(t);
        out.comps[0] = PowerSumPoly::constant(inv_c.clone());
        for n in 1..=t {
            let mut acc = PowerSumPoly::zero();
            for k in 1..=n {
                acc += &self.comps[k].multiply(&out.comps[n - k], None);
            }
            out.comps[n] = acc.scale(&-inv_c.clone());
        }
        Ok(out)
    }

    pub fn div(&self, other: &SymSeries) -> Result<SymSeries> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn exp(&self) -> Result<SymSeries> {
        if !self.comps[0].is_zero() {
            return Err(Error::ConstantTerm);
        }
        let t = self.trunc();
        let mut out = SymSeries::one(t);
        for n in 1..=t {
            let mut acc = PowerSumPoly::zero();
            for k in 1..=n {
                if !self.comps[k].is_zero() {
                    acc += &self.comps[k].multiply(&out.comps[n - k], None).scale(&int(k as i64));
                }
            }
            out.comps[n] = acc.scale(&(Rational::one() / int(n as i64)));
        }
        Ok(out)
    }

    pub fn log(&self) -> Result<SymSeries> {
        if self.comps[0] != PowerSumPoly::one() {
            return Err(Error::Domain("log needs constant term 1".into()));
        }
        let t = self.trunc();
        let mut out = SymSeries::zero(t);
        for n in 1..=t {
            let mut acc = PowerSumPoly::zero();
            for k in 1..n {
                acc += &out.comps[k].multiply(&self.comps[n - k], None).scale(&int(k as i64));
            }
            out.comps[n] = &self.comps[n] - &acc.scale(&(Rational::one() / int(n as i64)));
        }
        Ok(out)
    }

    /// `self[g]`, truncated at the smaller of the two orders.
    pub fn plethysm(&self, g: &SymSeries) -> Result<SymSeries> {
        if !g.comps[0].is_zero() {
            return Err(Error::ConstantTerm);
        }
        let t = self.trunc().min(g.trunc());
        let value = self.to_poly().plethysm(&g.to_poly(), t)?;
        Ok(SymSeries::from_poly(&value, t))
    }

    /// First degree where the two series differ, with the differing component.
    pub fn first_difference(&self, other: &SymSeries) -> Option<(usize, PowerSumPoly)> {
        let t = self.trunc().min(other.trunc());
        (0..=t).find_map(|n| {
            let d = &self.comps[n] - &other.comps[n];
            (!d.is_zero()).then_some((n, d))
        })
    }

    pub fn agrees_with(&self, other: &SymSeries) -> bool {
        self.first_difference(other).is_none()
    }
}

impl fmt::Debug for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymSeries(trunc={}) ", self.trunc())?;
        f.debug_list()
            .entries(self.comps.iter().enumerate().filter(|(_, c)| !c.is_zero()))
            .finish()
    }
}

fn zip(a: &SymSeries, b: &SymSeries, op: impl Fn(&PowerSumPoly, &PowerSumPoly) -> PowerSumPoly) -> SymSeries {
    let t = a.trunc().min(b.trunc());
    SymSeries::from_fn(t, |n| op(&a.comps[n], &b.comps[n]))
}

impl Add<&SymSeries> for &SymSeries {
    type Output = SymSeries;
    fn add(self, rhs: &SymSeries) -> SymSeries {
        zip(self, rhs, |a, b| a + b)
    }
}

impl Sub<&SymSeries> for &SymSeries {
    type Output = SymSeries;
    fn sub(self, rhs: &SymSeries) -> SymSeries {
        zip(self, rhs, |a, b| a - b)
    }
}

impl Add for SymSeries {
    type Output = SymSeries;
    fn add(self, rhs: SymSeries) -> SymSeries {
        &self + &rhs
    }
}

impl Sub for SymSeries {
    type Output = SymSeries;
    fn sub(self, rhs: SymSeries) -> SymSeries {
        &self - &rhs
    }
}

impl Neg for &SymSeries {
    type Output = SymSeries;
    fn neg(self) -> SymSeries {
        self.map(|_, f| -f)
    }
}

impl Mul<&SymSeries> for &SymSeries {
    type Output = SymSeries;
    fn mul(self, rhs: &SymSeries) -> SymSeries {
        SymSeries::mul(self, rhs)
    }
}

pub fn standard_series(kind: StandardKind, trunc: usize) -> SymSeries {
    SymSeries::from_fn(trunc, |n| match kind {
        StandardKind::H => PowerSumPoly::h(n),
        StandardKind::E => PowerSumPoly::e(n),
        StandardKind::Hpm if n % 2 == 1 => -PowerSumPoly::h(n),
        StandardKind::Hpm => PowerSumPoly::h(n),
        StandardKind::Epm if n % 2 == 1 => -PowerSumPoly::e(n),
        StandardKind::Epm => PowerSumPoly::e(n),
        StandardKind::GeomP1 => PowerSumPoly::p1_power(n),
    })
}

/// `sum_{n=1}^{trunc} f_n`, optionally without `f_1`.
pub fn family_series(spec: &PsiSpec, trunc: usize, strip_linear: bool) -> Result<SymSeries> {
    SymSeries::try_from_fn(trunc, |n| {
        if n == 0 || (strip_linear && n == 1) {
            Ok(PowerSumPoly::zero())
        } else {
            from_psi(spec, n)
        }
    })
}

/// `outer[F]` for any outer series; `F` must have zero constant term.
pub fn outer_apply(outer: &SymSeries, f: &SymSeries) -> Result<SymSeries> {
    outer.plethysm(f)
}

/// The graded pieces `h_r[F]` (or `e_r[F]`) for `r = 0..=trunc`, via
/// `r h_r = sum_k p_k h_{r-k}` lifted through plethysm.
pub fn graded_powers(kind: GenKind, f: &SymSeries) -> Result<Vec<SymSeries>> {
    if !f.comps[0].is_zero() {
        return Err(Error::ConstantTerm);
    }
    let t = f.trunc();
    let adams: Vec<SymSeries> = (0..=t).map(|k| f.adams(k.max(1) as u32)).collect();
    let mut out = vec![SymSeries::one(t)];
    for r in 1..=t {
        let mut acc = SymSeries::zero(t);
        for k in 1..=r {
            let term = adams[k].mul(&out[r - k]);
            let negate = kind == GenKind::E && k % 2 == 0;
            acc = if negate { &acc - &term } else { &acc + &term };
        }
        out.push(acc.scale(&(Rational::one() / int(r as i64))));
    }
    Ok(out)
}

/// `H[F]`, `E[F]`, `H^pm[F]` or `E^pm[F]` through the graded pieces.
pub fn apply_standard(kind: StandardKind, f: &SymSeries) -> Result<SymSeries> {
    let (gen, alternate) = match kind {
        StandardKind::H => (GenKind::H, false),
        StandardKind::E => (GenKind::E, false),
        StandardKind::Hpm => (GenKind::H, true),
        StandardKind::Epm => (GenKind::E, true),
        StandardKind::GeomP1 => return outer_apply(&standard_series(kind, f.trunc()), f),
    };
    let pieces = graded_powers(gen, f)?;
    let mut out = SymSeries::zero(f.trunc());
    for (r, piece) in pieces.iter().enumerate() {
        out = if alternate && r % 2 == 1 { &out - piece } else { &out + piece };
    }
    Ok(out)
}

/// Degree-`n` component of `h_r[F]` or `e_r[F]`.
pub fn graded_pleth(kind: GenKind, r: usize, f: &SymSeries, n: usize) -> Result<PowerSumPoly> {
    if n > f.trunc() {
        return Err(Error::Domain(format!("degree {n} exceeds truncation {}", f.trunc())));
    }
    let pieces = graded_powers(kind, &f.truncate(n))?;
    Ok(pieces.get(r).map(|s| s.component(n).clone()).unwrap_or_default())
}

fn lambda_product(kind: GenKind, q: &SymSeries, lambda: &Partition) -> Result<PowerSumPoly> {
    let n = lambda.size();
    let mut acc = PowerSumPoly::one();
    for (i, m) in lambda.multiplicities() {
        let qi = q.comps.get(i as usize).cloned().unwrap_or_default();
        let outer = PowerSumPoly::generator(kind, m)?;
        acc = acc.multiply(&outer.plethysm(&qi, n)?, Some(n));
    }
    Ok(acc)
}

/// `H_lambda[Q] = prod_i h_{m_i}[q_i]`.
pub fn h_lambda(q: &SymSeries, lambda: &Partition) -> Result<PowerSumPoly> {
    lambda_product(GenKind::H, q, lambda)
}

/// `E_lambda[Q] = prod_i e_{m_i}[q_i]`.
pub fn e_lambda(q: &SymSeries, lambda: &Partition) -> Result<PowerSumPoly> {
    lambda_product(GenKind::E, q, lambda)
}

pub fn alt_transform(f: &SymSeries) -> SymSeries {
    f.alt()
}

/// `prod_n (1 + sign p_n)^{c_n}` truncated at `trunc`, via exp/log.
pub fn product_expansion(exponent: &BTreeMap<u64, Rational>, sign: i32, trunc: usize) -> Result<SymSeries> {
    let mut log = PowerSumPoly::zero();
    for (&n, c) in exponent {
        if n == 0 {
            return Err(Error::Domain("product index must be positive".into()));
        }
        let mut j = 1usize;
        while n as usize * j <= trunc {
            // log(1 + x) = sum (-1)^{j-1} x^j / j with x = sign p_n
            let s = if sign < 0 || j.is_multiple_of(2) { -1 } else { 1 };
            let coeff = c * int(s) / int(j as i64);
            log.add_term(Partition::rectangle(n as u32, j), coeff);
            j += 1;
        }
    }
    SymSeries::from_poly(&log, trunc).exp()
}

/// `prod_{n in set, n <= trunc} (1 + sign p_n)^{power}`.
pub fn product_over(set: impl Fn(u64) -> bool, sign: i32, power: i64, trunc: usize) -> Result<SymSeries> {
    let exponent = (1..=trunc as u64)
        .filter(|&n| set(n))
        .map(|n| (n, int(power)))
        .collect();
    product_expansion(&exponent, sign, trunc)
}

/// `G` with `F[G] = p_1`, solved one degree at a time.
pub fn plethystic_inverse(f: &SymSeries) -> Result<SymSeries> {
    if !f.comps[0].is_zero() {
        return Err(Error::ConstantTerm);
    }
    let t = f.trunc();
    if t == 0 {
        return Ok(SymSeries::zero(0));
    }
    let p1 = Partition::single(1);
    let c = f.comps[1].coeff(&p1);
    if c.is_zero() || f.comps[1].len() != 1 {
        return Err(Error::DegenerateInverse);
    }
    let inv_c = Rational::one() / c;
    let mut g = SymSeries::zero(t);
    g.comps[1] = PowerSumPoly::p(1).scale(&inv_c);
    let fpoly = f.to_poly();
    for n in 2..=t {
        let partial = fpoly.plethysm(&g.to_poly(), n)?.component(n);
        g.comps[n] = partial.scale(&-inv_c.clone());
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{all_partitions, partitions_of, PartFilter, PartRule};
    use crate::repmodules::lie;
    use crate::schur::to_schur;

    fn sum_over(n_max: usize, filter: &PartFilter) -> SymSeries {
        SymSeries::from_fn(n_max, |n| {
            partitions_of(n, filter).map(|l| (l, int(1))).collect()
        })
    }

    #[test]
    fn standard_examples() {
        let h = standard_series(StandardKind::H, 2);
        assert_eq!(h.to_poly(), &(&PowerSumPoly::one() + &PowerSumPoly::h(1)) + &PowerSumPoly::h(2));
        let he = standard_series(StandardKind::Hpm, 10).mul(&standard_series(StandardKind::E, 10));
        assert_eq!(he, SymSeries::one(10));
        let eh = standard_series(StandardKind::Epm, 12).mul(&standard_series(StandardKind::H, 12));
        assert_eq!(eh, SymSeries::one(12));
        assert_eq!(
            standard_series(StandardKind::GeomP1, 3).to_poly(),
            (0..=3).map(|k| (Partition::rectangle(1, k), int(1))).collect()
        );
    }

    #[test]
    fn family_examples() {
        let l = family_series(&PsiSpec::Moebius, 3, false).unwrap();
        assert_eq!(l.component(1), &PowerSumPoly::p(1));
        assert_eq!(l.component(3), &lie(3).unwrap());
        let l2 = family_series(&PsiSpec::Moebius, 3, true).unwrap();
        assert!(l2.component(1).is_zero());
        let s = family_series(&PsiSpec::lie2(), 2, false).unwrap();
        assert_eq!(s.component(2), &PowerSumPoly::h(2));
    }

    #[test]
    fn outer_apply_agrees_with_graded_route() {
        let l = family_series(&PsiSpec::Moebius, 7, false).unwrap();
        for kind in [StandardKind::H, StandardKind::E, StandardKind::Hpm, StandardKind::Epm] {
            let generic = outer_apply(&standard_series(kind, 7), &l).unwrap();
            assert_eq!(generic, apply_standard(kind, &l).unwrap(), "{kind:?}");
        }
    }

    #[test]
    fn thrall_and_lie2() {
        let geom = standard_series(StandardKind::GeomP1, 8);
        let l = family_series(&PsiSpec::Moebius, 8, false).unwrap();
        assert_eq!(apply_standard(StandardKind::H, &l).unwrap(), geom);
        let l2 = family_series(&PsiSpec::lie2(), 8, false).unwrap();
        assert_eq!(apply_standard(StandardKind::E, &l2).unwrap(), geom);
        let e_lie = apply_standard(StandardKind::E, &l).unwrap().omega();
        let rhs = SymSeries::from_poly(&(&PowerSumPoly::one() + &PowerSumPoly::p(2)), 8).mul(&geom);
        assert_eq!(e_lie, rhs);
    }

    #[test]
    fn lambda_products() {
        let l = family_series(&PsiSpec::Moebius, 4, false).unwrap();
        assert_eq!(h_lambda(&l, &Partition::empty()).unwrap(), PowerSumPoly::one());
        assert_eq!(h_lambda(&l, &Partition::rectangle(1, 3)).unwrap(), PowerSumPoly::h(3));
        let total = all_partitions(4)
            .iter()
            .fold(PowerSumPoly::zero(), |acc, lam| &acc + &h_lambda(&l, lam).unwrap());
        assert_eq!(total, PowerSumPoly::p1_power(4));
    }

    #[test]
    fn graded_pieces_match_golden_cells() {
        let l = family_series(&PsiSpec::Moebius, 4, false).unwrap();
        let h2 = graded_pleth(GenKind::H, 2, &l, 4).unwrap();
        assert_eq!(to_schur(&h2, 4).to_string(), "s[3,1] + 2*s[2,2] + s[2,1,1] + s[1,1,1,1]");
        let l2 = family_series(&PsiSpec::lie2(), 5, false).unwrap();
        let e2 = graded_pleth(GenKind::E, 2, &l2, 4).unwrap();
        assert_eq!(to_schur(&e2, 4).to_string(), "2*s[3,1] + s[2,2] + s[2,1,1]");
        let e25 = graded_pleth(GenKind::E, 2, &l2, 5).unwrap();
        assert_eq!(
            to_schur(&e25, 5).to_string(),
            "s[5] + 2*s[4,1] + 2*s[3,2] + 2*s[3,1,1] + 3*s[2,2,1] + s[2,1,1,1]"
        );
    }

    #[test]
    fn alt_examples() {
        let l = family_series(&PsiSpec::Moebius, 8, false).unwrap();
        assert_eq!(l.alt().component(1), &PowerSumPoly::p(1));
        let one_plus_p1 = SymSeries::from_poly(&(&PowerSumPoly::one() + &PowerSumPoly::p(1)), 8);
        assert_eq!(apply_standard(StandardKind::H, &l.alt()).unwrap(), one_plus_p1);
        let l2 = family_series(&PsiSpec::lie2(), 8, false).unwrap();
        assert_eq!(apply_standard(StandardKind::E, &l2.alt()).unwrap(), one_plus_p1);
    }

    #[test]
    fn products() {
        let all = product_over(|_| true, -1, -1, 3).unwrap();
        assert_eq!(all, sum_over(3, &PartFilter::none()));
        let pow2 = product_over(|n| n.is_power_of_two(), -1, -1, 4).unwrap();
        assert_eq!(pow2.component(4), sum_over(4, &PartFilter::none().with(PartRule::PowerOf(2))).component(4));
        let odd = product_over(|n| n % 2 == 1, 1, 1, 4).unwrap();
        let distinct_odd = PartFilter::distinct().with(PartRule::Odd);
        assert_eq!(odd, sum_over(4, &distinct_odd));
        assert_eq!(odd.component(4), &PowerSumPoly::p_lambda(Partition::new(vec![3, 1]).unwrap()));
    }

    #[test]
    fn exp_log_inverse() {
        let l = family_series(&PsiSpec::Totient, 6, false).unwrap();
        let e = l.exp().unwrap();
        assert_eq!(e.log().unwrap(), l);
        let g = standard_series(StandardKind::H, 6);
        assert_eq!(g.mul(&g.recip().unwrap()), SymSeries::one(6));
    }

    #[test]
    fn inverses() {
        let t = 8;
        let p1 = SymSeries::from_poly(&PowerSumPoly::p(1), t);
        let f = SymSeries::from_poly(&(&PowerSumPoly::p(1) - &PowerSumPoly::p(2)), t);
        let g = plethystic_inverse(&f).unwrap();
        let expected = SymSeries::from_fn(t, |n| {
            if n.is_power_of_two() { PowerSumPoly::p(n as u32) } else { PowerSumPoly::zero() }
        });
        assert_eq!(g, expected);
        assert_eq!(g.plethysm(&f).unwrap(), p1);

        let h1 = &standard_series(StandardKind::H, 7) - &SymSeries::one(7);
        let lie_alt = family_series(&PsiSpec::Moebius, 7, false).unwrap().alt();
        assert_eq!(plethystic_inverse(&h1).unwrap(), lie_alt);

        let a = SymSeries::from_fn(7, |n| if n == 0 { PowerSumPoly::zero() } else { PowerSumPoly::p1_power(n).scale(&int(if n % 2 == 1 { 1 } else { -1 })) });
        let b = SymSeries::from_fn(7, |n| if n == 0 { PowerSumPoly::zero() } else { PowerSumPoly::p1_power(n) });
        assert_eq!(plethystic_inverse(&a).unwrap(), b);

        let bad = SymSeries::from_poly(&PowerSumPoly::p(2), 4);
        assert_eq!(plethystic_inverse(&bad), Err(Error::DegenerateInverse));
    }
}
