use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{divisors, gcd, is_prime, moebius, PrimeSet};
use crate::repmodules::{foulkes, foulkes_mod, l_s, PsiSpec, SubsetT};
use crate::schur::to_schur;
use crate::series::{apply_standard, plethystic_inverse, product_over, StandardKind, SymSeries};
use crate::symfunc::{int, PowerSumPoly, Rational};
use crate::verify::common::*;
use crate::verify::{Ctx, Recorder};

fn f_series(t: &SubsetT, n: usize) -> Result<SymSeries> {
    fam(&PsiSpec::SubsetT(t.clone()), n)
}

fn subsets(c: &Ctx, defaults: &[&str]) -> Result<Vec<SubsetT>> {
    match c.opts.get::<SubsetT>("t")? {
        Some(t) => Ok(vec![t]),
        None => defaults.iter().map(|d| d.parse()).collect(),
    }
}

fn ks(c: &Ctx, defaults: &[u64]) -> Result<Vec<u64>> {
    match c.opts.get::<u64>("k")? {
        Some(0) => Err(Error::BadOption("k must be positive".into())),
        Some(k) => Ok(vec![k]),
        None => Ok(defaults.to_vec()),
    }
}

/// `sum_{m | n, keep(m)} Lie_{n/m}[p_m]`.
fn divisor_sum(lie: &SymSeries, n: usize, keep: impl Fn(u64) -> bool) -> Result<PowerSumPoly> {
    let mut out = PowerSumPoly::zero();
    for m in divisors(n as u64)? {
        if keep(m) {
            out += &lie.component(n / m as usize).adams(m as u32);
        }
    }
    Ok(out)
}

/// `sum_{m in T} Lie[p_m]` truncated at the series order.
fn adams_sum(f: &SymSeries, ms: impl Iterator<Item = u64>) -> SymSeries {
    let t = f.trunc();
    ms.filter(|&m| m >= 1 && m as usize <= t)
        .fold(SymSeries::zero(t), |acc, m| &acc + &f.adams(m as u32))
}

pub fn product(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let n = c.n;
    let lie = lie(n)?;
    for t in subsets(c, &["{1}", "{1,2}", "{1,3}", "div(6)", "le(3)", "mod1(2)"])? {
        let f = f_series(&t, n)?;
        let h = apply_standard(StandardKind::H, &f)?;
        r.series_eq(&format!("H[F^{t}] = prod_(n in T) (1-p_n)^-1"), &h, &product_over(|m| t.contains(m), -1, -1, n)?);
        r.series_eq(&format!("F^{t} = sum_(m in T) Lie[p_m]"), &f, &adams_sum(&lie, (1..=n as u64).filter(|&m| t.contains(m))));
        let mut g = SymSeries::zero(n);
        for m in (1..=n as u64).filter(|&m| t.contains(m)) {
            let mut step = m;
            while step as usize <= n {
                g = &g + &lie.adams(step as u32);
                step *= 2;
            }
        }
        r.series_eq(&format!("E[G^{t}] = H[F^{t}]"), &apply_standard(StandardKind::E, &g)?, &h);
        for d in r.degrees() {
            let v = f.component(d).specialize_t(&int(1));
            let want = int(t.contains(d as u64) as i64);
            r.truth(&format!("f^{t}_n(1) = [n in T]"), d, v == want, || format!("value {v}"));
        }
    }
    Ok(())
}

fn alternating_e(n: usize) -> SymSeries {
    SymSeries::from_fn(n, |d| if d == 0 { PowerSumPoly::zero() } else { PowerSumPoly::e(d).scale(&sign(d - 1)) })
}

pub fn conj_inverse(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let n = c.n;
    let (lie, conj) = (lie(n)?, conj(n)?);
    let alt_e = alternating_e(n);
    r.series_eq("sum_m p_m[Lie] = sum Conj", &adams_sum(&lie, 1..=n as u64), &conj);
    r.series_eq("sum p_m = Conj[sum (-1)^(r-1) e_r]", &linear(n, |_| int(1)), &conj.plethysm(&alt_e)?);
    let mu = linear(n, |m| int(moebius(m).unwrap_or(0)));
    r.series_eq("Conj^(-1) = (sum (-1)^(r-1) e_r)[sum mu(n) p_n]", &plethystic_inverse(&conj)?, &alt_e.plethysm(&mu)?);
    for q in ks(c, &[2, 3, 5])? {
        if !is_prime(q) {
            return Err(Error::BadOption(format!("q={q} must be prime")));
        }
        let set = PrimeSet::new([q])?;
        let lq = SymSeries::try_from_fn(n, |d| if d == 0 { Ok(PowerSumPoly::zero()) } else { l_s(d, &set) })?;
        for d in r.degrees() {
            let mut qk = 1u64;
            let mut acc = PowerSumPoly::zero();
            while (d as u64).is_multiple_of(qk) {
                acc += &lie.component(d / qk as usize).adams(qk as u32);
                qk *= q;
            }
            r.poly_eq(&format!("Lie^({q})_n = sum_r Lie_(l q^(k-r))[p_(q^r)]"), d, lq.component(d), &acc);
        }
        let p1_minus = linear(n, |m| if m == 1 { int(1) } else if m == q { int(-1) } else { Rational::zero() });
        r.series_eq(&format!("(Lie^({q}))^(-1) = (sum (-1)^(r-1) e_r)[p1 - p_{q}]"), &plethystic_inverse(&lq)?, &alt_e.plethysm(&p1_minus)?);
    }
    Ok(())
}

pub fn recurrence(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let n = c.n;
    let lie = lie(n)?;
    for k in ks(c, &[2, 3, 4, 5])? {
        if k < 2 {
            return Err(Error::BadOption("k must be at least 2".into()));
        }
        let t = SubsetT::PowersOf(k);
        let f = f_series(&t, n)?;
        let powers: Vec<u64> = std::iter::successors(Some(1u64), |&m| Some(m * k)).take_while(|&m| m as usize <= n).collect();
        r.series_eq(&format!("H[F^pow({k})] = prod_r (1-p_(k^r))^-1"), &apply_standard(StandardKind::H, &f)?, &product_over(|m| powers.contains(&m), -1, -1, n)?);
        r.series_eq(&format!("F^pow({k}) = sum_r p_(k^r)[Lie]"), &f, &adams_sum(&lie, powers.iter().copied()));
        for d in r.degrees() {
            let mut want = lie.component(d).clone();
            if (d as u64).is_multiple_of(k) {
                want += &f.component(d / k as usize).adams(k as u32);
            }
            r.poly_eq(&format!("f_n = Lie_n + f_(n/{k})[p_{k}]"), d, f.component(d), &want);
        }
    }
    Ok(())
}

pub fn pair(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let n = c.n;
    let lie = lie(n)?;
    for k in ks(c, &[2, 3, 4, 5, 6, 7])? {
        if k < 2 {
            return Err(Error::BadOption("k must be at least 2".into()));
        }
        let t = SubsetT::Explicit(vec![1, k]);
        let f = f_series(&t, n)?;
        let w = parts_sum(n, |l| l.parts().iter().all(|&p| p == 1 || p as u64 == k));
        r.series_eq(&format!("sum W_(n,{k}) = H[F^{{1,{k}}}]"), &w, &apply_standard(StandardKind::H, &f)?);
        for d in r.degrees() {
            let want = divisor_sum(&lie, d, |m| m == 1 || m == k)?;
            r.poly_eq(&format!("f_n = Lie_n + Lie_(n/{k})[p_{k}]"), d, f.component(d), &want);
            if is_prime(k) {
                r.poly_eq(&format!("f^{{1,{k}}}_n = l_n^({k})"), d, f.component(d), &foulkes_mod(d, k as usize)?);
                r.positive(&format!("f^{{1,{k}}}_n is Schur-positive"), d, f.component(d));
            }
        }
    }
    Ok(())
}

pub fn pair_ext(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let n = c.n;
    for k in ks(c, &[2, 3, 4, 5, 6])? {
        if k < 2 {
            return Err(Error::BadOption("k must be at least 2".into()));
        }
        let f = f_series(&SubsetT::Explicit(vec![1, k]), n)?;
        let lhs = apply_standard(StandardKind::E, &f)?.omega();
        let k_sign = if k % 2 == 1 { -1 } else { 1 };
        let rhs = std(StandardKind::GeomP1, n)
            .mul(&product_over(|m| m == k, k_sign, -1, n)?)
            .mul(&product_over(|m| m == 2 || m == 2 * k, 1, 1, n)?);
        r.series_eq(&format!("omega(E[F^{{1,{k}}}]) = product formula"), &lhs, &rhs);
        if is_prime(k) {
            for d in r.degrees() {
                r.positive(&format!("omega(E[F^{{1,{k}}}]) is Schur-positive"), d, lhs.component(d));
            }
        }
    }
    Ok(())
}

fn family_product_and_sum(c: &Ctx, r: &mut Recorder, label: &str, make: fn(u64) -> SubsetT, defaults: &[u64]) -> Result<()> {
    let n = c.n;
    let lie = lie(n)?;
    for k in ks(c, defaults)? {
        let t = make(k);
        let f = f_series(&t, n)?;
        r.series_eq(&format!("H[F^{t}] = prod_(n in T) (1-p_n)^-1"), &apply_standard(StandardKind::H, &f)?, &product_over(|m| t.contains(m), -1, -1, n)?);
        for d in r.degrees() {
            let want = divisor_sum(&lie, d, |m| t.contains(m))?;
            r.poly_eq(&format!("f^{t}_n = sum over {label} divisors m of Lie_(n/m)[p_m]"), d, f.component(d), &want);
        }
    }
    Ok(())
}

pub fn initial(c: &Ctx, r: &mut Recorder) -> Result<()> {
    family_product_and_sum(c, r, "small", SubsetT::AtMost, &[2, 3, 4])
}

pub fn one_mod(c: &Ctx, r: &mut Recorder) -> Result<()> {
    family_product_and_sum(c, r, "congruent", SubsetT::OneMod, &[2, 3, 4])
}

pub fn divisor_sets(c: &Ctx, r: &mut Recorder) -> Result<()> {
    family_product_and_sum(c, r, "common", SubsetT::DivisorsOf, &[2, 4, 6, 12])?;
    let lie = lie(c.n)?;
    for k in ks(c, &[2, 4, 6, 12])? {
        for d in r.degrees() {
            let want = divisor_sum(&lie, d, |m| k % m == 0)?;
            r.poly_eq(&format!("l_n^({k}) = sum_(m | (k,n)) Lie_(n/m)[p_m]"), d, &foulkes_mod(d, k as usize)?, &want);
        }
    }
    Ok(())
}

pub fn regular(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let lie = lie(c.n)?;
    for n in r.degrees() {
        let p1n = PowerSumPoly::p1_power(n);
        let mut by_k = PowerSumPoly::zero();
        let mut by_foulkes = PowerSumPoly::zero();
        for k in 1..=n as u64 {
            by_k += &divisor_sum(&lie, n, |m| gcd(k, n as u64).is_multiple_of(m))?;
            by_foulkes += &foulkes(n, k as usize)?;
        }
        let mut weighted = PowerSumPoly::zero();
        for d in divisors(n as u64)? {
            weighted += &lie.component(d as usize).adams((n as u64 / d) as u32).scale(&int(d as i64));
        }
        r.poly_eq("p1^n = sum_k sum_(m | (k,n)) Lie_(n/m)[p_m]", n, &by_k, &p1n);
        r.poly_eq("p1^n = sum_(d | n) d Lie_d[p_(n/d)]", n, &weighted, &p1n);
        r.poly_eq("p1^n = sum_k l_n^(k)", n, &by_foulkes, &p1n);
    }
    Ok(())
}

pub fn odd(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let n = c.n;
    let lie = lie(n)?;
    let bar2 = PrimeSet::new([2])?.complement();
    let odd_sum = adams_sum(&lie, (1..=n as u64).filter(|m| m % 2 == 1));
    r.series_eq(
        "H[sum_(m odd) p_m[Lie]] = prod_odd (1-p_n)^-1",
        &apply_standard(StandardKind::H, &odd_sum)?,
        &product_over(|m| m % 2 == 1, -1, -1, n)?,
    );
    for d in r.degrees() {
        r.poly_eq("sum_(m odd) p_m[Lie]|_n = L^(not 2)_n", d, odd_sum.component(d), &l_s(d, &bar2)?);
        r.positive("sum_(m odd) p_m[Lie]|_n is Schur-positive", d, odd_sum.component(d));
    }
    Ok(())
}

pub fn conj_lift(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let n = c.n;
    let (lie, conj) = (lie(n)?, conj(n)?);
    for q in ks(c, &[2, 3, 4, 5, 6])? {
        if q < 2 {
            return Err(Error::BadOption("q must be at least 2".into()));
        }
        let powers = std::iter::successors(Some(1u64), |&m| Some(m * q)).take_while(|&m| m as usize <= n);
        let lifted = adams_sum(&lie, powers);
        let total = adams_sum(&lifted, (1..=n as u64).filter(|m| m % q != 0));
        r.series_eq(&format!("sum Conj = sum_(q not | n) p_n[sum_k Lie[p_(q^k)]], q={q}"), &total, &conj);
        if is_prime(q) {
            let set = PrimeSet::new([q])?;
            let lq = SymSeries::try_from_fn(n, |d| if d == 0 { Ok(PowerSumPoly::zero()) } else { l_s(d, &set) })?;
            r.series_eq(&format!("Lie^({q}) = sum_k Lie[p_(q^k)]"), &lq, &lifted);
        }
    }
    Ok(())
}

fn greatest_proper_divisor(n: u64) -> u64 {
    divisors(n).ok().and_then(|d| d.into_iter().rev().nth(1)).unwrap_or(1)
}

pub fn cor610(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let n_max = c.n;
    let lie = lie(n_max)?;
    let conj = conj(n_max)?;
    for n in r.degrees() {
        if n >= 3 && !is_prime(n as u64) {
            let s = to_schur(conj.component(n), n);
            for arm in 0..n {
                let missing = arm == 1 || (n % 2 == 1 && arm == n - 2) || (n % 2 == 0 && arm == n - 1);
                let coeff = s.coeff(&hook(n, arm));
                let ok = if missing { coeff.is_zero() } else { coeff >= int(1) };
                r.truth("Conj_n contains exactly the predicted hooks", n, ok, || {
                    format!("hook {} has coefficient {coeff}", hook(n, arm))
                });
            }
        }
    }
    for k in ks(c, &(1..=n_max as u64).collect::<Vec<_>>())? {
        let t = SubsetT::AtMost(k);
        let f = f_series(&t, n_max)?;
        for n in r.degrees() {
            let n64 = n as u64;
            let prime = is_prime(n64);
            let gpd_ok = n64 > k && greatest_proper_divisor(n64) <= k;
            if !(prime || n64 == k || gpd_ok) {
                continue;
            }
            let fn_ = f.component(n);
            r.positive(&format!("f^le({k})_n is Schur-positive"), n, fn_);
            let want = if n64 <= k {
                conj.component(n).clone()
            } else if prime {
                lie.component(n).clone()
            } else {
                conj.component(n) - &PowerSumPoly::p(n as u32)
            };
            r.poly_eq(&format!("f^le({k})_n identified"), n, fn_, &want);
        }
    }
    Ok(())
}
