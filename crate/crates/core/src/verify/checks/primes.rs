use num_traits::{One, Zero};

use crate::error::Result;
use crate::numtheory::{divisors, gcd, PrimeSet};
use crate::partition::{is_power_of, Partition};
use crate::repmodules::{foulkes, l_s, PsiSpec};
use crate::series::{apply_standard, product_over, StandardKind, SymSeries};
use crate::symfunc::{factorial, int, Rational};
use crate::verify::common::*;
use crate::verify::{Ctx, Recorder};

fn ls_spec(s: &PrimeSet) -> PsiSpec {
    if s.is_complement() {
        PsiSpec::PrimeSetBar(s.complement())
    } else {
        PsiSpec::PrimeSet(s.clone())
    }
}

fn sets_from_opts(c: &Ctx, defaults: &[&str]) -> Result<Vec<PrimeSet>> {
    match c.opts.get::<PrimeSet>("s")? {
        Some(s) => Ok(vec![s]),
        None => defaults.iter().map(|d| d.parse()).collect(),
    }
}

fn without_two(s: &PrimeSet) -> Result<PrimeSet> {
    if s.is_complement() {
        let mut excluded = s.primes().to_vec();
        excluded.push(2);
        Ok(PrimeSet::new(excluded)?.complement())
    } else {
        PrimeSet::new(s.primes().iter().copied().filter(|&p| p != 2))
    }
}

fn parts_in(s: &PrimeSet) -> impl Fn(&Partition) -> bool + '_ {
    move |l| l.parts().iter().all(|&p| s.generates(p as u64))
}

/// `prod_{n in set} (1 + sign p_n)^power` times `prod_{n even, n/2 in set} (1 + sign2 p_n)^power2`.
fn twisted_product(s: &PrimeSet, t: usize, sign: i32, power: i64, sign2: i32, power2: i64) -> Result<SymSeries> {
    let a = product_over(|n| s.generates(n), sign, power, t)?;
    let b = product_over(|n| n % 2 == 0 && s.generates(n / 2), sign2, power2, t)?;
    Ok(a.mul(&b))
}

pub fn meta(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    for s in sets_from_opts(c, &["{}", "{2}", "{3}", "{2,3}", "{3,5}", "!{2}", "!{}", "!{3}"])? {
        let ls = fam(&ls_spec(&s), t)?;
        let two = s.contains(2);
        let odd_in = |n: u64| n % 2 == 1 && s.generates(n);

        let h = apply_standard(StandardKind::H, &ls)?;
        r.series_eq(&format!("H[L^{s}] = prod_(P(S)) (1-p_n)^-1"), &h, &product_over(|n| s.generates(n), -1, -1, t)?);
        r.series_eq(&format!("H[L^{s}] = sum over parts in P(S)"), &h, &parts_sum(t, parts_in(&s)));
        let h_alt = apply_standard(StandardKind::H, &ls.alt())?;
        let distinct = parts_sum(t, |l| l.is_distinct() && parts_in(&s)(l));
        r.series_eq(&format!("H[alt L^{s}] = prod_(P(S)) (1+p_n)"), &h_alt, &product_over(|n| s.generates(n), 1, 1, t)?);
        r.series_eq(&format!("H[alt L^{s}] = sum over distinct parts in P(S)"), &h_alt, &distinct);

        let e = apply_standard(StandardKind::E, &ls)?;
        let e_alt = apply_standard(StandardKind::E, &ls.alt())?;
        if two {
            r.series_eq(&format!("E[L^{s}] = prod_(odd in P(S)) (1-p_n)^-1"), &e, &product_over(odd_in, -1, -1, t)?);
            r.series_eq(&format!("E[alt L^{s}] = prod_(odd in P(S)) (1+p_n)"), &e_alt, &product_over(odd_in, 1, 1, t)?);
        } else {
            r.series_eq(&format!("E[L^{s}] = twisted product"), &e, &twisted_product(&s, t, -1, -1, -1, 1)?);
            r.series_eq(&format!("omega(E[L^{s}]) = twisted product"), &e.omega(), &twisted_product(&s, t, -1, -1, 1, 1)?);
            r.series_eq(&format!("E[alt L^{s}] = twisted product"), &e_alt, &twisted_product(&s, t, 1, 1, 1, -1)?);
        }

        let comp = s.complement();
        let in_s = parts_sum(t, parts_in(&s));
        let in_comp = parts_sum(t, parts_in(&comp));
        let spos2 = if two {
            let odd_parts = parts_sum(t, |l| l.parts().iter().all(|&p| odd_in(p as u64)));
            let lower = apply_standard(StandardKind::H, &fam(&ls_spec(&without_two(&s)?), t)?)?;
            r.series_eq(&format!("odd parts in P({s}) give H[L^(S minus 2)]"), &odd_parts, &lower);
            r.series_eq(&format!("odd parts in P({s}) give E[L^S]"), &odd_parts, &e);
            odd_parts
        } else {
            let mixed = parts_sum(t, |l| {
                let ok = l.parts().iter().all(|&p| {
                    let p = p as u64;
                    odd_in(p) || (p.is_multiple_of(2) && odd_in(p / 2))
                });
                let evens: Vec<u32> = l.parts().iter().copied().filter(|p| p % 2 == 0).collect();
                ok && evens.windows(2).all(|w| w[0] != w[1])
            });
            r.series_eq(&format!("mixed parts for {s} give omega(E[L^S])"), &mixed, &e.omega());
            mixed
        };
        for n in r.degrees() {
            r.positive(&format!("sum over parts in P({s}) is Schur-positive"), n, in_s.component(n));
            r.positive(&format!("sum over parts in P({comp}) is Schur-positive"), n, in_comp.component(n));
            r.positive(&format!("restricted part sum for {s} is Schur-positive"), n, spos2.component(n));
        }

        if let [q] = s.primes() {
            if !s.is_complement() {
                one_prime(*q, t, r)?;
            }
        }
    }
    Ok(())
}

fn one_prime(q: u64, t: usize, r: &mut Recorder) -> Result<()> {
    let powers = parts_sum(t, |l| l.parts().iter().all(|&p| is_power_of(p, q as u32)));
    let coprime = parts_sum(t, |l| l.parts().iter().all(|&p| gcd(p as u64, q) == 1));
    let odd_coprime = parts_sum(t, |l| l.parts().iter().all(|&p| p % 2 == 1 && gcd(p as u64, q) == 1));
    for n in r.degrees() {
        let nf = Rational::from_integer(factorial(n));
        let f = powers.component(n);
        r.positive(&format!("sum over powers of {q} is Schur-positive"), n, f);
        let dim = f.dimension(n);
        r.truth(&format!("sum over powers of {q} has dimension n!"), n, dim == nf, || format!("dimension {dim}"));
        if q % 2 == 1 {
            r.poly_eq(&format!("sum over powers of {q} is self-conjugate"), n, &f.omega(), f);
            r.positive(&format!("sum over odd parts prime to {q} is Schur-positive"), n, odd_coprime.component(n));
        }
        r.positive(&format!("sum over parts prime to {q} is Schur-positive"), n, coprime.component(n));
    }
    Ok(())
}

/// `L^S_n(-1)` as predicted from membership of `n` and `n/2` in `P(S)`.
fn predicted_negative(s: &PrimeSet, n: u64) -> i64 {
    if s.contains(2) {
        -((n % 2 == 1 && s.generates(n)) as i64)
    } else if s.generates(n) {
        -1
    } else if n.is_multiple_of(2) && s.generates(n / 2) {
        1
    } else {
        0
    }
}

pub fn lvalues(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let one = Rational::one();
    let minus = -Rational::one();
    let sets = sets_from_opts(c, &["{}", "{2}", "{3}", "{2,3}", "{5}", "{3,5}"])?;
    for n in r.degrees() {
        let n64 = n as u64;
        for d in divisors(n64)? {
            if gcd(d, n64 / d) == 1 {
                let v = foulkes(n, d as usize)?.specialize_t(&one);
                let want = int((d == n64) as i64);
                r.truth("l_n^(r)(1) = [n = r] for (r, n/r) = 1", n, v == want, || format!("r={d}: {v}"));
            }
        }
        for s in &sets {
            for set in [s.clone(), s.complement()] {
                let f = l_s(n, &set)?;
                let at_one = f.specialize_t(&one);
                let want = int(set.generates(n64) as i64);
                r.truth(&format!("L^{set}_n(1) = [n in P(S)]"), n, at_one == want, || format!("value {at_one}"));
                let at_minus = f.specialize_t(&minus);
                let want = int(predicted_negative(&set, n64));
                r.truth(&format!("L^{set}_n(-1) from membership"), n, at_minus == want, || {
                    format!("value {at_minus}, expected {want}")
                });
            }
        }
        let lie = crate::repmodules::lie(n)?;
        let conj = crate::repmodules::conj(n)?;
        let lie_minus = lie.specialize_t(&minus);
        let lie_want = int(match n {
            1 => -1,
            2 => 1,
            _ => 0,
        });
        r.truth("Lie_n(1) = [n = 1]", n, lie.specialize_t(&one) == int((n == 1) as i64), || "Lie_n(1)".into());
        r.truth("Lie_n(-1)", n, lie_minus == lie_want, || format!("value {lie_minus}"));
        let conj_minus = conj.specialize_t(&minus);
        let conj_want = if n % 2 == 1 { minus.clone() } else { Rational::zero() };
        r.truth("Conj_n(1) = 1", n, conj.specialize_t(&one) == one, || "Conj_n(1)".into());
        r.truth("Conj_n(-1)", n, conj_minus == conj_want, || format!("value {conj_minus}"));
    }
    Ok(())
}
