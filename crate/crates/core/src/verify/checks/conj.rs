use crate::error::{Error, Result};
use crate::numtheory::{is_prime, PrimeSet};
use crate::partition::Partition;
use crate::repmodules::{l_s, SubsetT, PsiSpec};
use crate::schur::from_schur;
use crate::series::{product_over, SymSeries};
use crate::symfunc::PowerSumPoly;
use crate::verify::common::*;
use crate::verify::{Ctx, Recorder};

/// `U_k(n) = sum_{i=0}^k (-1)^(k-i) h_(n-i)[Lie2]|_n`.
pub(crate) fn u_values(pieces: &[SymSeries], n: usize) -> Vec<PowerSumPoly> {
    let mut out = Vec::with_capacity(n);
    let mut acc = PowerSumPoly::zero();
    for i in 0..n {
        acc = pieces[n - i].component(n) - &acc;
        out.push(acc.clone());
    }
    out
}

fn s(parts: &[i64]) -> PowerSumPoly {
    from_schur(&Partition::new(parts.iter().map(|&p| p as u32).collect()).expect("valid shape"))
}

fn h(n: i64) -> PowerSumPoly {
    h_signed(n)
}

fn mul(a: &PowerSumPoly, b: &PowerSumPoly) -> PowerSumPoly {
    a.multiply(b, None)
}

pub fn uk(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let lie2 = lie2(t)?;
    let pieces = h_pieces(&lie2)?;
    for n in r.degrees() {
        let u = u_values(&pieces, n);
        for (k, uk) in u.iter().enumerate() {
            r.positive(&format!("U_{k}(n) is Schur-positive"), n, uk);
        }
        if n >= 2 {
            r.poly_eq("U_(n-1)(n) = 0", n, &u[n - 1], &PowerSumPoly::zero());
            r.poly_eq("U_(n-2)(n) = Lie2_n", n, &u[n - 2], lie2.component(n));
        }
        if n >= 4 {
            let m = n as i64;
            let hook_pair = &s(&[m - 1, 1]) + &s(&[m - 2, 2]);
            r.poly_eq("U_0(n) = h_n", n, &u[0], &h(m));
            r.poly_eq("U_1(n) = h2 h_(n-2) - h_n", n, &u[1], &(&mul(&h(2), &h(m - 2)) - &h(m)));
            r.poly_eq("U_1(n) = s(n-1,1) + s(n-2,2)", n, &u[1], &hook_pair);
            let u2 = &(&mul(&h(m - 3), &s(&[2, 1])) - &hook_pair) + &mul(&h(m - 4), &(&h(4) + &s(&[2, 2])));
            r.poly_eq("U_2(n) closed form", n, &u[2], &u2);
            if n >= 5 {
                let u3 = [
                    mul(&h(m - 4), &s(&[2, 1, 1])),
                    mul(&s(&[2, 1]), &(&mul(&h(m - 5), &h(2)) - &h(m - 3))),
                    mul(&h(m - 6), &(&(&h(6) + &s(&[4, 2])) + &s(&[2, 2, 2]))),
                    hook_pair.clone(),
                ]
                .iter()
                .fold(PowerSumPoly::zero(), |acc, x| &acc + x);
                r.poly_eq("U_3(n) closed form", n, &u[3], &u3);
            }
        }
    }
    Ok(())
}

fn prime_q(c: &Ctx) -> Result<u64> {
    let q = c.opts.get::<u64>("q")?.unwrap_or(2);
    if !is_prime(q) {
        return Err(Error::BadOption(format!("q={q} must be prime")));
    }
    Ok(q)
}

/// Degrees `n` at which `p1 Lie^(q)_(n-1) - Lie^(q)_n` is expected to fail positivity.
pub fn lift_exceptions(q: u64, max: usize) -> Option<Vec<usize>> {
    let list: Vec<usize> = match q {
        2 => std::iter::successors(Some(4usize), |&m| Some(m * 2)).take_while(|&m| m <= max).collect(),
        3 => vec![3, 6, 9, 10, 18, 27],
        5 => vec![5, 6, 10, 25, 26],
        _ => return None,
    };
    Some(list.into_iter().filter(|&n| n <= max).collect())
}

pub fn lie2_lift(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let q = prime_q(c)?;
    let set = PrimeSet::new([q])?;
    let mut prev = l_s(r.lo() - 1, &set)?;
    for n in r.degrees() {
        let cur = l_s(n, &set)?;
        let diff = &PowerSumPoly::p(1).multiply(&prev, None) - &cur;
        r.positive(&format!("p1 Lie^({q})_(n-1) - Lie^({q})_n is Schur-positive"), n, &diff);
        prev = cur;
    }
    Ok(())
}

pub fn partial_w(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let q = prime_q(c)?;
    let lie = lie(c.n)?;
    for n in r.degrees() {
        let mut qr = 1usize;
        let mut w = PowerSumPoly::zero();
        let mut i = 0;
        while n % qr == 0 {
            w += &lie.component(n / qr).adams(qr as u32);
            r.positive(&format!("W_{i} for q={q} is Schur-positive"), n, &w);
            qr *= q as usize;
            i += 1;
        }
    }
    Ok(())
}

pub fn powers_of_k(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let k = c.opts.get::<u64>("k")?.unwrap_or(4);
    if k < 2 {
        return Err(Error::BadOption("k must be at least 2".into()));
    }
    let t = SubsetT::PowersOf(k);
    let f = fam(&PsiSpec::SubsetT(t.clone()), c.n)?;
    let prod = product_over(|m| t.contains(m), -1, -1, c.n)?;
    for n in r.degrees() {
        r.positive(&format!("f^pow({k})_n is Schur-positive"), n, f.component(n));
        r.positive(&format!("prod_r (1-p_({k}^r))^-1 is Schur-positive"), n, prod.component(n));
    }
    Ok(())
}

pub fn stanley(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let k = c.opts.get::<u64>("k")?.unwrap_or(3);
    if k < 1 {
        return Err(Error::BadOption("k must be positive".into()));
    }
    let prod = product_over(|m| m % k == 1 % k, -1, -1, c.n)?;
    for n in r.degrees() {
        r.positive(&format!("prod_(n = 1 mod {k}) (1-p_n)^-1 is Schur-positive"), n, prod.component(n));
    }
    Ok(())
}
