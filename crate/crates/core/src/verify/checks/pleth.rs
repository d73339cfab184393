use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Result;
use crate::numtheory::moebius;
use crate::repmodules::PsiSpec;
use crate::series::{apply_standard, plethystic_inverse, StandardKind, SymSeries};
use crate::symfunc::{int, PowerSumPoly, Rational};
use crate::verify::common::*;
use crate::verify::{Ctx, Recorder};

fn p1(t: usize) -> SymSeries {
    SymSeries::from_poly(&PowerSumPoly::p(1), t)
}

fn inverse_pair(r: &mut Recorder, id: &str, a: &SymSeries, b: &SymSeries) -> Result<()> {
    let t = a.trunc();
    r.series_eq(&format!("{id} (left)"), &a.plethysm(b)?, &p1(t));
    r.series_eq(&format!("{id} (right)"), &b.plethysm(a)?, &p1(t));
    Ok(())
}

fn powers_of(q: u64, t: usize) -> Vec<u64> {
    std::iter::successors(Some(1u64), |&m| Some(m * q)).take_while(|&m| m as usize <= t).collect()
}

fn with_constant_removed(s: &SymSeries) -> SymSeries {
    s.from_degree(1)
}

pub fn compendium(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let (lie, lie2, conj) = (lie(t)?, lie2(t)?, conj(t)?);
    let h1 = with_constant_removed(&std(StandardKind::H, t));
    let e1 = with_constant_removed(&std(StandardKind::E, t));

    for q in [2u64, 3] {
        let pw = powers_of(q, t);
        let minus = linear(t, |m| if m == 1 { int(1) } else if m == q { int(-1) } else { Rational::zero() });
        let plus = linear(t, |m| if m == 1 || m == q { int(1) } else { Rational::zero() });
        let geo = linear(t, |m| if pw.contains(&m) { int(1) } else { Rational::zero() });
        let alt_geo = linear(t, |m| match pw.iter().position(|&x| x == m) {
            Some(k) => sign(k),
            None => Rational::zero(),
        });
        inverse_pair(r, &format!("p1 - p{q} and sum p_({q}^k) are inverse"), &minus, &geo)?;
        inverse_pair(r, &format!("p1 + p{q} and sum (-1)^k p_({q}^k) are inverse"), &plus, &alt_geo)?;
    }
    let p1_minus_p2 = linear(t, |m| match m {
        1 => int(1),
        2 => int(-1),
        _ => Rational::zero(),
    });
    r.series_eq("(H-1)[p1 - p2] = E-1", &h1.plethysm(&p1_minus_p2)?, &e1);

    let alt_lie = lie.alt();
    let alt_lie2 = lie2.alt();
    r.series_eq("(H-1)^(-1) = alt Lie", &plethystic_inverse(&h1)?, &alt_lie);
    r.series_eq("(E-1)^(-1) = alt Lie2", &plethystic_inverse(&e1)?, &alt_lie2);
    let one_plus_p2 = SymSeries::from_poly(&(PowerSumPoly::one() + PowerSumPoly::p(2)), t);
    r.series_eq("(E-1)[alt Lie] = (p1-p2)/(1+p2)", &e1.plethysm(&alt_lie)?, &p1_minus_p2.div(&one_plus_p2)?);
    let three = alt_lie.plethysm(&e1)?;
    let four = alt_lie2.plethysm(&h1)?;
    r.series_eq("alt Lie[E-1] = p1 - p2", &three, &p1_minus_p2);
    let pow2 = powers_of(2, t);
    r.series_eq("alt Lie2[H-1] = sum p_(2^k)", &four, &linear(t, |m| int(pow2.contains(&m) as i64)));

    let pairs = [
        ("Lie", "Lie2", lie.clone(), lie2.clone()),
        ("L^(not 2)", "Conj", fam(&"Lbar{2}".parse()?, t)?, conj.clone()),
    ];
    for (fname, gname, f, g) in &pairs {
        let id = |what: &str| format!("{what} for F={fname}, G={gname}");
        r.series_eq(&id("H[F] = E[G]"), &apply_standard(StandardKind::H, f)?, &apply_standard(StandardKind::E, g)?);
        r.series_eq(&id("E^pm[F] = H^pm[G]"), &apply_standard(StandardKind::Epm, f)?, &apply_standard(StandardKind::Hpm, g)?);
        r.series_eq(&id("F = G - G[p2]"), f, &(g - &g.adams(2)));
        let lifted = pow2.iter().fold(SymSeries::zero(t), |acc, &m| &acc + &f.adams(m as u32));
        r.series_eq(&id("G = sum_k F[p_(2^k)]"), g, &lifted);
        let (fg, gg) = (f.ge2(), g.ge2());
        let hf2 = apply_standard(StandardKind::H, &fg)?;
        let eg2 = apply_standard(StandardKind::E, &gg)?;
        let epm_e = std(StandardKind::Epm, t).mul(&std(StandardKind::E, t));
        let hpm_h = std(StandardKind::Hpm, t).mul(&std(StandardKind::H, t));
        r.series_eq(&id("H[F>=2] = (E^pm E) E[G>=2]"), &hf2, &epm_e.mul(&eg2));
        r.series_eq(&id("E[G>=2] = (H^pm H) H[F>=2]"), &eg2, &hpm_h.mul(&hf2));
    }

    for spec in ["lie", "conj", "lie2"] {
        let spec: PsiSpec = spec.parse()?;
        let g = fam(&spec, t)?;
        for q in [2u64, 3] {
            for s in [1i64, -1] {
                let table: BTreeMap<u64, Rational> = (1..=t as u64)
                    .map(|d| {
                        let mut v = spec.psi(d, d)?;
                        if d % q == 0 {
                            v += int(s * q as i64) * spec.psi(d / q, d / q)?;
                        }
                        Ok((d, v))
                    })
                    .collect::<Result<_>>()?;
                let direct = fam(&PsiSpec::Custom(table), t)?;
                let composed = &g + &g.adams(q as u32).scale(&int(s));
                let op = if s > 0 { "+" } else { "-" };
                r.series_eq(&format!("(p1 {op} p{q})[{}] has the shifted psi", spec.description()), &direct, &composed);
            }
        }
    }

    for (name, f) in [("Lie", &lie), ("Conj", &conj), ("Lie2", &lie2)] {
        let g = apply_standard(StandardKind::H, f)?;
        let ratio = g.div(&g.adams(2))?;
        let ext = apply_standard(StandardKind::E, f)?;
        r.series_eq(&format!("E[F] = G/G[p2] for F={name}"), &ext, &ratio);
        r.series_eq(&format!("E[F] = H[F]/H[F[p2]] for F={name}"), &ext, &g.div(&apply_standard(StandardKind::H, &f.adams(2))?)?);
        if name == "Lie" {
            for n in r.degrees() {
                r.positive("G/G[p2] is Schur-positive for F=Lie", n, ratio.component(n));
            }
        }
    }

    let (lg, l2g) = (lie.ge2(), lie2.ge2());
    let h_lie_ge2 = apply_standard(StandardKind::H, &lg)?;
    r.series_eq("H[Lie>=2] = omega(E[Lie2>=2])", &h_lie_ge2, &apply_standard(StandardKind::E, &l2g)?.omega());
    r.series_eq("E^pm[Lie>=2] = omega(H^pm[Lie2>=2])", &apply_standard(StandardKind::Epm, &lg)?, &apply_standard(StandardKind::Hpm, &l2g)?.omega());

    let geo_sum = with_constant_removed(&std(StandardKind::GeomP1, t));
    let alt_geo = geo_sum.signed().scale(&int(-1));
    inverse_pair(r, "p1/(1+p1) and p1/(1-p1) are inverse", &alt_geo, &geo_sum)?;
    for (label, g) in [("1", 0u32), ("n", 1), ("n^2", 2)] {
        for odd_only in [false, true] {
            let keep = |m: u64| !odd_only || m % 2 == 1;
            let a = linear(t, |m| if keep(m) { int((m as i64).pow(g)) } else { Rational::zero() });
            let b = linear(t, |m| if keep(m) { int((m as i64).pow(g) * moebius(m).unwrap_or(0)) } else { Rational::zero() });
            let which = if odd_only { "odd " } else { "" };
            inverse_pair(r, &format!("sum_{which}n {label} p_n and its Moebius twist are inverse"), &a, &b)?;
        }
    }
    let alt_e = SymSeries::from_fn(t, |n| if n == 0 { PowerSumPoly::zero() } else { PowerSumPoly::e(n).scale(&sign(n - 1)) });
    let alt_h = SymSeries::from_fn(t, |n| if n == 0 { PowerSumPoly::zero() } else { PowerSumPoly::h(n).scale(&sign(n - 1)) });
    inverse_pair(r, "Lie and sum (-1)^(n-1) e_n are inverse", &lie, &alt_e)?;
    let h = std(StandardKind::H, t);
    r.series_eq("(H-1)/H = sum (-1)^(n-1) e_n", &(&h - &SymSeries::one(t)).div(&h)?, &alt_e);
    inverse_pair(r, "Lie2 and sum (-1)^(n-1) h_n are inverse", &lie2, &alt_h)?;
    r.series_eq("omega(Lie^(-1)) = Lie2^(-1)", &plethystic_inverse(&lie)?.omega(), &plethystic_inverse(&lie2)?);
    for k in [2usize, 3] {
        let a = SymSeries::from_fn(t, |n| if n % k == 1 % k && n >= 1 { PowerSumPoly::h(n) } else { PowerSumPoly::zero() });
        let beta = plethystic_inverse(&a)?;
        inverse_pair(r, &format!("sum_(n = 1 mod {k}) h_n and its inverse"), &a, &beta)?;
        for n in r.degrees().filter(|n| n % k != 1 % k) {
            r.truth(&format!("inverse of sum_(n = 1 mod {k}) h_n lives in degrees 1 mod {k}"), n, beta.component(n).is_zero(), || {
                format!("component {n} nonzero")
            });
        }
    }
    let y = SymSeries::from_fn(t, |n| if n % 2 == 1 { PowerSumPoly::h(n).scale(&sign(n / 2)) } else { PowerSumPoly::zero() });
    let eta = plethystic_inverse(&y)?;
    inverse_pair(r, "odd series and its inverse", &y, &eta)?;
    for n in r.degrees().filter(|n| n % 2 == 0) {
        r.truth("inverse of an odd series is odd", n, eta.component(n).is_zero(), || format!("component {n} nonzero"));
    }

    r.series_eq("alt Lie[E-1] = (1+p2) alt Lie2[H-1]", &three, &one_plus_p2.mul(&four));
    Ok(())
}
