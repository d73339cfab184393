use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::partition::{all_partitions, Partition};
use crate::repmodules::PsiSpec;
use crate::schur::from_schur;
use crate::series::{apply_standard, h_lambda, product_expansion, StandardKind, SymSeries};
use crate::symfunc::{int, GenKind, PowerSumPoly, Rational};
use crate::verify::common::*;
use crate::verify::{Ctx, Recorder};

fn families(c: &Ctx) -> Result<Vec<PsiSpec>> {
    match c.opts.get::<PsiSpec>("psi")? {
        Some(p) => Ok(vec![p]),
        None => ["lie", "conj", "lie2", "L{3}", "Lbar{2}"].iter().map(|s| s.parse()).collect(),
    }
}

/// `sum_r w^r pieces[r]`.
fn weighted(pieces: &[SymSeries], w: &Rational) -> SymSeries {
    let t = pieces[0].trunc();
    let mut out = SymSeries::zero(t);
    let mut wr = Rational::one();
    for piece in pieces {
        if !wr.is_zero() {
            out = &out + &piece.scale(&wr);
        }
        wr *= w;
    }
    out
}

/// Degree `n` gets `sum_r (-1)^(n-r) v^r omega(pieces[r]|_n)`.
fn alternating_omega(pieces: &[SymSeries], v: &Rational) -> SymSeries {
    let t = pieces[0].trunc();
    SymSeries::from_fn(t, |n| {
        let mut out = PowerSumPoly::zero();
        let mut vr = Rational::one();
        for (r, piece) in pieces.iter().enumerate().take(n + 1) {
            out += &piece.component(n).omega().scale(&(sign(n - r) * &vr));
            vr *= v;
        }
        out
    })
}

fn power_series(kind: StandardKind, v: &Rational, t: usize) -> SymSeries {
    let base = std(kind, t);
    let mut vn = Rational::one();
    SymSeries::from_fn(t, |n| {
        let out = base.component(n).scale(&vn);
        vn *= v;
        out
    })
}

fn prod(f: &SymSeries, v: &Rational, scale: i64, sign: i32) -> Result<SymSeries> {
    product_expansion(&exponents_at(f, v, &int(scale)), sign, f.trunc())
}

pub fn family(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    for spec in families(c)? {
        let name = spec.description();
        let f = fam(&spec, t)?;
        let hp = h_pieces(&f)?;
        let ep = e_pieces(&f)?;
        let alt = f.alt();
        let hp_alt = h_pieces(&alt)?;
        let ep_alt = e_pieces(&alt)?;
        for v in v_values(t) {
            let mv = -v.clone();
            let id = |what: &str| format!("{what} for F={name}, v={v}");
            let h_v = weighted(&hp, &v);
            let e_v = weighted(&ep, &v);
            r.series_eq(&id("H(v)[F] = prod (1-p_m)^(-f_m(v))"), &h_v, &prod(&f, &v, -1, -1)?);
            r.series_eq(&id("E(v)[F] = prod (1-p_m)^(f_m(-v))"), &e_v, &prod(&f, &mv, 1, -1)?);
            let alt_ext = alternating_omega(&ep, &v);
            r.series_eq(&id("sum (-1)^(n-r) v^r omega(e_r[F]) = prod (1+p_m)^(f_m(v))"), &alt_ext, &prod(&f, &v, 1, 1)?);
            r.series_eq(&id("sum (-1)^(n-r) v^r omega(e_r[F]) = H(v)[alt F]"), &alt_ext, &weighted(&hp_alt, &v));
            let alt_sym = alternating_omega(&hp, &v);
            r.series_eq(&id("sum (-1)^(n-r) v^r omega(h_r[F]) = prod (1+p_m)^(-f_m(-v))"), &alt_sym, &prod(&f, &mv, -1, 1)?);
            r.series_eq(&id("sum (-1)^(n-r) v^r omega(h_r[F]) = E(v)[alt F]"), &alt_sym, &weighted(&ep_alt, &v));
            r.series_eq(&id("E^pm(v)[F] = prod (1-p_m)^(f_m(v))"), &weighted(&ep, &mv), &prod(&f, &v, 1, -1)?);
            r.series_eq(&id("H^pm(v)[F] = prod (1-p_m)^(-f_m(-v))"), &weighted(&hp, &mv), &prod(&f, &mv, -1, -1)?);
        }

        for n in r.lo()..=r.hi().min(8) {
            let mut by_len: BTreeMap<usize, PowerSumPoly> = BTreeMap::new();
            for l in all_partitions(n) {
                *by_len.entry(l.len()).or_default() += &h_lambda(&f, &l)?;
            }
            for (len, total) in by_len {
                r.poly_eq(&format!("sum_(l(lambda)={len}) H_lambda[F] = h_{len}[F] for F={name}"), n, &total, hp[len].component(n));
            }
        }

        let one = Rational::one();
        for m in 1..=t {
            let at_minus = f.component(m).specialize_t(&-one.clone());
            let want = if m % 2 == 1 {
                -f.component(m).specialize_t(&one)
            } else {
                f.component(m / 2).specialize_t(&one) - f.component(m).specialize_t(&one)
            };
            r.truth(&format!("f_m(-1) from f(1) values for F={name}"), m, at_minus == want, || format!("f_{m}(-1) = {at_minus}"));
        }

        if !matches!(spec, PsiSpec::Foulkes(_)) {
            let exps: BTreeMap<u64, Rational> = (1..=t as u64)
                .map(|d| Ok((d, spec.psi(d, d)? / int(d as i64))))
                .collect::<Result<_>>()?;
            let neg: BTreeMap<u64, Rational> = exps.iter().map(|(&d, c)| (d, -c.clone())).collect();
            r.series_eq(&format!("F = log prod (1-p_d)^(-psi(d)/d) for F={name}"), &f, &product_expansion(&neg, -1, t)?.log()?);
            r.series_eq(&format!("alt F = log prod (1+p_d)^(psi(d)/d) for F={name}"), &alt, &product_expansion(&exps, 1, t)?.log()?);
        }

        lemma_pm(&f, &name, r)?;
        if f.component(1) == &PowerSumPoly::p(1) {
            metage2(&f, &name, r)?;
        }
    }
    Ok(())
}

fn lemma_pm(f: &SymSeries, name: &str, r: &mut Recorder) -> Result<()> {
    let t = f.trunc();
    let one = SymSeries::one(t);
    let g = apply_standard(StandardKind::H, f)?;
    let g_inv = g.recip()?;
    r.series_eq(&format!("E^pm[F] = 1/H[F] for F={name}"), &apply_standard(StandardKind::Epm, f)?, &g_inv);
    let alt_e = alternating_from_one(&e_pieces(f)?);
    r.series_eq(&format!("sum (-1)^(r-1) e_r[F] = (G-1)/G for F={name}"), &alt_e, &(&g - &one).mul(&g_inv));
    let k = apply_standard(StandardKind::E, f)?;
    let k_inv = k.recip()?;
    r.series_eq(&format!("H^pm[F] = 1/E[F] for F={name}"), &apply_standard(StandardKind::Hpm, f)?, &k_inv);
    let alt_h = alternating_from_one(&h_pieces(f)?);
    r.series_eq(&format!("sum (-1)^(r-1) h_r[F] = (K-1)/K for F={name}"), &alt_h, &(&k - &one).mul(&k_inv));

    let alt = f.alt();
    let minus_p1 = SymSeries::from_poly(&-PowerSumPoly::p(1), t);
    for (outer, other, label) in [
        (StandardKind::H, StandardKind::Epm, "H"),
        (StandardKind::E, StandardKind::Hpm, "E"),
    ] {
        let kk = apply_standard(outer, &alt)?;
        let twisted = kk.omega().signed();
        r.series_eq(&format!("{label}[alt F][-p1] = omega({label}[alt F])^pm for F={name}"), &kk.plethysm(&minus_p1)?, &twisted);
        r.series_eq(&format!("{label}[F] = 1/omega({label}[alt F])^pm for F={name}"), &apply_standard(outer, f)?, &twisted.recip()?);
        r.series_eq(&format!("{label}^pm-partner of F equals omega({label}[alt F])^pm for F={name}"), &apply_standard(other, f)?, &twisted);
    }
    Ok(())
}

fn metage2(f: &SymSeries, name: &str, r: &mut Recorder) -> Result<()> {
    let t = f.trunc();
    let (hp, ep) = (h_pieces(f)?, e_pieces(f)?);
    let ge2 = f.ge2();
    let (hp2, ep2) = (h_pieces(&ge2)?, e_pieces(&ge2)?);
    for v in [int(1), int(2), int(-1), int(3)] {
        let mv = -v.clone();
        let id = |what: &str| format!("{what} for F={name}, v={v}");
        let h_v = weighted(&hp, &v);
        let e_v = weighted(&ep, &v);
        r.series_eq(&id("H(v)[F>=2] = E(-v) H(v)[F]"), &weighted(&hp2, &v), &power_series(StandardKind::E, &mv, t).mul(&h_v));
        r.series_eq(&id("E(v)[F>=2] = H(-v) E(v)[F]"), &weighted(&ep2, &v), &power_series(StandardKind::H, &mv, t).mul(&e_v));
        r.series_eq(&id("E^pm(v)[F>=2] = H(v)/H(v)[F]"), &weighted(&ep2, &mv), &power_series(StandardKind::H, &v, t).div(&h_v)?);
        r.series_eq(&id("H^pm(v)[F>=2] = E(v)/E(v)[F]"), &weighted(&hp2, &mv), &power_series(StandardKind::E, &v, t).div(&e_v)?);
    }
    Ok(())
}

/// Counts of permutations of `n` by number of cycles, and of derangements by number of cycles.
pub fn permutation_counts(n: usize) -> (Vec<u64>, Vec<u64>) {
    let mut cycles = vec![0u64; n + 1];
    let mut derange = vec![0u64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut seen = vec![false; n];
        let (mut count, mut fixed) = (0, false);
        for start in 0..n {
            if !seen[start] {
                count += 1;
                let mut len = 0;
                let mut i = start;
                while !seen[i] {
                    seen[i] = true;
                    i = perm[i];
                    len += 1;
                }
                fixed |= len == 1;
            }
        }
        cycles[count] += 1;
        if !fixed {
            derange[count] += 1;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    (cycles, derange)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Unsigned Stirling numbers of the first kind and derangements by cycle count, by recurrence.
fn cycle_tables(t: usize) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let mut c = vec![vec![Rational::zero(); t + 2]; t + 1];
    let mut d = vec![vec![Rational::zero(); t + 2]; t + 1];
    c[0][0] = Rational::one();
    d[0][0] = Rational::one();
    for n in 1..=t {
        let m = int(n as i64 - 1);
        for k in 1..=n {
            c[n][k] = &c[n - 1][k - 1] + &m * &c[n - 1][k];
            let two_back = if n >= 2 { d[n - 2][k - 1].clone() } else { Rational::zero() };
            d[n][k] = &m * (&d[n - 1][k] + two_back);
        }
    }
    (c, d)
}

fn sigma_series(kind: GenKind, g: &SymSeries, n: usize) -> Result<PowerSumPoly> {
    let mut out = PowerSumPoly::zero();
    for i in 0..=n {
        out += &PowerSumPoly::generator(kind, n - i)?.multiply(g.component(i), None).scale(&sign(i));
    }
    Ok(out)
}

pub fn restrict(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let (ctab, dtab) = cycle_tables(t);
    for n in 1..=t.min(7) {
        let (cy, de) = permutation_counts(n);
        for k in 0..=n {
            r.truth("c(n,k) recurrence matches permutation counts", n, ctab[n][k] == int(cy[k] as i64), || format!("k={k}"));
            r.truth("d(n,k) recurrence matches derangement counts", n, dtab[n][k] == int(de[k] as i64), || format!("k={k}"));
        }
        let dn: u64 = de.iter().sum();
        let prev: u64 = if n >= 2 { permutation_counts(n - 1).1.iter().sum() } else { 1 };
        let want = n as i64 * prev as i64 + if n % 2 == 0 { 1 } else { -1 };
        r.truth("d_n = n d_(n-1) + (-1)^n", n, dn as i64 == want, || format!("d_{n} = {dn}"));
    }

    for spec in families(c)? {
        let name = spec.description();
        let f = fam(&spec, t)?;
        if f.component(1) != &PowerSumPoly::p(1) {
            return Err(crate::Error::BadOption(format!("{name} does not start with p1")));
        }
        let one = Rational::one();
        let minus = -Rational::one();
        let tail = |v: &Rational, s: i64| -> BTreeMap<u64, Rational> {
            exponents_at(&f, v, &int(s)).into_iter().filter(|&(m, _)| m >= 2).collect()
        };
        let g = product_expansion(&tail(&one, -1), -1, t)?;
        let k = product_expansion(&tail(&minus, 1), -1, t)?;
        let ge2 = f.ge2();
        let alpha = apply_standard(StandardKind::H, &ge2)?;
        let beta = apply_standard(StandardKind::E, &ge2)?;
        let p1 = PowerSumPoly::p(1);
        let mut prev = (PowerSumPoly::one(), PowerSumPoly::one());
        for n in 1..=t {
            let sigma = sigma_series(GenKind::E, &g, n)?;
            let tau = sigma_series(GenKind::H, &k, n)?;
            if n >= r.lo() {
                for (label, s, series, prev_s) in [("sigma", &sigma, &alpha, &prev.0), ("tau", &tau, &beta, &prev.1)] {
                    let rec = &p1.multiply(series.component(n - 1), None) + &s.scale(&sign(n));
                    r.poly_eq(&format!("{label} recurrence for F={name}"), n, series.component(n), &rec);
                    let dim = s.dimension(n);
                    r.truth(&format!("{label}_n has dimension 1 for F={name}"), n, dim.is_one(), || format!("dimension {dim}"));
                    r.poly_eq(&format!("d/dp1 {label}_n = {label}_(n-1) for F={name}"), n, &s.p1_derivative(), prev_s);
                }
                if matches!(spec, PsiSpec::Moebius) && n >= 2 {
                    let want = &PowerSumPoly::h(n) - &PowerSumPoly::h(n - 2).multiply(&PowerSumPoly::p(2), None);
                    r.poly_eq("tau_n = h_n - h_(n-2) p2 for F=Lie", n, &tau, &want);
                    let schur_form = match n {
                        2 => None,
                        3 => Some(schur(&[1, 1, 1])),
                        _ => Some(&from_schur(&Partition::from_sorted(vec![n as u32 - 2, 1, 1]))
                            - &from_schur(&Partition::from_sorted(vec![n as u32 - 2, 2]))),
                    };
                    if let Some(sf) = schur_form {
                        r.poly_eq("tau_n in Schur functions for F=Lie", n, &tau, &sf);
                    }
                    let h_rec = &p1.multiply(alpha.component(n - 1), None) + &PowerSumPoly::e(n).scale(&sign(n));
                    r.poly_eq("(H-1)[Lie>=2] recurrence with e_n", n, alpha.component(n), &h_rec);
                }
            }
            prev = (sigma, tau);
        }

        let hp = h_pieces(&f)?;
        let ep = e_pieces(&f)?;
        let hp2 = h_pieces(&ge2)?;
        let ep2 = e_pieces(&ge2)?;
        for (label, pieces, pieces2) in [("h", &hp, &hp2), ("e", &ep, &ep2)] {
            let at = |p: &Vec<SymSeries>, a: i64, n: i64| -> PowerSumPoly {
                if a < 0 || n < 0 || a as usize >= p.len() {
                    PowerSumPoly::zero()
                } else {
                    p[a as usize].component(n as usize).clone()
                }
            };
            for n in r.degrees() {
                let ni = n as i64;
                for a in 0..=ni {
                    let lhs = at(pieces, a, ni).p1_derivative();
                    let rhs = &at(pieces, a - 1, ni - 1) + &p1.multiply(&at(pieces, a, ni - 1).p1_derivative(), None);
                    r.poly_eq(&format!("restriction of {label}_a[F] for F={name}"), n, &lhs, &rhs);
                }
                if n >= 2 {
                    for a in 1..ni {
                        let lhs = at(pieces2, a, ni).p1_derivative();
                        let inner = &at(pieces2, a, ni - 1).p1_derivative() + &at(pieces2, a - 1, ni - 2);
                        r.poly_eq(&format!("restriction of {label}_a[F>=2] for F={name}"), n, &lhs, &p1.multiply(&inner, None));
                    }
                }
                for j in 0..=n {
                    let d1 = at(pieces, j as i64, ni).dimension(n);
                    let d2 = at(pieces2, j as i64, ni).dimension(n);
                    r.truth(&format!("dim {label}_j[F]|_n = c(n,j) for F={name}"), n, d1 == ctab[n][j], || format!("j={j}: {d1}"));
                    r.truth(&format!("dim {label}_j[F>=2]|_n = d(n,j) for F={name}"), n, d2 == dtab[n][j], || format!("j={j}: {d2}"));
                }
            }
        }

        if matches!(spec, PsiSpec::Moebius) {
            for n in r.degrees().filter(|&n| n >= 2) {
                let mut total = PowerSumPoly::zero();
                for i in 0..=n {
                    total += &ep2[n - i].component(n).omega().scale(&sign(i));
                }
                let want = from_schur(&hook(n, n - 2)).scale(&sign(n - 1));
                r.poly_eq("sum_i (-1)^i omega(e_(n-i)[Lie>=2]) = (-1)^(n-1) s(2,1^(n-2))", n, &total, &want);
            }
        }
    }
    Ok(())
}
