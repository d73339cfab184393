use num_traits::{One, Zero};

use crate::error::Result;
use crate::numtheory::moebius;
use crate::partition::{all_partitions, is_power_of, Partition};
use crate::schur::{from_schur, to_schur};
use crate::series::{apply_standard, StandardKind, SymSeries};
use crate::symfunc::{frac, int, GenKind, PowerSumPoly};
use crate::verify::common::*;
use crate::verify::golden::golden_sigma;
use crate::verify::{Ctx, Recorder};

fn p1_series(t: usize) -> SymSeries {
    SymSeries::from_poly(&PowerSumPoly::p(1), t)
}

fn pow2_parts(l: &Partition) -> bool {
    l.parts().iter().all(|&p| is_power_of(p, 2))
}

/// `sum_{j=0}^n (-1)^(n-j) pieces[j]|_n`.
fn cochain_sum(pieces: &[SymSeries], n: usize) -> PowerSumPoly {
    let mut out = PowerSumPoly::zero();
    for (j, piece) in pieces.iter().enumerate().take(n + 1) {
        out += &piece.component(n).scale(&sign(n - j));
    }
    out
}

pub fn pbw_sym(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let h = apply_standard(StandardKind::H, &lie(c.n)?)?;
    r.series_eq_from("(H-1)[Lie] = sum p1^n", 1, &h, &std(StandardKind::GeomP1, c.n));
    Ok(())
}

pub fn pbw_altsym(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let h = apply_standard(StandardKind::H, &lie(c.n)?.alt())?;
    r.series_eq_from("(H-1)[alt Lie] = p1", 1, &h, &p1_series(c.n));
    Ok(())
}

pub fn pbw_altext(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let lhs = alternating_from_one(&e_pieces(&lie(c.n)?)?);
    r.series_eq("sum (-1)^(r-1) e_r[Lie] = p1", &lhs, &p1_series(c.n));
    Ok(())
}

pub fn pbw_altext_ge2(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let lhs = alternating_from_one(&e_pieces(&lie(c.n)?.ge2())?);
    r.series_eq("sum (-1)^(r-1) e_r[Lie>=2] = kappa", &lhs, &kappa(c.n));
    Ok(())
}

pub fn pbw_cochain(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let pieces = e_pieces(&lie(c.n)?.ge2())?;
    for n in r.degrees() {
        let want = from_schur(&hook(n, 1)).scale(&sign(n - 1));
        r.poly_eq("sum_j (-1)^(n-j) e_j[Lie>=2] = (-1)^(n-1) s(n-1,1)", n, &cochain_sum(&pieces, n), &want);
    }
    Ok(())
}

pub fn pbw_filtration(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let lie = lie(c.n)?;
    let k = kappa(c.n);
    r.series_eq("Lie>=2 = Lie[kappa]", &lie.ge2(), &lie.plethysm(&k)?);
    r.series_eq("Lie>=2 = kappa + kappa[kappa] + ...", &lie.ge2(), &iterate_composition(&k)?);
    Ok(())
}

pub fn pbw_hodge(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let h = apply_standard(StandardKind::H, &lie(c.n)?.ge2())?;
    r.series_eq_from("(H-1)[Lie>=2] = sum_n sum_k (-1)^k p1^(n-k) e_k", 1, &h, &hodge_total(GenKind::E, c.n));
    Ok(())
}

pub fn lie2_ext(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let e = apply_standard(StandardKind::E, &lie2(c.n)?)?;
    r.series_eq_from("(E-1)[Lie2] = sum p1^n", 1, &e, &std(StandardKind::GeomP1, c.n));
    Ok(())
}

pub fn lie2_plinv(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let lhs = alternating_from_one(&h_pieces(&lie2(c.n)?)?);
    r.series_eq("sum (-1)^(r-1) h_r[Lie2] = p1", &lhs, &p1_series(c.n));
    Ok(())
}

pub fn lie2_ext_ge2(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let lhs = alternating_from_one(&h_pieces(&lie2(c.n)?.ge2())?);
    r.series_eq("sum (-1)^(r-1) h_r[Lie2>=2] = omega(kappa)", &lhs, &kappa(c.n).omega());
    Ok(())
}

pub fn lie2_cochain(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let pieces = h_pieces(&lie2(c.n)?.ge2())?;
    for n in r.degrees() {
        let want = from_schur(&hook(n, n - 2)).scale(&sign(n - 1));
        r.poly_eq("sum_j (-1)^(n-j) h_j[Lie2>=2] = (-1)^(n-1) s(2,1^(n-2))", n, &cochain_sum(&pieces, n), &want);
    }
    Ok(())
}

pub fn lie2_filtration(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let lie2 = lie2(c.n)?;
    let k = kappa(c.n).omega();
    r.series_eq("Lie2>=2 = Lie2[omega(kappa)]", &lie2.ge2(), &lie2.plethysm(&k)?);
    r.series_eq("Lie2>=2 = w + w[w] + ..., w = omega(kappa)", &lie2.ge2(), &iterate_composition(&k)?);
    Ok(())
}

pub fn lie2_hodge_series(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let e = apply_standard(StandardKind::E, &lie2(c.n)?.ge2())?;
    r.series_eq_from("(E-1)[Lie2>=2] = sum_n sum_k (-1)^k p1^(n-k) h_k", 1, &e, &hodge_total(GenKind::H, c.n));
    Ok(())
}

pub fn lie2_hodge(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let ext = e_pieces(&lie2(t)?.ge2())?;
    let sym_lie = h_pieces(&lie(t)?.ge2())?;
    let total = total_from_one(&ext);
    let mut prev = PowerSumPoly::zero();
    for n in 1..=t {
        let d = total.component(n).clone();
        if n >= r.lo() {
            r.poly_eq("Delta_n = sum_k (-1)^k p1^(n-k) h_k", n, &d, &delta(GenKind::H, n));
            let rec = &PowerSumPoly::p(1).multiply(&prev, None) + &PowerSumPoly::h(n).scale(&sign(n));
            r.poly_eq("Delta_n = p1 Delta_(n-1) + (-1)^n h_n", n, &d, &rec);
        }
        prev = d;
    }
    if (r.lo()..=r.hi()).contains(&4) {
        let n = 4;
        let e2h2 = PowerSumPoly::e(2).plethysm(&PowerSumPoly::h(2), n)?;
        r.poly_eq("Delta_4^2 = e2[h2] = s(3,1)", n, ext[2].component(n), &e2h2);
        r.poly_eq("Delta_4^2 = s(3,1)", n, ext[2].component(n), &schur(&[3, 1]));
        r.poly_eq("Delta_4^1 = Lie2_4", n, ext[1].component(n), lie2(n)?.component(n));
        r.poly_eq("omega(h2[Lie>=2])|_4 = s(2,2) + s(4)", n, &sym_lie[2].component(n).omega(), &(schur(&[2, 2]) + schur(&[4])));
        r.poly_eq("omega(h1[Lie>=2])|_4 = s(3,1) + s(2,1,1)", n, &sym_lie[1].component(n).omega(), &(schur(&[3, 1]) + schur(&[2, 1, 1])));
        for k in 1..=2 {
            let same = ext[k].component(n) == &sym_lie[k].component(n).omega();
            r.truth("the degree-4 Hodge summands differ", n, !same, || format!("summand {k} coincides"));
        }
    }
    Ok(())
}

pub fn lie2_hodgefilt(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let sym_lie = h_pieces(&lie(t)?.ge2())?;
    let ext_lie = e_pieces(&lie(t)?.ge2())?;
    let ext_lie2 = e_pieces(&lie2(t)?.ge2())?;
    let sym_lie2 = h_pieces(&lie2(t)?.ge2())?;
    let a = total_from_one(&sym_lie).omega();
    let b = total_from_one(&ext_lie2);
    let c_ = alternating_from_one(&ext_lie).omega();
    let d = alternating_from_one(&sym_lie2);
    for n in r.degrees() {
        let dn = delta(GenKind::H, n);
        r.poly_eq("sum_r omega(h_r[Lie>=2]) = sum_k (-1)^k p1^(n-k) h_k", n, a.component(n), &dn);
        r.poly_eq("sum_r e_r[Lie2>=2] = sum_k (-1)^k p1^(n-k) h_k", n, b.component(n), &dn);
        let hk = from_schur(&hook(n, n - 2));
        r.poly_eq("sum_r (-1)^(r-1) omega(e_r[Lie>=2]) = s(2,1^(n-2))", n, c_.component(n), &hk);
        r.poly_eq("sum_r (-1)^(r-1) h_r[Lie2>=2] = s(2,1^(n-2))", n, d.component(n), &hk);
    }
    Ok(())
}

pub fn lie2_lehrer(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let pieces = h_pieces(&lie2(t)?)?;
    let vh = |n: usize, parity: usize| -> PowerSumPoly {
        let mut out = PowerSumPoly::zero();
        for rr in (0..n).filter(|rr| rr % 2 == parity) {
            out += pieces[n - rr].component(n);
        }
        out
    };
    let pow2 = parts_sum(t, pow2_parts);
    let even_len = parts_sum(t, |l| pow2_parts(l) && (l.size() - l.len()) % 2 == 0);
    for n in r.degrees() {
        let (odd, even) = (vh(n, 1), vh(n, 0));
        let half = pow2.component(n).scale(&frac(1, 2));
        r.poly_eq("Vh_odd(n) = 1/2 sum over power-of-2 parts", n, &odd, &half);
        r.poly_eq("Vh_even(n) = 1/2 sum over power-of-2 parts", n, &even, &half);
        let total = &odd + &even;
        r.poly_eq("Vh(n) = sum over power-of-2 parts", n, &total, pow2.component(n));
        r.poly_eq("Vh_odd + omega(Vh_odd) = sum with n - l even", n, &(&odd + &odd.omega()), even_len.component(n));
        for (label, f) in [("Vh_odd", &odd), ("Vh_even", &even), ("Vh", &total)] {
            let s = to_schur(f, n);
            r.positive_schur(&format!("{label}(n) is Schur-positive"), n, &s);
            r.truth(&format!("{label}(n) has integer Schur coefficients"), n, s.is_integral(), || s.to_string());
        }
        if n % 2 == 1 {
            let lower = vh(n - 1, 0) + vh(n - 1, 1);
            r.poly_eq("Vh(2m+1) = p1 Vh(2m)", n, &total, &PowerSumPoly::p(1).multiply(&lower, None));
            for l in all_partitions(n) {
                let s = from_schur(&l);
                let up = total.hall_inner_product(&s);
                let down = lower.hall_inner_product(&s.p1_derivative());
                r.truth("<Vh(2m+1), s_lambda> = <Vh(2m), d/dp1 s_lambda>", n, up == down, || {
                    format!("lambda={l}: {up} vs {down}")
                });
            }
        }
    }
    Ok(())
}

pub fn lie2_althlie(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let a = alternating_from_one(&h_pieces(&lie(t)?)?);
    let b = alternating_from_one(&e_pieces(&lie2(t)?)?);
    let distinct = parts_sum_weighted(t, |l| (!l.is_empty() && pow2_parts(l) && l.is_distinct()).then(|| sign(l.len() - 1)));
    for n in r.degrees() {
        let k = n / 2;
        let p2k = PowerSumPoly::p_lambda(Partition::rectangle(2, k));
        let want = if n % 2 == 1 { PowerSumPoly::p(1).multiply(&p2k, None) } else { -p2k };
        r.poly_eq("sum (-1)^(r-1) h_r[Lie] = p1 p2^k or -p2^k", n, a.component(n), &want);
        r.poly_eq("sum (-1)^(r-1) e_r[Lie2] = signed sum over distinct powers of 2", n, b.component(n), distinct.component(n));
    }
    Ok(())
}

/// `sum_i (-1)^i g1_(n-i) g2_i` for a generator family and a coefficient series.
fn sigma_like(kind: GenKind, g: &SymSeries, n: usize) -> Result<PowerSumPoly> {
    let mut out = PowerSumPoly::zero();
    for i in 0..=n {
        let term = PowerSumPoly::generator(kind, n - i)?.multiply(g.component(i), None);
        out += &term.scale(&sign(i));
    }
    Ok(out)
}

pub fn lie2_sigma(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let alpha = apply_standard(StandardKind::H, &lie2(t)?.ge2())?;
    let g = parts_sum(t, |l| l.parts().iter().all(|&p| p > 1 && is_power_of(p, 2)));
    let golden = golden_sigma()?;
    let mut prev_sigma = PowerSumPoly::one();
    for n in 1..=t {
        let sigma = sigma_like(GenKind::E, &g, n)?;
        if n >= r.lo() {
            let rec = &PowerSumPoly::p(1).multiply(alpha.component(n - 1), None) + &sigma.scale(&sign(n));
            r.poly_eq("alpha_n = p1 alpha_(n-1) + (-1)^n sigma_n", n, alpha.component(n), &rec);
            let dim = sigma.dimension(n);
            r.truth("sigma_n has dimension 1", n, dim.is_one(), || format!("dimension {dim}"));
            r.poly_eq("d/dp1 sigma_n = sigma_(n-1)", n, &sigma.p1_derivative(), &prev_sigma);
            if let Some(want) = golden.get(&n) {
                r.schur_eq("sigma_n matches the tabulated value", n, &to_schur(&sigma, n), want);
            }
        }
        prev_sigma = sigma;
    }
    Ok(())
}

pub fn lie2_from_lie(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let (lie, lie2) = (lie(t)?, lie2(t)?);
    let mut lifted = SymSeries::zero(t);
    let mut k = 1u32;
    while k as usize <= t {
        lifted = &lifted + &lie.adams(k);
        k *= 2;
    }
    r.series_eq("Lie2 = sum_k Lie[p_(2^k)]", &lie2, &lifted);
    r.series_eq("Lie = Lie2 - Lie2[p2]", &lie, &(&lie2 - &lie2.adams(2)));
    for n in r.degrees().filter(|n| n % 2 == 0) {
        let half = lie2.component(n / 2);
        let lhs = lie.component(n) + &PowerSumPoly::h(2).plethysm(half, n)?;
        let rhs = lie2.component(n) + &PowerSumPoly::e(2).plethysm(half, n)?;
        r.poly_eq("Lie_n + h2[Lie2_(n/2)] = Lie2_n + e2[Lie2_(n/2)]", n, &lhs.component(n), &rhs.component(n));
    }
    Ok(())
}

pub fn conjlie_decomp(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let (lie, lie2, conj) = (lie(t)?, lie2(t)?, conj(t)?);
    let mut all = SymSeries::zero(t);
    let mut odd = SymSeries::zero(t);
    let mut inv_all = SymSeries::zero(t);
    let mut inv_odd = SymSeries::zero(t);
    for k in 1..=t as u32 {
        let mu = int(moebius(k as u64)?);
        all = &all + &lie.adams(k);
        if !mu.is_zero() {
            inv_all = &inv_all + &conj.adams(k).scale(&mu);
        }
        if k % 2 == 1 {
            odd = &odd + &lie2.adams(k);
            if !mu.is_zero() {
                inv_odd = &inv_odd + &conj.adams(k).scale(&mu);
            }
        }
    }
    r.series_eq("sum Conj = sum_k p_k[Lie]", &conj, &all);
    r.series_eq("Lie = sum_k mu(k) p_k[Conj]", &lie, &inv_all);
    r.series_eq("sum Conj = sum_k p_(2k-1)[Lie2]", &conj, &odd);
    r.series_eq("Lie2 = sum_k mu(2k-1) p_(2k-1)[Conj]", &lie2, &inv_odd);
    for n in r.degrees() {
        r.positive("Conj_n is Schur-positive", n, conj.component(n));
    }
    Ok(())
}
