use num_traits::{One, Zero};

use crate::error::Result;
use crate::partition::{all_partitions, Partition};
use crate::repmodules::PsiSpec;
use crate::schur::from_schur;
use crate::series::{family_series, graded_powers, standard_series, SymSeries, StandardKind};
use crate::symfunc::{int, GenKind, PowerSumPoly, Rational};

pub fn fam(spec: &PsiSpec, t: usize) -> Result<SymSeries> {
    family_series(spec, t, false)
}

pub fn lie(t: usize) -> Result<SymSeries> {
    fam(&PsiSpec::Moebius, t)
}

pub fn lie2(t: usize) -> Result<SymSeries> {
    fam(&PsiSpec::lie2(), t)
}

pub fn conj(t: usize) -> Result<SymSeries> {
    fam(&PsiSpec::Totient, t)
}

pub fn std(kind: StandardKind, t: usize) -> SymSeries {
    standard_series(kind, t)
}

pub fn h_pieces(f: &SymSeries) -> Result<Vec<SymSeries>> {
    graded_powers(GenKind::H, f)
}

pub fn e_pieces(f: &SymSeries) -> Result<Vec<SymSeries>> {
    graded_powers(GenKind::E, f)
}

/// `sum_{r >= 1} (-1)^{r-1} pieces[r]`.
pub fn alternating_from_one(pieces: &[SymSeries]) -> SymSeries {
    let t = pieces[0].trunc();
    let mut out = SymSeries::zero(t);
    for (r, piece) in pieces.iter().enumerate().skip(1) {
        out = if r % 2 == 1 { &out + piece } else { &out - piece };
    }
    out
}

/// `sum_{r >= 1} pieces[r]`.
pub fn total_from_one(pieces: &[SymSeries]) -> SymSeries {
    let t = pieces[0].trunc();
    pieces.iter().skip(1).fold(SymSeries::zero(t), |acc, p| &acc + p)
}

/// `sum p_lambda` over all `lambda` with `|lambda| <= t` accepted by `keep`.
pub fn parts_sum(t: usize, keep: impl Fn(&Partition) -> bool) -> SymSeries {
    parts_sum_weighted(t, |l| keep(l).then(Rational::one))
}

pub fn parts_sum_weighted(t: usize, w: impl Fn(&Partition) -> Option<Rational>) -> SymSeries {
    SymSeries::from_fn(t, |n| {
        let mut out = PowerSumPoly::zero();
        for l in all_partitions(n) {
            if let Some(c) = w(&l) {
                out.add_term(l, c);
            }
        }
        out
    })
}

/// `sum_n c(n) p_n` for `n = 1..=t`.
pub fn linear(t: usize, c: impl Fn(u64) -> Rational) -> SymSeries {
    SymSeries::from_fn(t, |n| {
        if n == 0 {
            PowerSumPoly::zero()
        } else {
            PowerSumPoly::p(n as u32).scale(&c(n as u64))
        }
    })
}

pub fn hook(n: usize, arm: usize) -> Partition {
    let mut parts = vec![(n - arm) as u32];
    parts.extend(std::iter::repeat_n(1, arm));
    Partition::from_sorted(parts)
}

pub fn schur(parts: &[u32]) -> PowerSumPoly {
    from_schur(&Partition::new(parts.to_vec()).expect("valid partition"))
}

/// `kappa = sum_{n >= 2} s_{(n-1,1)}`.
pub fn kappa(t: usize) -> SymSeries {
    SymSeries::from_fn(t, |n| if n >= 2 { from_schur(&hook(n, 1)) } else { PowerSumPoly::zero() })
}

/// `sum_{n >= 2} sum_{k=0}^n (-1)^k p_1^{n-k} g_k` with `g = h` or `e`.
pub fn hodge_total(kind: GenKind, t: usize) -> SymSeries {
    SymSeries::from_fn(t, |n| if n >= 2 { delta(kind, n) } else { PowerSumPoly::zero() })
}

/// `sum_{k=0}^n (-1)^k p_1^{n-k} g_k`.
pub fn delta(kind: GenKind, n: usize) -> PowerSumPoly {
    let mut out = PowerSumPoly::zero();
    for k in 0..=n {
        let g = PowerSumPoly::generator(kind, k).expect("generator");
        let term = PowerSumPoly::p1_power(n - k).multiply(&g, None);
        out += &if k % 2 == 0 { term } else { -term };
    }
    out
}

/// `h_n`, with `h_n = 0` for negative `n`.
pub fn h_signed(n: i64) -> PowerSumPoly {
    if n < 0 {
        PowerSumPoly::zero()
    } else {
        PowerSumPoly::h(n as usize)
    }
}

pub fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// The truncated composition `k + k[k] + k[k[k]] + ...` for `k` of minimal degree at least 2.
pub fn iterate_composition(k: &SymSeries) -> Result<SymSeries> {
    let t = k.trunc();
    let mut out = SymSeries::zero(t);
    let mut cur = k.clone();
    let mut min_degree = 2usize;
    while min_degree <= t {
        out = &out + &cur;
        cur = cur.plethysm(k)?;
        min_degree *= 2;
    }
    Ok(out)
}

/// The exponent map `m -> f_m(v)` for `m = 1..=t` where `f` is a family series.
pub fn exponents_at(f: &SymSeries, v: &Rational, scale: &Rational) -> std::collections::BTreeMap<u64, Rational> {
    (1..=f.trunc())
        .map(|m| (m as u64, f.component(m).specialize_t(v) * scale))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

pub fn v_values(n: usize) -> Vec<Rational> {
    (0..=n as i64).map(int).collect()
}
