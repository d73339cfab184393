use num_traits::One;

use crate::error::Result;
use crate::partition::{all_partitions, is_power_of, Partition};
use crate::repmodules::{foulkes, foulkes_mod};
use crate::schur::to_schur;
use crate::series::{apply_standard, e_lambda, h_lambda, product_over, StandardKind, SymSeries};
use crate::symfunc::{int, PowerSumPoly, Rational};
use crate::tableaux::foulkes_oracle;
use crate::verify::common::*;
use crate::verify::{Ctx, Recorder};

fn one_plus_p1(t: usize) -> SymSeries {
    SymSeries::from_poly(&(PowerSumPoly::one() + PowerSumPoly::p(1)), t)
}

fn pow2_parts(l: &Partition) -> bool {
    l.parts().iter().all(|&p| is_power_of(p, 2))
}

fn lambda_sums(
    q: &SymSeries,
    n: usize,
    e: bool,
    weight: impl Fn(&Partition) -> Rational,
) -> Result<PowerSumPoly> {
    let mut out = PowerSumPoly::zero();
    for l in all_partitions(n) {
        let term = if e { e_lambda(q, &l)? } else { h_lambda(q, &l)? };
        out += &term.scale(&weight(&l));
    }
    Ok(out)
}

fn length_sign(l: &Partition) -> Rational {
    sign(l.size() - l.len())
}

pub fn symext(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let (lie, lie2) = (lie(c.n)?, lie2(c.n)?);
    for n in r.degrees() {
        let p1n = PowerSumPoly::p1_power(n);
        r.poly_eq("sum H_lambda[Lie] = p1^n", n, &lambda_sums(&lie, n, false, |_| Rational::one())?, &p1n);
        r.poly_eq("sum E_lambda[Lie2] = p1^n", n, &lambda_sums(&lie2, n, true, |_| Rational::one())?, &p1n);
    }
    Ok(())
}

pub fn plinvhe(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let target = one_plus_p1(c.n);
    r.series_eq("H[alt Lie] = 1 + p1", &apply_standard(StandardKind::H, &lie(c.n)?.alt())?, &target);
    r.series_eq("E[alt Lie2] = 1 + p1", &apply_standard(StandardKind::E, &lie2(c.n)?.alt())?, &target);
    Ok(())
}

pub fn acyceh(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let (lie, lie2) = (lie(c.n)?, lie2(c.n)?);
    let zero = PowerSumPoly::zero();
    for n in r.degrees() {
        r.poly_eq("sum (-1)^(n-l) E_lambda[Lie] = 0", n, &lambda_sums(&lie, n, true, length_sign)?, &zero);
        r.poly_eq("sum (-1)^(n-l) H_lambda[Lie2] = 0", n, &lambda_sums(&lie2, n, false, length_sign)?, &zero);
    }
    Ok(())
}

pub fn totalcoh(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let (lie, lie2) = (lie(c.n)?, lie2(c.n)?);
    let pow2 = parts_sum(c.n, pow2_parts);
    for n in r.degrees() {
        let want = PowerSumPoly::e(2).scale(&int(2)).multiply(&PowerSumPoly::p1_power(n - 2), None);
        r.poly_eq("sum E_lambda[Lie] = 2 e2 p1^(n-2)", n, &lambda_sums(&lie, n, true, |_| Rational::one())?, &want);
        r.poly_eq(
            "sum H_lambda[Lie2] = sum over power-of-2 parts",
            n,
            &lambda_sums(&lie2, n, false, |_| Rational::one())?,
            pow2.component(n),
        );
    }
    Ok(())
}

pub fn plinv_e1(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let lie2 = lie2(c.n)?;
    r.series_eq("E[Lie2] = (1-p1)^-1", &apply_standard(StandardKind::E, &lie2)?, &std(StandardKind::GeomP1, c.n));
    let one_minus = SymSeries::from_poly(&(PowerSumPoly::one() - PowerSumPoly::p(1)), c.n);
    r.series_eq("H^pm[Lie2] = 1 - p1", &apply_standard(StandardKind::Hpm, &lie2)?, &one_minus);
    Ok(())
}

pub fn plinv_e2(c: &Ctx, r: &mut Recorder) -> Result<()> {
    r.series_eq("E[alt Lie2] = 1 + p1", &apply_standard(StandardKind::E, &lie2(c.n)?.alt())?, &one_plus_p1(c.n));
    Ok(())
}

pub fn plinv_e3(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let h = apply_standard(StandardKind::H, &lie2(t)?)?;
    let prod = product_over(|n| is_power_of(n as u32, 2), -1, -1, t)?;
    r.series_eq("H[Lie2] = prod_{2^k} (1-p_n)^-1", &h, &prod);
    r.series_eq("H[Lie2] = sum over power-of-2 parts", &h, &parts_sum(t, pow2_parts));
    Ok(())
}

pub fn plinv_e4(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let lie2 = lie2(t)?;
    let rhs = apply_standard(StandardKind::H, &lie2.alt())?;
    let prod = product_over(|n| is_power_of(n as u32, 2), 1, 1, t)?;
    let distinct = parts_sum(t, |l| l.is_distinct() && pow2_parts(l));
    for n in r.degrees() {
        let lhs = lambda_sums(&lie2, n, true, length_sign)?.omega();
        r.poly_eq("sum (-1)^(n-l) omega(E_lambda[Lie2]) = H[alt Lie2]", n, &lhs, rhs.component(n));
    }
    r.series_eq("H[alt Lie2] = prod_{2^k} (1+p_n)", &rhs, &prod);
    r.series_eq("H[alt Lie2] = sum over distinct power-of-2 parts", &rhs, &distinct);
    Ok(())
}

pub fn thrall(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let h = apply_standard(StandardKind::H, &lie(c.n)?)?;
    r.series_eq("H[Lie] = (1-p1)^-1", &h, &std(StandardKind::GeomP1, c.n));
    Ok(())
}

pub fn cadogan(c: &Ctx, r: &mut Recorder) -> Result<()> {
    r.series_eq("H[alt Lie] = 1 + p1", &apply_standard(StandardKind::H, &lie(c.n)?.alt())?, &one_plus_p1(c.n));
    Ok(())
}

pub fn solomon(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let h = apply_standard(StandardKind::H, &conj(t)?)?;
    r.series_eq("H[Conj] = prod (1-p_n)^-1", &h, &product_over(|_| true, -1, -1, t)?);
    r.series_eq("H[Conj] = sum of all p_lambda", &h, &parts_sum(t, |_| true));
    Ok(())
}

pub fn extlieconj(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let (lie, conj) = (lie(t)?, conj(t)?);
    let geom = std(StandardKind::GeomP1, t);
    let one_plus_p2 = SymSeries::from_poly(&(PowerSumPoly::one() + PowerSumPoly::p(2)), t);
    let odd = |n: u64| n % 2 == 1;

    let ext = apply_standard(StandardKind::E, &lie)?;
    r.series_eq("omega(E[Lie]) = (1+p2)(1-p1)^-1", &ext.omega(), &one_plus_p2.mul(&geom));

    let ext_conj = apply_standard(StandardKind::E, &conj)?;
    r.series_eq("E[Conj] = prod_odd (1-p_n)^-1", &ext_conj, &product_over(odd, -1, -1, t)?);

    let rhs3 = one_plus_p1(t).mul(&product_over(|n| n == 2, -1, -1, t)?);
    let hl = apply_standard(StandardKind::E, &lie.alt())?.omega();
    for n in r.degrees() {
        let lhs = lambda_sums(&lie, n, false, length_sign)?;
        r.poly_eq("sum (-1)^(n-l) H_lambda[Lie] = omega(E[alt Lie])", n, &lhs, hl.component(n));
    }
    r.series_eq("omega(E[alt Lie]) = (1+p1)(1-p2)^-1", &hl, &rhs3);

    let alt_conj = apply_standard(StandardKind::E, &conj.alt())?;
    r.series_eq("E[alt Conj] = prod_odd (1+p_n)", &alt_conj, &product_over(odd, 1, 1, t)?);
    Ok(())
}

/// `sum_{lambda |- n, parts dividing k} p_lambda = H[sum_m l_m^(k)]|_n`, the value
/// `l_n^(k)(1) = [n | k]`, and the tableau count of every Schur multiplicity of `l_n^(r)`.
pub fn foulkes_k(c: &Ctx, r: &mut Recorder) -> Result<()> {
    let t = c.n;
    let ks: Vec<usize> = match c.opts.get::<usize>("k")? {
        Some(k) => vec![k],
        None => (1..=6).chain([12]).collect(),
    };
    for k in ks {
        if k == 0 {
            return Err(crate::Error::BadOption("k must be positive".into()));
        }
        let series = SymSeries::try_from_fn(t, |n| if n == 0 { Ok(PowerSumPoly::zero()) } else { foulkes_mod(n, k) })?;
        let h = apply_standard(StandardKind::H, &series)?;
        let lhs = parts_sum(t, |l| l.parts().iter().all(|&p| k % p as usize == 0));
        r.series_eq(&format!("H[sum l^({k})] = sum over parts dividing {k}"), &lhs, &h);
        for n in r.degrees() {
            let v = series.component(n).specialize_t(&Rational::one());
            let want = int((k % n == 0) as i64);
            r.truth(&format!("l_n^({k})(1) = [n | {k}]"), n, v == want, || format!("l_{n}^({k})(1) = {v}"));
            r.positive(&format!("sum over parts dividing {k} is Schur-positive"), n, lhs.component(n));
        }
    }
    for n in r.lo()..=r.hi().min(8) {
        let mut total = PowerSumPoly::zero();
        for rr in 1..=n {
            let f = foulkes(n, rr)?;
            total += &f;
            let s = to_schur(&f, n);
            for l in all_partitions(n) {
                let count = foulkes_oracle(&l, rr, n)?;
                let coeff = s.coeff(&l);
                r.truth("Schur multiplicities of l_n^(r) count tableaux by major index", n, coeff == int(count as i64), || {
                    format!("r={rr}, lambda={l}: coefficient {coeff}, tableaux {count}")
                });
            }
        }
        r.poly_eq("sum_r l_n^(r) = p1^n", n, &total, &PowerSumPoly::p1_power(n));
    }
    Ok(())
}
