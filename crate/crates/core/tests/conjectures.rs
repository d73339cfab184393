use symfun::numtheory::PrimeSet;
use symfun::partition::{partitions_of, PartFilter, PartRule};
use symfun::repmodules::l_s;
use symfun::schur::to_schur;
use symfun::series::product_over;
use symfun::verify::{lift_exceptions, run_check, CheckReport, Options, Status};
use symfun::{Partition, PowerSumPoly, Rational};

fn run(name: &str, n: usize, opts: &str) -> CheckReport {
    let r = run_check(name, Some(n), &Options::parse(opts).unwrap()).unwrap();
    assert_eq!(r.status, Status::PositivityReport, "{name} must only report");
    r
}

fn sign_rep(n: usize) -> String {
    format!("[{}]", vec!["1"; n].join(","))
}

/// `sum_{lambda} p_lambda` over partitions of `n` with parts allowed by `allow`.
fn part_sum(n: usize, allow: impl Fn(u32) -> bool + Send + Sync + 'static) -> PowerSumPoly {
    let filter = PartFilter::none().with(PartRule::custom(allow));
    partitions_of(n, &filter).map(PowerSumPoly::p_lambda).fold(PowerSumPoly::zero(), |a, b| &a + &b)
}

/// Coefficient of `s_(1^n)` in `sum p_lambda`: the sum of the signs `(-1)^(n - l(lambda))`.
fn sign_multiplicity(n: usize, allow: impl Fn(u32) -> bool) -> i64 {
    let mut total = 0i64;
    let mut stack = vec![(n as u32, n as u32, 0usize)];
    while let Some((left, max, len)) = stack.pop() {
        if left == 0 {
            total += if (n - len).is_multiple_of(2) { 1 } else { -1 };
            continue;
        }
        for part in (1..=max.min(left)).filter(|&p| allow(p)) {
            stack.push((left - part, part, len + 1));
        }
    }
    total
}

#[test]
fn lie2_lift_fails_exactly_at_powers_of_two() {
    let r = run("conj.lie2-lift", 16, "");
    assert_eq!(r.failing_degrees(), vec![4, 8, 16]);
    for d in r.per_degree.iter().filter(|d| !d.pass) {
        let detail = d.detail.as_ref().unwrap();
        assert_eq!(detail.partition.as_deref(), Some(format!("[{}]", d.degree).as_str()));
        assert_eq!(detail.coeff.as_deref(), Some("-1"));
    }
    assert_eq!(lift_exceptions(2, 16).unwrap(), vec![4, 8, 16]);
}

#[test]
fn lie2_lift_in_degree_two_is_the_sign_character() {
    let two = PrimeSet::new([2]).unwrap();
    let diff = &PowerSumPoly::p(1).multiply(&l_s(1, &two).unwrap(), None) - &l_s(2, &two).unwrap();
    assert_eq!(diff, PowerSumPoly::e(2));
}

#[test]
fn lift_variants_for_odd_primes_match_stated_exceptions() {
    for q in [3u64, 5] {
        let r = run("conj.lie2-lift", 28, &format!("q={q}"));
        assert_eq!(r.failing_degrees(), lift_exceptions(q, 28).unwrap(), "q={q}");
    }
}

#[test]
fn uk_positive_with_closed_forms_to_degree_10() {
    let r = run("conj.uk", 10, "");
    assert!(r.all_pass(), "{:?}", r.per_degree.iter().find(|d| !d.pass));
    assert_eq!(r.per_degree.last().unwrap().degree, 10);
}

#[test]
fn powers_of_four_fail_at_4_and_16_with_sign_witness() {
    let r = run("conj.powers-of-k", 16, "k=4");
    assert_eq!(r.failing_degrees(), vec![4, 16]);
    for d in r.per_degree.iter().filter(|d| !d.pass) {
        let detail = d.detail.as_ref().unwrap();
        assert!(detail.identity.starts_with("f^pow(4)"), "{}", detail.identity);
        assert_eq!(detail.partition.as_deref(), Some(sign_rep(d.degree).as_str()));
        assert_eq!(detail.coeff.as_deref(), Some("-1"));
    }
}

/// Irreducible character value by rim-hook removal on beta-sets.
fn mn_char(lambda: &[u32], mu: &[u32]) -> i64 {
    let len = lambda.len();
    let beta: Vec<u32> = lambda.iter().enumerate().map(|(i, &p)| p + (len - 1 - i) as u32).collect();
    fn go(beta: &mut Vec<u32>, mu: &[u32]) -> i64 {
        let Some((&r, rest)) = mu.split_first() else { return 1 };
        let mut total = 0;
        for i in 0..beta.len() {
            let x = beta[i];
            if x < r || beta.contains(&(x - r)) {
                continue;
            }
            let between = beta.iter().filter(|&&b| b > x - r && b < x).count();
            beta[i] = x - r;
            let v = go(beta, rest);
            beta[i] = x;
            total += if between % 2 == 0 { v } else { -v };
        }
        total
    }
    go(&mut beta.clone(), mu)
}

#[test]
fn mn_oracle_sanity() {
    assert_eq!(mn_char(&[2, 1], &[1, 1, 1]), 2);
    assert_eq!(mn_char(&[2, 1], &[3]), -1);
    assert_eq!(mn_char(&[1, 1, 1, 1], &[4]), -1);
    assert_eq!(mn_char(&[3, 1], &[2, 2]), -1);
}

#[test]
fn powers_of_four_product_is_positive_through_degree_16() {
    let pow4 = |p: u32| p == 1 || p == 4 || p == 16;
    let series = product_over(|m| pow4(m as u32), -1, -1, 16).unwrap();
    let zero = Rational::from_integer(0.into());
    for n in 1..=16 {
        let direct = part_sum(n, pow4);
        assert_eq!(series.component(n), &direct, "degree {n}");
        let s = to_schur(&direct, n);
        let negatives: Vec<(&Partition, &Rational)> = s.terms().filter(|(_, c)| **c < zero).collect();
        assert!(negatives.is_empty(), "degree {n}: {negatives:?}");
        let sign = sign_multiplicity(n, pow4);
        assert_eq!(s.coeff(&sign_rep(n).parse().unwrap()), Rational::from_integer(sign.into()));
    }
    assert_eq!(sign_multiplicity(4, pow4), 0);
    assert_eq!(sign_multiplicity(16, pow4), 0);

    let s16 = to_schur(series.component(16), 16);
    let mus: Vec<Partition> = partitions_of(16, &PartFilter::none().with(PartRule::custom(pow4))).collect();
    for lambda in symfun::partition::all_partitions(16) {
        let oracle: i64 = mus.iter().map(|mu| mn_char(lambda.parts(), mu.parts())).sum();
        assert!(oracle >= 0, "{lambda}");
        assert_eq!(s16.coeff(&lambda), Rational::from_integer(oracle.into()), "{lambda}");
    }
}

#[test]
fn odd_powers_report_positive() {
    for k in [3, 5] {
        let r = run("conj.powers-of-k", 16, &format!("k={k}"));
        assert!(r.all_pass(), "k={k}: {:?}", r.failing_degrees());
    }
}

#[test]
fn stanley_product_for_k2_is_positive() {
    let r = run("conj.stanley", 16, "k=2");
    assert!(r.all_pass(), "{:?}", r.failing_degrees());
}

#[test]
fn stanley_product_for_k3_has_negative_sign_multiplicity_at_12() {
    let one_mod_3 = |p: u32| p % 3 == 1;
    assert_eq!(sign_multiplicity(12, one_mod_3), -1);
    let r = run("conj.stanley", 16, "k=3");
    let fails = r.failing_degrees();
    assert!(fails.contains(&12), "{fails:?}");
    for n in 1..=16 {
        if sign_multiplicity(n, one_mod_3) < 0 {
            assert!(fails.contains(&n), "degree {n}");
        }
    }
    let twelve = &r.per_degree[11];
    assert_eq!(twelve.degree, 12);
    assert_eq!(twelve.detail.as_ref().unwrap().partition.as_deref(), Some(sign_rep(12).as_str()));
}

#[test]
fn partial_sums_report_positive() {
    for q in [2, 3] {
        let r = run("conj.partialW", 16, &format!("q={q}"));
        assert!(r.all_pass(), "q={q}: {:?}", r.failing_degrees());
    }
}
