use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symfun::partition::all_partitions;
use symfun::schur::{char_value, from_schur, to_schur};
use symfun::symfunc::{frac, int};
use symfun::{Partition, PowerSumPoly};

#[test]
fn murnaghan_nakayama_column_orthogonality() {
    for n in 1..=8 {
        let parts = all_partitions(n);
        let table: Vec<Vec<i64>> = parts
            .iter()
            .map(|l| parts.iter().map(|m| char_value(l, m).unwrap()).collect())
            .collect();
        for (a, mu) in parts.iter().enumerate() {
            for b in 0..parts.len() {
                let dot: i64 = table.iter().map(|row| row[a] * row[b]).sum();
                let want = if a == b { mu.z() } else { BigInt::from(0) };
                assert_eq!(BigInt::from(dot), want, "n={n} {mu} vs {}", parts[b]);
            }
        }
    }
}

#[test]
fn schur_round_trip() {
    for n in 1..=8 {
        for l in all_partitions(n) {
            let s = to_schur(&from_schur(&l), n);
            assert_eq!(s.terms().count(), 1, "{l}");
            assert_eq!(s.coeff(&l), int(1));
        }
        let sum = all_partitions(n)
            .iter()
            .enumerate()
            .fold(PowerSumPoly::zero(), |acc, (i, l)| &acc + &from_schur(l).scale(&frac(i as i64 - 3, 2)));
        assert_eq!(to_schur(&sum, n).to_power_sum(), sum);
    }
}

fn random_poly(rng: &mut ChaCha8Rng, min_deg: usize, max_deg: usize, terms: usize) -> PowerSumPoly {
    let mut f = PowerSumPoly::zero();
    for _ in 0..terms {
        let n = rng.gen_range(min_deg..=max_deg);
        let parts = all_partitions(n);
        let l = parts[rng.gen_range(0..parts.len())].clone();
        f.add_term(l, frac(rng.gen_range(-3..=3), rng.gen_range(1..=3)));
    }
    f
}

#[test]
fn plethysm_is_associative_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let trunc = 6;
    for case in 0..120 {
        let f = random_poly(&mut rng, 0, 3, 3);
        let g = random_poly(&mut rng, 1, 2, 3);
        let h = random_poly(&mut rng, 1, 2, 2);
        let left = f.plethysm(&g, trunc).unwrap().plethysm(&h, trunc).unwrap();
        let right = f.plethysm(&g.plethysm(&h, trunc).unwrap(), trunc).unwrap();
        assert_eq!(left, right, "case {case}: f={f} g={g} h={h}");
    }
}

#[test]
fn plethysm_rejects_constant_inner_argument() {
    let f = PowerSumPoly::p(2);
    assert_eq!(f.plethysm(&PowerSumPoly::one(), 4), Err(symfun::Error::ConstantTerm));
}

fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| {
        let parts = all_partitions(n);
        (0..parts.len()).prop_map(move |i| parts[i].clone())
    })
}

fn arb_poly() -> impl Strategy<Value = PowerSumPoly> {
    prop::collection::vec((arb_partition(5), -4i64..=4, 1i64..=3), 0..5)
        .prop_map(|ts| ts.into_iter().fold(PowerSumPoly::zero(), |acc, (l, a, b)| &acc + &PowerSumPoly::term(l, frac(a, b))))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn conjugation_is_an_involution(l in arb_partition(12)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn omega_is_a_ring_involution(f in arb_poly(), g in arb_poly()) {
        prop_assert_eq!(f.omega().omega(), f.clone());
        prop_assert_eq!((&f * &g).omega(), &f.omega() * &g.omega());
    }

    #[test]
    fn p1_derivative_is_adjoint_to_p1(l in arb_partition(6), m in arb_partition(6)) {
        let f = PowerSumPoly::p_lambda(l);
        let g = PowerSumPoly::p_lambda(m);
        let lhs = (&PowerSumPoly::p(1) * &f).hall_inner_product(&g);
        prop_assert_eq!(lhs, f.hall_inner_product(&g.p1_derivative()));
    }

    #[test]
    fn schur_functions_are_orthonormal(l in arb_partition(6), m in arb_partition(6)) {
        let ip = from_schur(&l).hall_inner_product(&from_schur(&m));
        prop_assert_eq!(ip, if l == m { int(1) } else { int(0) });
    }

    #[test]
    fn plethysm_is_additive_in_the_outer_argument(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        let h = h.filter(|l| !l.is_empty());
        let lhs = (&f + &g).plethysm(&h, 6).unwrap();
        let rhs = &f.plethysm(&h, 6).unwrap() + &g.plethysm(&h, 6).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adams_operation_is_plethysm_by_power_sum(f in arb_poly(), k in 1u32..=3) {
        prop_assert_eq!(f.adams(k).truncate(8), f.plethysm(&PowerSumPoly::p(k), 8).unwrap());
    }
}
