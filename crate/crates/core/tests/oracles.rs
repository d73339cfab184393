use symfun::partition::all_partitions;
use symfun::repmodules::foulkes;
use symfun::schur::to_schur;
use symfun::tableaux::{foulkes_oracle, maj, syt_enumerate};
use symfun::verify::permutation_counts;
use symfun::{Partition, PowerSumPoly, Rational};

fn hook_length_count(l: &Partition) -> u64 {
    let conj = l.conjugate();
    let mut num: u64 = (1..=l.size() as u64).product();
    let mut den = 1u64;
    for (i, &row) in l.parts().iter().enumerate() {
        for j in 0..row as usize {
            den *= (row as usize - j) as u64 + (conj.parts()[j] as usize - i) as u64 - 1;
        }
    }
    num /= den;
    num
}

#[test]
fn syt_counts_match_hook_length_formula() {
    for n in 1..=8 {
        for l in all_partitions(n) {
            assert_eq!(syt_enumerate(&l).len() as u64, hook_length_count(&l), "{l}");
        }
    }
}

#[test]
fn maj_generating_function_at_one_shape() {
    // sum_T q^maj(T) for shape (2,1) is q + q^2.
    let mut majs: Vec<u32> = syt_enumerate(&"[2,1]".parse().unwrap()).iter().map(maj).collect();
    majs.sort();
    assert_eq!(majs, vec![1, 2]);
}

#[test]
fn foulkes_characters_match_tableaux_counts() {
    for n in 1..=8 {
        let mut total = PowerSumPoly::zero();
        for r in 1..=n {
            let f = foulkes(n, r).unwrap();
            let s = to_schur(&f, n);
            for l in all_partitions(n) {
                let want = foulkes_oracle(&l, r, n).unwrap();
                assert_eq!(s.coeff(&l), Rational::from_integer((want as i64).into()), "n={n} r={r} {l}");
            }
            total += &f;
        }
        assert_eq!(total, PowerSumPoly::p1_power(n), "n={n}");
    }
}

#[test]
fn foulkes_oracle_sums_to_syt_count() {
    for n in 1..=8 {
        for l in all_partitions(n) {
            let total: usize = (1..=n).map(|r| foulkes_oracle(&l, r, n).unwrap()).sum();
            assert_eq!(total as u64, hook_length_count(&l));
        }
    }
}

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Unsigned Stirling numbers of the first kind from `x(x+1)...(x+n-1)`.
fn stirling_row(n: usize) -> Vec<i64> {
    let mut c = vec![1i64];
    for m in 0..n as i64 {
        let mut next = vec![0i64; c.len() + 1];
        for (k, &v) in c.iter().enumerate() {
            next[k + 1] += v;
            next[k] += v * m;
        }
        c = next;
    }
    c
}

#[test]
fn permutation_counts_match_stirling_and_inclusion_exclusion() {
    for n in 1..=7usize {
        let (cycles, derange) = permutation_counts(n);
        let c = stirling_row(n);
        for j in 0..=n {
            assert_eq!(cycles[j] as i64, c[j], "c({n},{j})");
            let d: i64 = (0..=j)
                .map(|i| {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    sign * binomial(n as u64, i as u64) * stirling_row(n - i)[j - i]
                })
                .sum();
            assert_eq!(derange[j] as i64, d, "d({n},{j})");
        }
        let factorial: u64 = (1..=n as u64).product();
        assert_eq!(cycles.iter().sum::<u64>(), factorial);
    }
    assert_eq!(permutation_counts(5).1.iter().sum::<u64>(), 44);
}
