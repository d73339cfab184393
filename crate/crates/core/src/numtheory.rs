use std::fmt;

use crate::error::{Error, Result};

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::Domain("argument must be a positive integer".into()))
    } else {
        Ok(())
    }
}

/// Prime factorization by trial division, as (prime, exponent) pairs in ascending order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

pub fn moebius(n: u64) -> Result<i64> {
    require_positive(n)?;
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.len().is_multiple_of(2) { 1 } else { -1 })
}

pub fn totient(n: u64) -> Result<u64> {
    require_positive(n)?;
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    require_positive(n)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// A set of primes, or the complement of one within all primes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeSet {
    primes: Vec<u64>,
    complement: bool,
}

impl PrimeSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut primes: Vec<u64> = primes.into_iter().collect();
        primes.sort_unstable();
        primes.dedup();
        if let Some(&bad) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::Domain(format!("{bad} is not prime")));
        }
        Ok(PrimeSet {
            primes,
            complement: false,
        })
    }

    pub fn empty() -> Self {
        PrimeSet {
            primes: Vec::new(),
            complement: false,
        }
    }

    /// The set of all primes not in `self`.
    pub fn complement(&self) -> Self {
        PrimeSet {
            primes: self.primes.clone(),
            complement: !self.complement,
        }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn is_complement(&self) -> bool {
        self.complement
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok() != self.complement
    }

    /// Whether every prime factor of `n` lies in the set (so 1 always qualifies).
    pub fn generates(&self, n: u64) -> bool {
        n >= 1 && factorize(n).iter().all(|&(p, _)| self.contains(p))
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        if self.complement {
            write!(f, "!{{{}}}", body.join(","))
        } else {
            write!(f, "{{{}}}", body.join(","))
        }
    }
}

pub(crate) fn parse_u64_list(body: &str) -> Result<Vec<u64>> {
    body.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|_| Error::BadOption(format!("not a positive integer: {t:?}"))))
        .collect()
}

impl std::str::FromStr for PrimeSet {
    type Err = Error;

    /// Accepts `{2,3}`, `{}` and complemented forms such as `!{2}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (complement, rest) = match s.strip_prefix('!') {
            Some(r) => (true, r.trim()),
            None => (false, s),
        };
        let body = rest
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::BadOption(format!("prime set must look like {{2,3}} or !{{2}}, got {s:?}")))?;
        let set = PrimeSet::new(parse_u64_list(body)?)?;
        Ok(if complement { set.complement() } else { set })
    }
}

/// Splits `n = Q * L` where `Q` collects the prime factors lying in `s` and `L` the rest.
pub fn s_split(n: u64, s: &PrimeSet) -> Result<(u64, u64)> {
    require_positive(n)?;
    let q = factorize(n)
        .into_iter()
        .filter(|&(p, _)| s.contains(p))
        .fold(1, |acc, (p, e)| acc * p.pow(e));
    Ok((q, n / q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_moebius(n: u64) -> i64 {
        // sum over squarefree factorizations via inclusion-exclusion on the prime list
        let mut m = n;
        let mut sign = 1;
        let mut p = 2;
        while m > 1 {
            if m.is_multiple_of(p) {
                m /= p;
                if m.is_multiple_of(p) {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        sign
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(12).unwrap(), 0);
        assert_eq!(moebius(30).unwrap(), brute_moebius(30));
        assert_eq!(moebius(30).unwrap(), -1);
        assert!(moebius(0).is_err());
    }

    #[test]
    fn totient_examples() {
        let brute = (1..=12u64).filter(|&k| gcd(k, 12) == 1).count() as u64;
        assert_eq!(totient(12).unwrap(), brute);
        assert_eq!(totient(1).unwrap(), 1);
        assert_eq!(totient(7).unwrap(), 6);
        assert!(totient(0).is_err());
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7).unwrap(), vec![1, 7]);
        assert_eq!(
            divisors(36).unwrap(),
            (1..=36).filter(|d| 36 % d == 0).collect::<Vec<_>>()
        );
    }

    #[test]
    fn divisor_sums() {
        for n in 1..=10_000u64 {
            let ds = divisors(n).unwrap();
            let phi: u64 = ds.iter().map(|&d| totient(d).unwrap()).sum();
            assert_eq!(phi, n);
            let mu: i64 = ds.iter().map(|&d| moebius(d).unwrap()).sum();
            assert_eq!(mu, i64::from(n == 1));
        }
    }

    #[test]
    fn split_examples() {
        let two = PrimeSet::new([2]).unwrap();
        assert_eq!(s_split(24, &two).unwrap(), (8, 3));
        assert_eq!(s_split(7, &two).unwrap(), (1, 7));
        assert_eq!(s_split(10, &PrimeSet::empty()).unwrap(), (1, 10));
        assert_eq!(s_split(24, &two.complement()).unwrap(), (3, 8));
    }

    #[test]
    fn split_recombines() {
        let s = PrimeSet::new([2, 5]).unwrap();
        for n in 1..=500 {
            let (q, l) = s_split(n, &s).unwrap();
            assert_eq!(q * l, n);
            assert!(factorize(l).iter().all(|&(p, _)| !s.contains(p)));
            assert!(s.generates(q));
        }
    }

    #[test]
    fn prime_set_rejects_composites() {
        assert!(PrimeSet::new([2, 4]).is_err());
        assert_eq!(PrimeSet::new([3, 2, 3]).unwrap().primes(), &[2, 3]);
    }
}
