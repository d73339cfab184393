use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{divisors, gcd, moebius, parse_u64_list, s_split, totient, PrimeSet};
use crate::partition::{is_power_of, Partition};
use crate::symfunc::{int, PowerSumPoly, Rational};

/// A (possibly infinite) set of positive integers given by a membership rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SubsetT {
    Explicit(Vec<u64>),
    AtMost(u64),
    DivisorsOf(u64),
    OneMod(u64),
    PowersOf(u64),
    CoprimeTo(Vec<u64>),
    All,
}

impl SubsetT {
    pub fn contains(&self, n: u64) -> bool {
        match self {
            SubsetT::Explicit(v) => v.contains(&n),
            SubsetT::AtMost(k) => n >= 1 && n <= *k,
            SubsetT::DivisorsOf(k) => n >= 1 && k % n == 0,
            SubsetT::OneMod(k) => n >= 1 && n % k == 1 % k,
            SubsetT::PowersOf(k) => n >= 1 && u32::try_from(n).is_ok_and(|m| is_power_of(m, *k as u32)),
            SubsetT::CoprimeTo(v) => n >= 1 && v.iter().all(|&q| gcd(n, q) == 1),
            SubsetT::All => n >= 1,
        }
    }
}

impl fmt::Display for SubsetT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            SubsetT::Explicit(v) => write!(f, "{{{}}}", list(v)),
            SubsetT::AtMost(k) => write!(f, "le({k})"),
            SubsetT::DivisorsOf(k) => write!(f, "div({k})"),
            SubsetT::OneMod(k) => write!(f, "mod1({k})"),
            SubsetT::PowersOf(k) => write!(f, "pow({k})"),
            SubsetT::CoprimeTo(v) => write!(f, "coprime({})", list(v)),
            SubsetT::All => f.write_str("all"),
        }
    }
}

fn call_arg<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.strip_prefix(name)?.trim_start().strip_prefix('(')?.strip_suffix(')')
}

fn single_u64(arg: &str) -> Result<u64> {
    arg.trim()
        .parse::<u64>()
        .ok()
        .filter(|&k| k >= 1)
        .ok_or_else(|| Error::BadOption(format!("expected a positive integer, got {arg:?}")))
}

impl std::str::FromStr for SubsetT {
    type Err = Error;

    /// Accepts `{1,3}`, `le(k)`, `div(k)`, `mod1(k)`, `pow(k)`, `coprime(a,b)` and `all`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "all" {
            return Ok(SubsetT::All);
        }
        if let Some(body) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let mut v = parse_u64_list(body)?;
            v.sort_unstable();
            v.dedup();
            return Ok(SubsetT::Explicit(v));
        }
        if let Some(a) = call_arg(s, "coprime") {
            return Ok(SubsetT::CoprimeTo(parse_u64_list(a)?));
        }
        let table: [(&str, fn(u64) -> SubsetT); 4] = [
            ("le", SubsetT::AtMost),
            ("div", SubsetT::DivisorsOf),
            ("mod1", SubsetT::OneMod),
            ("pow", SubsetT::PowersOf),
        ];
        for (name, make) in table {
            if let Some(a) = call_arg(s, name) {
                let k = single_u64(a)?;
                if name == "pow" && k < 2 {
                    return Err(Error::BadOption("pow(k) needs k >= 2".into()));
                }
                return Ok(make(k));
            }
        }
        Err(Error::BadOption(format!("unrecognised subset rule {s:?}")))
    }
}

/// The arithmetic function selecting a family `f_n = (1/n) sum_{d|n} psi(d) p_d^{n/d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsiSpec {
    Moebius,
    Totient,
    PrimeSet(PrimeSet),
    PrimeSetBar(PrimeSet),
    Foulkes(u64),
    SubsetT(SubsetT),
    Custom(BTreeMap<u64, Rational>),
}

impl PsiSpec {
    pub fn lie2() -> Self {
        PsiSpec::PrimeSet(PrimeSet::new([2]).unwrap())
    }

    /// `psi(d)` for the degree-`n` member (only the Foulkes family depends on `n`).
    pub fn psi(&self, d: u64, n: u64) -> Result<Rational> {
        Ok(match self {
            PsiSpec::Moebius => int(moebius(d)?),
            PsiSpec::Totient => int(totient(d)? as i64),
            PsiSpec::PrimeSet(s) => {
                let (q, l) = s_split(d, s)?;
                int(totient(q)? as i64 * moebius(l)?)
            }
            PsiSpec::PrimeSetBar(s) => {
                let (q, l) = s_split(d, s)?;
                int(totient(l)? as i64 * moebius(q)?)
            }
            PsiSpec::Foulkes(r) => {
                if *r == 0 {
                    return Err(Error::Domain(format!("Foulkes index must be positive (degree {n})")));
                }
                let e = d / gcd(d, *r);
                Rational::new(
                    (totient(d)? as i64 * moebius(e)?).into(),
                    (totient(e)? as i64).into(),
                )
            }
            PsiSpec::SubsetT(t) => {
                let mut acc = 0i64;
                for m in divisors(d)? {
                    if t.contains(m) {
                        acc += m as i64 * moebius(d / m)?;
                    }
                }
                int(acc)
            }
            PsiSpec::Custom(table) => table.get(&d).cloned().unwrap_or_else(Rational::zero),
        })
    }

    pub fn description(&self) -> String {
        match self {
            PsiSpec::Moebius => "Lie".into(),
            PsiSpec::Totient => "Conj".into(),
            PsiSpec::PrimeSet(s) => format!("L^{s}"),
            PsiSpec::PrimeSetBar(s) => format!("L^{}", s.complement()),
            PsiSpec::Foulkes(r) => format!("Foulkes(r={r})"),
            PsiSpec::SubsetT(t) => format!("f^{t}"),
            PsiSpec::Custom(_) => "custom".into(),
        }
    }
}

impl fmt::Display for PsiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description())
    }
}

impl std::str::FromStr for PsiSpec {
    type Err = Error;

    /// Accepts `lie`, `conj`, `lie2`, `L{3}`, `Lbar{2}`, `foulkes(r)` and `fT(rule)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "lie" | "moebius" => return Ok(PsiSpec::Moebius),
            "conj" | "totient" => return Ok(PsiSpec::Totient),
            "lie2" => return Ok(PsiSpec::lie2()),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("Lbar") {
            return Ok(PsiSpec::PrimeSetBar(rest.parse()?));
        }
        if let Some(rest) = s.strip_prefix('L') {
            if rest.starts_with('{') {
                return Ok(PsiSpec::PrimeSet(rest.parse()?));
            }
        }
        if let Some(a) = call_arg(s, "foulkes") {
            return Ok(PsiSpec::Foulkes(single_u64(a)?));
        }
        if let Some(a) = call_arg(s, "fT") {
            return Ok(PsiSpec::SubsetT(a.parse()?));
        }
        Err(Error::BadOption(format!("unrecognised family {s:?}")))
    }
}

/// `(1/n) sum_{d|n} psi(d) p_d^{n/d}`.
pub fn from_psi(spec: &PsiSpec, n: usize) -> Result<PowerSumPoly> {
    if n == 0 {
        return Err(Error::Domain("family members start in degree 1".into()));
    }
    let n64 = n as u64;
    let mut out = PowerSumPoly::zero();
    for d in divisors(n64)? {
        let c = spec.psi(d, n64)? / int(n as i64);
        out.add_term(Partition::rectangle(d as u32, (n64 / d) as usize), c);
    }
    Ok(out)
}

pub fn lie(n: usize) -> Result<PowerSumPoly> {
    from_psi(&PsiSpec::Moebius, n)
}

pub fn conj(n: usize) -> Result<PowerSumPoly> {
    from_psi(&PsiSpec::Totient, n)
}

pub fn lie2(n: usize) -> Result<PowerSumPoly> {
    l_s(n, &PrimeSet::new([2]).unwrap())
}

/// `L^S_n`; a complemented set selects the barred variant.
pub fn l_s(n: usize, s: &PrimeSet) -> Result<PowerSumPoly> {
    if s.is_complement() {
        from_psi(&PsiSpec::PrimeSetBar(s.complement()), n)
    } else {
        from_psi(&PsiSpec::PrimeSet(s.clone()), n)
    }
}

/// The Foulkes character `l_n^{(r)}`; it depends only on `r` modulo `n`.
pub fn foulkes(n: usize, r: usize) -> Result<PowerSumPoly> {
    from_psi(&PsiSpec::Foulkes(r as u64), n)
}

/// `l_n^{(k)}` for any `k >= 1`, reducing `k` modulo `n` into `1..=n`.
pub fn foulkes_mod(n: usize, k: usize) -> Result<PowerSumPoly> {
    let r = (k - 1) % n + 1;
    foulkes(n, r)
}

pub fn f_t(n: usize, t: &SubsetT) -> Result<PowerSumPoly> {
    from_psi(&PsiSpec::SubsetT(t.clone()), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::to_schur;
    use crate::symfunc::frac;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn from_psi_examples() {
        assert_eq!(lie(2).unwrap(), PowerSumPoly::e(2));
        let c4: PowerSumPoly = [
            (p(&[1, 1, 1, 1]), frac(1, 4)),
            (p(&[2, 2]), frac(1, 4)),
            (p(&[4]), frac(1, 2)),
        ]
        .into_iter()
        .collect();
        assert_eq!(conj(4).unwrap(), c4);
        let l4: PowerSumPoly = [(p(&[1, 1, 1, 1]), frac(1, 4)), (p(&[2, 2]), frac(-1, 4))]
            .into_iter()
            .collect();
        assert_eq!(lie(4).unwrap(), l4);
        assert!(lie(0).is_err());
    }

    #[test]
    fn lie2_cases() {
        assert_eq!(lie2(3).unwrap(), lie(3).unwrap());
        assert_eq!(lie2(4).unwrap(), conj(4).unwrap());
        assert_eq!(lie2(6).unwrap(), lie(6).unwrap().omega());
        for n in 1..=16 {
            let l2 = lie2(n).unwrap();
            if n % 2 == 1 {
                assert_eq!(l2, lie(n).unwrap());
            } else if n.is_power_of_two() {
                assert_eq!(l2, conj(n).unwrap());
            } else if (n / 2) % 2 == 1 {
                assert_eq!(l2, lie(n).unwrap().omega());
            }
        }
    }

    #[test]
    fn l_s_examples() {
        assert_eq!(l_s(5, &PrimeSet::empty()).unwrap(), lie(5).unwrap());
        assert_eq!(l_s(5, &PrimeSet::empty().complement()).unwrap(), conj(5).unwrap());
        let two = PrimeSet::new([2]).unwrap();
        assert_eq!(l_s(12, &two).unwrap().specialize_t(&int(1)), int(0));
        assert_eq!(l_s(8, &two).unwrap().specialize_t(&int(1)), int(1));
    }

    #[test]
    fn foulkes_examples() {
        assert_eq!(foulkes(6, 1).unwrap(), lie(6).unwrap());
        assert_eq!(foulkes(6, 6).unwrap(), conj(6).unwrap());
        let s = to_schur(&foulkes(4, 2).unwrap(), 4);
        let got: Vec<(String, String)> = s.terms().map(|(l, c)| (l.to_string(), c.to_string())).collect();
        assert_eq!(
            got,
            [("[3,1]", "1"), ("[2,2]", "1"), ("[1,1,1,1]", "1")]
                .map(|(a, b)| (a.to_string(), b.to_string()))
        );
        assert!(foulkes(4, 0).is_err());
        assert_eq!(foulkes(4, 5).unwrap(), foulkes(4, 1).unwrap());
    }

    #[test]
    fn f_t_examples() {
        assert_eq!(f_t(6, &SubsetT::Explicit(vec![1])).unwrap(), lie(6).unwrap());
        assert_eq!(f_t(5, &SubsetT::All).unwrap(), conj(5).unwrap());
        let expected = &lie(4).unwrap() + &lie(2).unwrap().adams(2);
        assert_eq!(f_t(4, &SubsetT::Explicit(vec![1, 2])).unwrap(), expected);
    }

    #[test]
    fn subset_values_at_one() {
        let rules = [
            SubsetT::Explicit(vec![1, 3, 4]),
            SubsetT::AtMost(3),
            SubsetT::DivisorsOf(12),
            SubsetT::OneMod(3),
            SubsetT::PowersOf(2),
            SubsetT::CoprimeTo(vec![2, 3]),
            SubsetT::All,
        ];
        for t in &rules {
            for n in 1..=20 {
                let v = f_t(n, t).unwrap().specialize_t(&int(1));
                assert_eq!(v, int(i64::from(t.contains(n as u64))), "{t} n={n}");
            }
        }
    }

    #[test]
    fn parity_relation_at_minus_one() {
        let specs = [
            PsiSpec::Moebius,
            PsiSpec::Totient,
            PsiSpec::lie2(),
            PsiSpec::PrimeSet(PrimeSet::new([3]).unwrap()),
            PsiSpec::PrimeSetBar(PrimeSet::new([2]).unwrap()),
            PsiSpec::SubsetT(SubsetT::OneMod(3)),
        ];
        let one = int(1);
        let minus = int(-1);
        for spec in &specs {
            let at = |n: usize, t: &Rational| from_psi(spec, n).unwrap().specialize_t(t);
            for n in 1..=20 {
                if n % 2 == 1 {
                    assert_eq!(at(n, &minus), -at(n, &one));
                } else {
                    assert_eq!(at(n, &minus), at(n / 2, &one) - at(n, &one));
                }
            }
        }
    }
}
