use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::Zero;
use symfun::partition::all_partitions;
use symfun::schur::to_schur;
use symfun::{Partition, PowerSumPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    P,
    S,
    H,
    E,
}

impl FromStr for Basis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            "h" => Ok(Basis::H),
            "e" => Ok(Basis::E),
            _ => Err(format!("unknown basis `{s}` (expected p, s, h or e)")),
        }
    }
}

pub type Expansion = BTreeMap<Partition, Rational>;

fn degrees(f: &PowerSumPoly) -> Vec<usize> {
    let mut ds: Vec<usize> = f.terms().map(|(l, _)| l.size()).collect();
    ds.dedup();
    ds.sort_unstable();
    ds.dedup();
    ds
}

fn schur(f: &PowerSumPoly) -> Expansion {
    let mut out = Expansion::new();
    for n in degrees(f) {
        for (l, c) in to_schur(&f.component(n), n).terms() {
            out.insert(l.clone(), c.clone());
        }
    }
    out
}

fn h_product(l: &Partition) -> PowerSumPoly {
    l.parts().iter().fold(PowerSumPoly::one(), |acc, &k| acc.multiply(&PowerSumPoly::h(k as usize), None))
}

/// Coefficients in the complete homogeneous basis. `h_mu = s_mu + (terms dominating mu)`,
/// so peeling off lexicographically smallest Schur terms solves the system.
fn complete(f: &PowerSumPoly) -> Expansion {
    let mut out = Expansion::new();
    for n in degrees(f) {
        let mut rest = to_schur(&f.component(n), n);
        let mut shapes = all_partitions(n);
        shapes.sort_by(|a, b| a.parts().cmp(b.parts()));
        for mu in shapes {
            let c = rest.coeff(&mu);
            if c.is_zero() {
                continue;
            }
            let remainder = &rest.to_power_sum() - &h_product(&mu).scale(&c);
            rest = to_schur(&remainder, n);
            out.insert(mu, c);
        }
        debug_assert!(rest.is_zero());
    }
    out
}

pub fn expand(f: &PowerSumPoly, basis: Basis) -> Expansion {
    match basis {
        Basis::P => f.terms().map(|(l, c)| (l.clone(), c.clone())).collect(),
        Basis::S => schur(f),
        Basis::H => complete(f),
        Basis::E => complete(&f.omega()),
    }
}

/// Terms by increasing degree, reverse-lexicographic within a degree.
pub fn ordered(e: &Expansion) -> Vec<(&Partition, &Rational)> {
    let mut v: Vec<_> = e.iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|(a, _), (b, _)| a.size().cmp(&b.size()).then_with(|| b.parts().cmp(a.parts())));
    v
}
