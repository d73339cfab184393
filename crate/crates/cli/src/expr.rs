use std::fmt;

use symfun::numtheory::PrimeSet;
use symfun::repmodules::{PsiSpec, SubsetT};
use symfun::{Partition, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Lie,
    Lie2,
    Conj,
    L(PrimeSet),
    Lbar(PrimeSet),
    Foulkes(u64),
    FT(SubsetT),
}

impl Family {
    pub fn spec(&self) -> PsiSpec {
        match self {
            Family::Lie => PsiSpec::Moebius,
            Family::Lie2 => PsiSpec::lie2(),
            Family::Conj => PsiSpec::Totient,
            Family::L(s) => PsiSpec::PrimeSet(s.clone()),
            Family::Lbar(s) => PsiSpec::PrimeSetBar(s.clone()),
            Family::Foulkes(r) => PsiSpec::Foulkes(*r),
            Family::FT(t) => PsiSpec::SubsetT(t.clone()),
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Family::Lie => "Lie",
            Family::Lie2 => "Lie2",
            Family::Conj => "Conj",
            Family::L(_) => "L",
            Family::Lbar(_) => "Lbar",
            Family::Foulkes(_) => "Foulkes",
            Family::FT(_) => "fT",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnaryOp {
    Omega,
    Alt,
    Ddp1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Pleth,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    H,
    E,
    Hpm,
    Epm,
    Inv,
}

impl FormKind {
    fn name(self) -> &'static str {
        match self {
            FormKind::H => "H",
            FormKind::E => "E",
            FormKind::Hpm => "Hpm",
            FormKind::Epm => "Epm",
            FormKind::Inv => "inv",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(Rational),
    P(Partition),
    S(Partition),
    H(usize),
    E(usize),
    /// The degree-`n` member of a family, e.g. `Lie(4)`.
    Member(Family, usize),
    /// The whole family as a series, e.g. `Lie` or `L({2})`; needs a truncation.
    Series(Family),
    Unary(UnaryOp, Box<Expr>),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Form(FormKind, Box<Expr>, usize),
    Ge2(Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar(c) => write!(f, "{c}"),
            Expr::P(l) => write!(f, "p{l}"),
            Expr::S(l) => write!(f, "s{l}"),
            Expr::H(n) => write!(f, "h({n})"),
            Expr::E(n) => write!(f, "e({n})"),
            Expr::Member(fam, n) => match fam {
                Family::Lie | Family::Lie2 | Family::Conj => write!(f, "{}({n})", fam.name()),
                Family::L(s) | Family::Lbar(s) => write!(f, "{}({n};{s})", fam.name()),
                Family::Foulkes(r) => write!(f, "Foulkes({n},{r})"),
                Family::FT(t) => write!(f, "fT({n};{t})"),
            },
            Expr::Series(fam) => match fam {
                Family::Lie | Family::Lie2 | Family::Conj => f.write_str(fam.name()),
                Family::L(s) | Family::Lbar(s) => write!(f, "{}({s})", fam.name()),
                Family::Foulkes(r) => write!(f, "Foulkes({r})"),
                Family::FT(t) => write!(f, "fT({t})"),
            },
            Expr::Unary(op, x) => {
                let name = match op {
                    UnaryOp::Omega => "omega",
                    UnaryOp::Alt => "alt",
                    UnaryOp::Ddp1 => "ddp1",
                };
                write!(f, "{name}({x})")
            }
            Expr::Neg(x) => write!(f, "-({x})"),
            Expr::Binary(op, a, b) => {
                let sym = match op {
                    BinOp::Add => "+",
                    BinOp::Sub => "-",
                    BinOp::Mul => "*",
                    BinOp::Pleth => "∘",
                };
                write!(f, "({a} {sym} {b})")
            }
            Expr::Form(kind, x, n) => write!(f, "{}({x};{n})", kind.name()),
            Expr::Ge2(x) => write!(f, "ge2({x})"),
        }
    }
}
