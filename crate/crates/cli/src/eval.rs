use num_traits::Zero;
use symfun::repmodules::from_psi;
use symfun::schur::from_schur;
use symfun::series::{apply_standard, family_series, plethystic_inverse, StandardKind, SymSeries};
use symfun::PowerSumPoly;

use crate::error::CliError;
use crate::expr::{BinOp, Expr, FormKind, UnaryOp};

/// Evaluates `e` to a power-sum polynomial. With `degree`, only that homogeneous
/// component is returned and all intermediate work is truncated there.
pub fn evaluate(e: &Expr, degree: Option<usize>) -> Result<PowerSumPoly, CliError> {
    let value = eval(e, degree, "$")?;
    Ok(match degree {
        Some(n) => value.component(n),
        None => value,
    })
}

fn type_error(path: &str, msg: impl Into<String>) -> CliError {
    CliError::Type { path: path.to_string(), msg: msg.into() }
}

fn cap(f: PowerSumPoly, trunc: Option<usize>) -> PowerSumPoly {
    match trunc {
        Some(t) => f.truncate(t),
        None => f,
    }
}

fn series(f: &PowerSumPoly) -> SymSeries {
    SymSeries::from_poly(f, f.max_degree().unwrap_or(0))
}

fn eval(e: &Expr, trunc: Option<usize>, path: &str) -> Result<PowerSumPoly, CliError> {
    let child = |name: &str| format!("{path}.{name}");
    let value = match e {
        Expr::Scalar(c) => PowerSumPoly::constant(c.clone()),
        Expr::P(l) => PowerSumPoly::p_lambda(l.clone()),
        Expr::S(l) => from_schur(l),
        Expr::H(n) => PowerSumPoly::h(*n),
        Expr::E(n) => PowerSumPoly::e(*n),
        Expr::Member(fam, n) => {
            if *n == 0 {
                return Err(type_error(path, "family members start in degree 1"));
            }
            from_psi(&fam.spec(), *n)?
        }
        Expr::Series(fam) => {
            let t = trunc.ok_or_else(|| {
                type_error(path, format!("the series `{e}` needs a truncation: wrap it in H(..;N), E(..;N), inv(..;N) or pass --degree"))
            })?;
            family_series(&fam.spec(), t, false)?.to_poly()
        }
        Expr::Unary(op, x) => {
            let f = eval(x, trunc, &child("arg"))?;
            match op {
                UnaryOp::Omega => f.omega(),
                UnaryOp::Alt => series(&f).alt().to_poly(),
                UnaryOp::Ddp1 => f.p1_derivative(),
            }
        }
        Expr::Neg(x) => -eval(x, trunc, &child("arg"))?,
        Expr::Binary(op, a, b) => {
            let f = eval(a, trunc, &child("lhs"))?;
            let g = eval(b, trunc, &child("rhs"))?;
            match op {
                BinOp::Add => &f + &g,
                BinOp::Sub => &f - &g,
                BinOp::Mul => f.multiply(&g, trunc),
                BinOp::Pleth => {
                    if !g.constant_term().is_zero() {
                        return Err(type_error(&child("rhs"), "the inner argument of a plethysm must have zero constant term"));
                    }
                    let bound = f.max_degree().unwrap_or(0) * g.max_degree().unwrap_or(0);
                    f.plethysm(&g, trunc.unwrap_or(bound))?
                }
            }
        }
        Expr::Form(kind, x, n) => {
            let f = eval(x, Some(*n), &child("arg"))?;
            if !f.constant_term().is_zero() {
                return Err(type_error(&child("arg"), "series forms need an argument with zero constant term"));
            }
            let s = SymSeries::from_poly(&f, *n);
            let out = match kind {
                FormKind::H => apply_standard(StandardKind::H, &s)?,
                FormKind::E => apply_standard(StandardKind::E, &s)?,
                FormKind::Hpm => apply_standard(StandardKind::Hpm, &s)?,
                FormKind::Epm => apply_standard(StandardKind::Epm, &s)?,
                FormKind::Inv => plethystic_inverse(&s)?,
            };
            out.to_poly()
        }
        Expr::Ge2(x) => eval(x, trunc, &child("arg"))?.filter(|l| l.size() != 1),
    };
    Ok(cap(value, trunc))
}
