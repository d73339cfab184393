use std::str::FromStr;

use num_traits::Zero;
use symfun::numtheory::PrimeSet;
use symfun::repmodules::SubsetT;
use symfun::{Partition, Rational};

use crate::error::CliError;
use crate::expr::{BinOp, Expr, Family, FormKind, UnaryOp};

pub fn parse(input: &str) -> Result<Expr, CliError> {
    let mut p = Parser { src: input, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error_here("unexpected input after expression"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn error_at(&self, offset: usize, msg: impl Into<String>) -> CliError {
        CliError::Syntax { offset, msg: msg.into() }
    }

    fn error_here(&self, msg: impl Into<String>) -> CliError {
        self.error_at(self.pos, msg)
    }

    /// Consumes `c` after optional whitespace.
    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.peek().map(|c| format!("`{c}`")).unwrap_or_else(|| "end of input".into());
            Err(self.error_here(format!("expected `{c}`, found {found}")))
        }
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat('+') {
                BinOp::Add
            } else if self.eat('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            let rhs = self.factor()?;
            lhs = Expr::Binary(BinOp::Mul, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.prefix()?;
        while self.eat('∘') || self.eat('@') {
            let rhs = self.prefix()?;
            lhs = Expr::Binary(BinOp::Pleth, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Expr, CliError> {
        if self.eat('-') {
            self.skip_ws();
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let Expr::Scalar(c) = self.number()? else { unreachable!() };
                return Ok(Expr::Scalar(-c));
            }
            return Ok(Expr::Neg(Box::new(self.prefix()?)));
        }
        self.primary()
    }

    fn integer(&mut self) -> Result<(usize, &'a str), CliError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error_here("expected an integer"));
        }
        self.pos += len;
        Ok((start, &self.src[start..self.pos]))
    }

    fn small(&mut self) -> Result<usize, CliError> {
        let (start, digits) = self.integer()?;
        digits.parse().map_err(|_| self.error_at(start, "integer out of range"))
    }

    fn number(&mut self) -> Result<Expr, CliError> {
        let (start, num) = self.integer()?;
        let mut value: Rational = num.parse().map_err(|_| self.error_at(start, "bad number"))?;
        let save = self.pos;
        if self.eat('/') {
            self.skip_ws();
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let (at, den) = self.integer()?;
                let den: Rational = den.parse().map_err(|_| self.error_at(at, "bad number"))?;
                if den.is_zero() {
                    return Err(self.error_at(at, "division by zero"));
                }
                value /= den;
            } else {
                self.pos = save;
                return Err(self.error_here("`/` is only allowed inside a rational literal"));
            }
        }
        Ok(Expr::Scalar(value))
    }

    fn ident(&mut self) -> (usize, &'a str) {
        let start = self.pos;
        let len = self
            .rest()
            .char_indices()
            .take_while(|(i, c)| c.is_ascii_alphabetic() || (*i > 0 && (c.is_ascii_alphanumeric() || *c == '_')))
            .count();
        self.pos += len;
        (start, &self.src[start..self.pos])
    }

    fn partition(&mut self) -> Result<Partition, CliError> {
        self.skip_ws();
        let start = self.pos;
        let close = self.rest().find(']').ok_or_else(|| self.error_here("unclosed `[`"))?;
        let text = &self.src[start..start + close + 1];
        self.pos = start + close + 1;
        Partition::from_str(text).map_err(|e| self.error_at(start, e.to_string()))
    }

    /// Raw text up to the `)` closing the current call, with nested brackets balanced.
    fn raw_arg(&mut self) -> Result<(usize, &'a str), CliError> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0i32;
        for (i, c) in self.rest().char_indices() {
            match c {
                '(' | '{' | '[' => depth += 1,
                ')' if depth == 0 => {
                    self.pos = start + i;
                    return Ok((start, self.src[start..start + i].trim()));
                }
                ')' | '}' | ']' => depth -= 1,
                _ => {}
            }
        }
        Err(self.error_at(start, "unclosed `(`"))
    }

    fn prime_set(&mut self) -> Result<PrimeSet, CliError> {
        let (at, text) = self.raw_arg()?;
        PrimeSet::from_str(text).map_err(|e| self.error_at(at, e.to_string()))
    }

    fn subset_rule(&mut self) -> Result<SubsetT, CliError> {
        let (at, text) = self.raw_arg()?;
        SubsetT::from_str(text).map_err(|e| self.error_at(at, e.to_string()))
    }

    fn starts_with_digit(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_some_and(|c| c.is_ascii_digit())
    }

    fn primary(&mut self) -> Result<Expr, CliError> {
        self.skip_ws();
        match self.peek() {
            None => return Err(self.error_here("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                return Ok(e);
            }
            Some(c) if c.is_ascii_digit() => return self.number(),
            Some(c) if c.is_ascii_alphabetic() => {}
            Some(c) => return Err(self.error_here(format!("unexpected `{c}`"))),
        }
        let (start, name) = self.ident();
        match name {
            "p" | "s" => {
                self.skip_ws();
                if self.peek() != Some('[') {
                    return Err(self.error_here(format!("expected `[` after `{name}`")));
                }
                let l = self.partition()?;
                Ok(if name == "p" { Expr::P(l) } else { Expr::S(l) })
            }
            "h" | "e" => {
                self.expect('(')?;
                let n = self.small()?;
                self.expect(')')?;
                Ok(if name == "h" { Expr::H(n) } else { Expr::E(n) })
            }
            "Lie" | "Lie2" | "Conj" => {
                let fam = match name {
                    "Lie" => Family::Lie,
                    "Lie2" => Family::Lie2,
                    _ => Family::Conj,
                };
                if self.eat('(') {
                    let n = self.small()?;
                    self.expect(')')?;
                    Ok(Expr::Member(fam, n))
                } else {
                    Ok(Expr::Series(fam))
                }
            }
            "L" | "Lbar" => {
                self.expect('(')?;
                let n = if self.starts_with_digit() {
                    let n = self.small()?;
                    self.expect(';')?;
                    Some(n)
                } else {
                    None
                };
                let set = self.prime_set()?;
                self.expect(')')?;
                let fam = if name == "L" { Family::L(set) } else { Family::Lbar(set) };
                Ok(n.map_or(Expr::Series(fam.clone()), |n| Expr::Member(fam, n)))
            }
            "Foulkes" => {
                self.expect('(')?;
                let first = self.small()?;
                if self.eat(',') {
                    let r = self.small()?;
                    self.expect(')')?;
                    Ok(Expr::Member(Family::Foulkes(r as u64), first))
                } else {
                    self.expect(')')?;
                    Ok(Expr::Series(Family::Foulkes(first as u64)))
                }
            }
            "fT" => {
                self.expect('(')?;
                let n = if self.starts_with_digit() {
                    let n = self.small()?;
                    self.expect(';')?;
                    Some(n)
                } else {
                    None
                };
                let rule = Family::FT(self.subset_rule()?);
                self.expect(')')?;
                Ok(n.map_or(Expr::Series(rule.clone()), |n| Expr::Member(rule, n)))
            }
            "omega" | "alt" | "ddp1" | "ge2" => {
                self.expect('(')?;
                let x = Box::new(self.expr()?);
                self.expect(')')?;
                Ok(match name {
                    "omega" => Expr::Unary(UnaryOp::Omega, x),
                    "alt" => Expr::Unary(UnaryOp::Alt, x),
                    "ddp1" => Expr::Unary(UnaryOp::Ddp1, x),
                    _ => Expr::Ge2(x),
                })
            }
            "H" | "E" | "Hpm" | "Epm" | "inv" => {
                let kind = match name {
                    "H" => FormKind::H,
                    "E" => FormKind::E,
                    "Hpm" => FormKind::Hpm,
                    "Epm" => FormKind::Epm,
                    _ => FormKind::Inv,
                };
                self.expect('(')?;
                let x = Box::new(self.expr()?);
                self.expect(';')?;
                let n = self.small()?;
                self.expect(')')?;
                Ok(Expr::Form(kind, x, n))
            }
            _ => Err(self.error_at(start, format!("unknown identifier `{name}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse("p[1] + h(2) * e(1) ∘ p[2]").unwrap();
        assert_eq!(e.to_string(), "(p[1] + (h(2) * (e(1) ∘ p[2])))");
        assert_eq!(parse("a@b").unwrap_err().offset(), Some(0));
        assert_eq!(parse("h(2)@p[1]").unwrap(), parse("h(2) ∘ p[1]").unwrap());
    }

    #[test]
    fn signed_rationals() {
        assert_eq!(parse("-1/6*p[3,2]").unwrap().to_string(), "(-1/6 * p[3,2])");
        assert_eq!(parse("p[1] - -2").unwrap().to_string(), "(p[1] - -2)");
        assert_eq!(parse("-(h(2))").unwrap(), Expr::Neg(Box::new(Expr::H(2))));
        assert!(parse("1/0").is_err());
    }

    #[test]
    fn families_and_series() {
        assert_eq!(parse("L(4;{2,3})").unwrap().to_string(), "L(4;{2,3})");
        assert_eq!(parse("Lbar({2})").unwrap(), Expr::Series(Family::Lbar(PrimeSet::new([2]).unwrap())));
        assert_eq!(parse("fT(6; pow(4))").unwrap().to_string(), "fT(6;pow(4))");
        assert_eq!(parse("Foulkes(5, 2)").unwrap().to_string(), "Foulkes(5,2)");
        assert_eq!(parse("H(Lie;6)").unwrap().to_string(), "H(Lie;6)");
    }

    #[test]
    fn error_offsets() {
        let e = parse("p[2,1] ∘ q").unwrap_err();
        assert_eq!(e.offset(), Some("p[2,1] ∘ ".len()));
        assert_eq!(parse("h(2) +").unwrap_err().offset(), Some(6));
        assert_eq!(parse("p[1,2]").unwrap_err().offset(), Some(1));
        assert_eq!(parse("L(3;{4})").unwrap_err().offset(), Some(4));
        assert_eq!(parse("h(2))").unwrap_err().offset(), Some(4));
    }
}
