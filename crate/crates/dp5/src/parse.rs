//! Text grammar for polynomials over `Q`.
//!
//! Infix expressions with `+ - * / ^`, integer and `a/b` literals,
//! parentheses, and implicit multiplication before a parenthesis or a
//! variable (so seeds like `(x^2+1)(x+1)(x-1)*x` parse as written).
//! Division is only allowed by nonzero constants. Errors carry the byte
//! offset they were detected at.

use num_bigint::BigInt;

use crate::error::{Dp5Error, Result};
use crate::field::QQ;
use crate::mpoly::QPoly;
use crate::scalar::rat::Rat;
use crate::scalar::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> Dp5Error {
    Dp5Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().unwrap();
                out.push((start, Tok::Int(n)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(input[start..i].to_string())));
            }
            _ => return Err(err(i, format!("unexpected character '{}'", c))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a [String],
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<QPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&QQ, &t);
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&QQ, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    let f = self.unary()?;
                    acc = acc.mul(&QQ, &f);
                }
                Some(Tok::Slash) => {
                    let at = self.here();
                    self.next();
                    let f = self.unary()?;
                    let c = constant_value(&f)
                        .ok_or_else(|| err(at, "division is only allowed by a constant"))?;
                    if c == Rat::default() {
                        return Err(err(at, "division by zero"));
                    }
                    acc = acc.scale(&QQ, &(Rat::from_integer(1.into()) / c));
                }
                // implicit multiplication
                Some(Tok::LParen) | Some(Tok::Ident(_)) => {
                    let f = self.unary()?;
                    acc = acc.mul(&QQ, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QPoly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                let f = self.unary()?;
                Ok(f.neg(&QQ))
            }
            Some(Tok::Plus) => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            let at = self.here();
            self.next();
            match self.next() {
                Some(Tok::Int(e)) => {
                    let e: u32 = e.try_into().map_err(|_| err(at, "exponent out of range"))?;
                    Ok(base.pow(&QQ, e))
                }
                _ => Err(err(at, "expected a nonnegative integer exponent after '^'")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<QPoly> {
        let at = self.here();
        match self.next() {
            Some(Tok::Int(n)) => Ok(QPoly::constant(&QQ, self.vars, Rat::from_integer(n))),
            Some(Tok::Ident(name)) => match self.vars.iter().position(|v| v == &name) {
                Some(i) => Ok(QPoly::var(&QQ, self.vars, i)),
                None => Err(err(at, format!("unknown variable '{}'", name))),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                let at = self.here();
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(err(at, "expected ')'")),
                }
            }
            Some(t) => Err(err(at, format!("unexpected token {:?}", t))),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

fn constant_value(p: &QPoly) -> Option<Rat> {
    if p.is_zero() {
        return Some(Rat::default());
    }
    if p.terms.len() == 1 {
        let (m, c) = p.terms.iter().next().unwrap();
        if m.is_one() {
            return Some(c.clone());
        }
    }
    None
}

/// Parse a polynomial in the given variables.
pub fn parse_poly(input: &str, vars: &[String]) -> Result<QPoly> {
    let toks = tokenize(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        vars,
        end: input.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(p.here(), "trailing input after expression"));
    }
    Ok(e)
}

/// Parse a univariate polynomial in the variable `x`.
pub fn parse_unipoly(input: &str) -> Result<UniPoly> {
    let vars = vec!["x".to_string()];
    let p = parse_poly(input, &vars)?;
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rat::default(); deg + 1];
    for (m, c) in &p.terms {
        coeffs[m.0[0] as usize] = c.clone();
    }
    Ok(UniPoly::new(coeffs, "x"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat::{rat, rat_from_i64};

    #[test]
    fn seeds_parse() {
        let p = parse_unipoly("x^5 - 2x^4 - 3x^3 + 6x^2 - 1").unwrap();
        assert_eq!(p, UniPoly::from_i64(&[-1, 0, 6, -3, -2, 1]));
    }

    #[test]
    fn explicit_operators() {
        let p = parse_unipoly("x^5 - 2*x^4 - 3*x^3 + 6*x^2 - 1").unwrap();
        assert_eq!(p, UniPoly::from_i64(&[-1, 0, 6, -3, -2, 1]));
    }

    #[test]
    fn juxtaposed_groups() {
        let p = parse_unipoly("(x^2+1)(x+1)(x-1)*x").unwrap();
        let expect = &(&(&UniPoly::from_i64(&[1, 0, 1]) * &UniPoly::from_i64(&[1, 1]))
            * &UniPoly::from_i64(&[-1, 1]))
            * &UniPoly::from_i64(&[0, 1]);
        assert_eq!(p, expect);
    }

    #[test]
    fn rational_coefficients() {
        let p = parse_unipoly("x/2 + 1/3").unwrap();
        assert_eq!(p, UniPoly::new(vec![rat(1, 3), rat(1, 2)], "x"));
    }

    #[test]
    fn multivariate_roundtrip() {
        let vars: Vec<String> = vec!["t0".into(), "t1".into(), "t2".into()];
        let p = parse_poly("t0^2 - 2*t1*t2 + 3", &vars).unwrap();
        assert_eq!(format!("{}", p), "t0^2 - 2*t1*t2 + 3");
        let q = parse_poly(&format!("{}", p), &vars).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn error_positions() {
        match parse_unipoly("x + y") {
            Err(Dp5Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {:?}", other),
        }
        match parse_unipoly("x^-2") {
            Err(Dp5Error::Parse { .. }) => {}
            other => panic!("expected parse error, got {:?}", other),
        }
        match parse_unipoly("(x+1") {
            Err(Dp5Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {:?}", other),
        }
        match parse_unipoly("x / (x+1)") {
            Err(Dp5Error::Parse { .. }) => {}
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn unary_minus_and_precedence() {
        let p = parse_unipoly("-x^2").unwrap();
        assert_eq!(
            p,
            UniPoly::new(
                vec![rat_from_i64(0), rat_from_i64(0), rat_from_i64(-1)],
                "x"
            )
        );
        let q = parse_unipoly("2 - -3").unwrap();
        assert_eq!(q, UniPoly::new(vec![rat_from_i64(5)], "x"));
    }
}
