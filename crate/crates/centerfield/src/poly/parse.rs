//! Text grammar for polynomials: integers and decimals, variables `x` `y`,
//! operators `+ - * ^`, parentheses, and implicit multiplication by
//! juxtaposition (`2x`, `3x*y^2`). Decimal literals become exact rationals
//! (0.63 -> 63/100).

use crate::poly::bipoly::{BiPolynomial, Var};
use crate::scalar::Rational;
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub column: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.column + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_poly(input: &str) -> Result<BiPolynomial<Rational>, ParseError> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
    };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, msg: &str) -> ParseError {
        ParseError {
            message: msg.to_string(),
            column: self.pos,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<BiPolynomial<Rational>, ParseError> {
        let mut negate = false;
        self.skip_ws();
        while let Some(c) = self.peek() {
            match c {
                '-' => {
                    negate = !negate;
                    self.bump();
                    self.skip_ws();
                }
                '+' => {
                    self.bump();
                    self.skip_ws();
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some('-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiPolynomial<Rational>, ParseError> {
        self.skip_ws();
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some('/') => {
                    self.bump();
                    self.skip_ws();
                    // only constant divisors (rational coefficients)
                    let f = self.factor()?;
                    if !f.is_constant() || f.is_zero() {
                        return Err(self.err("division is only allowed by a nonzero constant"));
                    }
                    let inv = Rational::one() / f.coeff(0, 0);
                    acc = acc.scale(&inv);
                }
                // implicit multiplication: digit, variable or parenthesis
                Some(c) if c == '(' || c == 'x' || c == 'y' || c.is_ascii_digit() => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BiPolynomial<Rational>, ParseError> {
        self.skip_ws();
        let mut negate = false;
        while matches!(self.peek(), Some('-') | Some('+')) {
            if self.bump() == Some('-') {
                negate = !negate;
            }
            self.skip_ws();
        }
        let base = self.atom()?;
        self.skip_ws();
        let result = if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let e = self.integer()?;
            if e < 0 {
                return Err(self.err("negative exponents are not supported"));
            }
            base.pow(e as u32)
        } else {
            base
        };
        Ok(if negate { result.neg() } else { result })
    }

    fn atom(&mut self) -> Result<BiPolynomial<Rational>, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                self.skip_ws();
                if self.bump() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some('x') => {
                self.bump();
                Ok(BiPolynomial::var(Var::X))
            }
            Some('y') => {
                self.bump();
                Ok(BiPolynomial::var(Var::Y))
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.number()?;
                Ok(BiPolynomial::constant(r))
            }
            Some(c) => Err(self.err(&format!("unexpected character '{}'", c))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let mut neg = false;
        if self.peek() == Some('-') {
            neg = true;
            self.bump();
        }
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        let v: i64 = s.parse().map_err(|_| self.err("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn number(&mut self) -> Result<Rational, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        let int_part: String = self.chars[start..self.pos].iter().collect();
        let mut num: BigInt = int_part
            .parse()
            .map_err(|_| self.err("malformed number"))?;
        let mut den = BigInt::one();
        if self.peek() == Some('.') {
            self.bump();
            let fstart = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.bump();
            }
            if self.pos == fstart {
                return Err(self.err("expected digits after decimal point"));
            }
            let frac: String = self.chars[fstart..self.pos].iter().collect();
            for _ in 0..frac.len() {
                num *= 10;
                den *= 10;
            }
            let fnum: BigInt = frac.parse().map_err(|_| self.err("malformed number"))?;
            num += fnum;
        }
        Ok(Rational::new(num, den))
    }
}

/// Render in the same grammar (sorted by descending total degree then by
/// descending x power); parses back to an equal polynomial.
pub fn poly_to_string(p: &BiPolynomial<Rational>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    format!("{}", p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    #[test]
    fn decimals_become_exact_rationals() {
        let p = parse_poly("0.63*x").unwrap();
        assert_eq!(p.coeff(1, 0), ratio(63, 100));
    }

    #[test]
    fn implicit_multiplication() {
        let p = parse_poly("2x(1 - x^2 - 3y^2)").unwrap();
        let q = parse_poly("2*x - 2*x^3 - 6*x*y^2").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn unary_minus() {
        let p = parse_poly("-y").unwrap();
        assert_eq!(p.coeff(0, 1), rat(-1));
        let q = parse_poly("-(x - y)^2").unwrap();
        assert_eq!(q.coeff(1, 1), rat(2));
        assert_eq!(q.coeff(2, 0), rat(-1));
    }

    #[test]
    fn error_carries_column() {
        let e = parse_poly("x + $").unwrap_err();
        assert_eq!(e.column, 4);
    }

    #[test]
    fn roundtrip_display() {
        let p = parse_poly("x^2*y - 3/1*x + 1/2").unwrap();
        let s = poly_to_string(&p);
        let q = parse_poly(&s).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rational_from_slash() {
        let p = parse_poly("1/2*y").unwrap();
        assert_eq!(p.coeff(0, 1), ratio(1, 2));
    }
}
