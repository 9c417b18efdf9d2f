//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := base ('^' nonneg-integer)?
//! base    := rational-literal | 'x' | 'y' | 'z' | '(' expr ')'
//! literal := integer ('/' positive-integer)?
//! ```
//!
//! Whitespace is ignored and implicit multiplication is rejected.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{Poly, Var};
use super::rational::Rational;
use super::ExactError;

pub fn parse_poly(text: &str) -> Result<Poly, ExactError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> ExactError {
        ExactError::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn expr(&mut self) -> Result<Poly, ExactError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ExactError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc * self.factor()?;
        }
        match self.peek() {
            Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                Err(self.error("implicit multiplication is not allowed; use '*'"))
            }
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<Poly, ExactError> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let exp = self
                .digits()
                .ok_or_else(|| self.error("expected a nonnegative integer exponent"))?;
            let exp: u32 = exp
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly, ExactError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().unwrap();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self
                        .digits()
                        .ok_or_else(|| self.error("expected a positive integer denominator"))?;
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    return Ok(Poly::constant(Rational::new(num, den)));
                }
                Ok(Poly::constant(Rational::from_integer(num)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let mut chars = name.chars();
                match (chars.next().and_then(Var::from_name), chars.next()) {
                    (Some(v), None) => Ok(Poly::var(v)),
                    _ => Err(ExactError::UnknownVariable { offset: start, name: name.to_string() }),
                }
            }
            Some(_) => Err(self.error("expected a number, variable or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }
}
