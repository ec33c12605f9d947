//! Recursive-descent reader for the scalar and polynomial text syntax:
//! integers, `/`, `*`, `+`, `-`, `^n`, parentheses, `sqrt(q)` of a rational
//! `q`, and the variables `x`, `y`, `z`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::QuadNumber;
use crate::poly::Polynomial;

pub fn parse_scalar(text: &str) -> Result<QuadNumber> {
    let p = parse_polynomial(text)?;
    if p.degree() > 0 {
        return Err(Error::Parse {
            pos: 0,
            msg: "variables are not allowed in a scalar".into(),
        });
    }
    Ok(p.constant_term())
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial<QuadNumber>> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial<QuadNumber>> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<QuadNumber>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let divisor = self.unary()?;
                if divisor.degree() > 0 {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "division by a non-constant".into(),
                    });
                }
                let inv = divisor.constant_term().inverse().map_err(|_| Error::Parse {
                    pos: at,
                    msg: "division by zero".into(),
                })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial<QuadNumber>> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial<QuadNumber>> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let exp = self.integer()?;
            let exp = u32::try_from(exp).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer literal too large".into(),
            })
    }

    fn atom(&mut self) -> Result<Polynomial<QuadNumber>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: num_bigint::BigInt = digits.parse().unwrap();
                Ok(Polynomial::constant(QuadNumber::from_rational(n.into())))
            }
            Some(b'x') | Some(b'y') | Some(b'z') => {
                let var = (self.src[self.pos] - b'x') as usize;
                self.pos += 1;
                Ok(Polynomial::variable(var))
            }
            Some(b's') if self.src[self.pos..].starts_with(b"sqrt") => {
                self.pos += 4;
                if !self.eat(b'(') {
                    return Err(self.error("expected `(` after sqrt"));
                }
                let at = self.pos;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                let q = (inner.degree() == 0)
                    .then(|| inner.constant_term().to_rational())
                    .flatten()
                    .ok_or(Error::Parse {
                        pos: at,
                        msg: "sqrt needs a rational argument".into(),
                    })?;
                let root = QuadNumber::sqrt_rational(&q).map_err(|e| Error::Parse {
                    pos: at,
                    msg: e.to_string(),
                })?;
                Ok(Polynomial::constant(root))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

impl Polynomial<QuadNumber> {
    fn constant_term(&self) -> QuadNumber {
        self.coefficient([0, 0, 0]).cloned().unwrap_or_else(QuadNumber::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("-1/2").unwrap(), QuadNumber::from_ratio(-1, 2));
        assert_eq!(parse_scalar("sqrt(3)/2").unwrap(), QuadNumber::radical(1, 2, 3));
        assert_eq!(
            parse_scalar("1/2 + sqrt(6)/12").unwrap(),
            &QuadNumber::from_ratio(1, 2) + &QuadNumber::radical(1, 12, 6)
        );
        assert_eq!(parse_scalar("1/sqrt(24)").unwrap(), QuadNumber::radical(1, 12, 6));
        assert_eq!(parse_scalar("sqrt(2)*sqrt(3)").unwrap(), QuadNumber::sqrt6());
        assert_eq!(parse_scalar("2^3").unwrap(), QuadNumber::from(8));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_scalar("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("sqrt(5)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("1 +"), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("(1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("1/x"), Err(Error::Parse { .. })));
    }

    #[test]
    fn polynomials() {
        let p = parse_polynomial("(x+y+z)^2").unwrap();
        let q = parse_polynomial("x^2 + y^2 + z^2 + 2*x*y + 2*x*z + 2*y*z").unwrap();
        assert_eq!(p, q);
        assert_eq!(parse_polynomial("2*y*z").unwrap().to_string(), "2*y*z");
    }
}
