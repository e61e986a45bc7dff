//! Parser for rational expressions in `z` and `zbar`.
//!
//! Grammar:
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := number | 'z' | 'zbar' | 'i' | '(' expr ')'
//! number := digits ('.' digits)?
//! ```

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Num, Zero};

use super::expr::RationalExpr;
use super::gauss;
use crate::error::{Error, Result};
use crate::rational::Rational;

pub fn parse_expr(src: &str) -> Result<RationalExpr> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

impl FromStr for RationalExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

struct Parser<'a> {
    src: &'a str,
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
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalExpr> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalExpr> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let at = self.pos;
                let d = self.unary()?;
                acc = acc.checked_div(&d).map_err(|_| Error::Parse {
                    pos: at,
                    msg: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalExpr> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalExpr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let k: i32 = self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error("expected integer exponent"))?;
        let k = if neg { -k } else { k };
        base.pow(k).map_err(|_| self.error("zero raised to a negative power"))
    }

    fn atom(&mut self) -> Result<RationalExpr> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                match &self.src[start..self.pos] {
                    "z" => Ok(RationalExpr::z()),
                    "zbar" => Ok(RationalExpr::zbar()),
                    "i" => Ok(RationalExpr::constant(gauss::i())),
                    other => {
                        self.pos = start;
                        Err(self.error(&format!("unknown identifier '{other}'")))
                    }
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<RationalExpr> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let int_part = &self.src[start..self.pos];
        let mut value = Rational::from_integer(BigInt::from_str_radix(int_part, 10).unwrap());
        if self.peek() == Some('.') {
            self.pos += 1;
            let fstart = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let frac = &self.src[fstart..self.pos];
            if frac.is_empty() {
                return Err(self.error("expected digits after '.'"));
            }
            let num = BigInt::from_str_radix(frac, 10).unwrap();
            let den = BigInt::from(10u32).pow(frac.len() as u32);
            value += Rational::new(num, den);
        }
        if value.is_zero() {
            return Ok(RationalExpr::zero());
        }
        Ok(RationalExpr::constant(gauss::real(value)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::gauss::{gi, gq};
    use crate::symbolic::poly::Poly;

    #[test]
    fn parses_basic_forms() {
        let e = parse_expr("(1 - z*zbar)/(1 + z*zbar)").unwrap();
        assert_eq!(e.eval_at(&gq(1, 1)).unwrap(), gq(0, 1));
        assert_eq!(parse_expr("2^-1").unwrap(), RationalExpr::constant(gq(1, 2)));
        assert_eq!(parse_expr("0.25").unwrap(), RationalExpr::constant(gq(1, 4)));
        assert_eq!(parse_expr("-i*z").unwrap(), RationalExpr::z().scale(&gi(0, -1)));
        assert_eq!(
            parse_expr("1/(1+z*zbar)^2").unwrap().den(),
            &Poly::one_plus_t().pow(2)
        );
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_expr("1 + 2*3").unwrap(), RationalExpr::int(7));
        assert_eq!(parse_expr("2/4*z").unwrap(), RationalExpr::z().scale(&gq(1, 2)));
        assert_eq!(parse_expr("-2^2").unwrap(), RationalExpr::int(-4));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_expr("z + w") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expr("1/(z - z)"), Err(Error::Parse { .. })));
        assert!(parse_expr("(z").is_err());
        assert!(parse_expr("z z").is_err());
        assert!(parse_expr("").is_err());
    }
}
