//! Parser for the rendered polynomial grammar:
//!
//! ```text
//! rational := '(' poly ')' [ '/' '(' poly ')' ] | poly
//! poly     := ['+'|'-'] term { ('+'|'-') term }
//! term     := factor { '*' factor }
//! factor   := uint [ '/' uint ] | ('v'|'s') [ '^' ['-'] uint ]
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::laurent::{LaurentPoly, Monomial};
use super::rational::RationalFunction;
use super::ScalarError;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { src: text.as_bytes(), pos: 0 }
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, what: &str) -> ScalarError {
        ScalarError::Parse(format!("{what} at byte {}", self.pos))
    }

    fn uint(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }

    fn exponent(&mut self) -> Result<i32, ScalarError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let neg = self.eat(b'-');
        let e: i32 = self
            .uint()?
            .try_into()
            .map_err(|_| self.error("exponent out of range"))?;
        Ok(if neg { -e } else { e })
    }

    fn factor(&mut self) -> Result<(BigRational, Monomial), ScalarError> {
        match self.peek() {
            Some(b'v') => {
                self.pos += 1;
                Ok((BigRational::one(), Monomial::new(self.exponent()?, 0)))
            }
            Some(b's') => {
                self.pos += 1;
                Ok((BigRational::one(), Monomial::new(0, self.exponent()?)))
            }
            Some(b) if b.is_ascii_digit() => {
                let n = self.uint()?;
                // a '/' directly followed by '(' separates numerator and denominator
                let save = self.pos;
                if self.eat(b'/') {
                    if self.peek() == Some(b'(') {
                        self.pos = save;
                        return Ok((BigRational::from_integer(n), Monomial::ONE));
                    }
                    let d = self.uint()?;
                    if num_traits::Zero::is_zero(&d) {
                        return Err(ScalarError::DivisionByZero);
                    }
                    return Ok((BigRational::new(n, d), Monomial::ONE));
                }
                Ok((BigRational::from_integer(n), Monomial::ONE))
            }
            _ => Err(self.error("expected coefficient, 'v' or 's'")),
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigRational), ScalarError> {
        let (mut c, mut m) = self.factor()?;
        while self.eat(b'*') {
            let (c2, m2) = self.factor()?;
            c *= c2;
            m = Monomial::new(m.v + m2.v, m.s + m2.s);
        }
        Ok((m, c))
    }

    fn poly(&mut self) -> Result<LaurentPoly, ScalarError> {
        let mut terms = Vec::new();
        let mut neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if neg { -c } else { c }));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }

    fn parenthesized(&mut self) -> Result<LaurentPoly, ScalarError> {
        if !self.eat(b'(') {
            return Err(self.error("expected '('"));
        }
        let p = self.poly()?;
        if !self.eat(b')') {
            return Err(self.error("expected ')'"));
        }
        Ok(p)
    }

    fn finish(&mut self) -> Result<(), ScalarError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("trailing input")),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<LaurentPoly, ScalarError> {
    let mut cur = Cursor::new(text);
    let p = cur.poly()?;
    cur.finish()?;
    Ok(p)
}

pub fn parse_rational(text: &str) -> Result<RationalFunction, ScalarError> {
    let mut cur = Cursor::new(text);
    if cur.peek() == Some(b'(') {
        let num = cur.parenthesized()?;
        let den = if cur.eat(b'/') { cur.parenthesized()? } else { LaurentPoly::one() };
        cur.finish()?;
        return RationalFunction::new(num, den);
    }
    let num = cur.poly()?;
    let den = if cur.eat(b'/') { cur.parenthesized()? } else { LaurentPoly::one() };
    cur.finish()?;
    RationalFunction::new(num, den)
}

impl std::str::FromStr for LaurentPoly {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

impl std::str::FromStr for RationalFunction {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s)
    }
}
