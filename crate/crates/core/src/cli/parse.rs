//! Text grammar for polynomials in `x`.
//!
//! ```text
//! poly  := sign? term (sign term)*
//! term  := coef ('*'? mono)? | mono
//! coef  := int ('/' int)? | '(' sign? int ('/' int)? ')'
//! mono  := 'x' ('^' (int | '{' int '}'))?
//! ```
//!
//! Whitespace is ignored everywhere and the Unicode minus sign is accepted.
//! Repeated powers are summed.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{BigRat, QPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    /// 1-based column in the input with whitespace removed.
    pub column: usize,
    pub message: String,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { column: self.pos + 1, message: message.into() })
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat('+') {
            Some(false)
        } else if self.eat('-') {
            Some(true)
        } else {
            None
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn ratio(&mut self) -> Result<BigRat, ParseError> {
        let n = self.int()?;
        if self.eat('/') {
            let d = self.int()?;
            if d.is_zero() {
                return self.err("zero denominator");
            }
            Ok(BigRat::new(n, d))
        } else {
            Ok(BigRat::from_integer(n))
        }
    }

    fn coef(&mut self) -> Result<Option<BigRat>, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let neg = self.sign().unwrap_or(false);
                let r = self.ratio()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(Some(if neg { -r } else { r }))
            }
            Some(c) if c.is_ascii_digit() => self.ratio().map(Some),
            _ => Ok(None),
        }
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        let braced = self.eat('{');
        let e = self.int()?;
        if braced && !self.eat('}') {
            return self.err("expected '}'");
        }
        match usize::try_from(e) {
            Ok(e) if e <= 4096 => Ok(e),
            _ => self.err("exponent too large"),
        }
    }

    /// Returns `(coefficient, power)`.
    fn term(&mut self) -> Result<(BigRat, usize), ParseError> {
        let coef = self.coef()?;
        let star = coef.is_some() && self.eat('*');
        if self.eat('x') {
            let power = if self.eat('^') { self.exponent()? } else { 1 };
            Ok((coef.unwrap_or_else(BigRat::one), power))
        } else if star {
            self.err("expected 'x' after '*'")
        } else {
            match coef {
                Some(c) => Ok((c, 0)),
                None => self.err("expected a coefficient or 'x'"),
            }
        }
    }
}

pub fn parse_poly(text: &str) -> Result<QPoly, ParseError> {
    let chars: Vec<char> = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    let mut cur = Cursor { chars, pos: 0 };
    if cur.peek().is_none() {
        return cur.err("empty input");
    }
    let mut coeffs: Vec<BigRat> = Vec::new();
    let mut first = true;
    while cur.peek().is_some() {
        let neg = match cur.sign() {
            Some(n) => n,
            None if first => false,
            None => return cur.err("expected '+' or '-'"),
        };
        first = false;
        let (c, k) = cur.term()?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigRat::zero());
        }
        coeffs[k] += if neg { -c } else { c };
    }
    Ok(QPoly::from_rats(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn grammar() {
        assert_eq!(parse_poly("x^4+1").unwrap(), QPoly::from_i64(&[1, 0, 0, 0, 1]));
        assert_eq!(parse_poly(" -2 x^{2} + 3*x - x ").unwrap(), QPoly::from_i64(&[0, 2, -2]));
        assert_eq!(
            parse_poly("x^2 - 3/2*x + (−1/4)").unwrap(),
            QPoly::from_rats(vec![rat(-1, 4), rat(-3, 2), rat(1, 1)])
        );
        assert_eq!(parse_poly("x - x").unwrap(), QPoly::zero());
    }

    #[test]
    fn errors() {
        for bad in ["", "x^", "2*", "x+*", "1/0", "y", "x x", "(1/2"] {
            assert!(parse_poly(bad).is_err(), "{bad}");
        }
        assert_eq!(parse_poly("x+y").unwrap_err().column, 3);
    }
}
