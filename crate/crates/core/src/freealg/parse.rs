//! Parser for polynomial expressions over `{x, y, z}`.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! poly   := ('+'|'-')? term (('+'|'-') term)*
//! term   := coeff ('*'? factor)* | factor ('*'? factor)*
//! factor := letter ('^' posint)?
//! coeff  := integer | integer '/' posint
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{FreePoly, Scalar};
use super::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.err("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<BigInt>().map_err(|e| self.err(e.to_string()))
    }

    fn posint(&mut self) -> Result<u32, ParseError> {
        let at = self.pos;
        let n = self.integer()?;
        if n <= BigInt::zero() {
            return Err(ParseError {
                position: at,
                message: format!("exponent must be positive, got {n}"),
            });
        }
        u32::try_from(&n).map_err(|_| self.err("exponent too large"))
    }

    fn factor(&mut self) -> Result<(Letter, u32), ParseError> {
        let c = self.bump().ok_or_else(|| self.err("expected a letter"))?;
        let letter = Letter::from_char(c as char).ok_or_else(|| ParseError {
            position: self.pos - 1,
            message: format!("unknown symbol '{}'", c as char),
        })?;
        let exp = if self.peek() == Some(b'^') {
            self.bump();
            self.posint()?
        } else {
            1
        };
        Ok((letter, exp))
    }

    fn term(&mut self, sign_neg: bool) -> Result<(Word, Scalar), ParseError> {
        let has_coeff = matches!(self.peek(), Some(c) if c.is_ascii_digit());
        let mut coeff = if has_coeff {
            let num = self.integer()?;
            let den = if self.peek() == Some(b'/') {
                self.bump();
                let at = self.pos;
                let d = self.integer()?;
                if d <= BigInt::zero() {
                    return Err(ParseError {
                        position: at,
                        message: "denominator must be positive".into(),
                    });
                }
                d
            } else {
                BigInt::one()
            };
            BigRational::new(num, den)
        } else {
            Scalar::one()
        };
        if sign_neg {
            coeff = -coeff;
        }
        let mut word = Word::one();
        let mut factors = 0usize;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    let (l, e) = self.factor()?;
                    word.push(l, e);
                    factors += 1;
                }
                Some(c) if (c as char).is_ascii_alphabetic() => {
                    let (l, e) = self.factor()?;
                    word.push(l, e);
                    factors += 1;
                }
                _ => break,
            }
        }
        if !has_coeff && factors == 0 {
            return Err(self.err("expected a term"));
        }
        Ok((word, coeff))
    }
}

/// Parse an expression into a formal combination; no reduction is performed.
pub fn parse_poly(text: &str) -> Result<FreePoly, ParseError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut poly = FreePoly::zero();
    let mut neg = match cur.peek() {
        Some(b'-') => {
            cur.bump();
            true
        }
        Some(b'+') => {
            cur.bump();
            false
        }
        Some(_) => false,
        None => return Err(cur.err("empty expression")),
    };
    loop {
        let (w, c) = cur.term(neg)?;
        poly.add(w, c);
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.bump();
                neg = false;
            }
            Some(b'-') => {
                cur.bump();
                neg = true;
            }
            Some(c) => {
                return Err(cur.err(format!("unexpected character '{}'", c as char)));
            }
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::super::poly::{normal_form, scalar_int, scalar_ratio, NormalPoly};
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_str_letters(s).unwrap()
    }

    #[test]
    fn single_monomials() {
        let p = parse_poly("x*z").unwrap();
        assert_eq!(p.coeff(&w("xz")), scalar_int(1));
        assert_eq!(p.num_terms(), 1);

        let p = parse_poly("3/2*y^3").unwrap();
        assert_eq!(p.coeff(&w("yyy")), scalar_ratio(3, 2));
    }

    #[test]
    fn the_defining_relation() {
        let p = parse_poly("x^2 + y*x").unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&w("xx")), scalar_int(1));
        assert_eq!(p.coeff(&w("yx")), scalar_int(1));
        assert!(normal_form(&p).is_zero());
    }

    #[test]
    fn star_is_optional_and_signs_fold() {
        let p = parse_poly("-xy + 2 x y").unwrap();
        assert_eq!(p.coeff(&w("xy")), scalar_int(1));
        let q = parse_poly("x - x").unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn errors() {
        assert!(parse_poly("x^0").is_err());
        assert!(parse_poly("x^-2").is_err());
        assert!(parse_poly("w + x").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x +").is_err());
        let e = parse_poly("x @ y").unwrap_err();
        assert!(e.position > 0);
    }

    #[test]
    fn cli_example() {
        // nf "x*y^2*x + z*y" = -y^3*x
        let p = parse_poly("x*y^2*x + z*y").unwrap();
        let n = normal_form(&p);
        assert_eq!(n, NormalPoly::monomial(w("yyyx"), scalar_int(-1)));
        assert_eq!(n.to_string(), "-y^3*x");
    }
}
