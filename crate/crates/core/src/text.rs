//! The polynomial text grammar.
//!
//! Input: a sum of terms separated by `+`, where a term is
//! `[coeff '*'] 'x' ['^' exp]` or a bare `coeff`; coefficients are decimal
//! in `[0, q)`. Canonical output is strictly descending in the exponent,
//! zero coefficients omitted, coefficient 1 omitted before `x`:
//! `"x^7+x^4+1"`, `"2*x^3+x+2"` (q = 3), `"1"`, `"0"`.

use std::fmt;

use crate::error::Error;
use crate::field::FieldChar;
use crate::poly::Poly;

const MAX_EXPONENT: u64 = 1 << 20;

impl Poly {
    /// Parses the text grammar; errors carry a 1-based column.
    pub fn parse(text: &str, field: FieldChar) -> Result<Self, Error> {
        Parser { bytes: text.as_bytes(), pos: 0, field }.run()
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    field: FieldChar,
}

impl Parser<'_> {
    fn run(&mut self) -> Result<Poly, Error> {
        let mut acc: Vec<u16> = Vec::new();
        self.skip_ws();
        loop {
            let (coeff, exp) = self.term()?;
            if acc.len() <= exp {
                acc.resize(exp + 1, 0);
            }
            acc[exp] = self.field.add(acc[exp], coeff);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(c) => {
                    return Err(self.err(format!("expected '+' or end of input, found {:?}", c as char)));
                }
            }
        }
        Ok(Poly::from_coeffs(self.field, acc))
    }

    fn term(&mut self) -> Result<(u16, usize), Error> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok((1, self.exponent()?))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let value = self.number()?;
                if value >= self.field.q64() {
                    return Err(Error::Parse {
                        col: start + 1,
                        msg: format!("coefficient {value} out of range for F_{}", self.field.q()),
                    });
                }
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    if self.peek() != Some(b'x') {
                        return Err(self.err("expected 'x' after '*'".into()));
                    }
                    self.pos += 1;
                    Ok((value as u16, self.exponent()?))
                } else {
                    Ok((value as u16, 0))
                }
            }
            Some(c) => Err(self.err(format!("expected a term, found {:?}", c as char))),
            None => Err(self.err("expected a term, found end of input".into())),
        }
    }

    fn exponent(&mut self) -> Result<usize, Error> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let value = self.number()?;
        if value > MAX_EXPONENT {
            return Err(Error::Parse {
                col: start + 1,
                msg: format!("exponent {value} too large"),
            });
        }
        Ok(value as usize)
    }

    fn number(&mut self) -> Result<u64, Error> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .ok_or_else(|| Error::Parse {
                    col: start + 1,
                    msg: "number too large".into(),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number".into()));
        }
        Ok(value)
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek() == Some(b' ') {
            self.pos += 1;
        }
    }

    fn err(&self, msg: String) -> Error {
        Error::Parse { col: self.pos + 1, msg }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for i in (0..=deg).rev() {
            let c = self.coeff(i);
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over F_{}", self.field().q())
    }
}

/// Polynomials serialize as their canonical text form.
impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldChar {
        FieldChar::new(2).unwrap()
    }

    fn f3() -> FieldChar {
        FieldChar::new(3).unwrap()
    }

    #[test]
    fn parses_headline_conductor() {
        let f = Poly::parse("x^4+x+1", f2()).unwrap();
        assert_eq!(f.coeffs(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn parses_zero_and_constants() {
        assert!(Poly::parse("0", f2()).unwrap().is_zero());
        assert!(Poly::parse("1", f2()).unwrap().is_one());
        assert_eq!(Poly::parse("2", f3()).unwrap(), Poly::constant(f3(), 2));
    }

    #[test]
    fn round_trips_canonical_forms() {
        for s in ["x^7+x^4+1", "x^4+x+1", "x", "x+1", "1", "0", "x^2"] {
            assert_eq!(Poly::parse(s, f2()).unwrap().to_string(), s);
        }
        for s in ["2*x^3+x+2", "x^2+2*x", "2"] {
            assert_eq!(Poly::parse(s, f3()).unwrap().to_string(), s);
        }
    }

    #[test]
    fn accumulates_repeated_terms() {
        assert!(Poly::parse("x+x", f2()).unwrap().is_zero());
        assert_eq!(Poly::parse("x+x+x", f3()).unwrap().to_string(), "0");
        assert_eq!(Poly::parse("1+x^2+1", f3()).unwrap().to_string(), "x^2+2");
    }

    #[test]
    fn tolerates_spaces() {
        assert_eq!(Poly::parse(" x^4 + x + 1 ", f2()).unwrap().to_string(), "x^4+x+1");
        assert_eq!(Poly::parse("2 * x^3", f3()).unwrap().to_string(), "2*x^3");
    }

    #[test]
    fn coefficient_out_of_range() {
        let err = Poly::parse("x^2+2*x", f2()).unwrap_err();
        assert_eq!(
            err,
            Error::Parse { col: 5, msg: "coefficient 2 out of range for F_2".into() }
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert!(matches!(Poly::parse("", f2()), Err(Error::Parse { col: 1, .. })));
        assert!(matches!(Poly::parse("x^", f2()), Err(Error::Parse { col: 3, .. })));
        assert!(matches!(Poly::parse("x++1", f2()), Err(Error::Parse { col: 3, .. })));
        assert!(matches!(Poly::parse("y", f2()), Err(Error::Parse { col: 1, .. })));
        assert!(matches!(Poly::parse("x^1x", f2()), Err(Error::Parse { col: 4, .. })));
        assert!(matches!(Poly::parse("2*", f3()), Err(Error::Parse { col: 3, .. })));
    }

    #[test]
    fn exponent_cap() {
        assert!(matches!(
            Poly::parse("x^99999999", f2()),
            Err(Error::Parse { col: 3, .. })
        ));
    }
}
