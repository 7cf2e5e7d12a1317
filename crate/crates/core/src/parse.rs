//! Text formats for polynomials.
//!
//! The bracket grammar (whitespace is ignored):
//!
//! ```text
//! poly   := sign? term (('+' | '-') term)*
//! term   := rat ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)?
//! var    := ('x' | 'y' | 'X' | 'Y') '[' uint ',' uint ']'
//! rat    := uint ('/' uint)?
//! ```
//!
//! The letter of a variable carries no meaning; the [`RingSpec`] decides how
//! the result is interpreted. A bare `0` parses as the zero polynomial.
//!
//! The letter shorthand names the entries of a symmetric matrix by capital
//! letters in row-major order over the upper triangle, so for `n = 3` the
//! letters `A B C D E F` stand for `x[1,1] x[1,2] x[1,3] x[2,2] x[2,3] x[3,3]`.
//! A term is an optional integer coefficient followed by letters, each with
//! an optional `^e`; lowercase letters are accepted as well.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ParseError;
use crate::ring::{Monomial, Polynomial, Rational, RingSpec, VarId};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { src: s.as_bytes(), pos: 0 }
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

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", b as char)))
        }
    }

    fn error(&mut self, msg: impl Into<String>) -> ParseError {
        self.skip_ws();
        ParseError::new(self.pos, msg)
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(start, "expected an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits"))
    }

    fn small_uint(&mut self) -> Result<usize, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let v = self.uint()?;
        v.try_into().map_err(|_| ParseError::new(start, "integer too large"))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// Parse a polynomial in the bracket grammar.
pub fn parse_poly(text: &str, ring: RingSpec) -> Result<Polynomial, ParseError> {
    let mut c = Cursor::new(text);
    let mut poly = Polynomial::zero(ring);
    if c.at_end() {
        return Err(c.error("empty input"));
    }
    let mut negative = if c.eat(b'-') {
        true
    } else {
        c.eat(b'+');
        false
    };
    loop {
        let (m, mut coeff) = parse_term(&mut c, &ring)?;
        if negative {
            coeff = -coeff;
        }
        poly.add_term(m, coeff);
        if c.at_end() {
            break;
        }
        negative = if c.eat(b'+') {
            false
        } else if c.eat(b'-') {
            true
        } else {
            return Err(c.error("expected '+', '-' or end of input"));
        };
    }
    Ok(poly)
}

fn parse_term(c: &mut Cursor<'_>, ring: &RingSpec) -> Result<(Monomial, Rational), ParseError> {
    let mut coeff = Rational::one();
    let mut factors: Vec<(VarId, u32)> = Vec::new();
    match c.peek() {
        Some(b) if b.is_ascii_digit() => {
            let num = c.uint()?;
            let mut q = Rational::from_integer(num);
            if c.eat(b'/') {
                let at = c.pos;
                let den = c.uint()?;
                if den.is_zero() {
                    return Err(ParseError::new(at, "zero denominator"));
                }
                q /= Rational::from_integer(den);
            }
            coeff = q;
            if !c.eat(b'*') {
                return Ok((Monomial::one(), coeff));
            }
            factors.push(parse_factor(c, ring)?);
        }
        _ => factors.push(parse_factor(c, ring)?),
    }
    while c.eat(b'*') {
        factors.push(parse_factor(c, ring)?);
    }
    Ok((Monomial::from_exponents(factors), coeff))
}

fn parse_factor(c: &mut Cursor<'_>, ring: &RingSpec) -> Result<(VarId, u32), ParseError> {
    let start = {
        c.skip_ws();
        c.pos
    };
    match c.peek() {
        Some(b'x' | b'y' | b'X' | b'Y') => c.pos += 1,
        _ => return Err(ParseError::new(start, "expected a variable")),
    }
    c.expect(b'[')?;
    let row = c.small_uint()?;
    c.expect(b',')?;
    let col = c.small_uint()?;
    c.expect(b']')?;
    let v = ring
        .var(row, col)
        .map_err(|_| ParseError::new(start, format!("variable [{},{}] outside a {}x{} matrix", row, col, ring.n, ring.n)))?;
    let mut e = 1u32;
    if c.eat(b'^') {
        let at = c.pos;
        e = c.small_uint()? as u32;
        if e == 0 {
            return Err(ParseError::new(at, "zero exponent"));
        }
    }
    Ok((v, e))
}

/// The variable named by a letter in the symmetric shorthand.
pub fn letter_var(ring: &RingSpec, letter: char) -> Option<VarId> {
    if !ring.is_symmetric() || !letter.is_ascii_alphabetic() {
        return None;
    }
    let idx = (letter.to_ascii_uppercase() as u8 - b'A') as usize;
    ring.variables().get(idx).copied()
}

/// The letter naming a variable in the symmetric shorthand, if any.
pub fn var_letter(ring: &RingSpec, v: VarId) -> Option<char> {
    if !ring.is_symmetric() {
        return None;
    }
    let idx = ring.var_index(v);
    (idx < 26).then(|| (b'A' + idx as u8) as char)
}

/// Parse the letter shorthand, e.g. `"EIO - DJO + 2BHJ + BI^2"`.
pub fn parse_letters(text: &str, ring: RingSpec) -> Result<Polynomial, ParseError> {
    if !ring.is_symmetric() {
        return Err(ParseError::new(0, "letter shorthand needs a symmetric ring"));
    }
    let mut c = Cursor::new(text);
    let mut poly = Polynomial::zero(ring);
    if c.at_end() {
        return Err(c.error("empty input"));
    }
    let mut negative = if c.eat(b'-') {
        true
    } else {
        c.eat(b'+');
        false
    };
    loop {
        let mut coeff = Rational::one();
        if matches!(c.peek(), Some(b) if b.is_ascii_digit()) {
            coeff = Rational::from_integer(c.uint()?);
            if c.eat(b'/') {
                let at = c.pos;
                let den = c.uint()?;
                if den.is_zero() {
                    return Err(ParseError::new(at, "zero denominator"));
                }
                coeff /= Rational::from_integer(den);
            }
            c.eat(b'*');
        }
        let mut factors = Vec::new();
        while let Some(b) = c.peek() {
            if !b.is_ascii_alphabetic() {
                break;
            }
            let at = c.pos;
            let v = letter_var(&ring, b as char)
                .ok_or_else(|| ParseError::new(at, format!("letter '{}' outside a {}x{} matrix", b as char, ring.n, ring.n)))?;
            c.pos += 1;
            let mut e = 1u32;
            if c.eat(b'^') {
                e = c.small_uint()? as u32;
            }
            factors.push((v, e));
        }
        if factors.is_empty() && coeff.is_one() {
            return Err(c.error("expected a term"));
        }
        if negative {
            coeff = -coeff;
        }
        poly.add_term(Monomial::from_exponents(factors), coeff);
        if c.at_end() {
            break;
        }
        negative = if c.eat(b'+') {
            false
        } else if c.eat(b'-') {
            true
        } else {
            return Err(c.error("expected '+', '-' or end of input"));
        };
    }
    Ok(poly)
}

/// Print in the letter shorthand; `None` when the ring has more than 26
/// variables or is not symmetric.
pub fn format_letters(p: &Polynomial) -> Option<String> {
    let ring = p.ring();
    if !ring.is_symmetric() || ring.nvars() > 26 {
        return None;
    }
    if p.is_zero() {
        return Some("0".into());
    }
    let mut s = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        use num_traits::Signed;
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if !a.is_one() || m.is_one() {
            s.push_str(&crate::ring::fmt_rational(&a));
        }
        for &(v, e) in m.exponents() {
            s.push(var_letter(&ring, v)?);
            if e > 1 {
                s.push_str(&format!("^{}", e));
            }
        }
    }
    Some(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat, Flavor};

    fn r2() -> RingSpec {
        RingSpec::symmetric(2).unwrap()
    }

    #[test]
    fn roundtrip_det2() {
        let p = parse_poly("x[1,1]*x[2,2] - x[1,2]^2", r2()).unwrap();
        assert_eq!(p.to_string(), "x[1,1]*x[2,2] - x[1,2]^2");
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn symmetric_indices_merge() {
        let p = parse_poly("x[2,1] + x[1,2]", r2()).unwrap();
        assert_eq!(p.to_string(), "2*x[1,2]");
    }

    #[test]
    fn rationals_and_constants() {
        let p = parse_poly("-1/2*y[1,1]^2 + 3 - X[2,2]", r2()).unwrap();
        let v = r2().var(1, 1).unwrap();
        assert_eq!(p.coefficient(&Monomial::from_exponents([(v, 2)])), rat(-1, 2));
        assert_eq!(p.coefficient(&Monomial::one()), int(3));
        assert_eq!(parse_poly("0", r2()).unwrap(), Polynomial::zero(r2()));
        let d = parse_poly("x[1,1]", r2().with_flavor(Flavor::Divided)).unwrap();
        assert_eq!(d.to_string(), "X[1,1]");
    }

    #[test]
    fn out_of_range_offset() {
        let r = RingSpec::symmetric(3).unwrap();
        let e = parse_poly("x[1,4]", r).unwrap_err();
        assert_eq!(e.offset, 0);
        let e = parse_poly("x[1,1] + x[4,1]", r).unwrap_err();
        assert_eq!(e.offset, 9);
    }

    #[test]
    fn malformed() {
        let r = r2();
        assert!(parse_poly("", r).is_err());
        assert!(parse_poly("x[1,1] +", r).is_err());
        assert_eq!(parse_poly("x[1,1] x[2,2]", r).unwrap_err().offset, 7);
        assert!(parse_poly("x[1 1]", r).is_err());
        assert!(parse_poly("1/0*x[1,1]", r).is_err());
        assert!(parse_poly("z[1,1]", r).is_err());
    }

    #[test]
    fn letters() {
        let r = RingSpec::symmetric(4).unwrap();
        let p = parse_letters("BI^2 + 2BHJ", r).unwrap();
        let q = parse_poly("x[1,2]*x[3,4]^2 + 2*x[1,2]*x[3,3]*x[4,4]", r).unwrap();
        assert_eq!(p, q);
        assert_eq!(format_letters(&q).unwrap(), "2BHJ + BI^2");
        assert!(parse_letters("K", r).is_err());
    }
}
