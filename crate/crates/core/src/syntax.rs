//! Text syntax for polynomials.
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := factor ("*" factor)*
//! factor   := atom ["'"] ["^" nat] ["'"]      (at most one involution mark)
//! atom     := rational | "i" | var | "(" expr ")"
//! var      := "x" nat
//! rational := ["-"] nat ["/" nat]
//! ```
//!
//! Whitespace is ignored and juxtaposition is not multiplication. A `-`
//! directly in front of a non-numeric factor negates it.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{format_scalar, Rational, Scalar};
use crate::word::Word;

/// Parses `s` as a polynomial in `g` variables over the field of `S`.
pub fn parse_poly<S: Scalar>(s: &str, g: usize) -> Result<Polynomial<S>> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        g,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    g: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
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

    fn nat(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn expr<S: Scalar>(&mut self) -> Result<Polynomial<S>> {
        let mut acc = self.term::<S>()?;
        loop {
            if self.eat(b'+') {
                let t = self.term::<S>()?;
                acc.add_scaled(&t, &S::one());
            } else if self.eat(b'-') {
                let t = self.term::<S>()?;
                acc.add_scaled(&t, &-S::one());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<S: Scalar>(&mut self) -> Result<Polynomial<S>> {
        let mut acc = self.factor::<S>()?;
        while self.eat(b'*') {
            let f = self.factor::<S>()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor<S: Scalar>(&mut self) -> Result<Polynomial<S>> {
        let mut base = self.atom::<S>()?;
        let mut starred = false;
        if self.eat(b'\'') {
            base = base.star();
            starred = true;
        }
        if self.eat(b'^') {
            let k = self.nat()?;
            let k: u32 = k
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            if k == 0 {
                return Err(self.error("exponent must be positive"));
            }
            base = base.pow(k);
        }
        if self.eat(b'\'') {
            if starred {
                return Err(self.error("at most one involution mark per factor"));
            }
            base = base.star();
        }
        Ok(base)
    }

    fn atom<S: Scalar>(&mut self) -> Result<Polynomial<S>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr::<S>()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    let r = self.rational_tail()?;
                    Ok(Polynomial::constant(self.g, S::from_rational(-r)))
                } else {
                    let inner = self.factor::<S>()?;
                    Ok(-&inner)
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational_tail()?;
                Ok(Polynomial::constant(self.g, S::from_rational(r)))
            }
            Some(b'i') => {
                let at = self.pos;
                self.pos += 1;
                match S::imaginary_unit() {
                    Some(i) => Ok(Polynomial::constant(self.g, i)),
                    None => Err(Error::Parse {
                        position: at,
                        message: "imaginary unit is not available over Q".into(),
                    }),
                }
            }
            Some(b'x') => {
                let at = self.pos;
                self.pos += 1;
                let idx = self.nat()?;
                let idx: usize = idx.try_into().unwrap_or(usize::MAX);
                if idx == 0 {
                    return Err(Error::Parse {
                        position: at,
                        message: "variable indices start at 1".into(),
                    });
                }
                if idx > self.g {
                    return Err(Error::VariableCount {
                        expected: self.g,
                        found: idx,
                    });
                }
                Ok(Polynomial::var(self.g, idx as u16))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn rational_tail(&mut self) -> Result<Rational> {
        let n = self.nat()?;
        if self.eat(b'/') {
            let d = self.nat()?;
            if d.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }
}

fn is_negative<S: Scalar>(c: &S) -> bool {
    let re = c.real_part();
    let im = c.imag_part();
    (im.is_zero() && re.is_negative()) || (re.is_zero() && im.is_negative())
}

fn render_term<S: Scalar>(c: &S, w: &Word) -> String {
    if w.is_one() {
        format_scalar(c)
    } else if c.is_one() {
        w.to_string()
    } else {
        format!("{}*{}", format_scalar(c), w)
    }
}

/// Renders terms in descending monomial order, e.g. `-1*x2*x1 + x1*x2`.
pub fn format_poly<S: Scalar>(p: &Polynomial<S>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (w, c)) in p.terms().rev().enumerate() {
        if k == 0 {
            out.push_str(&render_term(c, w));
        } else if is_negative(c) {
            out.push_str(" - ");
            out.push_str(&render_term(&-c.clone(), w));
        } else {
            out.push_str(" + ");
            out.push_str(&render_term(c, w));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, rat, GaussianRational};
    use crate::word::Letter;

    type P = Polynomial<Rational>;

    #[test]
    fn parses_commutator_plus_one() {
        let p: P = parse_poly("x1*x2 - x2*x1 + 1", 2).unwrap();
        let expected = &(&(&P::var(2, 1) * &P::var(2, 2)) - &(&P::var(2, 2) * &P::var(2, 1)))
            + &P::one(2);
        assert_eq!(p, expected);
    }

    #[test]
    fn involution_of_group_reverses() {
        let p: P = parse_poly("(x1*x2)'", 2).unwrap();
        assert_eq!(p, &P::var_star(2, 2) * &P::var_star(2, 1));
    }

    #[test]
    fn powers_and_fractions() {
        let p: P = parse_poly("1/2*x1^2 - 3", 1).unwrap();
        let mut expected = P::monomial(
            1,
            Word::from_letters(vec![Letter::x(1), Letter::x(1)]),
            rat(1, 2),
        );
        expected.add_term(Word::one(), rat(-3, 1));
        assert_eq!(p, expected);
        let q: P = parse_poly("x1'^2", 1).unwrap();
        assert_eq!(q, parse_poly("x1'*x1'", 1).unwrap());
        let r: P = parse_poly("x1^2'", 1).unwrap();
        assert_eq!(q, r);
    }

    #[test]
    fn errors_are_reported() {
        assert!(matches!(parse_poly::<Rational>("x3", 2), Err(Error::VariableCount { .. })));
        assert!(matches!(parse_poly::<Rational>("2*i", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly::<Rational>("x1 x2", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly::<Rational>("x1''", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly::<Rational>("(x1", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly::<Rational>("x1^0", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly::<Rational>("1/0", 2), Err(Error::Parse { .. })));
    }

    #[test]
    fn gaussian_constants() {
        let p: Polynomial<GaussianRational> = parse_poly("i*x1 + (1 - 2*i)", 1).unwrap();
        assert_eq!(p.coeff(&Word::letter(Letter::x(1))), gauss(0, 1));
        assert_eq!(p.coeff(&Word::one()), gauss(1, -2));
        assert_eq!(format_poly(&p), "i*x1 + (1 - 2*i)");
        let q: Polynomial<GaussianRational> = parse_poly("(i*x1)'", 1).unwrap();
        assert_eq!(q.coeff(&Word::letter(Letter::x_star(1))), gauss(0, -1));
    }

    #[test]
    fn golden_renderings() {
        let comm: P = parse_poly("x1*x2 - x2*x1", 2).unwrap();
        assert_eq!(format_poly(&comm), "-1*x2*x1 + x1*x2");
        assert_eq!(format_poly(&P::zero(2)), "0");
        assert_eq!(format_poly(&P::var_star(2, 1)), "x1'");
        let p: P = parse_poly("x1 - 1/2*x2' + 3", 2).unwrap();
        assert_eq!(format_poly(&p), "-1/2*x2' + x1 + 3");
    }
}
