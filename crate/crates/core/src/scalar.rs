//! Exact coefficient fields.
//!
//! Everything in this crate is generic over [`Scalar`], which is implemented
//! for the rationals (identity involution) and the Gaussian rationals
//! (complex conjugation). There is deliberately no floating point mode.

use std::fmt::{self, Debug};
use std::hash::Hash;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

/// Exact rational numbers.
pub type Rational = BigRational;

/// Exact Gaussian rationals `a + b i` with `a, b` rational.
pub type GaussianRational = Complex<BigRational>;

/// Which field the coefficients live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldMode {
    Rational,
    GaussianRational,
}

impl FieldMode {
    pub fn tag(self) -> &'static str {
        match self {
            FieldMode::Rational => "Q",
            FieldMode::GaussianRational => "Qi",
        }
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// An exact field with an involution (conjugation).
pub trait Scalar:
    Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static + Num + Neg<Output = Self>
{
    const FIELD: FieldMode;

    /// The field involution. Identity over `Q`, complex conjugation over `Q(i)`.
    fn conj(&self) -> Self;

    fn from_rational(r: Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `i`, when the field has one.
    fn imaginary_unit() -> Option<Self>;

    fn real_part(&self) -> Rational;

    fn imag_part(&self) -> Rational;

    fn is_real(&self) -> bool {
        self.imag_part().is_zero()
    }

    /// A rational upper bound on the modulus: `|re| + |im|`.
    fn modulus_bound(&self) -> Rational {
        self.real_part().abs() + self.imag_part().abs()
    }

    /// Least common multiple of the denominators of all rational parts.
    fn denominator_lcm(&self) -> BigInt;

    /// `self * other` without consuming either operand.
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// `self += other * factor`.
    fn add_mul_assign(&mut self, other: &Self, factor: &Self) {
        let prod = other.mul_ref(factor);
        let lhs = std::mem::replace(self, Self::zero());
        *self = lhs + prod;
    }

    /// `|z|^2`, always a nonnegative rational.
    fn norm_sqr(&self) -> Rational {
        let re = self.real_part();
        let im = self.imag_part();
        &re * &re + &im * &im
    }
}

impl Scalar for Rational {
    const FIELD: FieldMode = FieldMode::Rational;

    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn real_part(&self) -> Rational {
        self.clone()
    }

    fn imag_part(&self) -> Rational {
        Rational::zero()
    }

    fn denominator_lcm(&self) -> BigInt {
        self.denom().clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_mul_assign(&mut self, other: &Self, factor: &Self) {
        *self += other * factor;
    }
}

impl Scalar for GaussianRational {
    const FIELD: FieldMode = FieldMode::GaussianRational;

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn from_rational(r: Rational) -> Self {
        Complex::new(r, Rational::zero())
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(Rational::zero(), Rational::one()))
    }

    fn real_part(&self) -> Rational {
        self.re.clone()
    }

    fn imag_part(&self) -> Rational {
        self.im.clone()
    }

    fn denominator_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// Renders a rational as `p` or `p/q` in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Renders a scalar as a string the polynomial parser accepts as a constant.
///
/// Rationals render as `p/q`; Gaussian rationals with both parts nonzero
/// render as `(a + b*i)`.
pub fn format_scalar<S: Scalar>(s: &S) -> String {
    let re = s.real_part();
    let im = s.imag_part();
    if im.is_zero() {
        return format_rational(&re);
    }
    let imag = if im.is_one() {
        "i".to_string()
    } else {
        format!("{}*i", format_rational(&im))
    };
    if re.is_zero() {
        return imag;
    }
    if im.is_negative() {
        let mag = -im;
        let imag = if mag.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", format_rational(&mag))
        };
        format!("({} - {})", format_rational(&re), imag)
    } else {
        format!("({} + {})", format_rational(&re), imag)
    }
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for Gaussian rationals with integer parts.
pub fn gauss(re: i64, im: i64) -> GaussianRational {
    Complex::new(rat(re, 1), rat(im, 1))
}

/// Smallest rational of the form `k / 2^bits` that is at least `sqrt(r)`.
pub fn sqrt_upper_bound(r: &Rational, bits: u32) -> Rational {
    assert!(!r.is_negative(), "square root of a negative rational");
    // sqrt(n/d) <= ceil(sqrt(n * d * 4^bits)) / (d * 2^bits)
    let scale = BigInt::one() << (2 * bits);
    let radicand = r.numer() * r.denom() * scale;
    let mut root = radicand.sqrt();
    if &root * &root < radicand {
        root += 1;
    }
    let denom = r.denom() * (BigInt::one() << bits);
    Rational::new(root, denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_is_an_involution() {
        let z = gauss(3, -4);
        assert_eq!(Scalar::conj(&z), gauss(3, 4));
        assert_eq!(Scalar::conj(&Scalar::conj(&z)), z);
        let q = rat(-7, 3);
        assert_eq!(Scalar::conj(&q), q);
    }

    #[test]
    fn scalar_rendering() {
        assert_eq!(format_scalar(&rat(-3, 6)), "-1/2");
        assert_eq!(format_scalar(&rat(4, 1)), "4");
        assert_eq!(format_scalar(&gauss(0, 1)), "i");
        assert_eq!(format_scalar(&gauss(0, -2)), "-2*i");
        assert_eq!(format_scalar(&gauss(1, -1)), "(1 - i)");
        assert_eq!(format_scalar(&gauss(2, 3)), "(2 + 3*i)");
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("-6/4"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("12"), Some(rat(12, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn sqrt_bound_is_an_upper_bound() {
        for (n, d) in [(2, 1), (9, 4), (1, 3), (0, 1), (12345, 17)] {
            let r = rat(n, d);
            let s = sqrt_upper_bound(&r, 10);
            assert!(&s * &s >= r);
            let slack = &s - rat(1, 1024);
            assert!(slack.is_negative() || &slack * &slack < r);
        }
    }
}
