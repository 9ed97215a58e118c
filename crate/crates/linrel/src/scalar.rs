//! Exact scalar arithmetic over the Gaussian rationals Q(i).
//!
//! Every quantity in this crate is computed over Q(i): complex numbers
//! `a + b·i` with arbitrary-precision rational real and imaginary parts.
//! There is no rounding anywhere, so ranks, dimensions and equalities are
//! exact integers and exact predicates.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rational number, always stored in reduced form with a
/// positive denominator.
pub type Rational = BigRational;

/// Error raised by checked scalar operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    DivisionByZero,
    /// A rational or complex literal could not be parsed.
    Malformed(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::Malformed(s) => write!(f, "malformed scalar `{s}`"),
        }
    }
}

impl std::error::Error for ScalarError {}

/// A Gaussian rational `re + im·i`.
///
/// Equality is structural equality of the canonical reduced forms, which
/// coincides with equality in Q(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        GaussianRational::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    /// `a/b + (c/d)·i` from machine integers. Panics if a denominator is zero.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        GaussianRational::new(
            Rational::new(BigInt::from(a), BigInt::from(b)),
            Rational::new(BigInt::from(c), BigInt::from(d)),
        )
    }

    /// Gaussian integer `a + b·i`.
    pub fn from_ints(a: i64, b: i64) -> Self {
        GaussianRational::from_parts(a, 1, b, 1)
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate `re − im·i`.
    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`, a nonnegative rational; zero iff the value is zero.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    /// Exact division. Errors on a zero divisor.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.checked_inv()?)
    }

    /// Parses the text form used by all file formats: a two-element array of
    /// rational strings is handled by serde; this parses one rational.
    pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
        let malformed = || ScalarError::Malformed(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => {
                let den = BigInt::from_str(d.trim()).map_err(|_| malformed())?;
                if den <= BigInt::zero() {
                    return Err(malformed());
                }
                (BigInt::from_str(n.trim()).map_err(|_| malformed())?, den)
            }
            None => (BigInt::from_str(s.trim()).map_err(|_| malformed())?, BigInt::one()),
        };
        Ok(Rational::new(num, den))
    }

    /// Renders a rational as `p` or `p/q` with `q > 0` reduced.
    pub fn rational_to_string(r: &Rational) -> String {
        if r.denom().is_one() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = Self::rational_to_string(&self.re);
        if self.im.is_zero() {
            return write!(f, "{re}");
        }
        let im = Self::rational_to_string(&self.im.abs());
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            let neg = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{neg}{im}i")
        } else {
            write!(f, "{re}{sign}{im}i")
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}
forward_binop!(Add, add);

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}
forward_binop!(Sub, sub);

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}
forward_binop!(Mul, mul);

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    /// Panics on a zero divisor; use [`GaussianRational::checked_div`] for
    /// data-dependent divisors.
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero")
    }
}
forward_binop!(Div, div);

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = (&*self) * rhs;
    }
}

impl Serialize for GaussianRational {
    /// Text form shared by all file formats: `["p/q", "r/s"]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&Self::rational_to_string(&self.re))?;
        seq.serialize_element(&Self::rational_to_string(&self.im))?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = GaussianRational;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a two-element array [re, im] of rational strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let re: String = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let im: String = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<String>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                let re = GaussianRational::parse_rational(&re).map_err(de::Error::custom)?;
                let im = GaussianRational::parse_rational(&im).map_err(de::Error::custom)?;
                Ok(GaussianRational::new(re, im))
            }
        }
        deserializer.deserialize_seq(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn product_of_conjugates_is_norm() {
        // (1/2 + i)(1/2 − i) = 5/4
        let z = GaussianRational::from_parts(1, 2, 1, 1);
        let w = z.conj();
        let p = &z * &w;
        assert_eq!(p, GaussianRational::new(q(5, 4), q(0, 1)));
        assert_eq!(p.re(), &z.norm_sqr());
    }

    #[test]
    fn conjugation_flips_imaginary_part() {
        let z = GaussianRational::from_parts(3, 2, 2, 1);
        assert_eq!(z.conj(), GaussianRational::from_parts(3, 2, -2, 1));
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn inverse_of_i_is_minus_i() {
        let one = GaussianRational::one();
        let i = GaussianRational::i();
        assert_eq!(one.checked_div(&i).unwrap(), -GaussianRational::i());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let z = GaussianRational::one();
        assert_eq!(
            z.checked_div(&GaussianRational::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn field_roundtrip() {
        let z = GaussianRational::from_parts(-7, 3, 2, 5);
        let w = GaussianRational::from_parts(4, 9, -1, 2);
        assert_eq!((&z * &w).checked_div(&w).unwrap(), z);
        assert_eq!(&(&z + &w) - &w, z);
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(GaussianRational::rational_to_string(&q(3, 1)), "3");
        assert_eq!(GaussianRational::rational_to_string(&q(-3, 2)), "-3/2");
        assert_eq!(GaussianRational::parse_rational("-3/2").unwrap(), q(-3, 2));
        assert_eq!(GaussianRational::parse_rational("4/6").unwrap(), q(2, 3));
        assert!(GaussianRational::parse_rational("1/0").is_err());
        assert!(GaussianRational::parse_rational("3/-2").is_err());
        assert!(GaussianRational::parse_rational("x").is_err());
    }

    #[test]
    fn serde_two_element_array() {
        let z = GaussianRational::from_parts(3, 2, -1, 1);
        let s = serde_json::to_string(&z).unwrap();
        assert_eq!(s, r#"["3/2","-1"]"#);
        let back: GaussianRational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, z);
        assert!(serde_json::from_str::<GaussianRational>(r#"["1"]"#).is_err());
        assert!(serde_json::from_str::<GaussianRational>(r#"["1","2","3"]"#).is_err());
    }

    #[test]
    fn display_form() {
        assert_eq!(GaussianRational::from_ints(0, -1).to_string(), "-1i");
        assert_eq!(GaussianRational::from_parts(1, 2, -3, 4).to_string(), "1/2-3/4i");
        assert_eq!(GaussianRational::from_ints(5, 0).to_string(), "5");
    }
}
