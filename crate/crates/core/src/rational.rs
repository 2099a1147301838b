//! Exact rational numbers.
//!
//! [`Rational`] is a thin newtype over [`num_rational::Ratio<i64>`]. Values
//! are always stored reduced with a positive denominator, so structural
//! equality is numeric equality and zero is always `0/1`.
//!
//! ```
//! use invariant_set::Rational;
//!
//! let c: Rational = "6/10".parse().unwrap();
//! assert_eq!(c, Rational::new(3, 5).unwrap());
//! assert_eq!(c.to_string(), "3/5");
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::NumberError;

/// A reduced fraction `numerator / denominator` with `denominator > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));
    pub const HALF: Rational = Rational(Ratio::new_raw(1, 2));

    /// Builds `numerator / denominator`, reducing eagerly.
    pub fn new(numerator: i64, denominator: i64) -> Result<Self, NumberError> {
        if denominator == 0 {
            return Err(NumberError::ZeroDenominator);
        }
        Ok(Rational(Ratio::new(numerator, denominator)))
    }

    pub const fn integer(value: i64) -> Self {
        Rational(Ratio::new_raw(value, 1))
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Reduces into `[0, 1)` by removing the integer part (floor).
    pub fn fract_floor(&self) -> Self {
        Rational(self.0 - self.0.floor())
    }

    pub fn recip(&self) -> Result<Self, NumberError> {
        if self.is_zero() {
            return Err(NumberError::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    /// `true` when `denominator` divides evenly into `p`, i.e. the value can be
    /// written as `n / p` for an integer `n`.
    pub fn has_denominator_dividing(&self, p: i64) -> bool {
        p != 0 && p % self.denominator() == 0
    }

    /// Numerator when rewritten over denominator `p`. `None` unless
    /// [`Rational::has_denominator_dividing`] holds.
    pub fn numerator_over(&self, p: i64) -> Option<i64> {
        if !self.has_denominator_dividing(p) {
            return None;
        }
        self.numerator().checked_mul(p / self.denominator())
    }

    /// Exact square root when the value is the square of a rational.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.0.is_negative() {
            return None;
        }
        let n = self.numerator();
        let d = self.denominator();
        let rn = n.sqrt();
        let rd = d.sqrt();
        (rn * rn == n && rd * rd == d).then(|| Rational(Ratio::new_raw(rn, rd)))
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator() as f64 / self.denominator() as f64
    }

    /// Always `num/den`, including integers (`2/1`). Used for serialized output.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numerator(), self.denominator())
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

impl FromStr for Rational {
    type Err = NumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || NumberError::Parse(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => s.parse::<i64>().map(Rational::integer).map_err(|_| bad()),
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && self.numerator() == *other
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&Ratio::from_integer(*other)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_fraction_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(r(6, 9), r(2, 3));
        assert_eq!(r(3, -5).numerator(), -3);
        assert_eq!(r(3, -5).denominator(), 5);
        assert_eq!(r(0, -7), Rational::ZERO);
        assert_eq!(r(0, 7).denominator(), 1);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Rational::new(1, 0), Err(NumberError::ZeroDenominator));
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!("-7/10".parse::<Rational>().unwrap(), r(-7, 10));
        assert_eq!(" 4 ".parse::<Rational>().unwrap(), Rational::integer(4));
        assert!("3/x".parse::<Rational>().is_err());
        assert!("0.5".parse::<Rational>().is_err());
    }

    #[test]
    fn fraction_string_keeps_unit_denominator() {
        assert_eq!(Rational::integer(2).to_fraction_string(), "2/1");
        assert_eq!(Rational::integer(2).to_string(), "2");
        assert_eq!(r(14, 5).to_fraction_string(), "14/5");
    }

    #[test]
    fn denominator_divisibility() {
        assert!(r(1, 2).has_denominator_dividing(8));
        assert_eq!(r(1, 2).numerator_over(8), Some(4));
        assert!(!r(1, 3).has_denominator_dividing(8));
        assert_eq!(r(1, 3).numerator_over(8), None);
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(r(4, 9).sqrt_exact(), Some(r(2, 3)));
        assert_eq!(r(8, 9).sqrt_exact(), None);
        assert_eq!(r(-1, 4).sqrt_exact(), None);
        assert_eq!(Rational::ZERO.sqrt_exact(), Some(Rational::ZERO));
    }

    #[test]
    fn fract_floor_wraps_negatives() {
        assert_eq!(r(-1, 4).fract_floor(), r(3, 4));
        assert_eq!(r(7, 4).fract_floor(), r(3, 4));
        assert_eq!(Rational::integer(3).fract_floor(), Rational::ZERO);
    }

    #[test]
    fn serde_uses_fraction_strings() {
        let json = serde_json::to_string(&r(-3, 5)).unwrap();
        assert_eq!(json, "\"-3/5\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r(-3, 5));
    }
}
