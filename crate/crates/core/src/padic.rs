//! p-adic valuation and the ultrametric on trajectory labels.
//!
//! A [`TrajectoryLabel`] is a fixed-length base-`p` digit sequence, most
//! significant digit first. Two labels that first differ at index `i` are
//! `p^(k-1-i)` apart, so a difference in the leading digit (the top-level
//! branch of the label tree) is the largest possible distance, `p^(k-1)`.
//!
//! Invariant-set membership is read off the leading digit: a label is on the
//! set exactly when its leading digit is `0`. Every off-set label is therefore
//! at distance `p^(k-1)` from every on-set label, however late their other
//! digits diverge.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::NumberError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

/// Largest `e` with `p^e | x`; [`Valuation::Infinite`] for `x = 0`.
pub fn padic_valuation(x: i128, p: u64) -> Result<Valuation, NumberError> {
    if p < 2 {
        return Err(NumberError::BaseTooSmall(p));
    }
    if x == 0 {
        return Ok(Valuation::Infinite);
    }
    let p = p as u128;
    let mut x = x.unsigned_abs();
    let mut e = 0;
    while x.is_multiple_of(p) {
        x /= p;
        e += 1;
    }
    Ok(Valuation::Finite(e))
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLabel", into = "RawLabel")]
pub struct TrajectoryLabel {
    base: u64,
    digits: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawLabel {
    base: u64,
    digits: Vec<u64>,
}

impl TryFrom<RawLabel> for TrajectoryLabel {
    type Error = NumberError;
    fn try_from(raw: RawLabel) -> Result<Self, Self::Error> {
        TrajectoryLabel::new(raw.base, raw.digits)
    }
}

impl From<TrajectoryLabel> for RawLabel {
    fn from(label: TrajectoryLabel) -> Self {
        RawLabel {
            base: label.base,
            digits: label.digits,
        }
    }
}

impl TrajectoryLabel {
    pub fn new(base: u64, digits: Vec<u64>) -> Result<Self, NumberError> {
        if base < 2 {
            return Err(NumberError::BaseTooSmall(base));
        }
        if digits.is_empty() {
            return Err(NumberError::EmptyLabel);
        }
        if let Some(&digit) = digits.iter().find(|&&d| d >= base) {
            return Err(NumberError::DigitOutOfRange { digit, base });
        }
        Ok(TrajectoryLabel { base, digits })
    }

    /// The all-zero label of length `len`, which lies on the set.
    pub fn zeros(base: u64, len: usize) -> Result<Self, NumberError> {
        Self::new(base, vec![0; len])
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn check_index(&self, index: usize) -> Result<(), NumberError> {
        if index >= self.digits.len() {
            return Err(NumberError::DigitIndexOutOfRange {
                index,
                len: self.digits.len(),
            });
        }
        Ok(())
    }

    /// Adds one (mod `p`) to the digit at `index`.
    pub fn increment_digit(&self, index: usize) -> Result<Self, NumberError> {
        self.check_index(index)?;
        let mut out = self.clone();
        out.digits[index] = (out.digits[index] + 1) % self.base;
        Ok(out)
    }

    /// Subtracts one (mod `p`) from the digit at `index`.
    pub fn decrement_digit(&self, index: usize) -> Result<Self, NumberError> {
        self.check_index(index)?;
        let mut out = self.clone();
        out.digits[index] = (out.digits[index] + self.base - 1) % self.base;
        Ok(out)
    }

    pub fn with_leading_digit(&self, digit: u64) -> Result<Self, NumberError> {
        if digit >= self.base {
            return Err(NumberError::DigitOutOfRange {
                digit,
                base: self.base,
            });
        }
        let mut out = self.clone();
        out.digits[0] = digit;
        Ok(out)
    }
}

impl fmt::Debug for TrajectoryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TrajectoryLabel(base {}: {self})", self.base)
    }
}

impl fmt::Display for TrajectoryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// A distance between labels: zero or an exact power of the base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PadicDistance {
    Zero,
    Power { base: u64, exponent: usize },
}

impl PadicDistance {
    /// `None` for zero, otherwise the exponent of the base.
    pub fn exponent(&self) -> Option<usize> {
        match self {
            PadicDistance::Zero => None,
            PadicDistance::Power { exponent, .. } => Some(*exponent),
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        match *self {
            PadicDistance::Zero => BigUint::ZERO,
            PadicDistance::Power { base, exponent } => {
                BigUint::from(base).pow(u32::try_from(exponent).expect("exponent fits in u32"))
            }
        }
    }

    /// Exact value when it fits in a `u128`.
    pub fn to_u128(&self) -> Option<u128> {
        match *self {
            PadicDistance::Zero => Some(0),
            PadicDistance::Power { base, exponent } => {
                let e = u32::try_from(exponent).ok()?;
                (base as u128).checked_pow(e)
            }
        }
    }
}

/// Distances are only compared for labels sharing a base; the order is by exponent.
impl PartialOrd for PadicDistance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PadicDistance {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exponent()
            .map(|e| e + 1)
            .unwrap_or(0)
            .cmp(&other.exponent().map(|e| e + 1).unwrap_or(0))
    }
}

impl fmt::Display for PadicDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PadicDistance::Zero => write!(f, "0"),
            PadicDistance::Power { base, exponent } => match self.to_u128() {
                Some(v) => write!(f, "{v}"),
                None => write!(f, "{base}^{exponent}"),
            },
        }
    }
}

/// `p^(k-1-i)` for the first differing digit index `i`, or zero for equal labels.
pub fn trajectory_distance(
    a: &TrajectoryLabel,
    b: &TrajectoryLabel,
) -> Result<PadicDistance, NumberError> {
    if a.base != b.base || a.len() != b.len() {
        return Err(NumberError::LabelMismatch {
            left_base: a.base,
            right_base: b.base,
            left_len: a.len(),
            right_len: b.len(),
        });
    }
    let first_diff = a.digits.iter().zip(&b.digits).position(|(x, y)| x != y);
    Ok(match first_diff {
        None => PadicDistance::Zero,
        Some(i) => PadicDistance::Power {
            base: a.base,
            exponent: a.len() - 1 - i,
        },
    })
}

/// On-set iff the most significant digit is `0`.
pub fn onset_membership(label: &TrajectoryLabel) -> bool {
    label.digits[0] == 0
}
