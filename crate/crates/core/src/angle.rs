//! Rational angles and the Niven classification of their cosines.
//!
//! Angles are stored in turns (fractions of a full rotation), so an angle of
//! `m/p` turns is a phase of `2πm/p`. A rational angle has a rational cosine
//! only at the eight turn values listed in [`NIVEN_TABLE`]; everywhere else
//! the cosine is irrational.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::NumberError;
use crate::Rational;

/// Every `(turns, cosine)` pair with both values rational, for turns in `[0, 1)`.
pub const NIVEN_TABLE: [((i64, i64), (i64, i64)); 8] = [
    ((0, 1), (1, 1)),
    ((1, 6), (1, 2)),
    ((1, 4), (0, 1)),
    ((1, 3), (-1, 2)),
    ((1, 2), (-1, 1)),
    ((2, 3), (-1, 2)),
    ((3, 4), (0, 1)),
    ((5, 6), (1, 2)),
];

/// The five rational values a cosine of a rational angle can take.
pub fn niven_cosines() -> [Rational; 5] {
    [
        Rational::integer(-1),
        -Rational::HALF,
        Rational::ZERO,
        Rational::HALF,
        Rational::ONE,
    ]
}

pub fn is_niven_cosine(c: Rational) -> bool {
    niven_cosines().contains(&c)
}

/// An angle that is a rational fraction of a full turn, reduced into `[0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalAngle {
    turns: Rational,
}

impl RationalAngle {
    pub fn from_turns(turns: Rational) -> Self {
        RationalAngle {
            turns: turns.fract_floor(),
        }
    }

    /// The phase `2π·m/p`.
    pub fn new(m: i64, p: i64) -> Result<Self, NumberError> {
        Ok(Self::from_turns(Rational::new(m, p)?))
    }

    pub fn turns(&self) -> Rational {
        self.turns
    }

    pub fn radians(&self) -> f64 {
        std::f64::consts::TAU * self.turns.to_f64()
    }

    pub fn cos_f64(&self) -> f64 {
        self.radians().cos()
    }

    /// Sum of two angles, reduced modulo one turn.
    pub fn add(&self, other: RationalAngle) -> Self {
        Self::from_turns(self.turns + other.turns)
    }
}

impl fmt::Debug for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} turn", self.turns)
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} turn", self.turns)
    }
}

impl Serialize for RationalAngle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.turns.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalAngle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Rational::deserialize(deserializer).map(RationalAngle::from_turns)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NivenClass {
    RationalCos(Rational),
    IrrationalCos,
}

impl NivenClass {
    pub fn is_rational(&self) -> bool {
        matches!(self, NivenClass::RationalCos(_))
    }
}

fn table_entry(turns: Rational) -> Option<Rational> {
    NIVEN_TABLE.iter().find_map(|&((tn, td), (cn, cd))| {
        (turns.numerator() == tn && turns.denominator() == td)
            .then(|| Rational::new(cn, cd).expect("table denominators are nonzero"))
    })
}

pub fn classify_rational_angle(angle: RationalAngle) -> NivenClass {
    match table_entry(angle.turns()) {
        Some(c) => NivenClass::RationalCos(c),
        None => NivenClass::IrrationalCos,
    }
}

/// The angle in `[0, 1/2]` turns whose cosine is `c`, when that angle is a
/// rational fraction of a turn. `Ok(None)` means the angle is irrational.
pub fn rational_angle_from_cosine(c: Rational) -> Result<Option<RationalAngle>, NumberError> {
    if c.abs() > 1 {
        return Err(NumberError::CosineOutOfRange(c));
    }
    let turns = NIVEN_TABLE
        .iter()
        .take(5) // entries 0..=4 cover [0, 1/2]
        .find(|&&(_, (cn, cd))| c.numerator() == cn && c.denominator() == cd)
        .map(|&((tn, td), _)| RationalAngle::new(tn, td).expect("table denominators are nonzero"));
    Ok(turns)
}

/// A real number of the form `coefficient · √radicand`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Surd {
    pub coefficient: Rational,
    pub radicand: u32,
}

/// Cosine of a rational angle as a single surd `q·√d`, for the angles where
/// one exists: the Niven angles (`d = 1`), odd multiples of 1/8 turn
/// (`±√2/2`) and the 1/12-turn family (`±√3/2`). Every other rational angle
/// has a cosine of algebraic degree ≥ 2 with a nonzero rational part, or
/// degree ≥ 3, and is reported as `None`.
pub fn cos_as_surd(angle: RationalAngle) -> Option<Surd> {
    if let NivenClass::RationalCos(c) = classify_rational_angle(angle) {
        return Some(Surd {
            coefficient: c,
            radicand: 1,
        });
    }
    let t = angle.turns();
    let half = Rational::HALF;
    let (sign, radicand) = match (t.numerator(), t.denominator()) {
        (1, 8) | (7, 8) => (1, 2),
        (3, 8) | (5, 8) => (-1, 2),
        (1, 12) | (11, 12) => (1, 3),
        (5, 12) | (7, 12) => (-1, 3),
        _ => return None,
    };
    Some(Surd {
        coefficient: half * Rational::integer(sign),
        radicand,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn sixth_turn_has_cosine_half() {
        let a = RationalAngle::new(1, 6).unwrap();
        assert_eq!(classify_rational_angle(a), NivenClass::RationalCos(r(1, 2)));
    }

    #[test]
    fn zero_turn_has_cosine_one() {
        let a = RationalAngle::new(0, 1).unwrap();
        assert_eq!(
            classify_rational_angle(a),
            NivenClass::RationalCos(Rational::ONE)
        );
    }

    #[test]
    fn eighth_turn_is_irrational() {
        let a = RationalAngle::new(1, 8).unwrap();
        assert_eq!(classify_rational_angle(a), NivenClass::IrrationalCos);
    }

    #[test]
    fn unreduced_and_wrapped_turns_classify_alike() {
        let a = RationalAngle::new(14, 12).unwrap();
        assert_eq!(a.turns(), r(1, 6));
        let b = RationalAngle::new(-1, 4).unwrap();
        assert_eq!(b.turns(), r(3, 4));
        assert_eq!(
            classify_rational_angle(b),
            NivenClass::RationalCos(Rational::ZERO)
        );
    }

    #[test]
    fn table_agrees_with_f64_cosine() {
        for ((tn, td), (cn, cd)) in NIVEN_TABLE {
            let a = RationalAngle::new(tn, td).unwrap();
            assert!((a.cos_f64() - cn as f64 / cd as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn inverse_direction() {
        assert_eq!(
            rational_angle_from_cosine(r(1, 2)).unwrap(),
            Some(RationalAngle::new(1, 6).unwrap())
        );
        assert_eq!(
            rational_angle_from_cosine(Rational::integer(-1)).unwrap(),
            Some(RationalAngle::new(1, 2).unwrap())
        );
        assert_eq!(rational_angle_from_cosine(r(3, 5)).unwrap(), None);
        assert_eq!(
            rational_angle_from_cosine(r(6, 5)),
            Err(NumberError::CosineOutOfRange(r(6, 5)))
        );
    }

    #[test]
    fn round_trip_over_niven_list() {
        for c in niven_cosines() {
            let a = rational_angle_from_cosine(c).unwrap().unwrap();
            assert!(a.turns() <= Rational::HALF);
            assert_eq!(classify_rational_angle(a), NivenClass::RationalCos(c));
        }
    }

    #[test]
    fn surds_match_floating_cosine() {
        for p in 1..=48 {
            for m in 0..p {
                let a = RationalAngle::new(m, p).unwrap();
                if let Some(s) = cos_as_surd(a) {
                    let v = s.coefficient.to_f64() * (s.radicand as f64).sqrt();
                    assert!((v - a.cos_f64()).abs() < 1e-12, "{a}");
                }
            }
        }
        assert!(cos_as_surd(RationalAngle::new(1, 5).unwrap()).is_none());
        assert_eq!(
            cos_as_surd(RationalAngle::new(3, 8).unwrap()),
            Some(Surd {
                coefficient: r(-1, 2),
                radicand: 2
            })
        );
    }
}
