//! Hilbert states as finite ensembles of ontic states.
//!
//! A state with squared amplitude `n/p` on `|a⟩` corresponds to a length-`p`
//! string over `{a, b}`; each position is one ontic state, and the symbol
//! there is the detector eigenstate that trajectory ends in. The hidden
//! variable is the position, not the string, so one position can be shared
//! by many strings (many Hilbert states).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bloch::{DiscreteState, Eigenstate};
use crate::error::EnsembleError;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symbol {
    A,
    B,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::A => 'a',
            Symbol::B => 'b',
        }
    }
}

impl TryFrom<char> for Symbol {
    type Error = EnsembleError;
    fn try_from(c: char) -> Result<Self, Self::Error> {
        match c {
            'a' => Ok(Symbol::A),
            'b' => Ok(Symbol::B),
            other => Err(EnsembleError::UnknownSymbol(other)),
        }
    }
}

impl From<Symbol> for Eigenstate {
    fn from(s: Symbol) -> Self {
        match s {
            Symbol::A => Eigenstate::Zero,
            Symbol::B => Eigenstate::One,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    symbols: Vec<Symbol>,
}

impl BitString {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self, EnsembleError> {
        if symbols.is_empty() {
            return Err(EnsembleError::Empty);
        }
        Ok(BitString { symbols })
    }

    /// String length, i.e. the discretisation parameter `p`.
    pub fn p(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn count(&self, symbol: Symbol) -> usize {
        self.symbols.iter().filter(|&&s| s == symbol).count()
    }

    /// The ontic labels this string is made of, in position order.
    pub fn labels(&self) -> impl Iterator<Item = OnticLabel> + '_ {
        self.symbols
            .iter()
            .enumerate()
            .map(|(position, &outcome)| OnticLabel { position, outcome })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = EnsembleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let symbols = s
            .chars()
            .map(Symbol::try_from)
            .collect::<Result<Vec<_>, _>>()?;
        BitString::new(symbols)
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A hidden variable: a position on the string and the outcome recorded there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OnticLabel {
    pub position: usize,
    pub outcome: Symbol,
}

impl OnticLabel {
    /// The label at `position` of `owner`.
    pub fn of(owner: &BitString, position: usize) -> Result<Self, EnsembleError> {
        Ok(OnticLabel {
            position,
            outcome: read_outcome(owner, position)?,
        })
    }
}

/// Canonical ensemble: `n` copies of `a` followed by `p − n` copies of `b`.
pub fn ensemble_for_state(state: &DiscreteState) -> BitString {
    let n = state.n() as usize;
    let p = state.p() as usize;
    let symbols = std::iter::repeat_n(Symbol::A, n)
        .chain(std::iter::repeat_n(Symbol::B, p - n))
        .collect();
    BitString { symbols }
}

/// The canonical strings for `n = 0..=p`, in order of `n`.
pub fn canonical_family(p: u64) -> Result<Vec<BitString>, crate::error::GridError> {
    (0..=p)
        .map(|n| DiscreteState::new(p, n, 0).map(|s| ensemble_for_state(&s)))
        .collect()
}

pub fn outcome_frequency(bs: &BitString, symbol: Symbol) -> Rational {
    Rational::new(bs.count(symbol) as i64, bs.p() as i64).expect("strings are non-empty")
}

pub fn read_outcome(bs: &BitString, position: usize) -> Result<Symbol, EnsembleError> {
    bs.symbols
        .get(position)
        .copied()
        .ok_or(EnsembleError::PositionOutOfRange {
            position,
            len: bs.p(),
        })
}

/// Members of `family` in which the label's position carries the label's outcome.
pub fn epistemic_overlap<'a>(
    label: &OnticLabel,
    family: &'a [BitString],
) -> Result<Vec<&'a BitString>, EnsembleError> {
    let Some(first) = family.first() else {
        return Ok(Vec::new());
    };
    let p = first.p();
    if let Some(bad) = family.iter().find(|s| s.p() != p) {
        return Err(EnsembleError::LengthMismatch(p, bad.p()));
    }
    if label.position >= p {
        return Err(EnsembleError::PositionOutOfRange {
            position: label.position,
            len: p,
        });
    }
    Ok(family
        .iter()
        .filter(|s| s.symbols[label.position] == label.outcome)
        .collect())
}
