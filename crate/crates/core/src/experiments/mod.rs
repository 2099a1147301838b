//! Real-versus-counterfactual analyses of the three experiment families.
//!
//! Each analysis compiles the real measurement context into a
//! [`ConstraintSet`](crate::admissibility::ConstraintSet), compiles the
//! counterfactual context with the particle's hidden variable held fixed
//! (the same angle value carried into the other setting), and decides both
//! with [`check`](crate::admissibility::check).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::admissibility::Verdict;
use crate::Rational;

mod chsh;
mod mach_zehnder;
mod randomiser;
mod stern_gerlach;

pub use chsh::{
    admissible_lambda_sets, chsh_analysis, chsh_correlation, chsh_s_value,
    nearest_tsirelson_cosine, singlet_counts, tsirelson_gap, tsirelson_sizes, ChshConfig,
    ChshEnsemble, ChshLambda, SettingPair, SingletCounts, Spin, CHSH_PAIRS,
};
pub use mach_zehnder::{
    interferometric_context, mach_zehnder_analysis, which_way_context, MzConfig,
};
pub use randomiser::{randomiser_digit_demo, RandomiserReport};
pub use stern_gerlach::{sequential_sg_analysis, SgConfig, SgOrder};

/// A binary apparatus setting (`X` or `Y`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Setting {
    Zero,
    One,
}

impl Setting {
    pub fn flipped(self) -> Self {
        match self {
            Setting::Zero => Setting::One,
            Setting::One => Setting::Zero,
        }
    }

    pub fn as_u8(self) -> u8 {
        self.into()
    }
}

impl From<Setting> for u8 {
    fn from(s: Setting) -> u8 {
        match s {
            Setting::Zero => 0,
            Setting::One => 1,
        }
    }
}

impl TryFrom<u8> for Setting {
    type Error = String;
    fn try_from(v: u8) -> Result<Self, Self::Error> {
        match v {
            0 => Ok(Setting::Zero),
            1 => Ok(Setting::One),
            other => Err(format!("setting must be 0 or 1, got {other}")),
        }
    }
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// CHSH correlations and the resulting S value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChshSummary {
    /// `E(x, y)` in the order (0,0), (0,1), (1,0), (1,1).
    pub correlations: Vec<Rational>,
    pub s_value: Rational,
    /// Whether the λ-supports of setting pairs that differ in one setting are disjoint.
    pub disjoint: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub real_verdict: Verdict,
    pub counterfactual_verdict: Verdict,
    pub details: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chsh: Option<ChshSummary>,
}
