//! Parameter sweeps behind the plot-ready CSV tables.

use serde::{Deserialize, Serialize};

use crate::admissibility::AngleValue;
use crate::error::{Error, NumberError};
use crate::experiments::{
    chsh_s_value, mach_zehnder_analysis, nearest_tsirelson_cosine, tsirelson_gap, tsirelson_sizes,
    MzConfig, Setting,
};
use crate::Rational;

/// Mach-Zehnder phases with `cos φ = n/p`, `n = −p..=p`, that survive both
/// settings on the same particle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MzExclusionRow {
    pub p: u64,
    pub admissible: u64,
    pub total: u64,
    pub fraction: Rational,
    /// `5 / (2p + 1)`.
    pub bound: Rational,
}

pub fn mz_exclusion(p: u64) -> Result<MzExclusionRow, Error> {
    if p == 0 {
        return Err(NumberError::ZeroDenominator.into());
    }
    let p_i = p as i64;
    let mut admissible = 0;
    for n in -p_i..=p_i {
        let cfg = MzConfig {
            phi: AngleValue::RationalCosine(Rational::new(n, p_i)?),
            performed: Setting::One,
        };
        if mach_zehnder_analysis(&cfg)?
            .counterfactual_verdict
            .is_on_set()
        {
            admissible += 1;
        }
    }
    let total = 2 * p + 1;
    Ok(MzExclusionRow {
        p,
        admissible,
        total,
        fraction: Rational::new(admissible as i64, total as i64)?,
        bound: Rational::new(5, total as i64)?,
    })
}

/// CHSH at cosines `∓r` with `r` the multiple of `1/p` nearest `1/√2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TsirelsonRow {
    pub p: u64,
    pub cosine: Rational,
    pub size: u64,
    pub s_value: Rational,
    pub gap: f64,
    /// `4 / p`.
    pub bound: Rational,
}

pub fn chsh_tsirelson(p: u64) -> Result<TsirelsonRow, Error> {
    if p == 0 {
        return Err(NumberError::ZeroDenominator.into());
    }
    let r = nearest_tsirelson_cosine(p);
    let sizes = tsirelson_sizes(r);
    let s_value = chsh_s_value([-r, r, -r, -r], sizes)?;
    Ok(TsirelsonRow {
        p,
        cosine: r,
        size: sizes[0],
        s_value,
        gap: tsirelson_gap(s_value),
        bound: Rational::new(4, p as i64)?,
    })
}
