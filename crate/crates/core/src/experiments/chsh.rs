//! CHSH with setting-tagged hidden variables.
//!
//! Each realised setting pair `(X, Y)` gets its own labelled ensemble. A label
//! carries its pair and that pair's relative cosine, so the λ-supports of
//! `(X, Y)` and `(X, Y′)` never intersect: a λ drawn under one pair has zero
//! weight under the other. Within an ensemble, outcome pairs follow the
//! singlet counts `n(++) = n(−−) = size·(1 − c)/4`,
//! `n(+−) = n(−+) = size·(1 + c)/4`, which makes `E = −c` exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::SQRT_2;

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use super::{ChshSummary, ExperimentReport, Setting};
use crate::admissibility::{check, explain, AngleValue, ConstraintKind, ConstraintSet};
use crate::error::ExperimentError;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SettingPair {
    pub x: Setting,
    pub y: Setting,
}

impl SettingPair {
    pub const fn new(x: Setting, y: Setting) -> Self {
        SettingPair { x, y }
    }

    fn missing(self) -> ExperimentError {
        ExperimentError::MissingPair {
            x: self.x.as_u8(),
            y: self.y.as_u8(),
        }
    }
}

/// `(a, b)`, `(a, b′)`, `(a′, b)`, `(a′, b′)`.
pub const CHSH_PAIRS: [SettingPair; 4] = [
    SettingPair::new(Setting::Zero, Setting::Zero),
    SettingPair::new(Setting::Zero, Setting::One),
    SettingPair::new(Setting::One, Setting::Zero),
    SettingPair::new(Setting::One, Setting::One),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Spin {
    #[serde(rename = "+")]
    Up,
    #[serde(rename = "-")]
    Down,
}

impl Spin {
    pub fn value(self) -> i64 {
        match self {
            Spin::Up => 1,
            Spin::Down => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingletCounts {
    pub up_up: u64,
    pub down_down: u64,
    pub up_down: u64,
    pub down_up: u64,
}

impl SingletCounts {
    pub fn total(&self) -> u64 {
        self.up_up + self.down_down + self.up_down + self.down_up
    }
}

fn quarter_count(size: u64, weight: Rational) -> Option<u64> {
    let v = Rational::integer(size as i64) * weight * Rational::new(1, 4).expect("nonzero");
    v.is_integer().then(|| v.numerator() as u64)
}

/// Singlet outcome-pair counts; `size·(1 ± c)/4` must both be integers.
pub fn singlet_counts(cosine: Rational, size: u64) -> Result<SingletCounts, ExperimentError> {
    if cosine.abs() > 1 {
        return Err(crate::error::NumberError::CosineOutOfRange(cosine).into());
    }
    if size == 0 {
        return Err(ExperimentError::ZeroSize);
    }
    let same = quarter_count(size, Rational::ONE - cosine);
    let opposite = quarter_count(size, Rational::ONE + cosine);
    match (same, opposite) {
        (Some(same), Some(opposite)) => Ok(SingletCounts {
            up_up: same,
            down_down: same,
            up_down: opposite,
            down_up: opposite,
        }),
        _ => Err(ExperimentError::Integrality { cosine, size }),
    }
}

/// `E = (n(++) + n(−−) − n(+−) − n(−+)) / size`, equal to `−cosine`.
pub fn chsh_correlation(cosine: Rational, size: u64) -> Result<Rational, ExperimentError> {
    let c = singlet_counts(cosine, size)?;
    let agree = (c.up_up + c.down_down) as i64;
    let disagree = (c.up_down + c.down_up) as i64;
    Ok(Rational::new(agree - disagree, size as i64)?)
}

/// `S = E(a,b) − E(a,b′) + E(a′,b) + E(a′,b′)`.
pub fn chsh_s_value(cosines: [Rational; 4], sizes: [u64; 4]) -> Result<Rational, ExperimentError> {
    let e = |i: usize| chsh_correlation(cosines[i], sizes[i]);
    Ok(e(0)? - e(1)? + e(2)? + e(3)?)
}

/// A hidden variable for one CHSH run: it belongs to exactly one setting pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChshLambda {
    pub pair: SettingPair,
    pub cosine: Rational,
    pub index: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChshEnsemble {
    pair: SettingPair,
    cosine: Rational,
    counts: SingletCounts,
}

impl ChshEnsemble {
    pub fn new(pair: SettingPair, cosine: Rational, size: u64) -> Result<Self, ExperimentError> {
        Ok(ChshEnsemble {
            pair,
            cosine,
            counts: singlet_counts(cosine, size)?,
        })
    }

    pub fn pair(&self) -> SettingPair {
        self.pair
    }

    pub fn size(&self) -> u64 {
        self.counts.total()
    }

    pub fn counts(&self) -> SingletCounts {
        self.counts
    }

    pub fn labels(&self) -> impl Iterator<Item = ChshLambda> + '_ {
        (0..self.size()).map(move |index| ChshLambda {
            pair: self.pair,
            cosine: self.cosine,
            index,
        })
    }

    /// Outcomes `(Alice, Bob)` for a label of this ensemble.
    ///
    /// Labels are laid out as `++` block, `−−` block, `+−` block, `−+` block.
    pub fn outcomes(&self, lambda: &ChshLambda) -> Result<(Spin, Spin), ExperimentError> {
        if lambda.pair != self.pair || lambda.cosine != self.cosine {
            return Err(ExperimentError::ForeignLabel {
                label_x: lambda.pair.x.as_u8(),
                label_y: lambda.pair.y.as_u8(),
                x: self.pair.x.as_u8(),
                y: self.pair.y.as_u8(),
            });
        }
        let c = &self.counts;
        let i = lambda.index;
        let bounds = [
            (c.up_up, (Spin::Up, Spin::Up)),
            (c.down_down, (Spin::Down, Spin::Down)),
            (c.up_down, (Spin::Up, Spin::Down)),
            (c.down_up, (Spin::Down, Spin::Up)),
        ];
        let mut start = 0;
        for (len, outcome) in bounds {
            if i < start + len {
                return Ok(outcome);
            }
            start += len;
        }
        Err(ExperimentError::LabelOutOfRange {
            index: i,
            size: self.size(),
        })
    }

    /// Alice's result is fixed by `λ` and her own setting `x`.
    pub fn alice_outcome(&self, lambda: &ChshLambda, x: Setting) -> Result<Spin, ExperimentError> {
        if x != lambda.pair.x {
            return Err(ExperimentError::ForeignLabel {
                label_x: lambda.pair.x.as_u8(),
                label_y: lambda.pair.y.as_u8(),
                x: x.as_u8(),
                y: lambda.pair.y.as_u8(),
            });
        }
        Ok(self.outcomes(lambda)?.0)
    }

    /// Bob's result is fixed by `λ` and his own setting `y`.
    pub fn bob_outcome(&self, lambda: &ChshLambda, y: Setting) -> Result<Spin, ExperimentError> {
        if y != lambda.pair.y {
            return Err(ExperimentError::ForeignLabel {
                label_x: lambda.pair.x.as_u8(),
                label_y: lambda.pair.y.as_u8(),
                x: lambda.pair.x.as_u8(),
                y: y.as_u8(),
            });
        }
        Ok(self.outcomes(lambda)?.1)
    }

    /// Fraction of labels on which Alice records `+`.
    pub fn alice_marginal(&self) -> Rational {
        let c = &self.counts;
        Rational::new((c.up_up + c.up_down) as i64, self.size() as i64).expect("size > 0")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChshConfig {
    settings: SettingPair,
    relative_cosines: BTreeMap<SettingPair, Rational>,
    ensemble_sizes: BTreeMap<SettingPair, u64>,
}

impl ChshConfig {
    /// Every pair with a cosine needs a size making its singlet counts integral.
    pub fn new(
        settings: SettingPair,
        relative_cosines: BTreeMap<SettingPair, Rational>,
        ensemble_sizes: BTreeMap<SettingPair, u64>,
    ) -> Result<Self, ExperimentError> {
        for (pair, &cosine) in &relative_cosines {
            let size = *ensemble_sizes.get(pair).ok_or_else(|| pair.missing())?;
            singlet_counts(cosine, size)?;
        }
        Ok(ChshConfig {
            settings,
            relative_cosines,
            ensemble_sizes,
        })
    }

    /// All four pairs, cosines and sizes in [`CHSH_PAIRS`] order.
    pub fn full(
        settings: SettingPair,
        cosines: [Rational; 4],
        sizes: [u64; 4],
    ) -> Result<Self, ExperimentError> {
        Self::new(
            settings,
            CHSH_PAIRS.into_iter().zip(cosines).collect(),
            CHSH_PAIRS.into_iter().zip(sizes).collect(),
        )
    }

    pub fn settings(&self) -> SettingPair {
        self.settings
    }

    pub fn cosine(&self, pair: SettingPair) -> Option<Rational> {
        self.relative_cosines.get(&pair).copied()
    }

    pub fn size(&self, pair: SettingPair) -> Option<u64> {
        self.ensemble_sizes.get(&pair).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = SettingPair> + '_ {
        self.relative_cosines.keys().copied()
    }

    pub fn ensemble(&self, pair: SettingPair) -> Result<ChshEnsemble, ExperimentError> {
        let cosine = self.cosine(pair).ok_or_else(|| pair.missing())?;
        let size = self.size(pair).ok_or_else(|| pair.missing())?;
        ChshEnsemble::new(pair, cosine, size)
    }

    fn four(&self) -> Result<([Rational; 4], [u64; 4]), ExperimentError> {
        let mut cosines = [Rational::ZERO; 4];
        let mut sizes = [0; 4];
        for (i, pair) in CHSH_PAIRS.into_iter().enumerate() {
            cosines[i] = self.cosine(pair).ok_or_else(|| pair.missing())?;
            sizes[i] = self.size(pair).ok_or_else(|| pair.missing())?;
        }
        Ok((cosines, sizes))
    }
}

/// The support of `ρ(λ | X Y)` for every configured pair.
pub fn admissible_lambda_sets(cfg: &ChshConfig) -> BTreeMap<SettingPair, BTreeSet<ChshLambda>> {
    cfg.pairs()
        .map(|pair| {
            let ensemble = cfg.ensemble(pair).expect("validated on construction");
            (pair, ensemble.labels().collect())
        })
        .collect()
}

fn supports_disjoint(sets: &BTreeMap<SettingPair, BTreeSet<ChshLambda>>) -> bool {
    let pairs: Vec<_> = sets.keys().copied().collect();
    pairs.iter().enumerate().all(|(i, a)| {
        pairs[i + 1..]
            .iter()
            .filter(|b| (a.x == b.x) != (a.y == b.y))
            .all(|b| sets[a].is_disjoint(&sets[b]))
    })
}

/// Correlations, S, support disjointness, and verdicts for the realised pair
/// `(X, Y)` against the counterfactual `(X, Y′)` on the same λ.
///
/// The realised relative angle only needs a rational cosine. Holding λ (and
/// so Alice's exact orientation) fixed while Bob rotates by a rational phase
/// additionally requires that angle to be a rational fraction of a turn.
pub fn chsh_analysis(cfg: &ChshConfig) -> Result<ExperimentReport, ExperimentError> {
    let (cosines, sizes) = cfg.four()?;
    let correlations = cosines
        .iter()
        .zip(sizes)
        .map(|(&c, s)| chsh_correlation(c, s))
        .collect::<Result<Vec<_>, _>>()?;
    let s_value = chsh_s_value(cosines, sizes)?;
    let sets = admissible_lambda_sets(cfg);
    let disjoint = supports_disjoint(&sets);

    let real_pair = cfg.settings();
    let cf_pair = SettingPair::new(real_pair.x, real_pair.y.flipped());
    let name = format!("theta_{}{}", real_pair.x, real_pair.y);
    let cosine = cfg.cosine(real_pair).ok_or_else(|| real_pair.missing())?;

    let mut real = ConstraintSet::new();
    real.declare(name.as_str(), AngleValue::RationalCosine(cosine))?
        .require(ConstraintKind::CosineRational, &name)?;
    let mut counterfactual = real.clone();
    counterfactual.require(ConstraintKind::AngleRational, &name)?;
    let real_verdict = check(&real);
    let counterfactual_verdict = check(&counterfactual);

    let mut details = vec![
        format!(
            "realised settings (X, Y) = ({}, {})",
            real_pair.x, real_pair.y
        ),
        format!("S = {s_value} ({})", s_value.to_f64()),
    ];
    details.extend(
        explain(&real_verdict)
            .into_iter()
            .map(|l| format!("real ({}, {}): {l}", real_pair.x, real_pair.y)),
    );
    details.extend(explain(&counterfactual_verdict).into_iter().map(|l| {
        format!(
            "counterfactual ({}, {}) on the same λ: {l}",
            cf_pair.x, cf_pair.y
        )
    }));
    let shared = sets[&real_pair].intersection(&sets[&cf_pair]).count();
    details.push(format!(
        "λ-supports of ({}, {}) and ({}, {}) share {shared} labels",
        real_pair.x, real_pair.y, cf_pair.x, cf_pair.y
    ));

    Ok(ExperimentReport {
        real_verdict,
        counterfactual_verdict,
        details,
        chsh: Some(ChshSummary {
            correlations,
            s_value,
            disjoint,
        }),
    })
}

/// The multiple of `1/p` nearest to `1/√2`.
pub fn nearest_tsirelson_cosine(p: u64) -> Rational {
    let p = p as i128;
    let two_p_sq = 2 * p * p;
    // floor(p/√2) = floor(√(p²/2))
    let n0 = (p * p / 2).sqrt();
    // p/√2 lies above n0 + 1/2 exactly when (2·n0 + 1)² < 2p²
    let n = if (2 * n0 + 1).pow(2) < two_p_sq {
        n0 + 1
    } else {
        n0
    };
    Rational::new(n as i64, p as i64).expect("p > 0")
}

/// Ensemble sizes making the singlet counts integral for cosines `±c`.
pub fn tsirelson_sizes(c: Rational) -> [u64; 4] {
    [4 * c.denominator() as u64; 4]
}

/// `|S − 2√2|`, evaluated as `|S² − 8| / (S + 2√2)` so the exact rational
/// part carries the cancellation.
pub fn tsirelson_gap(s: Rational) -> f64 {
    let n = s.numerator() as i128;
    let d = s.denominator() as i128;
    if n <= 0 {
        return (s.to_f64() - 2.0 * SQRT_2).abs();
    }
    let num = (n * n - 8 * d * d).abs() as f64;
    let den = (d * d) as f64;
    (num / den) / (s.to_f64() + 2.0 * SQRT_2)
}
