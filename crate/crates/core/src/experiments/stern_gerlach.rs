use serde::{Deserialize, Serialize};

use super::ExperimentReport;
use crate::admissibility::{check, explain, AngleValue, ConstraintKind, ConstraintSet};
use crate::error::ExperimentError;

const ANGLE: &str = "angle23";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SgOrder {
    #[serde(rename = "2,3")]
    TwoThenThree,
    #[serde(rename = "3,2")]
    ThreeThenTwo,
}

impl SgOrder {
    pub fn swapped(self) -> Self {
        match self {
            SgOrder::TwoThenThree => SgOrder::ThreeThenTwo,
            SgOrder::ThreeThenTwo => SgOrder::TwoThenThree,
        }
    }

    fn label(self) -> &'static str {
        match self {
            SgOrder::TwoThenThree => "SG2 then SG3",
            SgOrder::ThreeThenTwo => "SG3 then SG2",
        }
    }
}

/// `angle23` is the relative angle between the exact SG2 and SG3
/// orientations. Nothing requires it to be a right angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SgConfig {
    pub angle23: AngleValue,
    pub order: SgOrder,
}

/// The real order needs a rational squared amplitude of the intermediate
/// eigenstate along the second device (rational cosine). Swapping the devices
/// with the hidden variable fixed additionally needs the relative angle to be
/// a rational phase seen from the swapped frame.
pub fn sequential_sg_analysis(cfg: &SgConfig) -> Result<ExperimentReport, ExperimentError> {
    if !cfg.angle23.is_valued() {
        return Err(ExperimentError::Unvalued(ANGLE.into()));
    }
    let mut real = ConstraintSet::new();
    real.declare(ANGLE, cfg.angle23)?
        .require(ConstraintKind::CosineRational, ANGLE)?;
    let mut swapped = real.clone();
    swapped.require(ConstraintKind::AngleRational, ANGLE)?;

    let real_verdict = check(&real);
    let counterfactual_verdict = check(&swapped);

    let mut details = vec![format!("angle23: {}", cfg.angle23)];
    details.extend(
        explain(&real_verdict)
            .into_iter()
            .map(|l| format!("real order {}: {l}", cfg.order.label())),
    );
    details.extend(explain(&counterfactual_verdict).into_iter().map(|l| {
        format!(
            "swapped order {} with the hidden variable fixed: {l}",
            cfg.order.swapped().label()
        )
    }));
    Ok(ExperimentReport {
        real_verdict,
        counterfactual_verdict,
        details,
        chsh: None,
    })
}
