use serde::{Deserialize, Serialize};

use super::{ExperimentReport, Setting};
use crate::admissibility::{check, explain, AngleValue, ConstraintKind, ConstraintSet};
use crate::error::ExperimentError;

const PHI: &str = "phi";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MzConfig {
    pub phi: AngleValue,
    /// `X = 1`: both half-silvered mirrors in place. `X = 0`: which-way.
    pub performed: Setting,
}

/// `X = 1`: the state `cos(φ/2)|0⟩ + sin(φ/2)|1⟩` has squared amplitudes
/// `(1 ± cos φ)/2`, so `cos φ` must be rational.
pub fn interferometric_context(phi: AngleValue) -> Result<ConstraintSet, ExperimentError> {
    let mut cs = ConstraintSet::new();
    cs.declare(PHI, phi)?
        .require(ConstraintKind::CosineRational, PHI)?;
    Ok(cs)
}

/// `X = 0`: the state `(|1⟩ + i e^{iφ}|0⟩)/√2` carries phase `φ + 1/4` turn.
/// The quarter-turn offset is itself rational, so the phase is rational
/// exactly when `φ` is.
pub fn which_way_context(phi: AngleValue) -> Result<ConstraintSet, ExperimentError> {
    let mut cs = ConstraintSet::new();
    cs.declare(PHI, phi)?
        .require(ConstraintKind::AngleRational, PHI)?;
    Ok(cs)
}

fn context(setting: Setting, phi: AngleValue) -> Result<ConstraintSet, ExperimentError> {
    match setting {
        Setting::One => interferometric_context(phi),
        Setting::Zero => which_way_context(phi),
    }
}

fn setting_name(s: Setting) -> &'static str {
    match s {
        Setting::One => "X=1 (interferometric)",
        Setting::Zero => "X=0 (which-way)",
    }
}

/// Real verdict from the performed setting alone; counterfactual verdict
/// from both settings' constraints on the same `φ`.
pub fn mach_zehnder_analysis(cfg: &MzConfig) -> Result<ExperimentReport, ExperimentError> {
    if !cfg.phi.is_valued() {
        return Err(ExperimentError::Unvalued(PHI.into()));
    }
    let real = context(cfg.performed, cfg.phi)?;
    let other = context(cfg.performed.flipped(), cfg.phi)?;
    let counterfactual = real.union(&other)?;

    let real_verdict = check(&real);
    let counterfactual_verdict = check(&counterfactual);

    let mut details = vec![format!("phi: {}", cfg.phi)];
    details.extend(
        explain(&real_verdict)
            .into_iter()
            .map(|l| format!("real {}: {l}", setting_name(cfg.performed))),
    );
    details.extend(explain(&counterfactual_verdict).into_iter().map(|l| {
        format!(
            "counterfactual {} on the same particle: {l}",
            setting_name(cfg.performed.flipped())
        )
    }));
    Ok(ExperimentReport {
        real_verdict,
        counterfactual_verdict,
        details,
        chsh: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissibility::Verdict;
    use crate::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn run(phi: AngleValue, performed: Setting) -> ExperimentReport {
        mach_zehnder_analysis(&MzConfig { phi, performed }).unwrap()
    }

    #[test]
    fn rational_cosine_three_fifths() {
        let rep = run(AngleValue::RationalCosine(r(3, 5)), Setting::One);
        assert_eq!(rep.real_verdict, Verdict::OnSet);
        assert!(rep.counterfactual_verdict.is_off_set());
    }

    #[test]
    fn sixty_degrees_survives_both() {
        let rep = run(AngleValue::angle(r(1, 6)), Setting::One);
        assert_eq!(rep.real_verdict, Verdict::OnSet);
        assert_eq!(rep.counterfactual_verdict, Verdict::OnSet);
    }

    #[test]
    fn which_way_at_forty_five_degrees() {
        let rep = run(AngleValue::angle(r(1, 8)), Setting::Zero);
        assert_eq!(rep.real_verdict, Verdict::OnSet);
        assert!(rep.counterfactual_verdict.is_off_set());
    }

    #[test]
    fn unvalued_phi_rejected() {
        let err = mach_zehnder_analysis(&MzConfig {
            phi: AngleValue::Unvalued,
            performed: Setting::One,
        })
        .unwrap_err();
        assert_eq!(err, ExperimentError::Unvalued("phi".into()));
    }

    #[test]
    fn details_name_both_settings() {
        let rep = run(AngleValue::RationalCosine(r(3, 5)), Setting::One);
        let text = rep.details.join("\n");
        assert!(text.contains("real X=1"));
        assert!(text.contains("counterfactual X=0"));
    }
}
