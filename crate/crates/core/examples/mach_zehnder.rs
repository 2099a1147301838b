//! Mach-Zehnder: the performed setting against the other one, for the same particle.

use invariant_set::admissibility::AngleValue;
use invariant_set::experiments::{mach_zehnder_analysis, MzConfig, Setting};
use invariant_set::Rational;

fn show(phi: AngleValue, performed: Setting) -> Result<(), Box<dyn std::error::Error>> {
    let rep = mach_zehnder_analysis(&MzConfig { phi, performed })?;
    println!(
        "{:<15} performed X={performed}: real {:<7} counterfactual {}",
        phi.to_string(),
        rep.real_verdict.label(),
        rep.counterfactual_verdict.label()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let three_fifths = AngleValue::cosine(Rational::new(3, 5)?)?;
    let rep = mach_zehnder_analysis(&MzConfig {
        phi: three_fifths,
        performed: Setting::One,
    })?;
    for line in &rep.details {
        println!("{line}");
    }
    println!();

    show(three_fifths, Setting::One)?;
    show(AngleValue::cosine(Rational::new(1, 2)?)?, Setting::One)?;
    show(AngleValue::angle(Rational::new(1, 7)?), Setting::Zero)?;
    show(AngleValue::angle(Rational::new(1, 4)?), Setting::Zero)?;
    Ok(())
}
