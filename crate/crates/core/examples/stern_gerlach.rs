//! Sequential Stern-Gerlach devices: the real order against the swapped one.

use invariant_set::admissibility::AngleValue;
use invariant_set::experiments::{sequential_sg_analysis, SgConfig, SgOrder};
use invariant_set::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (
            "3/5 (rational cosine)",
            AngleValue::cosine(Rational::new(3, 5)?)?,
        ),
        (
            "2/5 (not orthogonal)",
            AngleValue::cosine(Rational::new(2, 5)?)?,
        ),
        (
            "1/4 turn (orthogonal)",
            AngleValue::angle(Rational::new(1, 4)?),
        ),
        ("1/5 turn", AngleValue::angle(Rational::new(1, 5)?)),
    ];
    for (name, angle23) in cases {
        let rep = sequential_sg_analysis(&SgConfig {
            angle23,
            order: SgOrder::TwoThenThree,
        })?;
        println!("angle23 = {name}");
        for line in rep.details.iter().skip(1) {
            println!("  {line}");
        }
    }
    Ok(())
}
