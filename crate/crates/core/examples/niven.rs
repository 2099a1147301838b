//! Which rational angles have rational cosines, and the converse lookup.

use invariant_set::angle::{
    classify_rational_angle, niven_cosines, rational_angle_from_cosine, NivenClass, RationalAngle,
};
use invariant_set::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("rational cosines of rational angles, p <= 24:");
    for p in 1..=24 {
        for m in 0..p {
            let a = RationalAngle::new(m, p)?;
            if a.turns().denominator() != p {
                continue;
            }
            if let NivenClass::RationalCos(c) = classify_rational_angle(a) {
                println!("  {:>10}  cos = {c}", a.to_string());
            }
        }
    }

    println!("\nangle from cosine:");
    for c in ["1/2", "-1", "0", "3/5", "-7/10", "1/3"] {
        let c: Rational = c.parse()?;
        match rational_angle_from_cosine(c)? {
            Some(a) => println!("  cos = {c:>5}  ->  {a}"),
            None => println!("  cos = {c:>5}  ->  irrational fraction of a turn"),
        }
    }

    let list: Vec<String> = niven_cosines().iter().map(|c| c.to_string()).collect();
    println!("\nthe complete list: {{{}}}", list.join(", "));
    Ok(())
}
