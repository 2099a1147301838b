//! p-adic distances between trajectory labels, and a randomiser keyed to a deep digit.

use invariant_set::experiments::randomiser_digit_demo;
use invariant_set::padic::{
    onset_membership, padic_valuation, trajectory_distance, TrajectoryLabel,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (x, p) in [(9, 3), (10, 5), (0, 7), (-250, 5)] {
        println!("v_{p}({x}) = {:?}", padic_valuation(x, p)?);
    }

    let a = TrajectoryLabel::new(2, vec![1, 0, 1])?;
    let b = TrajectoryLabel::new(2, vec![0, 0, 1])?;
    println!("\nd({a}, {b}) = {}", trajectory_distance(&a, &b)?);

    println!("\nbase 10, 7 digits, all zero (on the set); flip one digit:");
    let label = TrajectoryLabel::zeros(10, 7)?;
    for i in [0, 3, 6] {
        let rep = randomiser_digit_demo(&label, i)?;
        println!(
            "  digit {i}: digit alone moves {:>7}, crossing to {} moves {}",
            rep.digit_only_distance.to_string(),
            rep.flipped,
            rep.distance
        );
        assert_eq!(rep.revert(), label);
    }

    // a million digits: the flipped digit sits far down, the gap does not shrink
    let k = 1_000_000;
    let deep = TrajectoryLabel::zeros(10, k)?;
    let rep = randomiser_digit_demo(&deep, k - 1)?;
    println!(
        "\nk = {k}: flipping the last digit alone moves 10^{:?}, off the set it moves 10^{:?}",
        rep.digit_only_distance.exponent().unwrap_or(0),
        rep.distance.exponent().unwrap_or(0)
    );
    println!(
        "on set before: {}, after: {}",
        onset_membership(&rep.original),
        onset_membership(&rep.flipped)
    );
    Ok(())
}
