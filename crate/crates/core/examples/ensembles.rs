//! Bit-string ensembles: Born frequencies and how far one ontic label pins down the state.

use invariant_set::bloch::{born_probability, DiscreteState, Eigenstate};
use invariant_set::ensemble::{
    canonical_family, ensemble_for_state, epistemic_overlap, outcome_frequency, OnticLabel, Symbol,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let state = DiscreteState::new(8, 4, 0)?;
    let string = ensemble_for_state(&state);
    println!(
        "(p, n, m) = (8, 4, 0) -> {string}: frequency of a = {}, Born P0 = {}",
        outcome_frequency(&string, Symbol::A),
        born_probability(&state, Eigenstate::Zero)
    );

    let family = canonical_family(8)?;
    println!("\noverlap of each label of {string} with the family n = 0..8:");
    for position in 0..string.p() {
        let label = OnticLabel::of(&string, position)?;
        let compatible: Vec<String> = epistemic_overlap(&label, &family)?
            .iter()
            .map(|s| s.to_string())
            .collect();
        println!(
            "  ({position}, {}) in {} strings",
            label.outcome.as_char(),
            compatible.len()
        );
    }

    println!("\nlabels held by a single string of the family:");
    for s in &family {
        for label in s.labels() {
            if epistemic_overlap(&label, &family)?.len() == 1 {
                println!(
                    "  ({}, {}) only in {s}",
                    label.position,
                    label.outcome.as_char()
                );
            }
        }
    }
    Ok(())
}
