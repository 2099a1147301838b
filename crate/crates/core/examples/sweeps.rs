//! The exclusion and Tsirelson tables as plain rows.

use invariant_set::sweep::{chsh_tsirelson, mz_exclusion};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("p, admissible, total, fraction, bound 5/(2p+1)");
    for p in [101, 360, 1009, 10007] {
        let r = mz_exclusion(p)?;
        println!(
            "{}, {}, {}, {}, {}",
            r.p, r.admissible, r.total, r.fraction, r.bound
        );
    }

    println!("\np, cosine, S, |S - 2√2|, bound 4/p");
    for p in [10, 100, 1_000, 10_000, 100_000] {
        let r = chsh_tsirelson(p)?;
        println!(
            "{}, {}, {}, {:.6e}, {}",
            r.p, r.cosine, r.s_value, r.gap, r.bound
        );
    }
    Ok(())
}
