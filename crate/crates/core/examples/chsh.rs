//! CHSH from finite singlet ensembles: correlations, S and λ-support disjointness.

use invariant_set::experiments::{
    admissible_lambda_sets, chsh_analysis, nearest_tsirelson_cosine, tsirelson_gap,
    tsirelson_sizes, ChshConfig, Setting, SettingPair, CHSH_PAIRS,
};
use invariant_set::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = Rational::new(7, 10)?;
    let cfg = ChshConfig::full(CHSH_PAIRS[0], [-c, c, -c, -c], [40; 4])?;
    let ens = cfg.ensemble(CHSH_PAIRS[0])?;
    let counts = ens.counts();
    println!(
        "pair (0,0), cos = -7/10, 40 particles: n(++)={} n(--)={} n(+-)={} n(-+)={}",
        counts.up_up, counts.down_down, counts.up_down, counts.down_up
    );
    let first = ens.labels().next().expect("non-empty ensemble");
    println!(
        "label {first:?}: Alice {:?}, Bob {:?}",
        ens.alice_outcome(&first, Setting::Zero)?,
        ens.bob_outcome(&first, Setting::Zero)?
    );

    let rep = chsh_analysis(&cfg)?;
    for line in &rep.details {
        println!("{line}");
    }
    let sets = admissible_lambda_sets(&cfg);
    let a = SettingPair::new(Setting::Zero, Setting::Zero);
    let b = SettingPair::new(Setting::Zero, Setting::One);
    println!(
        "|Λ(0,0)| = {}, |Λ(0,1)| = {}",
        sets[&a].len(),
        sets[&b].len()
    );

    println!("\nnearest rational Tsirelson settings:");
    for p in [10u64, 100, 1_000, 10_000] {
        let r = nearest_tsirelson_cosine(p);
        let sizes = tsirelson_sizes(r);
        let cfg = ChshConfig::full(CHSH_PAIRS[0], [-r, r, -r, -r], sizes)?;
        let s = chsh_analysis(&cfg)?.chsh.expect("CHSH summary").s_value;
        println!(
            "  p = {p:>5}  r = {r:<10} S = {s:<12} |S - 2√2| = {:.3e}",
            tsirelson_gap(s)
        );
    }
    Ok(())
}
