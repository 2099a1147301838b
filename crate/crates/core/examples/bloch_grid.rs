//! The N×N Bloch grid: exact directions, snapping, and operator-dependent snap deltas.

use std::f64::consts::{FRAC_PI_2, PI};

use invariant_set::bloch::{
    snap_delta, snap_delta_counterexample, snap_to_grid, state_between, ContinuousDirection,
    GridDirection,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 4;
    println!("N = {n} grid:");
    for g in GridDirection::all(n)? {
        println!(
            "  (j={}, k={})  cos θ = {:>4}  φ = {}",
            g.j(),
            g.k(),
            g.cos_theta().to_string(),
            g.longitude()
        );
    }

    let d = ContinuousDirection::new(FRAC_PI_2 + 0.01, 0.0)?;
    let g = snap_to_grid(&d, n)?;
    println!(
        "\n(π/2 + 0.01, 0) snaps to (j={}, k={}) with delta {:.6} rad",
        g.j(),
        g.k(),
        snap_delta(&d, n)?
    );

    for n in [2, 4, 10, 20] {
        let (a, b) = snap_delta_counterexample(n)?;
        println!(
            "N = {n:>2}: deltas {:.6} and {:.6} rad differ",
            snap_delta(&a, n)?,
            snap_delta(&b, n)?
        );
    }

    let n = 24;
    let device = GridDirection::new(n, 12, 0)?;
    let prep = GridDirection::new(n, 8, 3)?;
    match state_between(&device, &prep, 48)? {
        Some(s) => println!(
            "\nprepared {prep:?} seen from {device:?}: (p, n, m) = ({}, {}, {})",
            s.p(),
            s.n(),
            s.m()
        ),
        None => println!("\nno discrete state at p = 48"),
    }
    let far = ContinuousDirection::new(PI, 0.0)?;
    println!("south pole snaps to {:?}", snap_to_grid(&far, n)?);
    Ok(())
}
