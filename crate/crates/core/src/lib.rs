//! Exact simulation of a discretised qubit Hilbert space.
//!
//! Squared amplitudes are rationals `n/p` and phases are rational fractions
//! `m/p` of a turn. Because a rational angle has a rational cosine only for
//! cosines in `{0, ±1/2, ±1}`, a measurement context that fixes an angle's
//! cosine and a counterfactual context that needs the same angle as a phase
//! are almost never jointly satisfiable. This crate decides that question
//! exactly for Mach-Zehnder, sequential Stern-Gerlach and CHSH setups, and
//! provides the supporting pieces:
//!
//! - [`rational`], [`angle`], [`padic`]: exact rationals, rational angles and
//!   their Niven classification, p-adic valuation and the ultrametric on
//!   trajectory labels.
//! - [`bloch`]: discrete states `(p, n, m)`, the N×N orientation grid and
//!   nearest-point snapping.
//! - [`admissibility`]: rationality constraints and on/off-set verdicts.
//! - [`ensemble`]: bit-string ensembles, Born frequencies, ontic overlap.
//! - [`experiments`]: the real/counterfactual analyses, CHSH ensembles and
//!   the randomiser digit demonstration.
//! - [`sweep`] and [`cli`]: the tables and the `ist` command line.
//!
//! ## Examples
//!
//! One runnable example per capability lives in `crates/core/examples/`:
//!
//! ```bash
//! cargo run -p invariant-set --example niven
//! cargo run -p invariant-set --example mach_zehnder
//! cargo run -p invariant-set --example stern_gerlach
//! cargo run -p invariant-set --example chsh
//! cargo run -p invariant-set --example ensembles
//! cargo run -p invariant-set --example padic_randomiser
//! cargo run -p invariant-set --example bloch_grid
//! cargo run -p invariant-set --example sweeps
//! ```
//!
//! ```
//! use invariant_set::admissibility::AngleValue;
//! use invariant_set::experiments::{mach_zehnder_analysis, MzConfig, Setting};
//! use invariant_set::Rational;
//!
//! let cfg = MzConfig {
//!     phi: AngleValue::RationalCosine(Rational::new(3, 5)?),
//!     performed: Setting::One,
//! };
//! let report = mach_zehnder_analysis(&cfg)?;
//! assert!(report.real_verdict.is_on_set());
//! assert!(report.counterfactual_verdict.is_off_set());
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod admissibility;
pub mod angle;
pub mod bloch;
pub mod cli;
pub mod ensemble;
pub mod error;
pub mod experiments;
pub mod padic;
pub mod rational;
pub mod sweep;

pub use error::Error;
pub use rational::Rational;
