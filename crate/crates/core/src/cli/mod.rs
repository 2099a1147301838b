//! The `ist` command line: argument parsing, dispatch to the library and
//! report emission.
//!
//! Exit codes: 0 for any completed analysis (an off-set verdict included),
//! 2 for invalid arguments, 3 when the library rejects the input as violating
//! a precondition, 1 for I/O failures.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::admissibility::AngleValue;
use crate::angle::{classify_rational_angle, rational_angle_from_cosine, RationalAngle};
use crate::bloch::{
    born_probability, snap_delta, snap_delta_counterexample, snap_to_grid, ContinuousDirection,
    DiscreteState, Eigenstate,
};
use crate::ensemble::{ensemble_for_state, outcome_frequency, Symbol};
use crate::experiments::{
    chsh_analysis, mach_zehnder_analysis, randomiser_digit_demo, sequential_sg_analysis,
    ChshConfig, ExperimentReport, MzConfig, SettingPair, SgConfig, SgOrder,
};
use crate::padic::{onset_membership, padic_valuation, trajectory_distance, TrajectoryLabel};
use crate::sweep::{chsh_tsirelson, mz_exclusion};
use crate::Rational;

mod report;

pub use report::{decimal12, Report, ReportResult, SnapWitness, Verdicts};

pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

const DEFAULT_P: u64 = 1009;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Precondition(#[from] crate::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Precondition(_) => EXIT_PRECONDITION,
            CliError::Io { .. } => EXIT_INTERNAL,
        }
    }
}

fn precondition<E: Into<crate::Error>>(e: E) -> CliError {
    CliError::Precondition(e.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Exact number-theoretic analyses of discretised qubit experiments.
#[derive(Debug, Parser)]
#[command(name = "ist", version)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// An angle given by its cosine or as a fraction of a turn.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct AngleArg {
    /// Cosine of the angle, `num/den`.
    #[arg(long = "cos", allow_hyphen_values = true)]
    pub cos: Option<Rational>,
    /// Angle in turns, `num/den`.
    #[arg(long = "angle", allow_hyphen_values = true)]
    pub angle: Option<Rational>,
}

impl AngleArg {
    fn value(&self) -> Result<AngleValue, CliError> {
        match (self.cos, self.angle) {
            (Some(c), _) => AngleValue::cosine(c).map_err(precondition),
            (None, Some(t)) => Ok(AngleValue::angle(t)),
            (None, None) => Err(CliError::Usage("one of --cos, --angle is required".into())),
        }
    }

    fn record(&self, params: &mut BTreeMap<String, String>) {
        if let Some(c) = self.cos {
            params.insert("cos".into(), c.to_fraction_string());
        }
        if let Some(t) = self.angle {
            params.insert("angle".into(), t.to_fraction_string());
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    /// Fraction of `cos φ = n/p` phases that survive both interferometer settings.
    MzExclusion,
    /// `|S − 2√2|` for the nearest rational Tsirelson configuration.
    Chsh,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Whether an angle and its cosine are both rational.
    #[command(group(clap::ArgGroup::new("input").required(true).args(["turns", "cos"])))]
    Niven {
        #[arg(long, allow_hyphen_values = true)]
        turns: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        cos: Option<Rational>,
    },
    /// Mach-Zehnder interferometer: performed setting against the other one.
    Mz {
        #[command(flatten)]
        phi: AngleArg,
        /// 1 = interferometric, 0 = which-way.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
        performed: u8,
    },
    /// Sequential Stern-Gerlach: the real device order against the swapped one.
    Sg {
        #[command(flatten)]
        angle23: AngleArg,
        /// `2,3` or `3,2`.
        #[arg(long, default_value = "2,3", value_parser = parse_order)]
        order: SgOrder,
    },
    /// CHSH correlations, S value and λ-support disjointness.
    Chsh {
        /// Cosines for (0,0), (0,1), (1,0), (1,1).
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        cosines: Vec<Rational>,
        /// Ensemble sizes for the same four pairs.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<u64>,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        x: u8,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        y: u8,
    },
    /// The bit string representing the discrete state (p, n, m).
    Ensemble {
        #[arg(long, env = "IST_DEFAULT_P", default_value_t = DEFAULT_P)]
        p: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        m: u64,
    },
    /// p-adic valuation, trajectory-label distance and the randomiser flip.
    #[command(group(clap::ArgGroup::new("input").required(true).args(["value", "digits"])))]
    Padic {
        #[arg(long, env = "IST_DEFAULT_P", default_value_t = DEFAULT_P)]
        p: u64,
        /// Integer whose valuation to compute.
        #[arg(long, allow_hyphen_values = true)]
        value: Option<i128>,
        /// Label digits, leading digit first.
        #[arg(long, value_delimiter = ',')]
        digits: Option<Vec<u64>>,
        /// A second label; reports its distance from `--digits`.
        #[arg(long, value_delimiter = ',', requires = "digits")]
        other: Option<Vec<u64>>,
        /// Digit index the randomiser reads.
        #[arg(long, requires = "digits")]
        flip: Option<usize>,
    },
    /// Snap a direction to the N×N Bloch grid.
    Snap {
        /// Grid resolution N.
        #[arg(long)]
        resolution: u32,
        /// Polar angle in radians, in [0, π].
        #[arg(long)]
        theta: f64,
        /// Azimuth in radians, in [0, 2π).
        #[arg(long)]
        phi: f64,
        /// Also report two directions with different snap deltas.
        #[arg(long)]
        counterexample: bool,
    },
    /// Plot-ready CSV table, one row per p.
    Sweep {
        #[arg(value_enum)]
        kind: SweepKind,
        /// Discretisation parameters, comma separated. Empty gives a header only.
        #[arg(long, value_delimiter = ',')]
        p: Vec<u64>,
    },
}

fn parse_order(s: &str) -> Result<SgOrder, String> {
    match s {
        "2,3" | "23" => Ok(SgOrder::TwoThenThree),
        "3,2" | "32" => Ok(SgOrder::ThreeThenTwo),
        other => Err(format!("order must be 2,3 or 3,2, got `{other}`")),
    }
}

fn order_str(o: SgOrder) -> &'static str {
    match o {
        SgOrder::TwoThenThree => "2,3",
        SgOrder::ThreeThenTwo => "3,2",
    }
}

fn need_p(p: u64) -> Result<(), CliError> {
    if p < 2 {
        return Err(CliError::Usage(format!("p must be at least 2, got {p}")));
    }
    Ok(())
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn experiment(
    command: &str,
    params: BTreeMap<String, String>,
    rep: ExperimentReport,
    result: impl FnOnce(ExperimentReport) -> ReportResult,
) -> Report {
    let verdicts = Verdicts {
        real: rep.real_verdict.clone(),
        counterfactual: rep.counterfactual_verdict.clone(),
    };
    Report {
        command: command.into(),
        params,
        result: result(rep),
        verdicts: Some(verdicts),
    }
}

/// Runs the configured analysis and returns its report.
pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut params = BTreeMap::new();
    match &cfg.command {
        Command::Niven { turns, cos } => {
            let (turns, cosine) = match (turns, cos) {
                (Some(t), _) => {
                    params.insert("turns".into(), t.to_fraction_string());
                    let c = classify_rational_angle(RationalAngle::from_turns(*t));
                    let c = match c {
                        crate::angle::NivenClass::RationalCos(c) => Some(c),
                        crate::angle::NivenClass::IrrationalCos => None,
                    };
                    (Some(*t), c)
                }
                (None, Some(c)) => {
                    params.insert("cos".into(), c.to_fraction_string());
                    let t = rational_angle_from_cosine(*c).map_err(precondition)?;
                    (t.map(|a| a.turns()), Some(*c))
                }
                (None, None) => {
                    return Err(CliError::Usage("one of --turns, --cos is required".into()))
                }
            };
            Ok(Report {
                command: "niven".into(),
                params,
                result: ReportResult::Niven {
                    rational_angle: turns.is_some(),
                    rational_cosine: cosine.is_some(),
                    turns,
                    cosine,
                },
                verdicts: None,
            })
        }
        Command::Mz { phi, performed } => {
            phi.record(&mut params);
            params.insert("performed".into(), performed.to_string());
            let mz = MzConfig {
                phi: phi.value()?,
                performed: (*performed).try_into().map_err(CliError::Usage)?,
            };
            let rep = mach_zehnder_analysis(&mz).map_err(precondition)?;
            Ok(experiment("mz", params, rep, |r| {
                ReportResult::MachZehnder {
                    phi: mz.phi,
                    performed: mz.performed,
                    details: r.details,
                }
            }))
        }
        Command::Sg { angle23, order } => {
            angle23.record(&mut params);
            params.insert("order".into(), order_str(*order).into());
            let sg = SgConfig {
                angle23: angle23.value()?,
                order: *order,
            };
            let rep = sequential_sg_analysis(&sg).map_err(precondition)?;
            Ok(experiment("sg", params, rep, |r| {
                ReportResult::SternGerlach {
                    angle23: sg.angle23,
                    order: sg.order,
                    details: r.details,
                }
            }))
        }
        Command::Chsh {
            cosines,
            sizes,
            x,
            y,
        } => {
            let cosines: [Rational; 4] = cosines.as_slice().try_into().map_err(|_| {
                CliError::Usage(format!("--cosines needs 4 values, got {}", cosines.len()))
            })?;
            let sizes: [u64; 4] = sizes.as_slice().try_into().map_err(|_| {
                CliError::Usage(format!("--sizes needs 4 values, got {}", sizes.len()))
            })?;
            params.insert(
                "cosines".into(),
                join(&cosines.map(|c| c.to_fraction_string())),
            );
            params.insert("sizes".into(), join(&sizes));
            params.insert("x".into(), x.to_string());
            params.insert("y".into(), y.to_string());
            let settings = SettingPair::new(
                (*x).try_into().map_err(CliError::Usage)?,
                (*y).try_into().map_err(CliError::Usage)?,
            );
            let chsh = ChshConfig::full(settings, cosines, sizes).map_err(precondition)?;
            let rep = chsh_analysis(&chsh).map_err(precondition)?;
            Ok(experiment("chsh", params, rep, |r| {
                let summary = r.chsh.expect("CHSH analysis carries a summary");
                ReportResult::Chsh {
                    s_decimal: decimal12(summary.s_value.to_f64()),
                    correlations: summary.correlations,
                    s_value: summary.s_value,
                    disjoint: summary.disjoint,
                    details: r.details,
                }
            }))
        }
        Command::Ensemble { p, n, m } => {
            need_p(*p)?;
            params.insert("p".into(), p.to_string());
            params.insert("n".into(), n.to_string());
            params.insert("m".into(), m.to_string());
            let state = DiscreteState::new(*p, *n, *m).map_err(precondition)?;
            let string = ensemble_for_state(&state);
            Ok(Report {
                command: "ensemble".into(),
                params,
                result: ReportResult::Ensemble {
                    frequency_a: outcome_frequency(&string, Symbol::A),
                    frequency_b: outcome_frequency(&string, Symbol::B),
                    born_zero: born_probability(&state, Eigenstate::Zero),
                    born_one: born_probability(&state, Eigenstate::One),
                    phase_turns: state.phase().turns(),
                    string,
                },
                verdicts: None,
            })
        }
        Command::Padic {
            p,
            value,
            digits,
            other,
            flip,
        } => {
            need_p(*p)?;
            params.insert("p".into(), p.to_string());
            let valuation = match value {
                Some(v) => {
                    params.insert("value".into(), v.to_string());
                    Some(padic_valuation(*v, *p).map_err(precondition)?)
                }
                None => None,
            };
            let label = match digits {
                Some(d) => {
                    params.insert("digits".into(), join(d));
                    Some(TrajectoryLabel::new(*p, d.clone()).map_err(precondition)?)
                }
                None => None,
            };
            let distance = match (&label, other) {
                (Some(a), Some(o)) => {
                    params.insert("other".into(), join(o));
                    let b = TrajectoryLabel::new(*p, o.clone()).map_err(precondition)?;
                    Some(trajectory_distance(a, &b).map_err(precondition)?)
                }
                _ => None,
            };
            let randomiser = match (&label, flip) {
                (Some(a), Some(i)) => {
                    params.insert("flip".into(), i.to_string());
                    Some(randomiser_digit_demo(a, *i).map_err(precondition)?)
                }
                _ => None,
            };
            Ok(Report {
                command: "padic".into(),
                params,
                result: ReportResult::Padic {
                    valuation,
                    on_set: label.as_ref().map(onset_membership),
                    label,
                    distance_value: distance.map(|d| d.to_string()),
                    distance,
                    randomiser,
                },
                verdicts: None,
            })
        }
        Command::Snap {
            resolution,
            theta,
            phi,
            counterexample,
        } => {
            if *resolution < 2 {
                return Err(CliError::Usage(format!(
                    "resolution must be at least 2, got {resolution}"
                )));
            }
            params.insert("resolution".into(), resolution.to_string());
            params.insert("theta".into(), theta.to_string());
            params.insert("phi".into(), phi.to_string());
            let d = ContinuousDirection::new(*theta, *phi).map_err(precondition)?;
            let g = snap_to_grid(&d, *resolution).map_err(precondition)?;
            let delta = snap_delta(&d, *resolution).map_err(precondition)?;
            let counterexample = if *counterexample {
                params.insert("counterexample".into(), "true".into());
                let (a, b) = snap_delta_counterexample(*resolution).map_err(precondition)?;
                let witness = |d: ContinuousDirection| -> Result<SnapWitness, CliError> {
                    Ok(SnapWitness {
                        theta: decimal12(d.theta()),
                        phi: decimal12(d.phi()),
                        delta: decimal12(snap_delta(&d, *resolution).map_err(precondition)?),
                    })
                };
                Some([witness(a)?, witness(b)?])
            } else {
                None
            };
            Ok(Report {
                command: "snap".into(),
                params,
                result: ReportResult::Snap {
                    resolution: g.resolution(),
                    j: g.j(),
                    k: g.k(),
                    cos_theta: g.cos_theta(),
                    longitude_turns: g.longitude().turns(),
                    delta: decimal12(delta),
                    counterexample,
                },
                verdicts: None,
            })
        }
        Command::Sweep { kind, p } => {
            for &q in p {
                need_p(q)?;
            }
            let (name, columns) = match kind {
                SweepKind::MzExclusion => (
                    "mz-exclusion",
                    [
                        "p",
                        "admissible",
                        "total",
                        "fraction",
                        "bound",
                        "within_bound",
                    ]
                    .as_slice(),
                ),
                SweepKind::Chsh => (
                    "chsh",
                    [
                        "p",
                        "cosine",
                        "size",
                        "s_value",
                        "abs_s_minus_2sqrt2",
                        "bound",
                        "within_bound",
                    ]
                    .as_slice(),
                ),
            };
            params.insert("kind".into(), name.into());
            params.insert("p".into(), join(p));
            let rows = sweep(*kind, p)?;
            Ok(Report {
                command: "sweep".into(),
                params,
                result: ReportResult::Sweep {
                    columns: columns.iter().map(|c| c.to_string()).collect(),
                    rows,
                },
                verdicts: None,
            })
        }
    }
}

/// Sweep rows, computed one thread per parameter and returned in input order.
pub fn sweep(kind: SweepKind, ps: &[u64]) -> Result<Vec<Vec<String>>, CliError> {
    let row = |p: u64| -> Result<Vec<String>, crate::Error> {
        Ok(match kind {
            SweepKind::MzExclusion => {
                let r = mz_exclusion(p)?;
                vec![
                    r.p.to_string(),
                    r.admissible.to_string(),
                    r.total.to_string(),
                    r.fraction.to_fraction_string(),
                    r.bound.to_fraction_string(),
                    (r.fraction <= r.bound).to_string(),
                ]
            }
            SweepKind::Chsh => {
                let r = chsh_tsirelson(p)?;
                vec![
                    r.p.to_string(),
                    r.cosine.to_fraction_string(),
                    r.size.to_string(),
                    r.s_value.to_fraction_string(),
                    decimal12(r.gap),
                    r.bound.to_fraction_string(),
                    (r.gap <= r.bound.to_f64()).to_string(),
                ]
            }
        })
    };
    thread::scope(|s| {
        let handles: Vec<_> = ps.iter().map(|&p| s.spawn(move || row(p))).collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .expect("sweep row panicked")
                    .map_err(CliError::from)
            })
            .collect()
    })
}

/// Renders a report in the requested format.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    }
}

/// Runs and writes the report to `--out` or `stdout`.
pub fn execute(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    let text = render(&run(cfg)?, cfg.format);
    match &cfg.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

/// Parses `args` (program name first), runs, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let stdout = io::stdout();
    match execute(&cfg, &mut stdout.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("ist: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("ist").chain(args.iter().copied())).unwrap()
    }

    fn exit_of(args: &[&str]) -> i32 {
        match RunConfig::try_parse_from(std::iter::once("ist").chain(args.iter().copied())) {
            Err(_) => EXIT_USAGE,
            Ok(cfg) => run(&cfg).map(|_| 0).unwrap_or_else(|e| e.exit_code()),
        }
    }

    #[test]
    fn mz_off_set_is_success() {
        let rep = run(&parse(&["mz", "--cos", "3/5", "--performed", "1"])).unwrap();
        let v = rep.verdicts.unwrap();
        assert!(v.real.is_on_set());
        assert!(v.counterfactual.is_off_set());
    }

    #[test]
    fn ensemble_string_and_frequency() {
        let rep = run(&parse(&["ensemble", "--p", "8", "--n", "4"])).unwrap();
        let text = rep.to_text();
        assert!(text.contains("string: aaaabbbb\n"));
        assert!(text.contains("frequency_a: 1/2\n"));
    }

    #[test]
    fn chsh_negative_cosines_parse() {
        let rep = run(&parse(&[
            "chsh",
            "--cosines",
            "-7/10,7/10,-7/10,-7/10",
            "--sizes",
            "40,40,40,40",
        ]))
        .unwrap();
        match rep.result {
            ReportResult::Chsh {
                s_value, disjoint, ..
            } => {
                assert_eq!(s_value, Rational::new(14, 5).unwrap());
                assert!(disjoint);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_of(&["mz", "--cos", "3/5"]), 0);
        assert_eq!(exit_of(&["mz"]), EXIT_USAGE);
        assert_eq!(exit_of(&["mz", "--cos", "x"]), EXIT_USAGE);
        assert_eq!(exit_of(&["ensemble", "--p", "1", "--n", "0"]), EXIT_USAGE);
        assert_eq!(
            exit_of(&["snap", "--resolution", "1", "--theta", "0", "--phi", "0"]),
            EXIT_USAGE
        );
        assert_eq!(
            exit_of(&["chsh", "--cosines", "1/2", "--sizes", "4"]),
            EXIT_USAGE
        );
        assert_eq!(
            exit_of(&["chsh", "--cosines", "1/3,1/3,1/3,1/3", "--sizes", "4,4,4,4"]),
            EXIT_PRECONDITION
        );
        assert_eq!(exit_of(&["mz", "--cos", "3/2"]), EXIT_PRECONDITION);
        assert_eq!(
            exit_of(&["ensemble", "--p", "8", "--n", "9"]),
            EXIT_PRECONDITION
        );
    }

    #[test]
    fn sweep_rows_follow_input_order() {
        let rows = sweep(SweepKind::MzExclusion, &[13, 7, 11]).unwrap();
        let ps: Vec<_> = rows.iter().map(|r| r[0].as_str()).collect();
        assert_eq!(ps, ["13", "7", "11"]);
        assert!(rows.iter().all(|r| r[5] == "true"));
    }

    #[test]
    fn empty_sweep() {
        let rep = run(&parse(&["sweep", "chsh"])).unwrap();
        assert_eq!(
            rep.to_csv(),
            "p,cosine,size,s_value,abs_s_minus_2sqrt2,bound,within_bound\n"
        );
    }

    #[test]
    fn niven_by_turns_and_by_cosine() {
        let rep = run(&parse(&["niven", "--turns", "1/6"])).unwrap();
        assert_eq!(
            rep.result,
            ReportResult::Niven {
                turns: Some(Rational::new(1, 6).unwrap()),
                cosine: Some(Rational::HALF),
                rational_angle: true,
                rational_cosine: true,
            }
        );
        let rep = run(&parse(&["niven", "--cos", "3/5"])).unwrap();
        assert!(matches!(
            rep.result,
            ReportResult::Niven {
                rational_angle: false,
                ..
            }
        ));
    }
}
