//! The report a run emits, and its JSON, CSV and text renderings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::admissibility::{AngleValue, Verdict};
use crate::ensemble::BitString;
use crate::experiments::{RandomiserReport, Setting, SgOrder};
use crate::padic::{PadicDistance, TrajectoryLabel, Valuation};
use crate::Rational;

/// One run: the command, its normalised parameters, the result and, for
/// experiment analyses, the real and counterfactual verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub result: ReportResult,
    pub verdicts: Option<Verdicts>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub real: Verdict,
    pub counterfactual: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnapWitness {
    pub theta: String,
    pub phi: String,
    pub delta: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportResult {
    Niven {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        turns: Option<Rational>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cosine: Option<Rational>,
        rational_angle: bool,
        rational_cosine: bool,
    },
    MachZehnder {
        phi: AngleValue,
        performed: Setting,
        details: Vec<String>,
    },
    SternGerlach {
        angle23: AngleValue,
        order: SgOrder,
        details: Vec<String>,
    },
    Chsh {
        correlations: Vec<Rational>,
        s_value: Rational,
        s_decimal: String,
        disjoint: bool,
        details: Vec<String>,
    },
    Ensemble {
        string: BitString,
        frequency_a: Rational,
        frequency_b: Rational,
        born_zero: Rational,
        born_one: Rational,
        phase_turns: Rational,
    },
    Padic {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        valuation: Option<Valuation>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<TrajectoryLabel>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        on_set: Option<bool>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        distance: Option<PadicDistance>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        distance_value: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        randomiser: Option<RandomiserReport>,
    },
    Snap {
        resolution: u32,
        j: u32,
        k: u32,
        cos_theta: Rational,
        longitude_turns: Rational,
        delta: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        counterexample: Option<[SnapWitness; 2]>,
    },
    Sweep {
        columns: Vec<String>,
        rows: Vec<Vec<String>>,
    },
}

/// Decimal rendering with 12 significant digits.
pub fn decimal12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values serialise");
        s.push('\n');
        s
    }

    /// `(key, value)` pairs for the text and CSV renderings. Sweeps yield their
    /// table instead.
    fn pairs(&self) -> Vec<(String, String)> {
        let mut out = vec![("command".to_string(), self.command.clone())];
        out.extend(
            self.params
                .iter()
                .map(|(k, v)| (format!("params.{k}"), v.clone())),
        );
        let result = serde_json::to_value(&self.result).expect("report values serialise");
        if let Value::Object(map) = result {
            for (k, v) in map {
                if k != "kind" {
                    flatten(&k, &v, &mut out);
                }
            }
        }
        if let Some(v) = &self.verdicts {
            out.push(("real".into(), v.real.label().into()));
            out.push(("counterfactual".into(), v.counterfactual.label().into()));
        }
        out
    }

    pub fn to_text(&self) -> String {
        if let Some(table) = self.sweep_table() {
            return table;
        }
        self.pairs()
            .into_iter()
            .map(|(k, v)| format!("{k}: {v}\n"))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        if let Some(table) = self.sweep_table() {
            return table;
        }
        let rows = self.pairs().into_iter().map(|(k, v)| vec![k, v]);
        csv_table(&["key".to_string(), "value".to_string()], rows)
    }

    fn sweep_table(&self) -> Option<String> {
        match &self.result {
            ReportResult::Sweep { columns, rows } => Some(csv_table(columns, rows.iter().cloned())),
            _ => None,
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                flatten(&format!("{prefix}.{k}"), inner, out);
            }
        }
        Value::Array(items) => {
            for (i, inner) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), inner, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), "null".into())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn csv_table<I>(header: &[String], rows: I) -> String
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("fields are utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(decimal12(2.0f64.sqrt() * 2.0), "2.82842712475");
        assert_eq!(decimal12(0.01), "0.0100000000000");
        assert_eq!(decimal12(1234.5), "1234.50000000");
        assert_eq!(decimal12(0.0), "0");
    }

    #[test]
    fn csv_quotes_commas_and_uses_lf() {
        let t = csv_table(&["a".into(), "b".into()], [vec!["x,y".into(), "z".into()]]);
        assert_eq!(t, "a,b\n\"x,y\",z\n");
    }

    #[test]
    fn empty_sweep_is_header_only() {
        let r = Report {
            command: "sweep".into(),
            params: BTreeMap::new(),
            result: ReportResult::Sweep {
                columns: vec!["p".into(), "q".into()],
                rows: vec![],
            },
            verdicts: None,
        };
        assert_eq!(r.to_csv(), "p,q\n");
        assert_eq!(r.to_text(), "p,q\n");
    }

    #[test]
    fn json_round_trip() {
        let r = Report {
            command: "niven".into(),
            params: BTreeMap::from([("turns".into(), "1/6".into())]),
            result: ReportResult::Niven {
                turns: Some(Rational::new(1, 6).unwrap()),
                cosine: Some(Rational::HALF),
                rational_angle: true,
                rational_cosine: true,
            },
            verdicts: None,
        };
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
