//! Rationality constraints on angles and the on/off-invariant-set decision.
//!
//! A measurement context demands one of two kinds of exactness from an
//! angle: its cosine must be rational (squared amplitudes `(1 ± cos)/2` are
//! then `n/p`), or the angle itself must be a rational fraction of a turn
//! (a phase `m/p`). An angle can meet both demands only on the finite Niven
//! list, so a context that imposes both on an angle fixed by another context
//! is almost always inconsistent.

use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::angle::{
    classify_rational_angle, niven_cosines, rational_angle_from_cosine, NivenClass, RationalAngle,
};
use crate::error::{AdmissibilityError, NumberError};
use crate::Rational;

/// How an angle is known exactly, if at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AngleValue {
    RationalAngle(RationalAngle),
    RationalCosine(Rational),
    Unvalued,
}

impl AngleValue {
    pub fn angle(turns: Rational) -> Self {
        AngleValue::RationalAngle(RationalAngle::from_turns(turns))
    }

    pub fn cosine(c: Rational) -> Result<Self, NumberError> {
        if c.abs() > 1 {
            return Err(NumberError::CosineOutOfRange(c));
        }
        Ok(AngleValue::RationalCosine(c))
    }

    pub fn is_valued(&self) -> bool {
        !matches!(self, AngleValue::Unvalued)
    }
}

impl fmt::Display for AngleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AngleValue::RationalAngle(a) => write!(f, "angle {a}"),
            AngleValue::RationalCosine(c) => write!(f, "cosine {c}"),
            AngleValue::Unvalued => write!(f, "unvalued"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintKind {
    /// Squared amplitudes `(1 ± cos θ)/2` must be rational.
    CosineRational,
    /// The angle must be a rational fraction of a turn.
    AngleRational,
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintKind::CosineRational => write!(f, "rational cosine"),
            ConstraintKind::AngleRational => write!(f, "rational angle"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constraint {
    pub kind: ConstraintKind,
    pub target: String,
}

/// Declared angle variables (in declaration order) and the constraints on them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstraintSet {
    variables: IndexMap<String, AngleValue>,
    constraints: Vec<Constraint>,
}

impl ConstraintSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn declare(
        &mut self,
        name: impl Into<String>,
        value: AngleValue,
    ) -> Result<&mut Self, AdmissibilityError> {
        let name = name.into();
        if let AngleValue::RationalCosine(c) = value {
            if c.abs() > 1 {
                return Err(NumberError::CosineOutOfRange(c).into());
            }
        }
        if self.variables.contains_key(&name) {
            return Err(AdmissibilityError::DuplicateVariable(name));
        }
        self.variables.insert(name, value);
        Ok(self)
    }

    /// Adds a constraint; a repeated `(kind, target)` pair is kept once.
    pub fn require(
        &mut self,
        kind: ConstraintKind,
        target: &str,
    ) -> Result<&mut Self, AdmissibilityError> {
        if !self.variables.contains_key(target) {
            return Err(AdmissibilityError::UndeclaredVariable(target.to_string()));
        }
        let c = Constraint {
            kind,
            target: target.to_string(),
        };
        if !self.constraints.contains(&c) {
            self.constraints.push(c);
        }
        Ok(self)
    }

    /// Both contexts at once, on shared variables. Variables keep `self`'s
    /// declaration order, followed by any new ones from `other`.
    pub fn union(&self, other: &ConstraintSet) -> Result<ConstraintSet, AdmissibilityError> {
        let mut out = self.clone();
        for (name, value) in &other.variables {
            match out.variables.get(name) {
                Some(existing) if existing != value => {
                    return Err(AdmissibilityError::ConflictingValues { name: name.clone() })
                }
                Some(_) => {}
                None => {
                    out.variables.insert(name.clone(), *value);
                }
            }
        }
        for c in &other.constraints {
            out.require(c.kind, &c.target)?;
        }
        Ok(out)
    }

    pub fn variables(&self) -> impl Iterator<Item = (&str, &AngleValue)> {
        self.variables.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    fn kinds_on(&self, name: &str) -> (bool, bool) {
        let has = |kind| {
            self.constraints
                .iter()
                .any(|c| c.kind == kind && c.target == name)
        };
        (
            has(ConstraintKind::CosineRational),
            has(ConstraintKind::AngleRational),
        )
    }
}

/// Why a variable cannot satisfy its constraints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub variable: String,
    pub value: AngleValue,
    pub violated: ConstraintKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    OnSet,
    OffSet(Witness),
    /// An unvalued angle carrying both constraint kinds: satisfiable, but
    /// only by the finitely many Niven angles.
    NivenConditional {
        variable: String,
    },
}

impl Verdict {
    pub fn is_on_set(&self) -> bool {
        matches!(self, Verdict::OnSet)
    }

    pub fn is_off_set(&self) -> bool {
        matches!(self, Verdict::OffSet(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::OnSet => "on_set",
            Verdict::OffSet(_) => "off_set",
            Verdict::NivenConditional { .. } => "niven_conditional",
        }
    }
}

enum Status {
    Satisfied,
    Violated(ConstraintKind),
    Conditional,
}

fn status_of(value: &AngleValue, (needs_cos, needs_angle): (bool, bool)) -> Status {
    match value {
        AngleValue::RationalCosine(c) => {
            let angle_ok = rational_angle_from_cosine(*c)
                .expect("cosines are range-checked on declaration")
                .is_some();
            if needs_angle && !angle_ok {
                Status::Violated(ConstraintKind::AngleRational)
            } else {
                Status::Satisfied
            }
        }
        AngleValue::RationalAngle(a) => {
            if needs_cos && !classify_rational_angle(*a).is_rational() {
                Status::Violated(ConstraintKind::CosineRational)
            } else {
                Status::Satisfied
            }
        }
        AngleValue::Unvalued if needs_cos && needs_angle => Status::Conditional,
        AngleValue::Unvalued => Status::Satisfied,
    }
}

/// Decides invariant-set membership for a constraint set.
///
/// The first violating variable in declaration order is the witness. With no
/// violation, any doubly-constrained unvalued variable makes the verdict
/// [`Verdict::NivenConditional`].
pub fn check(cs: &ConstraintSet) -> Verdict {
    let mut conditional = None;
    for (name, value) in &cs.variables {
        match status_of(value, cs.kinds_on(name)) {
            Status::Violated(kind) => {
                return Verdict::OffSet(Witness {
                    variable: name.clone(),
                    value: *value,
                    violated: kind,
                })
            }
            Status::Conditional if conditional.is_none() => conditional = Some(name.clone()),
            _ => {}
        }
    }
    match conditional {
        Some(variable) => Verdict::NivenConditional { variable },
        None => Verdict::OnSet,
    }
}

fn niven_list() -> String {
    let items: Vec<String> = niven_cosines().iter().map(|c| c.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

/// Deterministic text rendering of a verdict.
pub fn explain(v: &Verdict) -> Vec<String> {
    match v {
        Verdict::OnSet => vec!["on invariant set".to_string()],
        Verdict::OffSet(w) => {
            let mut lines = vec![format!(
                "off invariant set: `{}` ({}) cannot have a {}",
                w.variable, w.value, w.violated
            )];
            match (w.value, w.violated) {
                (AngleValue::RationalCosine(c), _) => lines.push(format!(
                    "cosine {c} is not one of the rational cosines of rational angles {}, so `{}` is an irrational fraction of a turn",
                    niven_list(),
                    w.variable
                )),
                (AngleValue::RationalAngle(a), _) => {
                    debug_assert_eq!(classify_rational_angle(a), NivenClass::IrrationalCos);
                    lines.push(format!(
                        "{a} is not a Niven angle; rational angles have rational cosines only for cosines {}",
                        niven_list()
                    ))
                }
                (AngleValue::Unvalued, _) => {}
            }
            lines
        }
        Verdict::NivenConditional { variable } => vec![
            format!("conditionally on invariant set: `{variable}` must be both a rational angle and have a rational cosine"),
            format!("satisfiable only on the finite Niven list, cosines {}", niven_list()),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn doubly(value: AngleValue) -> ConstraintSet {
        let mut cs = ConstraintSet::new();
        cs.declare("phi", value)
            .unwrap()
            .require(ConstraintKind::CosineRational, "phi")
            .unwrap()
            .require(ConstraintKind::AngleRational, "phi")
            .unwrap();
        cs
    }

    #[test]
    fn irrational_angle_from_rational_cosine_is_off_set() {
        let v = check(&doubly(AngleValue::cosine(r(3, 5)).unwrap()));
        assert_eq!(
            v,
            Verdict::OffSet(Witness {
                variable: "phi".into(),
                value: AngleValue::RationalCosine(r(3, 5)),
                violated: ConstraintKind::AngleRational,
            })
        );
    }

    #[test]
    fn niven_angle_is_on_set() {
        assert_eq!(check(&doubly(AngleValue::angle(r(1, 6)))), Verdict::OnSet);
    }

    #[test]
    fn single_mode_constraint_is_satisfied_by_construction() {
        let mut cs = ConstraintSet::new();
        cs.declare("phi", AngleValue::cosine(r(3, 5)).unwrap())
            .unwrap()
            .require(ConstraintKind::CosineRational, "phi")
            .unwrap();
        assert_eq!(check(&cs), Verdict::OnSet);
    }

    #[test]
    fn eighth_turn_fails_cosine_constraint() {
        let v = check(&doubly(AngleValue::angle(r(1, 8))));
        assert!(matches!(
            v,
            Verdict::OffSet(Witness {
                violated: ConstraintKind::CosineRational,
                ..
            })
        ));
    }

    #[test]
    fn unvalued_doubly_constrained_is_conditional() {
        assert_eq!(
            check(&doubly(AngleValue::Unvalued)),
            Verdict::NivenConditional {
                variable: "phi".into()
            }
        );
        let mut single = ConstraintSet::new();
        single
            .declare("phi", AngleValue::Unvalued)
            .unwrap()
            .require(ConstraintKind::AngleRational, "phi")
            .unwrap();
        assert_eq!(check(&single), Verdict::OnSet);
    }

    #[test]
    fn witness_follows_declaration_order_and_violation_beats_conditional() {
        let mut cs = ConstraintSet::new();
        cs.declare("u", AngleValue::Unvalued).unwrap();
        cs.declare("b", AngleValue::cosine(r(2, 5)).unwrap())
            .unwrap();
        cs.declare("a", AngleValue::cosine(r(3, 5)).unwrap())
            .unwrap();
        for name in ["a", "b", "u"] {
            cs.require(ConstraintKind::AngleRational, name).unwrap();
            cs.require(ConstraintKind::CosineRational, name).unwrap();
        }
        match check(&cs) {
            Verdict::OffSet(w) => assert_eq!(w.variable, "b"),
            other => panic!("expected off-set, got {other:?}"),
        }
    }

    #[test]
    fn malformed_sets_rejected() {
        let mut cs = ConstraintSet::new();
        assert_eq!(
            cs.require(ConstraintKind::AngleRational, "phi")
                .unwrap_err(),
            AdmissibilityError::UndeclaredVariable("phi".into())
        );
        cs.declare("phi", AngleValue::Unvalued).unwrap();
        assert_eq!(
            cs.declare("phi", AngleValue::Unvalued).unwrap_err(),
            AdmissibilityError::DuplicateVariable("phi".into())
        );
        assert!(cs
            .declare("psi", AngleValue::RationalCosine(r(3, 2)))
            .is_err());
    }

    #[test]
    fn duplicate_constraints_collapse() {
        let mut cs = doubly(AngleValue::Unvalued);
        cs.require(ConstraintKind::AngleRational, "phi").unwrap();
        assert_eq!(cs.constraints().len(), 2);
    }

    #[test]
    fn union_merges_and_detects_conflicts() {
        let mut a = ConstraintSet::new();
        a.declare("phi", AngleValue::cosine(r(3, 5)).unwrap())
            .unwrap()
            .require(ConstraintKind::CosineRational, "phi")
            .unwrap();
        let mut b = ConstraintSet::new();
        b.declare("phi", AngleValue::cosine(r(3, 5)).unwrap())
            .unwrap()
            .require(ConstraintKind::AngleRational, "phi")
            .unwrap();
        let u = a.union(&b).unwrap();
        assert_eq!(u.constraints().len(), 2);
        assert!(check(&u).is_off_set());

        let mut c = ConstraintSet::new();
        c.declare("phi", AngleValue::angle(r(1, 6))).unwrap();
        assert!(matches!(
            a.union(&c),
            Err(AdmissibilityError::ConflictingValues { .. })
        ));
    }

    #[test]
    fn explanations() {
        assert_eq!(explain(&Verdict::OnSet), vec!["on invariant set"]);
        let off = check(&doubly(AngleValue::cosine(r(3, 5)).unwrap()));
        let text = explain(&off).join("\n");
        assert!(text.contains("`phi`"));
        assert!(text.contains("3/5"));
        assert!(text.contains("{-1, -1/2, 0, 1/2, 1}"));
        let cond = explain(&Verdict::NivenConditional {
            variable: "phi".into(),
        })
        .join("\n");
        assert!(cond.contains("finite Niven list"));
        assert_eq!(explain(&off), explain(&off));
    }
}
