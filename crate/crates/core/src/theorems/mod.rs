//! Machine verification of the transfer theorems on concrete instances.
//!
//! Each check evaluates its hypotheses computationally (never
//! user-asserted) and probes its conclusions; bounded evidence can
//! produce `Consistent` or `Inconclusive` but only a definitively false
//! conclusion under definitively true hypotheses produces `Violation`.

mod checks;

use crate::algebra::SkewPresentation;
use crate::render;
use crate::verdict::{Verdict, VerdictStatus};
use crate::Result;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    DeltaAnnihilation,
    RigidEquivalence,
    IdempotentStability,
    IdempotentsInR,
    WeakImpliesAbelian,
    AbelianOfA,
    ExtendedDerivation,
    SdQuasiBaerTransfer,
    QuasiBaerEquivalence,
    BaerTransfer,
    PpTransfer,
    IfpQuasiBaerTransfer,
    IdempotentDecomposition,
    LocalizationArmendariz,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::DeltaAnnihilation,
        TheoremId::RigidEquivalence,
        TheoremId::IdempotentStability,
        TheoremId::IdempotentsInR,
        TheoremId::WeakImpliesAbelian,
        TheoremId::AbelianOfA,
        TheoremId::ExtendedDerivation,
        TheoremId::SdQuasiBaerTransfer,
        TheoremId::QuasiBaerEquivalence,
        TheoremId::BaerTransfer,
        TheoremId::PpTransfer,
        TheoremId::IfpQuasiBaerTransfer,
        TheoremId::IdempotentDecomposition,
        TheoremId::LocalizationArmendariz,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::DeltaAnnihilation => "delta-annihilation",
            TheoremId::RigidEquivalence => "rigid-equivalence",
            TheoremId::IdempotentStability => "idempotent-stability",
            TheoremId::IdempotentsInR => "idempotents-in-r",
            TheoremId::WeakImpliesAbelian => "weak-implies-abelian",
            TheoremId::AbelianOfA => "abelian-of-a",
            TheoremId::ExtendedDerivation => "extended-derivation",
            TheoremId::SdQuasiBaerTransfer => "sd-quasi-baer-transfer",
            TheoremId::QuasiBaerEquivalence => "quasi-baer-equivalence",
            TheoremId::BaerTransfer => "baer-transfer",
            TheoremId::PpTransfer => "pp-transfer",
            TheoremId::IfpQuasiBaerTransfer => "ifp-quasi-baer-transfer",
            TheoremId::IdempotentDecomposition => "idempotent-decomposition",
            TheoremId::LocalizationArmendariz => "localization-armendariz",
        }
    }

    pub fn from_name(name: &str) -> Option<TheoremId> {
        TheoremId::ALL.iter().copied().find(|t| t.name() == name)
    }
}

/// Three-valued truth with bounds, the working currency of the checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tri {
    True,
    False(String),
    TrueUpTo(u32),
    Unknown(String),
}

impl Tri {
    pub fn from_verdict(v: &Verdict) -> Tri {
        match &v.status {
            VerdictStatus::Holds => Tri::True,
            VerdictStatus::FailsWithWitness(w) => Tri::False(w.brief()),
            VerdictStatus::VerifiedUpTo(d) => Tri::TrueUpTo(*d),
        }
    }

    pub fn from_result(r: Result<Verdict>) -> Tri {
        match r {
            Ok(v) => Tri::from_verdict(&v),
            Err(e) => Tri::Unknown(e.to_string()),
        }
    }

    pub fn is_definitively_true(&self) -> bool {
        matches!(self, Tri::True)
    }

    pub fn is_definitively_false(&self) -> bool {
        matches!(self, Tri::False(_))
    }

    /// Conjunction: false dominates, then unknown, then bounds.
    pub fn and(&self, other: &Tri) -> Tri {
        match (self, other) {
            (Tri::False(w), _) | (_, Tri::False(w)) => Tri::False(w.clone()),
            (Tri::Unknown(c), _) | (_, Tri::Unknown(c)) => Tri::Unknown(c.clone()),
            (Tri::TrueUpTo(a), Tri::TrueUpTo(b)) => Tri::TrueUpTo(*a.min(b)),
            (Tri::TrueUpTo(d), Tri::True) | (Tri::True, Tri::TrueUpTo(d)) => Tri::TrueUpTo(*d),
            (Tri::True, Tri::True) => Tri::True,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Tri::True => "true".into(),
            Tri::False(w) => format!("false ({w})"),
            Tri::TrueUpTo(d) => format!("true-up-to({d})"),
            Tri::Unknown(c) => format!("unknown ({c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoremStatus {
    Consistent,
    Violation(String),
    HypothesesNotMet,
    Inconclusive(String),
}

impl TheoremStatus {
    pub fn name(&self) -> &'static str {
        match self {
            TheoremStatus::Consistent => "consistent",
            TheoremStatus::Violation(_) => "VIOLATION",
            TheoremStatus::HypothesesNotMet => "hypotheses-not-met",
            TheoremStatus::Inconclusive(_) => "inconclusive",
        }
    }
}

/// One named hypothesis or conclusion with its evaluated status.
#[derive(Debug, Clone)]
pub struct NamedCheck {
    pub name: String,
    pub outcome: Tri,
}

impl NamedCheck {
    pub fn new(name: impl Into<String>, outcome: Tri) -> Self {
        NamedCheck {
            name: name.into(),
            outcome,
        }
    }
}

#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub instance: String,
    pub degree: u32,
    pub hypotheses: Vec<NamedCheck>,
    pub conclusions: Vec<NamedCheck>,
    pub status: TheoremStatus,
}

impl TheoremReport {
    pub fn to_json(&self) -> Value {
        let named = |list: &[NamedCheck]| -> Vec<Value> {
            list.iter()
                .map(|c| json!({ "check": c.name, "outcome": c.outcome.label() }))
                .collect()
        };
        json!({
            "theorem": self.theorem.name(),
            "instance": self.instance,
            "degree": self.degree,
            "hypotheses": named(&self.hypotheses),
            "conclusions": named(&self.conclusions),
            "status": self.status.name(),
            "detail": match &self.status {
                TheoremStatus::Violation(d) | TheoremStatus::Inconclusive(d) => d.clone(),
                _ => String::new(),
            },
        })
    }

    pub fn render_human(&self) -> String {
        let mut rows = Vec::new();
        for h in &self.hypotheses {
            rows.push(vec![
                "hypothesis".to_string(),
                h.name.clone(),
                h.outcome.label(),
            ]);
        }
        for c in &self.conclusions {
            rows.push(vec![
                "conclusion".to_string(),
                c.name.clone(),
                c.outcome.label(),
            ]);
        }
        format!(
            "{} on {} (degree {}): {}\n{}",
            self.theorem.name(),
            self.instance,
            self.degree,
            self.status.name(),
            render::table(&["role", "check", "outcome"], &rows)
        )
    }
}

/// Verifies one theorem on the instance at the degree bound.
pub fn verify(
    theorem: TheoremId,
    pres: &SkewPresentation,
    degree: u32,
    instance: &str,
) -> TheoremReport {
    checks::verify_theorem(theorem, pres, degree, instance)
}

/// Every theorem against the instance; per-row statuses, never raises.
pub fn run_all(pres: &SkewPresentation, degree: u32, instance: &str) -> Vec<TheoremReport> {
    TheoremId::ALL
        .iter()
        .map(|t| verify(*t, pres, degree, instance))
        .collect()
}
