//! Decision outcomes and replayable witnesses.

use crate::algebra::{Exponent, SkewPoly};
use crate::ring::RElem;
use serde_json::{json, Value};
use std::time::Duration;

/// Outcome of a property decision.
///
/// `VerifiedUpTo(D)` means "no counterexample among polynomials of degree
/// ≤ D"; it is never a proof for all of the extension.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum VerdictStatus {
    Holds,
    FailsWithWitness(Witness),
    VerifiedUpTo(u32),
}

/// A decision together with search statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub stats: Stats,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Stats {
    /// Candidates examined by the search (pairs, elements, ideals...).
    pub examined: u64,
    /// Wall-clock time. Excluded from machine reports so that they stay
    /// byte-identical across runs.
    pub elapsed: Duration,
}

impl Verdict {
    pub fn holds(examined: u64) -> Self {
        Verdict {
            status: VerdictStatus::Holds,
            stats: Stats {
                examined,
                elapsed: Duration::ZERO,
            },
        }
    }

    pub fn fails(witness: Witness, examined: u64) -> Self {
        Verdict {
            status: VerdictStatus::FailsWithWitness(witness),
            stats: Stats {
                examined,
                elapsed: Duration::ZERO,
            },
        }
    }

    pub fn verified_up_to(bound: u32, examined: u64) -> Self {
        Verdict {
            status: VerdictStatus::VerifiedUpTo(bound),
            stats: Stats {
                examined,
                elapsed: Duration::ZERO,
            },
        }
    }

    pub fn is_definitive_failure(&self) -> bool {
        matches!(self.status, VerdictStatus::FailsWithWitness(_))
    }

    pub fn is_exact_holds(&self) -> bool {
        matches!(self.status, VerdictStatus::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.status {
            VerdictStatus::FailsWithWitness(w) => Some(w),
            _ => None,
        }
    }

    /// Machine-readable form; deterministic (keys sorted, no timings).
    pub fn to_json(&self) -> Value {
        let status = match &self.status {
            VerdictStatus::Holds => json!({ "status": "holds" }),
            VerdictStatus::FailsWithWitness(w) => json!({
                "status": "fails",
                "witness": w.to_json(),
            }),
            VerdictStatus::VerifiedUpTo(d) => json!({
                "status": "verified-up-to",
                "bound": d,
            }),
        };
        let mut obj = status;
        obj.as_object_mut()
            .unwrap()
            .insert("examined".into(), json!(self.stats.examined));
        obj
    }

    pub fn summary(&self) -> String {
        match &self.status {
            VerdictStatus::Holds => "Holds".into(),
            VerdictStatus::FailsWithWitness(w) => format!("FailsWithWitness({})", w.brief()),
            VerdictStatus::VerifiedUpTo(d) => format!("VerifiedUpTo({d})"),
        }
    }
}

/// A ring element together with its rendered label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElemW {
    pub elem: RElem,
    pub label: String,
}

/// A polynomial together with its canonical text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyW {
    pub poly: SkewPoly,
    pub text: String,
}

/// Which annihilator-family decision produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnnFlavor {
    Baer,
    QuasiBaer,
    Pp,
    PqBaer,
}

impl AnnFlavor {
    pub fn name(&self) -> &'static str {
        match self {
            AnnFlavor::Baer => "baer",
            AnnFlavor::QuasiBaer => "quasi-baer",
            AnnFlavor::Pp => "pp",
            AnnFlavor::PqBaer => "pq-baer",
        }
    }
}

/// Replayable counterexample payloads. Every constructor stores both the
/// structured data (used by `replay`) and rendered labels (used by
/// reports).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// a ≠ 0 with a² = 0.
    Nilpotent { a: ElemW },
    /// Idempotent e and x with ex ≠ xe.
    NonCentralIdempotent { e: ElemW, x: ElemW },
    /// ab = 0 but acb ≠ 0: the right annihilator of a is not two-sided.
    IfpFail { a: ElemW, b: ElemW, c: ElemW },
    /// An annihilator r(S) that is no e·R; `generators` describe S
    /// (a subset, an element, or an ideal generator list per `flavor`).
    AnnNotIdempotentGenerated {
        flavor: AnnFlavor,
        generators: Vec<ElemW>,
        annihilator: Vec<ElemW>,
    },
    /// r ≠ 0 with r·σ^α(r) = 0.
    Rigid { r: ElemW, alpha: Exponent },
    /// fg = 0 while the variant's conclusion fails at the recorded slots;
    /// `value` renders the nonzero product.
    ArmendarizPair {
        f: PolyW,
        g: PolyW,
        f_slot: Exponent,
        g_slot: Exponent,
        value: String,
    },
    /// f ≠ 0 of bounded degree with f² = 0.
    PolyNilpotent { f: PolyW },
    /// A (Σ,Δ)-ideal whose right annihilator is no e·R.
    SdIdealFail {
        ideal: Vec<ElemW>,
        annihilator: Vec<ElemW>,
    },
    /// (a, s) with no (s′, a′) solving the Ore condition.
    OreFail { a: ElemW, s: ElemW, left: bool },
}

fn labels(v: &[ElemW]) -> Vec<String> {
    v.iter().map(|e| e.label.clone()).collect()
}

impl Witness {
    pub fn to_json(&self) -> Value {
        match self {
            Witness::Nilpotent { a } => json!({ "kind": "nilpotent", "a": a.label }),
            Witness::NonCentralIdempotent { e, x } => json!({
                "kind": "non-central-idempotent", "e": e.label, "x": x.label,
            }),
            Witness::IfpFail { a, b, c } => json!({
                "kind": "ifp-fail", "a": a.label, "b": b.label, "c": c.label,
            }),
            Witness::AnnNotIdempotentGenerated {
                flavor,
                generators,
                annihilator,
            } => json!({
                "kind": "annihilator-not-idempotent-generated",
                "flavor": flavor.name(),
                "generators": labels(generators),
                "annihilator": labels(annihilator),
            }),
            Witness::Rigid { r, alpha } => json!({
                "kind": "rigid", "r": r.label, "alpha": alpha.0,
            }),
            Witness::ArmendarizPair {
                f,
                g,
                f_slot,
                g_slot,
                value,
            } => json!({
                "kind": "armendariz-pair",
                "f": f.text, "g": g.text,
                "f-slot": f_slot.0, "g-slot": g_slot.0,
                "value": value,
            }),
            Witness::PolyNilpotent { f } => json!({
                "kind": "poly-nilpotent", "f": f.text,
            }),
            Witness::SdIdealFail { ideal, annihilator } => json!({
                "kind": "sd-ideal-fail",
                "ideal": labels(ideal),
                "annihilator": labels(annihilator),
            }),
            Witness::OreFail { a, s, left } => json!({
                "kind": "ore-fail", "a": a.label, "s": s.label,
                "side": if *left { "left" } else { "right" },
            }),
        }
    }

    pub fn brief(&self) -> String {
        match self {
            Witness::Nilpotent { a } => format!("a={}", a.label),
            Witness::NonCentralIdempotent { e, x } => format!("e={}, x={}", e.label, x.label),
            Witness::IfpFail { a, b, c } => {
                format!("a={}, b={}, c={}", a.label, b.label, c.label)
            }
            Witness::AnnNotIdempotentGenerated {
                flavor, generators, ..
            } => format!(
                "{}: r({{{}}}) not idempotent-generated",
                flavor.name(),
                labels(generators).join(",")
            ),
            Witness::Rigid { r, alpha } => format!("r={}, alpha={:?}", r.label, alpha.0),
            Witness::ArmendarizPair { f, g, value, .. } => {
                format!("f={}; g={}; product={}", f.text, g.text, value)
            }
            Witness::PolyNilpotent { f } => format!("f={}", f.text),
            Witness::SdIdealFail { ideal, .. } => {
                format!("ideal {{{}}}", labels(ideal).join(","))
            }
            Witness::OreFail { a, s, left } => format!(
                "{} Ore fails at a={}, s={}",
                if *left { "left" } else { "right" },
                a.label,
                s.label
            ),
        }
    }
}
