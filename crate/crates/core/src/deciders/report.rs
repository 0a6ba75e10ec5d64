//! Runs every decider once and checks the implication chains between the
//! properties row by row.

use crate::algebra::SkewPresentation;
use crate::deciders::{decide, PropertyId};
use crate::render;
use crate::verdict::{Verdict, VerdictStatus};
use crate::Result;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Chain edges: stronger property first. A definitive Holds upstream with
/// a definitive failure downstream is inconsistent; bounded verdicts never
/// flag.
pub const EDGES: [(PropertyId, PropertyId); 16] = [
    (PropertyId::SigmaRigid, PropertyId::SdArmendariz),
    (PropertyId::SdArmendariz, PropertyId::SigmaSkewArmendariz),
    (PropertyId::SigmaSkewArmendariz, PropertyId::SkewArmendariz),
    (PropertyId::SigmaRigid, PropertyId::SdWeakArmendariz),
    (
        PropertyId::SdWeakArmendariz,
        PropertyId::WeakSigmaSkewArmendariz,
    ),
    (
        PropertyId::WeakSigmaSkewArmendariz,
        PropertyId::WeakSkewArmendariz,
    ),
    (PropertyId::SdArmendariz, PropertyId::SdWeakArmendariz),
    (
        PropertyId::SigmaSkewArmendariz,
        PropertyId::WeakSigmaSkewArmendariz,
    ),
    (PropertyId::SkewArmendariz, PropertyId::WeakSkewArmendariz),
    (
        PropertyId::SigmaRigid,
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::Reduced),
    ),
    (
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::Baer),
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::QuasiBaer),
    ),
    (
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::Baer),
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::Pp),
    ),
    (
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::QuasiBaer),
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::PqBaer),
    ),
    (
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::Pp),
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::PqBaer),
    ),
    (
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::Reduced),
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::Abelian),
    ),
    (
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::Reduced),
        PropertyId::Classical(crate::ring::classical::ClassicalProperty::Ifp),
    ),
];

#[derive(Debug, Clone)]
pub enum RowOutcome {
    Verdict(Box<Verdict>),
    Error(String),
}

impl RowOutcome {
    pub fn verdict(&self) -> Option<&Verdict> {
        match self {
            RowOutcome::Verdict(v) => Some(v),
            RowOutcome::Error(_) => None,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            RowOutcome::Verdict(v) => v.to_json(),
            RowOutcome::Error(e) => json!({ "status": "error", "message": e }),
        }
    }

    fn summary(&self) -> String {
        match self {
            RowOutcome::Verdict(v) => v.summary(),
            RowOutcome::Error(e) => format!("Error({e})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeStatus {
    Consistent,
    Inconsistent,
    Skipped,
}

impl EdgeStatus {
    fn name(&self) -> &'static str {
        match self {
            EdgeStatus::Consistent => "consistent",
            EdgeStatus::Inconsistent => "INCONSISTENT",
            EdgeStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ImplicationReport {
    pub degree: u32,
    pub rows: BTreeMap<&'static str, RowOutcome>,
    pub edges: Vec<(PropertyId, PropertyId, EdgeStatus)>,
}

impl ImplicationReport {
    pub fn inconsistent_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|(_, _, s)| *s == EdgeStatus::Inconsistent)
            .count()
    }

    pub fn to_json(&self) -> Value {
        let rows: BTreeMap<String, Value> = self
            .rows
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_json()))
            .collect();
        json!({
            "degree": self.degree,
            "rows": rows,
            "edges": self.edges.iter().map(|(from, to, status)| json!({
                "from": from.name(),
                "to": to.name(),
                "status": status.name(),
            })).collect::<Vec<_>>(),
            "inconsistent": self.inconsistent_count(),
        })
    }

    pub fn render_human(&self) -> String {
        let mut rows: Vec<Vec<String>> = Vec::new();
        for (name, outcome) in &self.rows {
            rows.push(vec![name.to_string(), outcome.summary()]);
        }
        let mut out = render::table(&["property", "verdict"], &rows);
        out.push('\n');
        let edge_rows: Vec<Vec<String>> = self
            .edges
            .iter()
            .map(|(f, t, s)| {
                vec![
                    format!("{} => {}", f.name(), t.name()),
                    s.name().to_string(),
                ]
            })
            .collect();
        out.push_str(&render::table(&["implication", "status"], &edge_rows));
        out
    }
}

/// Runs every decider once at the degree bound and evaluates chain
/// consistency. Rows that error (caps, unsupported carriers) are kept as
/// error rows and their edges are skipped.
pub fn implication_report(pres: &SkewPresentation, degree: u32) -> Result<ImplicationReport> {
    let mut rows = BTreeMap::new();
    for property in PropertyId::all() {
        let outcome = match decide(pres, property, degree) {
            Ok(v) => RowOutcome::Verdict(Box::new(v)),
            Err(e) => RowOutcome::Error(e.to_string()),
        };
        rows.insert(property.name(), outcome);
    }
    let edges = EDGES
        .iter()
        .map(|(from, to)| {
            let status = match (
                rows[from.name()].verdict(),
                rows[to.name()].verdict(),
            ) {
                (Some(f), Some(t)) => {
                    if matches!(f.status, VerdictStatus::Holds) && t.is_definitive_failure() {
                        EdgeStatus::Inconsistent
                    } else {
                        EdgeStatus::Consistent
                    }
                }
                _ => EdgeStatus::Skipped,
            };
            (*from, *to, status)
        })
        .collect();
    Ok(ImplicationReport {
        degree,
        rows,
        edges,
    })
}
