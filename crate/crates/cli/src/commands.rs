//! Command implementations shared by the binary and the test suites.
//!
//! Exit codes: 0 = Holds/Consistent/success, 1 = FailsWithWitness or
//! Violation (witness printed), 2 = VerifiedUpTo/Inconclusive (bound
//! printed), 64 = usage error, 65 = invalid definition file, 70 = an
//! internal cap was exceeded.

use crate::doc;
use crate::expr;
use serde_json::json;
use spbw_core::algebra::SkewPresentation;
use spbw_core::catalog;
use spbw_core::deciders::{decide, implication_report, replay, PropertyId};
use spbw_core::render;
use spbw_core::theorems::{verify, TheoremId, TheoremStatus};
use spbw_core::verdict::{Verdict, VerdictStatus};
use spbw_core::{Caps, Error};
use std::sync::Arc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_BOUNDED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_BAD_DEFINITION: i32 = 65;
pub const EXIT_CAP: i32 = 70;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
}

impl Format {
    pub fn from_flag(flag: &str) -> Result<Format, Error> {
        match flag {
            "human" => Ok(Format::Human),
            "json-like-tree" | "json" => Ok(Format::Json),
            other => Err(Error::Invalid(format!("unknown format '{other}'"))),
        }
    }
}

#[derive(Debug)]
pub struct CmdOutput {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdOutput {
    fn ok(stdout: String) -> CmdOutput {
        CmdOutput {
            exit: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(exit: i32, stderr: String) -> CmdOutput {
        CmdOutput {
            exit,
            stdout: String::new(),
            stderr,
        }
    }
}

/// A resolved instance: from a definition file or the catalog.
pub struct Instance {
    pub name: String,
    pub presentation: Arc<SkewPresentation>,
}

pub fn load_file(path: &str, caps: Caps) -> Result<Instance, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
    let document = doc::parse_document(&text)?;
    let (_ring, presentation) = doc::build(&document, caps)?;
    Ok(Instance {
        name: path.to_string(),
        presentation,
    })
}

pub fn load_catalog(name: &str, caps: Caps) -> Result<Instance, Error> {
    let entry = catalog::load_with_caps(name, caps)?;
    Ok(Instance {
        name: name.to_string(),
        presentation: entry.presentation,
    })
}

fn search_error_exit(e: &Error) -> i32 {
    match e {
        Error::SearchSpaceCapExceeded { .. }
        | Error::SizeCapExceeded { .. }
        | Error::RewriteBudgetExceeded { .. }
        | Error::ClosureDiverges { .. }
        | Error::UnsupportedInfinite(_) => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

pub fn cmd_validate(instance: &Instance, format: Format) -> CmdOutput {
    let pres = &instance.presentation;
    let ring = pres.ring();
    match format {
        Format::Json => CmdOutput::ok(
            serde_json::to_string_pretty(&json!({
                "instance": instance.name,
                "ring-size": ring.size(),
                "variables": pres.n(),
                "quasi-commutative": pres.is_quasi_commutative(),
                "bijective": pres.is_bijective(),
                "status": "valid",
            }))
            .unwrap(),
        ),
        Format::Human => CmdOutput::ok(format!(
            "{}: valid presentation; ring size {}, {} variable(s), quasi-commutative: {}, bijective: {}",
            instance.name,
            ring.size()
                .map(|s| s.to_string())
                .unwrap_or_else(|| "infinite".into()),
            pres.n(),
            pres.is_quasi_commutative(),
            pres.is_bijective(),
        )),
    }
}

pub fn cmd_eval(instance: &Instance, input: &str, format: Format) -> CmdOutput {
    let tree = match expr::parse(input) {
        Ok(t) => t,
        Err(e) => return CmdOutput::fail(EXIT_USAGE, format!("expression error: {e}")),
    };
    match expr::eval(&instance.presentation, &tree) {
        Ok(poly) => {
            let text = instance.presentation.render_poly(&poly);
            match format {
                Format::Json => CmdOutput::ok(
                    serde_json::to_string_pretty(&json!({ "normal-form": text })).unwrap(),
                ),
                Format::Human => CmdOutput::ok(text),
            }
        }
        Err(e) => CmdOutput::fail(search_error_exit(&e), format!("evaluation error: {e}")),
    }
}

fn verdict_exit(v: &Verdict) -> i32 {
    match v.status {
        VerdictStatus::Holds => EXIT_OK,
        VerdictStatus::FailsWithWitness(_) => EXIT_FAILS,
        VerdictStatus::VerifiedUpTo(_) => EXIT_BOUNDED,
    }
}

pub fn cmd_check(instance: &Instance, property: &str, degree: u32, format: Format) -> CmdOutput {
    let Some(property) = PropertyId::from_name(property) else {
        return CmdOutput::fail(EXIT_USAGE, format!("unknown property '{property}'"));
    };
    match decide(&instance.presentation, property, degree) {
        Ok(verdict) => {
            let stdout = match format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "instance": instance.name,
                    "property": property.name(),
                    "degree": degree,
                    "verdict": verdict.to_json(),
                }))
                .unwrap(),
                Format::Human => format!(
                    "{} on {}: {} ({} candidates examined in {:?})",
                    property.name(),
                    instance.name,
                    verdict.summary(),
                    verdict.stats.examined,
                    verdict.stats.elapsed,
                ),
            };
            CmdOutput {
                exit: verdict_exit(&verdict),
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => CmdOutput::fail(search_error_exit(&e), format!("decision error: {e}")),
    }
}

pub fn cmd_witness(instance: &Instance, property: &str, degree: u32, format: Format) -> CmdOutput {
    let Some(property) = PropertyId::from_name(property) else {
        return CmdOutput::fail(EXIT_USAGE, format!("unknown property '{property}'"));
    };
    match decide(&instance.presentation, property, degree) {
        Ok(verdict) => match verdict.witness() {
            Some(w) => {
                let replays = replay(&instance.presentation, property, w).unwrap_or(false);
                let stdout = match format {
                    Format::Json => serde_json::to_string_pretty(&json!({
                        "instance": instance.name,
                        "property": property.name(),
                        "witness": w.to_json(),
                        "replays": replays,
                    }))
                    .unwrap(),
                    Format::Human => format!("{}\nreplays: {replays}", w.brief()),
                };
                CmdOutput {
                    exit: EXIT_FAILS,
                    stdout,
                    stderr: String::new(),
                }
            }
            None => {
                let stdout = match format {
                    Format::Json => serde_json::to_string_pretty(&json!({
                        "instance": instance.name,
                        "property": property.name(),
                        "witness": Option::<()>::None,
                        "verdict": verdict.to_json(),
                    }))
                    .unwrap(),
                    Format::Human => format!("none ({})", verdict.summary()),
                };
                CmdOutput {
                    exit: verdict_exit(&verdict),
                    stdout,
                    stderr: String::new(),
                }
            }
        },
        Err(e) => CmdOutput::fail(search_error_exit(&e), format!("decision error: {e}")),
    }
}

pub fn cmd_verify(instance: &Instance, theorem: &str, degree: u32, format: Format) -> CmdOutput {
    let Some(theorem) = TheoremId::from_name(theorem) else {
        return CmdOutput::fail(EXIT_USAGE, format!("unknown theorem '{theorem}'"));
    };
    let report = verify(theorem, &instance.presentation, degree, &instance.name);
    let exit = match report.status {
        TheoremStatus::Consistent => EXIT_OK,
        TheoremStatus::Violation(_) => EXIT_FAILS,
        TheoremStatus::HypothesesNotMet | TheoremStatus::Inconclusive(_) => EXIT_BOUNDED,
    };
    let stdout = match format {
        Format::Json => serde_json::to_string_pretty(&report.to_json()).unwrap(),
        Format::Human => report.render_human(),
    };
    CmdOutput {
        exit,
        stdout,
        stderr: String::new(),
    }
}

pub fn cmd_report(instance: &Instance, degree: u32, format: Format) -> CmdOutput {
    match implication_report(&instance.presentation, degree) {
        Ok(report) => {
            let exit = if report.inconsistent_count() == 0 {
                EXIT_OK
            } else {
                EXIT_FAILS
            };
            let stdout = match format {
                Format::Json => serde_json::to_string_pretty(&report.to_json()).unwrap(),
                Format::Human => report.render_human(),
            };
            CmdOutput {
                exit,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => CmdOutput::fail(search_error_exit(&e), format!("report error: {e}")),
    }
}

pub fn cmd_run_all(instance: &Instance, degree: u32, format: Format) -> CmdOutput {
    let reports = spbw_core::theorems::run_all(&instance.presentation, degree, &instance.name);
    let violations = reports
        .iter()
        .filter(|r| matches!(r.status, TheoremStatus::Violation(_)))
        .count();
    let stdout = match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "instance": instance.name,
            "degree": degree,
            "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            "violations": violations,
        }))
        .unwrap(),
        Format::Human => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.theorem.name().to_string(),
                        r.status.name().to_string(),
                    ]
                })
                .collect();
            render::table(&["theorem", "status"], &rows)
        }
    };
    CmdOutput {
        exit: if violations == 0 { EXIT_OK } else { EXIT_FAILS },
        stdout,
        stderr: String::new(),
    }
}

pub fn cmd_catalog_list(format: Format) -> CmdOutput {
    match format {
        Format::Json => CmdOutput::ok(
            serde_json::to_string_pretty(&json!({ "entries": catalog::list() })).unwrap(),
        ),
        Format::Human => CmdOutput::ok(catalog::list().join("\n")),
    }
}

pub fn cmd_catalog_export(name: &str, format: Format) -> CmdOutput {
    match catalog::load(name) {
        Ok(entry) => {
            let document = doc::export(&entry.ring, &entry.presentation);
            let text = doc::render_document(&document);
            match format {
                Format::Json | Format::Human => CmdOutput::ok(text),
            }
        }
        Err(e) => CmdOutput::fail(EXIT_USAGE, e.to_string()),
    }
}

pub fn cmd_catalog_expected(name: &str, format: Format) -> CmdOutput {
    match catalog::expected_table(name) {
        Ok(rows) => {
            let stdout = match format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "entry": name,
                    "rows": rows.iter().map(|r| json!({
                        "property": r.property.name(),
                        "degree": r.degree,
                        "expected": format!("{:?}", r.expected),
                        "provenance": r.provenance,
                    })).collect::<Vec<_>>(),
                }))
                .unwrap(),
                Format::Human => {
                    let table_rows: Vec<Vec<String>> = rows
                        .iter()
                        .map(|r| {
                            vec![
                                r.property.name().to_string(),
                                r.degree.to_string(),
                                format!("{:?}", r.expected),
                                r.provenance.to_string(),
                            ]
                        })
                        .collect();
                    render::table(
                        &["property", "degree", "expected", "provenance"],
                        &table_rows,
                    )
                }
            };
            CmdOutput::ok(stdout)
        }
        Err(e) => CmdOutput::fail(EXIT_USAGE, e.to_string()),
    }
}
