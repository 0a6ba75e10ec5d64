//! Ring/presentation definition documents: a JSON tree with top-level
//! keys `ring`, `extension`, `order`, `flags`. Unknown keys are rejected
//! and the serialization is canonical (fixed field order), so documents
//! round-trip bit-exactly.

use crate::expr::parse_constant;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use spbw_core::algebra::{
    validate_presentation, MonomialOrder, PresentationData, SkewPresentation,
};
use spbw_core::ring::maps::{
    product_swap_table, DeltaBody, EndoBody, StructuredDelta, StructuredEndo,
};
use spbw_core::ring::{
    validate_ring, ConcreteRing, EndoMap, RingDescriptor, SigmaDerivation,
};
use spbw_core::{Caps, Error};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DefinitionDocument {
    pub ring: RingDescriptor,
    pub extension: ExtensionSpec,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<OrderSpec>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub flags: Option<FlagSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtensionSpec {
    pub n: usize,
    pub vars: Vec<VarSpec>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub c: Vec<CSpec>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub r: Vec<RSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VarSpec {
    pub sigma: MapSpec,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<MapSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapSpec {
    Named {
        name: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        factor: Option<String>,
    },
    Table {
        table: Vec<u32>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CSpec {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RSpec {
    pub i: usize,
    pub j: usize,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderSpec {
    pub kind: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlagSpec {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bijective: Option<bool>,
    #[serde(
        rename = "quasi-commutative",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub quasi_commutative: Option<bool>,
}

/// Recursive key whitelist: serde's internally tagged enums ignore
/// unknown fields, so the schema check runs on the raw value first.
fn check_keys(value: &Value, schema: &str) -> Result<(), Error> {
    let obj = match value.as_object() {
        Some(o) => o,
        None => return Ok(()),
    };
    let allowed: &[&str] = match schema {
        "top" => &["ring", "extension", "order", "flags"],
        "ring" => &[
            "kind", "size", "add", "mul", "neg", "zero", "one", "modulus", "factors", "base",
            "prime",
        ],
        "extension" => &["n", "vars", "c", "r"],
        "var" => &["sigma", "delta"],
        "map" => &["name", "factor", "table"],
        "c" => &["i", "j", "value"],
        "r" => &["i", "j", "values"],
        "order" => &["kind"],
        "flags" => &["bijective", "quasi-commutative"],
        _ => unreachable!(),
    };
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(Error::Invalid(format!(
                "unknown key '{key}' in {schema} section"
            )));
        }
    }
    let child = |key: &str, schema: &str| -> Result<(), Error> {
        if let Some(v) = obj.get(key) {
            check_keys(v, schema)?;
        }
        Ok(())
    };
    match schema {
        "top" => {
            child("ring", "ring")?;
            child("extension", "extension")?;
            child("order", "order")?;
            child("flags", "flags")?;
        }
        "ring" => {
            if let Some(Value::Array(factors)) = obj.get("factors") {
                for f in factors {
                    check_keys(f, "ring")?;
                }
            }
            child("base", "ring")?;
        }
        "extension" => {
            if let Some(Value::Array(vars)) = obj.get("vars") {
                for v in vars {
                    check_keys(v, "var")?;
                }
            }
            for key in ["c", "r"] {
                if let Some(Value::Array(entries)) = obj.get(key) {
                    for e in entries {
                        check_keys(e, key)?;
                    }
                }
            }
        }
        "var" => {
            child("sigma", "map")?;
            child("delta", "map")?;
        }
        _ => {}
    }
    Ok(())
}

pub fn parse_document(text: &str) -> Result<DefinitionDocument, Error> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("invalid JSON: {e}")))?;
    check_keys(&value, "top")?;
    serde_json::from_value(value).map_err(|e| Error::Invalid(format!("invalid document: {e}")))
}

/// Canonical serialization: fixed field order, two-space indentation.
pub fn render_document(doc: &DefinitionDocument) -> String {
    serde_json::to_string_pretty(doc).expect("document serializes")
}

fn resolve_sigma(
    ring: &Arc<ConcreteRing>,
    spec: &MapSpec,
    caps: &Caps,
) -> Result<EndoMap, Error> {
    match spec {
        MapSpec::Table { table } => EndoMap::from_table(ring, table.clone()),
        MapSpec::Named { name, factor } => match name.as_str() {
            "identity" => Ok(EndoMap::identity(ring)),
            "swap" => EndoMap::from_table(ring, product_swap_table(ring)?),
            "eval-at-zero" => EndoMap::from_structured(ring, StructuredEndo::PolyEvalZero, caps),
            "scale-t" => {
                let factor = factor
                    .as_ref()
                    .ok_or_else(|| Error::Invalid("scale-t needs a factor".into()))?;
                let rational = parse_rational(factor)?;
                EndoMap::from_structured(ring, StructuredEndo::MatrixScaleT(rational), caps)
            }
            other => Err(Error::Invalid(format!("unknown sigma name '{other}'"))),
        },
    }
}

fn resolve_delta(
    ring: &Arc<ConcreteRing>,
    sigma: &EndoMap,
    spec: Option<&MapSpec>,
    caps: &Caps,
) -> Result<SigmaDerivation, Error> {
    match spec {
        None => Ok(SigmaDerivation::zero(ring, sigma.clone())),
        Some(MapSpec::Table { table }) => {
            SigmaDerivation::from_table(ring, sigma.clone(), table.clone())
        }
        Some(MapSpec::Named { name, .. }) => match name.as_str() {
            "zero" => Ok(SigmaDerivation::zero(ring, sigma.clone())),
            "d-dt" => SigmaDerivation::from_structured(
                ring,
                sigma.clone(),
                StructuredDelta::PolyDerivT,
                caps,
            ),
            other => Err(Error::Invalid(format!("unknown delta name '{other}'"))),
        },
    }
}

fn parse_rational(text: &str) -> Result<num::rational::BigRational, Error> {
    let parts: Vec<&str> = text.split('/').collect();
    let parse_int = |s: &str| -> Result<num::BigInt, Error> {
        s.trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("bad rational '{text}'")))
    };
    match parts.as_slice() {
        [n] => Ok(num::rational::BigRational::from_integer(parse_int(n)?)),
        [n, d] => Ok(num::rational::BigRational::new(
            parse_int(n)?,
            parse_int(d)?,
        )),
        _ => Err(Error::Invalid(format!("bad rational '{text}'"))),
    }
}

/// Builds the validated ring and presentation from a document.
pub fn build(
    doc: &DefinitionDocument,
    caps: Caps,
) -> Result<(Arc<ConcreteRing>, Arc<SkewPresentation>), Error> {
    let ring = validate_ring(&doc.ring, &caps)?;
    if doc.extension.vars.len() != doc.extension.n {
        return Err(Error::Invalid(format!(
            "extension declares n={} but lists {} variables",
            doc.extension.n,
            doc.extension.vars.len()
        )));
    }
    let mut sigmas = Vec::new();
    let mut deltas = Vec::new();
    for var in &doc.extension.vars {
        let sigma = resolve_sigma(&ring, &var.sigma, &caps)?;
        let delta = resolve_delta(&ring, &sigma, var.delta.as_ref(), &caps)?;
        sigmas.push(sigma);
        deltas.push(delta);
    }
    let mut c = BTreeMap::new();
    for spec in &doc.extension.c {
        c.insert((spec.i, spec.j), parse_constant(&ring, &spec.value)?);
    }
    let mut r_consts = BTreeMap::new();
    for spec in &doc.extension.r {
        let values: Result<Vec<_>, Error> = spec
            .values
            .iter()
            .map(|v| parse_constant(&ring, v))
            .collect();
        r_consts.insert((spec.i, spec.j), values?);
    }
    let order = match &doc.order {
        None => MonomialOrder::DegLex,
        Some(spec) => MonomialOrder::from_name(&spec.kind)
            .ok_or_else(|| Error::Invalid(format!("unknown monomial order '{}'", spec.kind)))?,
    };
    let (declared_bijective, declared_quasi_commutative) = match &doc.flags {
        None => (None, None),
        Some(f) => (f.bijective, f.quasi_commutative),
    };
    let pres = validate_presentation(
        PresentationData {
            ring: ring.clone(),
            sigmas,
            deltas,
            c,
            r_consts,
            order,
            declared_quasi_commutative,
            declared_bijective,
        },
        caps,
        16,
    )?;
    Ok((ring, pres))
}

/// Serializes a validated presentation back into document form.
pub fn export(ring: &ConcreteRing, pres: &SkewPresentation) -> DefinitionDocument {
    let map_spec = |endo: &EndoMap| -> MapSpec {
        match endo.body() {
            EndoBody::Table(t) => {
                if endo.is_identity(ring) {
                    MapSpec::Named {
                        name: "identity".into(),
                        factor: None,
                    }
                } else {
                    MapSpec::Table { table: t.clone() }
                }
            }
            EndoBody::Structured(s) => match s {
                StructuredEndo::Identity => MapSpec::Named {
                    name: "identity".into(),
                    factor: None,
                },
                StructuredEndo::MatrixScaleT(q) => MapSpec::Named {
                    name: "scale-t".into(),
                    factor: Some(format!("{}/{}", q.numer(), q.denom())),
                },
                StructuredEndo::PolyEvalZero => MapSpec::Named {
                    name: "eval-at-zero".into(),
                    factor: None,
                },
                StructuredEndo::FractionLift(_) => MapSpec::Named {
                    name: "identity".into(),
                    factor: None,
                },
            },
        }
    };
    let delta_spec = |delta: &SigmaDerivation| -> Option<MapSpec> {
        if delta.is_zero_map() {
            return None;
        }
        Some(match delta.body() {
            DeltaBody::Table(t) => MapSpec::Table { table: t.clone() },
            DeltaBody::Structured(StructuredDelta::PolyDerivT) => MapSpec::Named {
                name: "d-dt".into(),
                factor: None,
            },
            DeltaBody::Structured(_) => MapSpec::Named {
                name: "zero".into(),
                factor: None,
            },
        })
    };
    let n = pres.n();
    let vars: Vec<VarSpec> = (1..=n)
        .map(|i| VarSpec {
            sigma: map_spec(pres.sigma(i)),
            delta: delta_spec(pres.delta(i)),
        })
        .collect();
    let mut c = Vec::new();
    let mut r = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let value = pres.c_const(i, j);
            if !ring.eq(value, &ring.one()) {
                c.push(CSpec {
                    i,
                    j,
                    value: ring.render(value),
                });
            }
            let vec = pres.r_const(i, j);
            if vec.iter().any(|v| !ring.is_zero(v)) {
                r.push(RSpec {
                    i,
                    j,
                    values: vec.iter().map(|v| ring.render(v)).collect(),
                });
            }
        }
    }
    DefinitionDocument {
        ring: ring.descriptor().clone(),
        extension: ExtensionSpec { n, vars, c, r },
        order: Some(OrderSpec {
            kind: pres.order().name().into(),
        }),
        flags: Some(FlagSpec {
            bijective: Some(pres.is_bijective()),
            quasi_commutative: Some(pres.is_quasi_commutative()),
        }),
    }
}
