//! Concrete coefficient rings: finite Cayley-table rings and structured
//! rings with exact arithmetic, plus their validated endomorphisms,
//! σ-derivations, ideals, and classical property deciders.

pub mod classical;
pub mod finite;
pub mod ideals;
pub mod maps;
pub mod structured;

use crate::error::Error;
use crate::verdict::ElemW;
use crate::{Caps, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

pub use finite::{FiniteRing, FiniteShape};
pub use maps::{EndoMap, SigmaDerivation};
pub use structured::StructuredRing;

/// Content fingerprint identifying a validated ring; elements carry it so
/// that values of different rings are never combined silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingId(pub u64);

/// Element payload.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Repr {
    /// Canonical index into a finite ring.
    Idx(u32),
    Int(BigInt),
    /// (a, t) standing for the matrix (a,t;0,a).
    MatZQ(BigInt, BigRational),
    /// Little-endian coefficients of a Z_p\[t\] element, no trailing zeros.
    Poly(Vec<u32>),
    /// Reduced fraction num/den over a structured base.
    Frac(Box<Repr>, Box<Repr>),
}

/// An element tagged with the ring it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RElem {
    pub ring: RingId,
    pub repr: Repr,
}

/// Declarative description of a coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RingDescriptor {
    #[serde(rename = "finite-table")]
    FiniteTable {
        size: u32,
        add: Vec<Vec<u32>>,
        mul: Vec<Vec<u32>>,
        neg: Vec<u32>,
        zero: u32,
        one: u32,
    },
    #[serde(rename = "modular")]
    Modular {
        modulus: u32,
    },
    #[serde(rename = "direct-product")]
    DirectProduct {
        factors: Vec<RingDescriptor>,
    },
    #[serde(rename = "upper-triangular-2x2")]
    UpperTriangular2x2 {
        base: Box<RingDescriptor>,
    },
    #[serde(rename = "truncated-poly")]
    TruncatedPoly {
        base: Box<RingDescriptor>,
        modulus: Vec<u32>,
    },
    #[serde(rename = "matrix-zq")]
    StructuredMatrixZQ,
    #[serde(rename = "poly-over-field")]
    PolyOverField {
        prime: u32,
    },
    #[serde(rename = "integers")]
    Integers,
    /// Internal: produced by localization, never parsed from documents.
    #[serde(rename = "fraction-field")]
    FractionField {
        base: Box<RingDescriptor>,
    },
}

#[derive(Debug, Clone)]
pub enum RingBody {
    Finite(FiniteRing),
    Structured(StructuredRing),
}

/// A validated ring with its arithmetic.
#[derive(Debug, Clone)]
pub struct ConcreteRing {
    id: RingId,
    descriptor: RingDescriptor,
    body: RingBody,
}

fn fingerprint(descriptor: &RingDescriptor) -> RingId {
    let text = serde_json::to_string(descriptor).expect("descriptor serializes");
    // FNV-1a.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in text.bytes() {
        h ^= byte as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    RingId(h)
}

/// Validates a descriptor and compiles it into a usable ring. Finite
/// kinds are checked exhaustively (all m³ triples); structured kinds hold
/// by construction and are asserted on their generator sets.
pub fn validate_ring(descriptor: &RingDescriptor, caps: &Caps) -> Result<Arc<ConcreteRing>> {
    let body = compile(descriptor, caps)?;
    if let RingBody::Finite(f) = &body {
        if f.size() > caps.ring_size {
            return Err(Error::SizeCapExceeded {
                size: f.size(),
                cap: caps.ring_size,
            });
        }
    }
    let ring = ConcreteRing {
        id: fingerprint(descriptor),
        descriptor: descriptor.clone(),
        body,
    };
    if let RingBody::Structured(s) = &ring.body {
        assert_structured_axioms(s)?;
    }
    Ok(Arc::new(ring))
}

#[allow(clippy::only_used_in_recursion)]
fn compile(descriptor: &RingDescriptor, caps: &Caps) -> Result<RingBody> {
    Ok(match descriptor {
        RingDescriptor::FiniteTable {
            size,
            add,
            mul,
            neg,
            zero,
            one,
        } => {
            let flat = |rows: &Vec<Vec<u32>>| -> Result<Vec<u32>> {
                if rows.len() != *size as usize
                    || rows.iter().any(|r| r.len() != *size as usize)
                {
                    return Err(Error::InvalidTable("table shape mismatch".into()));
                }
                Ok(rows.iter().flatten().copied().collect())
            };
            RingBody::Finite(FiniteRing::from_raw_tables(
                *size,
                flat(add)?,
                flat(mul)?,
                neg.clone(),
                *zero,
                *one,
            )?)
        }
        RingDescriptor::Modular { modulus } => RingBody::Finite(FiniteRing::modular(*modulus)?),
        RingDescriptor::DirectProduct { factors } => {
            let compiled: Result<Vec<FiniteRing>> = factors
                .iter()
                .map(|f| match compile(f, caps)? {
                    RingBody::Finite(r) => Ok(r),
                    RingBody::Structured(_) => Err(Error::UnsupportedInfinite(
                        "direct products are supported for finite factors",
                    )),
                })
                .collect();
            RingBody::Finite(FiniteRing::product(compiled?)?)
        }
        RingDescriptor::UpperTriangular2x2 { base } => match compile(base, caps)? {
            RingBody::Finite(b) => RingBody::Finite(FiniteRing::upper_triangular_2x2(&b)?),
            RingBody::Structured(_) => {
                return Err(Error::UnsupportedInfinite(
                    "upper triangular construction needs a finite base",
                ))
            }
        },
        RingDescriptor::TruncatedPoly { base, modulus } => match compile(base, caps)? {
            RingBody::Finite(b) => RingBody::Finite(FiniteRing::truncated_poly(&b, modulus)?),
            RingBody::Structured(_) => {
                return Err(Error::UnsupportedInfinite(
                    "truncated polynomial construction needs a finite base",
                ))
            }
        },
        RingDescriptor::StructuredMatrixZQ => RingBody::Structured(StructuredRing::MatrixZQ),
        RingDescriptor::PolyOverField { prime } => {
            if !is_prime(*prime) {
                return Err(Error::Invalid(format!("{prime} is not prime")));
            }
            RingBody::Structured(StructuredRing::PolyOverPrime(*prime))
        }
        RingDescriptor::Integers => RingBody::Structured(StructuredRing::Integers),
        RingDescriptor::FractionField { base } => {
            let inner = compile(base, caps)?;
            match inner {
                RingBody::Structured(s) => {
                    if !s.is_commutative() {
                        return Err(Error::UnsupportedInfinite(
                            "fraction rings are built over commutative bases",
                        ));
                    }
                    RingBody::Structured(StructuredRing::Fraction(Box::new(
                        structured::FractionBase {
                            base_id: fingerprint(base),
                            base: s,
                        },
                    )))
                }
                RingBody::Finite(_) => {
                    return Err(Error::Invalid(
                        "finite rings localize to themselves; no fraction carrier needed".into(),
                    ))
                }
            }
        }
    })
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn assert_structured_axioms(s: &StructuredRing) -> Result<()> {
    let gens = s.generator_set();
    let one = s.one();
    for a in &gens {
        if s.mul(a, &one) != *a || s.mul(&one, a) != *a {
            return Err(Error::AxiomViolation {
                axiom: "multiplicative identity",
                witness: s.render(a),
            });
        }
        for b in &gens {
            if s.add(a, b) != s.add(b, a) {
                return Err(Error::AxiomViolation {
                    axiom: "additive commutativity",
                    witness: format!("{}, {}", s.render(a), s.render(b)),
                });
            }
            for c in &gens {
                if s.mul(&s.mul(a, b), c) != s.mul(a, &s.mul(b, c)) {
                    return Err(Error::AxiomViolation {
                        axiom: "multiplicative associativity",
                        witness: format!("{}, {}, {}", s.render(a), s.render(b), s.render(c)),
                    });
                }
                if s.mul(a, &s.add(b, c)) != s.add(&s.mul(a, b), &s.mul(a, c)) {
                    return Err(Error::AxiomViolation {
                        axiom: "left distributivity",
                        witness: format!("{}, {}, {}", s.render(a), s.render(b), s.render(c)),
                    });
                }
            }
        }
    }
    Ok(())
}

impl ConcreteRing {
    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    pub fn body(&self) -> &RingBody {
        &self.body
    }

    pub fn finite(&self) -> Option<&FiniteRing> {
        match &self.body {
            RingBody::Finite(f) => Some(f),
            RingBody::Structured(_) => None,
        }
    }

    pub fn structured(&self) -> Option<&StructuredRing> {
        match &self.body {
            RingBody::Structured(s) => Some(s),
            RingBody::Finite(_) => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.body, RingBody::Finite(_))
    }

    pub fn size(&self) -> Option<u32> {
        self.finite().map(|f| f.size())
    }

    /// Requires a finite body or reports the operation as unsupported.
    pub fn require_finite(&self, what: &'static str) -> Result<&FiniteRing> {
        self.finite().ok_or(Error::UnsupportedInfinite(what))
    }

    fn wrap(&self, repr: Repr) -> RElem {
        RElem {
            ring: self.id,
            repr,
        }
    }

    pub fn elem(&self, idx: u32) -> RElem {
        debug_assert!(self.finite().is_some_and(|f| idx < f.size()));
        self.wrap(Repr::Idx(idx))
    }

    pub fn idx(&self, e: &RElem) -> u32 {
        self.guard(e);
        match &e.repr {
            Repr::Idx(i) => *i,
            _ => panic!("not a finite ring element"),
        }
    }

    fn guard(&self, e: &RElem) {
        assert!(
            e.ring == self.id,
            "ring mismatch: element of another ring used (operation error)"
        );
    }

    pub fn check_member(&self, e: &RElem) -> Result<()> {
        if e.ring != self.id {
            return Err(Error::RingMismatch(
                "element belongs to a different ring".into(),
            ));
        }
        match (&self.body, &e.repr) {
            (RingBody::Finite(f), Repr::Idx(i)) => {
                if *i >= f.size() {
                    Err(Error::RingMismatch("index out of range".into()))
                } else {
                    Ok(())
                }
            }
            (RingBody::Finite(_), _) => Err(Error::RingMismatch(
                "finite ring elements are indices".into(),
            )),
            (RingBody::Structured(s), repr) => s.check_payload(repr),
        }
    }

    pub fn zero(&self) -> RElem {
        match &self.body {
            RingBody::Finite(_) => self.wrap(Repr::Idx(0)),
            RingBody::Structured(s) => self.wrap(s.zero()),
        }
    }

    pub fn one(&self) -> RElem {
        match &self.body {
            RingBody::Finite(f) => self.wrap(Repr::Idx(if f.size() > 1 { 1 } else { 0 })),
            RingBody::Structured(s) => self.wrap(s.one()),
        }
    }

    pub fn add(&self, a: &RElem, b: &RElem) -> RElem {
        self.guard(a);
        self.guard(b);
        match (&self.body, &a.repr, &b.repr) {
            (RingBody::Finite(f), Repr::Idx(x), Repr::Idx(y)) => {
                self.wrap(Repr::Idx(f.add_i(*x, *y)))
            }
            (RingBody::Structured(s), x, y) => self.wrap(s.add(x, y)),
            _ => panic!("payload mismatch"),
        }
    }

    pub fn neg(&self, a: &RElem) -> RElem {
        self.guard(a);
        match (&self.body, &a.repr) {
            (RingBody::Finite(f), Repr::Idx(x)) => self.wrap(Repr::Idx(f.neg_i(*x))),
            (RingBody::Structured(s), x) => self.wrap(s.neg(x)),
            _ => panic!("payload mismatch"),
        }
    }

    pub fn sub(&self, a: &RElem, b: &RElem) -> RElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RElem, b: &RElem) -> RElem {
        self.guard(a);
        self.guard(b);
        match (&self.body, &a.repr, &b.repr) {
            (RingBody::Finite(f), Repr::Idx(x), Repr::Idx(y)) => {
                self.wrap(Repr::Idx(f.mul_i(*x, *y)))
            }
            (RingBody::Structured(s), x, y) => self.wrap(s.mul(x, y)),
            _ => panic!("payload mismatch"),
        }
    }

    pub fn eq(&self, a: &RElem, b: &RElem) -> bool {
        self.guard(a);
        self.guard(b);
        a.repr == b.repr
    }

    pub fn is_zero(&self, a: &RElem) -> bool {
        self.eq(a, &self.zero())
    }

    pub fn render(&self, e: &RElem) -> String {
        self.guard(e);
        match (&self.body, &e.repr) {
            (RingBody::Finite(f), Repr::Idx(i)) => f.label(*i).to_string(),
            (RingBody::Structured(s), repr) => s.render(repr),
            _ => panic!("payload mismatch"),
        }
    }

    pub fn elem_w(&self, e: &RElem) -> ElemW {
        ElemW {
            elem: e.clone(),
            label: self.render(e),
        }
    }

    /// All elements of a finite ring, ascending canonical index.
    pub fn elements(&self) -> Result<Vec<RElem>> {
        let f = self.require_finite("element enumeration")?;
        Ok((0..f.size()).map(|i| self.elem(i)).collect())
    }

    pub fn is_commutative(&self) -> bool {
        match &self.body {
            RingBody::Finite(f) => f.is_commutative(),
            RingBody::Structured(s) => s.is_commutative(),
        }
    }

    pub fn is_regular(&self, e: &RElem) -> bool {
        self.guard(e);
        match (&self.body, &e.repr) {
            (RingBody::Finite(f), Repr::Idx(i)) => f.is_regular_i(*i),
            (RingBody::Structured(s), repr) => s.is_regular(repr),
            _ => panic!("payload mismatch"),
        }
    }

    /// Deterministic sample used on structured rings: the documented
    /// generator set followed by seeded pseudo-random elements. For finite
    /// rings it is every element.
    pub fn sample_elements(&self, extra: u32, seed: u64) -> Vec<RElem> {
        match &self.body {
            RingBody::Finite(f) => (0..f.size()).map(|i| self.elem(i)).collect(),
            RingBody::Structured(s) => {
                let mut out: Vec<RElem> =
                    s.generator_set().into_iter().map(|r| self.wrap(r)).collect();
                out.extend(s.sample(extra, seed).into_iter().map(|r| self.wrap(r)));
                out
            }
        }
    }

    /// Small deterministic element pool for bounded structured searches.
    pub fn small_elements(&self) -> Vec<RElem> {
        match &self.body {
            RingBody::Finite(f) => (0..f.size()).map(|i| self.elem(i)).collect(),
            RingBody::Structured(s) => {
                let mut gens: Vec<Repr> = s.generator_set();
                gens.truncate(6);
                gens.into_iter().map(|r| self.wrap(r)).collect()
            }
        }
    }

    /// Closed-form idempotent list for structured rings.
    pub fn structured_idempotents(&self) -> Option<Vec<RElem>> {
        self.structured()
            .map(|s| s.idempotents().into_iter().map(|r| self.wrap(r)).collect())
    }
}
