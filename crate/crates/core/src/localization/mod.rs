//! Regular elements, Ore condition checks, desk-scale rings of fractions,
//! extended maps on fractions, and the quotient-ring Armendariz transfer
//! check.
//!
//! Finite rings localize onto themselves (regular elements of a finite
//! ring are units); commutative structured rings get an honest pair
//! representation with canonical reduction. Nothing more is implemented.

use crate::algebra::presentation::{validate_presentation, PresentationData};
use crate::algebra::{MonomialOrder, SkewPresentation};
use crate::deciders::{decide, PropertyId};
use crate::error::Error;
use crate::ring::maps::{DeltaBody, EndoBody, StructuredDelta, StructuredEndo};
use crate::ring::{
    validate_ring, ConcreteRing, EndoMap, RElem, RingDescriptor, SigmaDerivation,
};
use crate::theorems::{NamedCheck, TheoremId, TheoremReport, TheoremStatus, Tri};
use crate::verdict::{Verdict, Witness};
use crate::{Caps, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A verified multiplicative subset: 1 ∈ S, 0 ∉ S, closed under products.
#[derive(Debug, Clone)]
pub struct MultiplicativeSet {
    ring: Arc<ConcreteRing>,
    spec: SetSpec,
    subset_of_regular: bool,
}

#[derive(Debug, Clone)]
enum SetSpec {
    /// Explicit element list (finite rings).
    Explicit(Vec<RElem>),
    /// Every regular element of a structured ring.
    AllRegular,
}

impl MultiplicativeSet {
    pub fn explicit(ring: Arc<ConcreteRing>, elements: Vec<RElem>) -> Result<MultiplicativeSet> {
        let one = ring.one();
        if !elements.iter().any(|e| ring.eq(e, &one)) {
            return Err(Error::Invalid("multiplicative set must contain 1".into()));
        }
        if elements.iter().any(|e| ring.is_zero(e)) {
            return Err(Error::Invalid("multiplicative set must exclude 0".into()));
        }
        for a in &elements {
            ring.check_member(a)?;
            for b in &elements {
                let prod = ring.mul(a, b);
                if !elements.iter().any(|e| ring.eq(e, &prod)) {
                    return Err(Error::Invalid(format!(
                        "set is not closed under products: {}·{}",
                        ring.render(a),
                        ring.render(b)
                    )));
                }
            }
        }
        let subset_of_regular = elements.iter().all(|e| ring.is_regular(e));
        Ok(MultiplicativeSet {
            ring,
            spec: SetSpec::Explicit(elements),
            subset_of_regular,
        })
    }

    /// The set of all regular elements of a structured commutative ring.
    pub fn all_regular(ring: Arc<ConcreteRing>) -> Result<MultiplicativeSet> {
        if ring.is_finite() {
            let elems = regular_elements(&ring)?;
            return MultiplicativeSet::explicit(ring, elems);
        }
        Ok(MultiplicativeSet {
            ring,
            spec: SetSpec::AllRegular,
            subset_of_regular: true,
        })
    }

    pub fn ring(&self) -> &Arc<ConcreteRing> {
        &self.ring
    }

    pub fn contains(&self, e: &RElem) -> bool {
        match &self.spec {
            SetSpec::Explicit(v) => v.iter().any(|s| self.ring.eq(s, e)),
            SetSpec::AllRegular => self.ring.is_regular(e),
        }
    }

    pub fn elements(&self) -> Option<&[RElem]> {
        match &self.spec {
            SetSpec::Explicit(v) => Some(v),
            SetSpec::AllRegular => None,
        }
    }

    pub fn is_subset_of_regular(&self) -> bool {
        self.subset_of_regular
    }

    /// Deterministic denominator sample.
    fn sample(&self, count: u32, seed: u64) -> Vec<RElem> {
        match &self.spec {
            SetSpec::Explicit(v) => v.clone(),
            SetSpec::AllRegular => self
                .ring
                .sample_elements(count, seed)
                .into_iter()
                .filter(|e| self.ring.is_regular(e))
                .collect(),
        }
    }
}

/// S₀(R): the two-sided regular elements of a finite ring.
pub fn regular_elements(ring: &ConcreteRing) -> Result<Vec<RElem>> {
    let f = ring.require_finite("regular element enumeration")?;
    Ok((0..f.size())
        .filter(|&s| f.is_regular_i(s))
        .map(|s| ring.elem(s))
        .collect())
}

/// Quantifier check of the left (or right) Ore condition: for a ∈ R,
/// s ∈ S there exist s′ ∈ S, a′ ∈ R with s′a = a′s (resp. as′ = sa′).
pub fn check_ore(ring: &ConcreteRing, set: &MultiplicativeSet, left: bool) -> Result<Verdict> {
    if !ring.is_finite() {
        if ring.is_commutative() {
            // s′ = s, a′ = a.
            return Ok(Verdict::holds(0));
        }
        return Err(Error::UnsupportedInfinite(
            "Ore check on a noncommutative structured ring",
        ));
    }
    let elems = ring.elements()?;
    let dens = set
        .elements()
        .expect("finite sets are explicit")
        .to_vec();
    let mut examined = 0;
    for a in &elems {
        for s in &dens {
            examined += 1;
            let ok = dens.iter().any(|sp| {
                elems.iter().any(|ap| {
                    if left {
                        ring.eq(&ring.mul(sp, a), &ring.mul(ap, s))
                    } else {
                        ring.eq(&ring.mul(a, sp), &ring.mul(s, ap))
                    }
                })
            });
            if !ok {
               return Ok(Verdict::fails(
                    Witness::OreFail {
                        a: ring.elem_w(a),
                        s: ring.elem_w(s),
                        left,
                    },
                    examined,
                ));
            }
        }
    }
    Ok(Verdict::holds(examined))
}

/// A constructed ring of fractions.
#[derive(Debug, Clone)]
pub struct FractionRing {
    base: Arc<ConcreteRing>,
    denominators: MultiplicativeSet,
    kind: FractionKind,
}

#[derive(Debug, Clone)]
enum FractionKind {
    /// Finite base: every denominator is a unit, so a/s ↦ s⁻¹a lands in
    /// the base ring itself.
    FiniteIdentity,
    /// Pair representation over a commutative structured base.
    StructuredPairs { carrier: Arc<ConcreteRing> },
}

impl FractionRing {
    pub fn base(&self) -> &Arc<ConcreteRing> {
        &self.base
    }

    pub fn denominators(&self) -> &MultiplicativeSet {
        &self.denominators
    }

    /// The ring the fractions live in: the base itself for finite rings,
    /// the pair carrier otherwise.
    pub fn carrier(&self) -> &Arc<ConcreteRing> {
        match &self.kind {
            FractionKind::FiniteIdentity => &self.base,
            FractionKind::StructuredPairs { carrier } => carrier,
        }
    }

    pub fn is_identity_isomorphism(&self) -> bool {
        matches!(self.kind, FractionKind::FiniteIdentity)
    }

    /// The left fraction s⁻¹·a.
    pub fn fraction(&self, a: &RElem, s: &RElem) -> Result<RElem> {
        self.base.check_member(a)?;
        self.base.check_member(s)?;
        if !self.denominators.contains(s) {
            return Err(Error::DenominatorNotRegular(self.base.render(s)));
        }
        match &self.kind {
            FractionKind::FiniteIdentity => {
                let f = self.base.finite().unwrap();
                let inv = f
                    .inverse_i(self.base.idx(s))
                    .ok_or_else(|| Error::DenominatorNotRegular(self.base.render(s)))?;
                Ok(self.base.mul(&self.base.elem(inv), a))
            }
            FractionKind::StructuredPairs { carrier } => {
                let s_struct = carrier.structured().unwrap();
                let fb = match s_struct {
                    crate::ring::StructuredRing::Fraction(fb) => fb,
                    _ => unreachable!(),
                };
                Ok(RElem {
                    ring: carrier.id(),
                    repr: fb.reduce(a.repr.clone(), s.repr.clone()),
                })
            }
        }
    }

    /// Embeds a base element as a/1.
    pub fn embed(&self, a: &RElem) -> Result<RElem> {
        self.fraction(a, &self.base.one())
    }
}

/// Builds S⁻¹R. Finite path: verify S ⊆ S₀(R) and the Ore conditions,
/// then return the identity isomorphism onto R. Structured path:
/// commutative pair representation with canonical reduction.
pub fn localize(ring: Arc<ConcreteRing>, set: MultiplicativeSet) -> Result<FractionRing> {
    if !set.is_subset_of_regular() {
        let bad = set
            .elements()
            .and_then(|v| v.iter().find(|e| !ring.is_regular(e)).cloned());
        return Err(Error::DenominatorNotRegular(
            bad.map(|e| ring.render(&e)).unwrap_or_default(),
        ));
    }
    if ring.is_finite() {
        for left in [true, false] {
            let v = check_ore(&ring, &set, left)?;
            if let Some(w) = v.witness() {
                return Err(Error::NotOre(w.brief()));
            }
        }
        // Pigeonhole: multiplication by a regular element is injective on
        // a finite ring, hence surjective, so every denominator is a
        // unit.
        let f = ring.finite().unwrap();
        for s in set.elements().unwrap() {
            if f.inverse_i(ring.idx(s)).is_none() {
                return Err(Error::DenominatorNotRegular(ring.render(s)));
            }
        }
        return Ok(FractionRing {
            base: ring,
            denominators: set,
            kind: FractionKind::FiniteIdentity,
        });
    }
    if !ring.is_commutative() {
        return Err(Error::UnsupportedInfinite(
            "localization of a noncommutative structured ring",
        ));
    }
    let carrier = validate_ring(
        &RingDescriptor::FractionField {
            base: Box::new(ring.descriptor().clone()),
        },
        &Caps::default(),
    )?;
    Ok(FractionRing {
        base: ring,
        denominators: set,
        kind: FractionKind::StructuredPairs { carrier },
    })
}

/// σ̄ and δ̄ on a fraction ring, per the left-fraction formulas
/// σ̄(a/s) = σ(a)/σ(s) and δ̄(a/s) = −δ(s)/σ(s)·(a/s) + δ(a)/σ(s).
pub struct ExtendedMapOnFractions {
    pub sigma: EndoMap,
    pub delta: SigmaDerivation,
}

/// Requires σ(S) ⊆ S with σ bijective (so σ(S) = S on the regular set).
pub fn extend_maps_to_fractions(
    sigma: &EndoMap,
    delta: &SigmaDerivation,
    fractions: &FractionRing,
) -> Result<ExtendedMapOnFractions> {
    let base = fractions.base();
    if !sigma.is_bijective() {
        return Err(Error::SigmaDoesNotPreserveS(
            "sigma is not bijective".into(),
        ));
    }
    for s in fractions
        .denominators()
        .sample(24, Caps::default().sample_seed)
    {
        let image = sigma.apply(base, &s);
        if !fractions.denominators().contains(&image) {
            return Err(Error::SigmaDoesNotPreserveS(format!(
                "sigma({}) = {} leaves the denominator set",
                base.render(&s),
                base.render(&image)
            )));
        }
    }
    match &fractions.kind {
        FractionKind::FiniteIdentity => Ok(ExtendedMapOnFractions {
            sigma: sigma.clone(),
            delta: delta.clone(),
        }),
        FractionKind::StructuredPairs { carrier } => {
            let inner_sigma = match sigma.body() {
                EndoBody::Structured(s) => s.clone(),
                EndoBody::Table(_) => unreachable!("structured carrier"),
            };
            let inner_delta = match delta.body() {
                DeltaBody::Structured(d) => d.clone(),
                DeltaBody::Table(_) => unreachable!("structured carrier"),
            };
            let caps = Caps::default();
            let lifted_sigma = EndoMap::from_structured(
                carrier,
                StructuredEndo::FractionLift(Box::new(inner_sigma.clone())),
                &caps,
            )?;
            let lifted_delta = SigmaDerivation::from_structured(
                carrier,
                lifted_sigma.clone(),
                StructuredDelta::FractionLift {
                    sigma: Box::new(inner_sigma),
                    delta: Box::new(inner_delta),
                },
                &caps,
            )?;
            Ok(ExtendedMapOnFractions {
                sigma: lifted_sigma,
                delta: lifted_delta,
            })
        }
    }
}

/// Builds the induced presentation over Q(R) and compares the weak
/// skew-Armendariz verdicts of R and Q(R).
pub fn verify_localization(pres: &SkewPresentation, degree: u32, instance: &str) -> TheoremReport {
    match verify_localization_inner(pres, degree) {
        Ok((hypotheses, conclusions, status)) => TheoremReport {
            theorem: TheoremId::LocalizationArmendariz,
            instance: instance.to_string(),
            degree,
            hypotheses,
            conclusions,
            status,
        },
        Err(e) => TheoremReport {
            theorem: TheoremId::LocalizationArmendariz,
            instance: instance.to_string(),
            degree,
            hypotheses: vec![NamedCheck::new("Q(R) constructible", Tri::Unknown(e.to_string()))],
            conclusions: vec![],
            status: match e {
                Error::SigmaDoesNotPreserveS(_) | Error::UnsupportedInfinite(_) => {
                    TheoremStatus::HypothesesNotMet
                }
                other => TheoremStatus::Inconclusive(other.to_string()),
            },
        },
    }
}

type LocalizationOutcome = (Vec<NamedCheck>, Vec<NamedCheck>, TheoremStatus);

fn verify_localization_inner(
    pres: &SkewPresentation,
    degree: u32,
) -> Result<LocalizationOutcome> {
    let ring = pres.ring().clone();
    let set = MultiplicativeSet::all_regular(ring.clone())?;
    let mut hypotheses = Vec::new();

    if ring.is_finite() {
        let left = check_ore(&ring, &set, true)?;
        let right = check_ore(&ring, &set, false)?;
        hypotheses.push(NamedCheck::new("left Ore at S0(R)", Tri::from_verdict(&left)));
        hypotheses.push(NamedCheck::new(
            "right Ore at S0(R)",
            Tri::from_verdict(&right),
        ));
        if left.is_definitive_failure() || right.is_definitive_failure() {
            return Ok((hypotheses, vec![], TheoremStatus::HypothesesNotMet));
        }
        let fractions = localize(ring.clone(), set)?;
        // Elementwise isomorphism: a/1 = a and (a/s)·s = a.
        let mut iso_ok = true;
        for a in ring.elements()? {
            if !ring.eq(&fractions.fraction(&a, &ring.one())?, &a) {
                iso_ok = false;
            }
            for s in fractions.denominators().elements().unwrap() {
                let q = fractions.fraction(&a, s)?;
                if !ring.eq(&ring.mul(s, &q), &a) {
                    iso_ok = false;
                }
            }
        }
        hypotheses.push(NamedCheck::new(
            "Q(R) isomorphic to R elementwise",
            if iso_ok {
                Tri::True
            } else {
                Tri::False("isomorphism check failed".into())
            },
        ));
        if !iso_ok {
            return Ok((
                hypotheses,
                vec![],
                TheoremStatus::Violation("finite localization is not the identity".into()),
            ));
        }
        // Q(R) ≅ R makes agreement structural; run the decider once and
        // report it for both sides.
        let verdict = decide(pres, PropertyId::WeakSkewArmendariz, degree)?;
        let tri = Tri::from_verdict(&verdict);
        let conclusions = vec![
            NamedCheck::new("R weak skew-Armendariz", tri.clone()),
            NamedCheck::new("Q(R) weak skew-Armendariz", tri),
        ];
        return Ok((hypotheses, conclusions, TheoremStatus::Consistent));
    }

    // Structured commutative path.
    let fractions = localize(ring.clone(), set)?;
    let mut lifted_sigmas = Vec::new();
    let mut lifted_deltas = Vec::new();
    for i in 1..=pres.n() {
        let ext = extend_maps_to_fractions(pres.sigma(i), pres.delta(i), &fractions)?;
        lifted_sigmas.push(ext.sigma);
        lifted_deltas.push(ext.delta);
    }
    hypotheses.push(NamedCheck::new("sigma_i(S) = S for all i", Tri::True));
    let carrier = fractions.carrier().clone();
    let mut c = BTreeMap::new();
    for i in 1..=pres.n() {
        for j in (i + 1)..=pres.n() {
            c.insert((i, j), fractions.embed(pres.c_const(i, j))?);
        }
    }
    let mut r_consts = BTreeMap::new();
    for i in 1..=pres.n() {
        for j in (i + 1)..=pres.n() {
            let mut v = Vec::new();
            for r in pres.r_const(i, j) {
                v.push(fractions.embed(r)?);
            }
            r_consts.insert((i, j), v);
        }
    }
    let q_pres = validate_presentation(
        PresentationData {
            ring: carrier,
            sigmas: lifted_sigmas,
            deltas: lifted_deltas,
            c,
            r_consts,
            order: MonomialOrder::DegLex,
            declared_quasi_commutative: None,
            declared_bijective: None,
        },
        *pres.caps(),
        12,
    )?;
    let r_side = Tri::from_result(decide(pres, PropertyId::WeakSkewArmendariz, degree));
    let q_side = Tri::from_result(decide(&q_pres, PropertyId::WeakSkewArmendariz, degree));
    let conclusions = vec![
        NamedCheck::new("R weak skew-Armendariz", r_side.clone()),
        NamedCheck::new("Q(R) weak skew-Armendariz", q_side.clone()),
    ];
    let status = match (&r_side, &q_side) {
        (Tri::False(_), Tri::False(_)) => TheoremStatus::Consistent,
        (Tri::True | Tri::TrueUpTo(_), Tri::True | Tri::TrueUpTo(_)) => TheoremStatus::Consistent,
        _ => TheoremStatus::Inconclusive(
            "bounded verdicts disagree across the localization".into(),
        ),
    };
    Ok((hypotheses, conclusions, status))
}
