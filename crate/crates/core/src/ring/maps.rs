//! Validated endomorphisms and σ-derivations, and the monoid they
//! generate under composition.

use crate::algebra::Exponent;
use crate::error::Error;
use crate::ring::structured::{poly_derivative, StructuredRing};
use crate::ring::{ConcreteRing, RElem, Repr, RingId};
use crate::{Caps, Result};
use num::rational::BigRational;
use num::One;

const CLOSURE_CAP: u32 = 512;
const PER_VAR_POWER_CAP: u32 = 256;

/// Closed-form endomorphisms of structured rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuredEndo {
    Identity,
    /// (a,t) -> (a, q·t) on MatrixZQ.
    MatrixScaleT(BigRational),
    /// f(t) -> f(0) on Z_p\[t\].
    PolyEvalZero,
    /// a/s -> σ(a)/σ(s) on a fraction ring.
    FractionLift(Box<StructuredEndo>),
}

impl StructuredEndo {
    fn apply(&self, ring: &StructuredRing, a: &Repr) -> Repr {
        match (self, a) {
            (StructuredEndo::Identity, _) => a.clone(),
            (StructuredEndo::MatrixScaleT(q), Repr::MatZQ(x, t)) => {
                Repr::MatZQ(x.clone(), t * q)
            }
            (StructuredEndo::PolyEvalZero, Repr::Poly(cs)) => {
                if cs.is_empty() || cs[0] == 0 {
                    Repr::Poly(vec![])
                } else {
                    Repr::Poly(vec![cs[0]])
                }
            }
            (StructuredEndo::FractionLift(inner), Repr::Frac(n, d)) => {
                let fb = match ring {
                    StructuredRing::Fraction(fb) => fb,
                    _ => panic!("fraction endomorphism over non-fraction ring"),
                };
                let num = inner.apply(&fb.base, n);
                let den = inner.apply(&fb.base, d);
                fb.reduce(num, den)
            }
            _ => panic!("endomorphism applied to mismatched payload"),
        }
    }

    fn compose(&self, after: &StructuredEndo) -> Option<StructuredEndo> {
        // self ∘ after
        match (self, after) {
            (StructuredEndo::Identity, x) | (x, StructuredEndo::Identity) => Some(x.clone()),
            (StructuredEndo::MatrixScaleT(a), StructuredEndo::MatrixScaleT(b)) => {
                Some(StructuredEndo::MatrixScaleT(a * b))
            }
            (StructuredEndo::PolyEvalZero, StructuredEndo::PolyEvalZero) => {
                Some(StructuredEndo::PolyEvalZero)
            }
            (StructuredEndo::FractionLift(a), StructuredEndo::FractionLift(b)) => {
                a.compose(b).map(|c| StructuredEndo::FractionLift(Box::new(c)))
            }
            _ => None,
        }
    }

    fn is_injective(&self) -> bool {
        match self {
            StructuredEndo::Identity => true,
            StructuredEndo::MatrixScaleT(q) => !q.numer().eq(&num::BigInt::from(0)),
            StructuredEndo::PolyEvalZero => false,
            StructuredEndo::FractionLift(inner) => inner.is_injective(),
        }
    }

    fn is_bijective(&self) -> bool {
        match self {
            StructuredEndo::Identity => true,
            StructuredEndo::MatrixScaleT(q) => !q.numer().eq(&num::BigInt::from(0)),
            StructuredEndo::PolyEvalZero => false,
            StructuredEndo::FractionLift(inner) => inner.is_bijective(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndoBody {
    /// Image table over canonical indices.
    Table(Vec<u32>),
    Structured(StructuredEndo),
}

/// A validated ring endomorphism (additive, multiplicative, unital).
/// Injectivity is computed and recorded rather than required: the catalog
/// contains an evaluation map that genuinely is not injective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoMap {
    ring: RingId,
    body: EndoBody,
    injective: bool,
    bijective: bool,
}

impl EndoMap {
    pub fn identity(ring: &ConcreteRing) -> EndoMap {
        let body = match ring.finite() {
            Some(f) => EndoBody::Table((0..f.size()).collect()),
            None => EndoBody::Structured(StructuredEndo::Identity),
        };
        EndoMap {
            ring: ring.id(),
            body,
            injective: true,
            bijective: true,
        }
    }

    /// Validates and wraps a finite-ring endomorphism given as an image
    /// table.
    pub fn from_table(ring: &ConcreteRing, table: Vec<u32>) -> Result<EndoMap> {
        let f = ring.require_finite("table endomorphism")?;
        let m = f.size();
        if table.len() != m as usize || table.iter().any(|&v| v >= m) {
            return Err(Error::InvalidTable("endomorphism table malformed".into()));
        }
        let apply = |a: u32| table[a as usize];
        if apply(if m > 1 { 1 } else { 0 }) != (if m > 1 { 1 } else { 0 }) {
            return Err(Error::MapLawViolation {
                law: "unit preservation",
                witness: "sigma(1) != 1".into(),
            });
        }
        for a in 0..m {
            for b in 0..m {
                if apply(f.add_i(a, b)) != f.add_i(apply(a), apply(b)) {
                    return Err(Error::MapLawViolation {
                        law: "additivity",
                        witness: format!("a={}, b={}", f.label(a), f.label(b)),
                    });
                }
                if apply(f.mul_i(a, b)) != f.mul_i(apply(a), apply(b)) {
                    return Err(Error::MapLawViolation {
                        law: "multiplicativity",
                        witness: format!("a={}, b={}", f.label(a), f.label(b)),
                    });
                }
            }
        }
        let mut seen = vec![false; m as usize];
        let mut injective = true;
        for &v in &table {
            if seen[v as usize] {
                injective = false;
            }
            seen[v as usize] = true;
        }
        Ok(EndoMap {
            ring: ring.id(),
            body: EndoBody::Table(table),
            injective,
            bijective: injective, // finite: injective iff surjective
        })
    }

    /// Validates a closed-form endomorphism on the generator set plus
    /// seeded random pairs.
    pub fn from_structured(
        ring: &ConcreteRing,
        endo: StructuredEndo,
        caps: &Caps,
    ) -> Result<EndoMap> {
        let s = ring
            .structured()
            .ok_or(Error::UnsupportedInfinite("structured endomorphism"))?;
        let apply = |a: &Repr| endo.apply(s, a);
        if apply(&s.one()) != s.one() {
            return Err(Error::MapLawViolation {
                law: "unit preservation",
                witness: "sigma(1) != 1".into(),
            });
        }
        let mut pool: Vec<Repr> = s.generator_set();
        pool.extend(s.sample(caps.sample_pairs.min(200), caps.sample_seed));
        for a in &pool {
            for b in &pool {
                if apply(&s.add(a, b)) != s.add(&apply(a), &apply(b)) {
                    return Err(Error::MapLawViolation {
                        law: "additivity",
                        witness: format!("a={}, b={}", s.render(a), s.render(b)),
                    });
                }
                if apply(&s.mul(a, b)) != s.mul(&apply(a), &apply(b)) {
                    return Err(Error::MapLawViolation {
                        law: "multiplicativity",
                        witness: format!("a={}, b={}", s.render(a), s.render(b)),
                    });
                }
            }
        }
        let injective = endo.is_injective();
        let bijective = endo.is_bijective();
        Ok(EndoMap {
            ring: ring.id(),
            body: EndoBody::Structured(endo),
            injective,
            bijective,
        })
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn body(&self) -> &EndoBody {
        &self.body
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    pub fn is_bijective(&self) -> bool {
        self.bijective
    }

    pub fn is_identity(&self, _ring: &ConcreteRing) -> bool {
        match &self.body {
            EndoBody::Table(t) => t.iter().enumerate().all(|(i, &v)| i as u32 == v),
            EndoBody::Structured(e) => {
                matches!(e, StructuredEndo::Identity)
                    || matches!(e, StructuredEndo::MatrixScaleT(q) if q.is_one())
            }
        }
    }

    #[inline]
    pub fn apply_i(&self, a: u32) -> u32 {
        match &self.body {
            EndoBody::Table(t) => t[a as usize],
            EndoBody::Structured(_) => panic!("index application on structured map"),
        }
    }

    pub fn apply(&self, ring: &ConcreteRing, a: &RElem) -> RElem {
        assert!(a.ring == self.ring && ring.id() == self.ring, "ring mismatch");
        match (&self.body, &a.repr) {
            (EndoBody::Table(t), Repr::Idx(i)) => ring.elem(t[*i as usize]),
            (EndoBody::Structured(e), repr) => RElem {
                ring: self.ring,
                repr: e.apply(ring.structured().unwrap(), repr),
            },
            _ => panic!("payload mismatch"),
        }
    }

    /// self ∘ other.
    pub fn compose(&self, other: &EndoMap) -> Result<EndoMap> {
        assert!(self.ring == other.ring, "ring mismatch");
        match (&self.body, &other.body) {
            (EndoBody::Table(f), EndoBody::Table(g)) => {
                let table: Vec<u32> = g.iter().map(|&v| f[v as usize]).collect();
                let mut seen = vec![false; table.len()];
                let mut injective = true;
                for &v in &table {
                    if seen[v as usize] {
                        injective = false;
                    }
                    seen[v as usize] = true;
                }
                Ok(EndoMap {
                    ring: self.ring,
                    body: EndoBody::Table(table),
                    injective,
                    bijective: injective,
                })
            }
            (EndoBody::Structured(f), EndoBody::Structured(g)) => f
                .compose(g)
                .map(|c| {
                    let injective = c.is_injective();
                    let bijective = c.is_bijective();
                    EndoMap {
                        ring: self.ring,
                        body: EndoBody::Structured(c),
                        injective,
                        bijective,
                    }
                })
                .ok_or(Error::UnsupportedInfinite(
                    "composition of these closed forms is not representable",
                )),
            _ => Err(Error::RingMismatch("mixed map bodies".into())),
        }
    }
}

/// Closed-form σ-derivations of structured rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuredDelta {
    Zero,
    /// Formal derivative d/dt on Z_p\[t\] (with σ = id).
    PolyDerivT,
    /// δ̄(a/s) = -δ(s)/σ(s) · a/s + δ(a)/σ(s) on a fraction ring.
    FractionLift {
        sigma: Box<StructuredEndo>,
        delta: Box<StructuredDelta>,
    },
}

impl StructuredDelta {
    fn apply(&self, ring: &StructuredRing, a: &Repr) -> Repr {
        match (self, a) {
            (StructuredDelta::Zero, _) => ring.zero(),
            (StructuredDelta::PolyDerivT, Repr::Poly(cs)) => {
                let p = match ring {
                    StructuredRing::PolyOverPrime(p) => *p,
                    _ => panic!("derivative over non-polynomial ring"),
                };
                Repr::Poly(poly_derivative(cs, p))
            }
            (StructuredDelta::FractionLift { sigma, delta }, Repr::Frac(n, d)) => {
                let fb = match ring {
                    StructuredRing::Fraction(fb) => fb,
                    _ => panic!("fraction derivation over non-fraction ring"),
                };
                let base = &fb.base;
                let sig_s = sigma.apply(base, d);
                let del_s = delta.apply(base, d);
                let del_a = delta.apply(base, n);
                // -δ(s)/σ(s) · a/s + δ(a)/σ(s)
                let first = ring.mul(
                    &fb.reduce(base.neg(&del_s), sig_s.clone()),
                    &Repr::Frac(n.clone(), d.clone()),
                );
                let second = fb.reduce(del_a, sig_s);
                ring.add(&first, &second)
            }
            _ => panic!("derivation applied to mismatched payload"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaBody {
    Table(Vec<u32>),
    Structured(StructuredDelta),
}

/// A validated σ-derivation: additive with δ(ab) = σ(a)δ(b) + δ(a)b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaDerivation {
    ring: RingId,
    sigma: EndoMap,
    body: DeltaBody,
}

impl SigmaDerivation {
    pub fn zero(ring: &ConcreteRing, sigma: EndoMap) -> SigmaDerivation {
        let body = match ring.finite() {
            Some(f) => DeltaBody::Table(vec![0; f.size() as usize]),
            None => DeltaBody::Structured(StructuredDelta::Zero),
        };
        SigmaDerivation {
            ring: ring.id(),
            sigma,
            body,
        }
    }

    pub fn from_table(ring: &ConcreteRing, sigma: EndoMap, table: Vec<u32>) -> Result<SigmaDerivation> {
        let f = ring.require_finite("table derivation")?;
        let m = f.size();
        if table.len() != m as usize || table.iter().any(|&v| v >= m) {
            return Err(Error::InvalidTable("derivation table malformed".into()));
        }
        let d = |a: u32| table[a as usize];
        for a in 0..m {
            for b in 0..m {
                if d(f.add_i(a, b)) != f.add_i(d(a), d(b)) {
                    return Err(Error::MapLawViolation {
                        law: "additivity",
                        witness: format!("a={}, b={}", f.label(a), f.label(b)),
                    });
                }
                let lhs = d(f.mul_i(a, b));
                let rhs = f.add_i(f.mul_i(sigma.apply_i(a), d(b)), f.mul_i(d(a), b));
                if lhs != rhs {
                    return Err(Error::MapLawViolation {
                        law: "sigma-derivation law",
                        witness: format!("a={}, b={}", f.label(a), f.label(b)),
                    });
                }
            }
        }
        let one = if m > 1 { 1 } else { 0 };
        assert_eq!(d(one), 0, "delta(1) = 0 must follow from the Leibniz law");
        Ok(SigmaDerivation {
            ring: ring.id(),
            sigma,
            body: DeltaBody::Table(table),
        })
    }

    pub fn from_structured(
        ring: &ConcreteRing,
        sigma: EndoMap,
        delta: StructuredDelta,
        caps: &Caps,
    ) -> Result<SigmaDerivation> {
        let s = ring
            .structured()
            .ok_or(Error::UnsupportedInfinite("structured derivation"))?;
        let d = |a: &Repr| delta.apply(s, a);
        let mut pool: Vec<Repr> = s.generator_set();
        pool.extend(s.sample(caps.sample_pairs.min(200), caps.sample_seed ^ 0x9e37));
        let sig = |a: &Repr| {
            let wrapped = RElem {
                ring: ring.id(),
                repr: a.clone(),
            };
            sigma.apply(ring, &wrapped).repr
        };
        for a in &pool {
            for b in &pool {
                if d(&s.add(a, b)) != s.add(&d(a), &d(b)) {
                    return Err(Error::MapLawViolation {
                        law: "additivity",
                        witness: format!("a={}, b={}", s.render(a), s.render(b)),
                    });
                }
                let lhs = d(&s.mul(a, b));
                let rhs = s.add(&s.mul(&sig(a), &d(b)), &s.mul(&d(a), b));
                if lhs != rhs {
                    return Err(Error::MapLawViolation {
                        law: "sigma-derivation law",
                        witness: format!("a={}, b={}", s.render(a), s.render(b)),
                    });
                }
            }
        }
        assert!(
            s.is_zero(&d(&s.one())),
            "delta(1) = 0 must follow from the Leibniz law"
        );
        Ok(SigmaDerivation {
            ring: ring.id(),
            sigma,
            body: DeltaBody::Structured(delta),
        })
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn sigma(&self) -> &EndoMap {
        &self.sigma
    }

    pub fn body(&self) -> &DeltaBody {
        &self.body
    }

    pub fn is_zero_map(&self) -> bool {
        match &self.body {
            DeltaBody::Table(t) => t.iter().all(|&v| v == 0),
            DeltaBody::Structured(StructuredDelta::Zero) => true,
            DeltaBody::Structured(_) => false,
        }
    }

    #[inline]
    pub fn apply_i(&self, a: u32) -> u32 {
        match &self.body {
            DeltaBody::Table(t) => t[a as usize],
            DeltaBody::Structured(_) => panic!("index application on structured map"),
        }
    }

    pub fn apply(&self, ring: &ConcreteRing, a: &RElem) -> RElem {
        assert!(a.ring == self.ring && ring.id() == self.ring, "ring mismatch");
        match (&self.body, &a.repr) {
            (DeltaBody::Table(t), Repr::Idx(i)) => ring.elem(t[*i as usize]),
            (DeltaBody::Structured(d), repr) => RElem {
                ring: self.ring,
                repr: d.apply(ring.structured().unwrap(), repr),
            },
            _ => panic!("payload mismatch"),
        }
    }
}

/// The set {σ^α : α ∈ N^n} closed under composition, each map tagged with
/// the minimal word that produced it (breadth-first, generator order).
pub fn monoid_closure(ring: &ConcreteRing, sigmas: &[EndoMap]) -> Result<Vec<EndoMap>> {
    let identity = EndoMap::identity(ring);
    let mut found: Vec<EndoMap> = vec![identity];
    let mut frontier: Vec<EndoMap> = vec![found[0].clone()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for map in &frontier {
            for gen in sigmas {
                let composed = gen.compose(map)?;
                if !found.contains(&composed) {
                    found.push(composed.clone());
                    next.push(composed);
                }
            }
        }
        if found.len() as u32 > CLOSURE_CAP {
            return Err(Error::ClosureDiverges { cap: CLOSURE_CAP });
        }
        frontier = next;
    }
    Ok(found)
}

/// The family {σ^α} with a representative minimal α per distinct map.
/// Complete for finite rings (per-variable powers stabilize); for
/// structured rings whose powers do not stabilize, falls back to the
/// graded box |α| ≤ `caps.alpha_bound` and reports exhaustiveness.
pub struct AlphaFamily {
    /// (α, σ^α), deduplicated, graded-lexicographically minimal α first.
    pub maps: Vec<(Exponent, EndoMap)>,
    /// True when the family provably contains every σ^α.
    pub complete: bool,
}

pub fn sigma_alpha_family(
    ring: &ConcreteRing,
    sigmas: &[EndoMap],
    caps: &Caps,
) -> Result<AlphaFamily> {
    let n = sigmas.len();
    // Per-variable power chains σ_i^0, σ_i^1, ... until they repeat.
    let mut bounds: Vec<u32> = Vec::with_capacity(n);
    let mut complete = true;
    for sigma in sigmas {
        let mut chain: Vec<EndoMap> = vec![EndoMap::identity(ring)];
        let mut bound = None;
        while (chain.len() as u32) < PER_VAR_POWER_CAP {
            let next = match sigma.compose(chain.last().unwrap()) {
                Ok(m) => m,
                Err(_) => break,
            };
            if chain.contains(&next) {
                bound = Some(chain.len() as u32);
                break;
            }
            chain.push(next);
        }
        match bound {
            Some(b) => bounds.push(b),
            None => {
                complete = false;
                bounds.push(caps.alpha_bound + 1);
            }
        }
    }

    let mut maps: Vec<(Exponent, EndoMap)> = Vec::new();
    let mut alpha = vec![0u16; n];
    loop {
        let exp = Exponent(alpha.clone());
        if complete || exp.degree() <= caps.alpha_bound {
            let mut composed = EndoMap::identity(ring);
            // σ^α = σ_1^{α_1} ∘ ... ∘ σ_n^{α_n}.
            for i in (0..n).rev() {
                for _ in 0..alpha[i] {
                    composed = sigmas[i].compose(&composed)?;
                }
            }
            if !maps.iter().any(|(_, m)| *m == composed) {
                maps.push((exp, composed));
            }
        }
        // Advance the mixed-radix counter (first variable fastest).
        let mut i = 0;
        loop {
            if i == n {
                let mut sorted = maps;
                sorted.sort_by(|(a, _), (b, _)| {
                    a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0))
                });
                return Ok(AlphaFamily {
                    maps: sorted,
                    complete,
                });
            }
            alpha[i] += 1;
            if (alpha[i] as u32) < bounds[i] {
                break;
            }
            alpha[i] = 0;
            i += 1;
        }
    }
}

/// Builds the component-swap endomorphism of a two-factor product of
/// equal-size factors.
pub fn product_swap_table(ring: &ConcreteRing) -> Result<Vec<u32>> {
    let f = ring.require_finite("component swap")?;
    let factors = match f.shape() {
        crate::ring::FiniteShape::Product(parts) => parts,
        _ => {
            return Err(Error::Invalid(
                "swap is defined on direct products only".into(),
            ))
        }
    };
    if factors.len() != 2 || factors[0] != factors[1] {
        return Err(Error::Invalid("swap needs two identical factors".into()));
    }
    let m = factors[0].size();
    let table: Vec<u32> = (0..f.size())
        .map(|canon| {
            let nat = f.to_natural(canon);
            let (c1, c2) = (nat % m, nat / m);
            f.from_natural(c2 + m * c1).unwrap()
        })
        .collect();
    Ok(table)
}
