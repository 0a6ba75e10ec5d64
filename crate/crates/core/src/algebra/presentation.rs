//! Presentations A = σ(R)⟨x₁,…,xₙ⟩ and their validation.

use crate::algebra::exponent::MonomialOrder;
use crate::algebra::poly::SkewPoly;
use crate::error::Error;
use crate::ring::{ConcreteRing, EndoMap, RElem, SigmaDerivation};
use crate::{Caps, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Raw presentation data handed to `validate_presentation`.
///
/// Missing c entries default to 1 and missing r entries to the zero
/// vector, so a commutative polynomial ring needs no constants at all.
pub struct PresentationData {
    pub ring: Arc<ConcreteRing>,
    pub sigmas: Vec<EndoMap>,
    pub deltas: Vec<SigmaDerivation>,
    /// c_{i,j} for 1 ≤ i < j ≤ n.
    pub c: BTreeMap<(usize, usize), RElem>,
    /// (r_0^{(i,j)}, …, r_n^{(i,j)}) for 1 ≤ i < j ≤ n.
    pub r_consts: BTreeMap<(usize, usize), Vec<RElem>>,
    pub order: MonomialOrder,
    pub declared_quasi_commutative: Option<bool>,
    pub declared_bijective: Option<bool>,
}

/// A validated skew PBW extension presentation.
#[derive(Debug, Clone)]
pub struct SkewPresentation {
    ring: Arc<ConcreteRing>,
    n: usize,
    sigmas: Vec<EndoMap>,
    deltas: Vec<SigmaDerivation>,
    c: BTreeMap<(usize, usize), RElem>,
    r_consts: BTreeMap<(usize, usize), Vec<RElem>>,
    quasi_commutative: bool,
    bijective: bool,
    order: MonomialOrder,
    caps: Caps,
    id: u64,
}

impl SkewPresentation {
    pub fn ring(&self) -> &Arc<ConcreteRing> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self, i: usize) -> &EndoMap {
        &self.sigmas[i - 1]
    }

    pub fn delta(&self, i: usize) -> &SigmaDerivation {
        &self.deltas[i - 1]
    }

    pub fn sigmas(&self) -> &[EndoMap] {
        &self.sigmas
    }

    pub fn deltas(&self) -> &[SigmaDerivation] {
        &self.deltas
    }

    /// c_{i,j} for i < j.
    pub fn c_const(&self, i: usize, j: usize) -> &RElem {
        &self.c[&(i, j)]
    }

    /// The vector (r_0^{(i,j)}, …, r_n^{(i,j)}) for i < j.
    pub fn r_const(&self, i: usize, j: usize) -> &[RElem] {
        &self.r_consts[&(i, j)]
    }

    pub fn is_quasi_commutative(&self) -> bool {
        self.quasi_commutative
    }

    pub fn is_bijective(&self) -> bool {
        self.bijective
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn all_deltas_zero(&self) -> bool {
        self.deltas.iter().all(|d| d.is_zero_map())
    }

    pub(crate) fn assert_mine(&self, f: &SkewPoly) {
        assert!(
            f.presentation_id() == self.id,
            "polynomial belongs to a different presentation"
        );
    }
}

fn fingerprint(data: &PresentationData) -> u64 {
    let text = format!(
        "{:?}|{}|{:?}|{:?}|{:?}|{:?}|{:?}",
        data.ring.id(),
        data.sigmas.len(),
        data.sigmas,
        data.deltas,
        data.c,
        data.r_consts,
        data.order,
    );
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in text.bytes() {
        h ^= byte as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Checks the structural invariants and then probes associativity of the
/// induced product: x_i·(r·s) = (x_i·r)·s, (x_j·x_i)·r = x_j·(x_i·r),
/// and (x_k·x_j)·x_i = x_k·(x_j·x_i), exhaustively over finite
/// coefficients and over a generator sample otherwise.
pub fn validate_presentation(
    data: PresentationData,
    caps: Caps,
    sample_bound: u32,
) -> Result<Arc<SkewPresentation>> {
    let n = data.sigmas.len();
    if n == 0 {
        return Err(Error::PresentationInconsistent(
            "at least one variable is required".into(),
        ));
    }
    if data.deltas.len() != n {
        return Err(Error::PresentationInconsistent(
            "each sigma needs its paired delta".into(),
        ));
    }
    let ring = data.ring.clone();
    for s in &data.sigmas {
        if s.ring() != ring.id() {
            return Err(Error::RingMismatch("sigma over a different ring".into()));
        }
    }
    for (i, d) in data.deltas.iter().enumerate() {
        if d.ring() != ring.id() {
            return Err(Error::RingMismatch("delta over a different ring".into()));
        }
        if d.sigma() != &data.sigmas[i] {
            return Err(Error::PresentationInconsistent(format!(
                "delta_{} is not paired with sigma_{}",
                i + 1,
                i + 1
            )));
        }
    }

    // Fill defaults and check ranges.
    let mut c = data.c.clone();
    let mut r_consts = data.r_consts.clone();
    for (&(i, j), v) in &data.c {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::PresentationInconsistent(format!(
                "c constant at invalid position ({i},{j})"
            )));
        }
        ring.check_member(v)?;
        if ring.is_zero(v) {
            return Err(Error::PresentationInconsistent(format!(
                "c_{{{i},{j}}} must be nonzero"
            )));
        }
    }
    for (&(i, j), v) in &data.r_consts {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::PresentationInconsistent(format!(
                "r constants at invalid position ({i},{j})"
            )));
        }
        if v.len() != n + 1 {
            return Err(Error::PresentationInconsistent(format!(
                "r vector at ({i},{j}) must have length n+1"
            )));
        }
        for e in v {
            ring.check_member(e)?;
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            c.entry((i, j)).or_insert_with(|| ring.one());
            r_consts
                .entry((i, j))
                .or_insert_with(|| vec![ring.zero(); n + 1]);
        }
    }

    // Computed flags.
    let invertible = |e: &RElem| -> bool {
        match ring.finite() {
            Some(f) => f.inverse_i(ring.idx(e)).is_some(),
            None => structured_invertible(&ring, e),
        }
    };
    let bijective =
        data.sigmas.iter().all(|s| s.is_bijective()) && c.values().all(invertible);
    let quasi_commutative = data.deltas.iter().all(|d| d.is_zero_map())
        && r_consts
            .values()
            .all(|v| v.iter().all(|e| ring.is_zero(e)))
        && data.sigmas.iter().all(|s| s.is_injective());
    if let Some(declared) = data.declared_bijective {
        if declared != bijective {
            return Err(Error::PresentationInconsistent(format!(
                "bijective flag declared {declared} but computed {bijective}"
            )));
        }
    }
    if let Some(declared) = data.declared_quasi_commutative {
        if declared != quasi_commutative {
            return Err(Error::PresentationInconsistent(format!(
                "quasi-commutative flag declared {declared} but computed {quasi_commutative}"
            )));
        }
    }

    let pres = SkewPresentation {
        id: fingerprint(&data),
        ring: ring.clone(),
        n,
        sigmas: data.sigmas,
        deltas: data.deltas,
        c,
        r_consts,
        quasi_commutative,
        bijective,
        order: data.order,
        caps,
    };

    // Associativity probes.
    let pool: Vec<RElem> = match ring.finite() {
        Some(_) => ring.elements()?,
        None => {
            let mut p = ring.sample_elements(sample_bound.min(24), caps.sample_seed);
            p.truncate(sample_bound.max(4) as usize);
            p
        }
    };
    let fail = |what: String| Err(Error::PresentationInconsistent(what));
    for i in 1..=n {
        let xi = pres.monomial(crate::algebra::Exponent::unit(n, i));
        for r in &pool {
            for s in &pool {
                let lhs = pres.var_times_coeff(i, &ring.mul(r, s));
                let xir = pres.var_times_coeff(i, r);
                let rhs = pres.poly_mul(&xir, &pres.const_poly(s))?;
                if lhs != rhs {
                    return fail(format!(
                        "x_{i}·(r·s) != (x_{i}·r)·s at r={}, s={}",
                        ring.render(r),
                        ring.render(s)
                    ));
                }
            }
        }
        for j in (i + 1)..=n {
            let xj = pres.monomial(crate::algebra::Exponent::unit(n, j));
            for r in &pool {
                let lhs = pres.poly_mul(&pres.swap_rewrite(j, i), &pres.const_poly(r))?;
                let rhs = pres.poly_mul(&xj, &pres.var_times_coeff(i, r))?;
                if lhs != rhs {
                    return fail(format!(
                        "(x_{j}·x_{i})·r != x_{j}·(x_{i}·r) at r={}",
                        ring.render(r)
                    ));
                }
            }
            for k in (j + 1)..=n {
                let xk = pres.monomial(crate::algebra::Exponent::unit(n, k));
                let lhs = pres.poly_mul(&pres.poly_mul(&xk, &xj)?, &xi)?;
                let rhs = pres.poly_mul(&xk, &pres.poly_mul(&xj, &xi)?)?;
                if lhs != rhs {
                    return fail(format!("(x_{k}·x_{j})·x_{i} != x_{k}·(x_{j}·x_{i})"));
                }
            }
        }
    }

    Ok(Arc::new(pres))
}

fn structured_invertible(ring: &ConcreteRing, e: &RElem) -> bool {
    use crate::ring::Repr;
    use num::Signed;
    match &e.repr {
        Repr::Int(v) => v.abs() == num::BigInt::from(1),
        // (a,t) is invertible iff a = ±1.
        Repr::MatZQ(a, _) => a.abs() == num::BigInt::from(1),
        // Units of Z_p[t] are the nonzero constants.
        Repr::Poly(cs) => cs.len() == 1,
        // a/s with a regular is invertible in the fraction ring.
        Repr::Frac(_, _) => ring.is_regular(e),
        Repr::Idx(_) => unreachable!(),
    }
}

/// Convenience constructor for the common trivial case σ = id, δ = 0 in
/// every variable, with optional constants.
pub fn trivial_presentation_data(
    ring: Arc<ConcreteRing>,
    n: usize,
    c: BTreeMap<(usize, usize), RElem>,
    r_consts: BTreeMap<(usize, usize), Vec<RElem>>,
) -> PresentationData {
    let sigmas: Vec<EndoMap> = (0..n).map(|_| EndoMap::identity(&ring)).collect();
    let deltas: Vec<SigmaDerivation> = sigmas
        .iter()
        .map(|s| SigmaDerivation::zero(&ring, s.clone()))
        .collect();
    PresentationData {
        ring,
        sigmas,
        deltas,
        c,
        r_consts,
        order: MonomialOrder::DegLex,
        declared_quasi_commutative: None,
        declared_bijective: None,
    }
}
