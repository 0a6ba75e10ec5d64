//! Coefficientwise extensions σ̄_k and δ̄_k of the base maps to the whole
//! extension, under the commutation and annihilation hypotheses that make
//! δ̄_k a σ̄_k-derivation.

use crate::algebra::poly::SkewPoly;
use crate::algebra::presentation::SkewPresentation;
use crate::error::Error;
use crate::ring::RElem;
use crate::Result;

/// Checks σ_iδ_j = δ_jσ_i, δ_iδ_j = δ_jδ_i, and δ_k(c_{i,j}) =
/// δ_k(r_l^{(i,j)}) = 0: exhaustively on finite rings, on the sample
/// pool otherwise.
pub fn check_extension_hypotheses(pres: &SkewPresentation) -> Result<()> {
    let ring = pres.ring();
    let pool: Vec<RElem> = match ring.finite() {
        Some(_) => ring.elements()?,
        None => ring.sample_elements(40, pres.caps().sample_seed),
    };
    let n = pres.n();
    for i in 1..=n {
        for j in 1..=n {
            for r in &pool {
                let sd = pres.sigma(i).apply(ring, &pres.delta(j).apply(ring, r));
                let ds = pres.delta(j).apply(ring, &pres.sigma(i).apply(ring, r));
                if !ring.eq(&sd, &ds) {
                    return Err(Error::HypothesesFail {
                        law: "sigma_i delta_j = delta_j sigma_i",
                        witness: format!("i={i}, j={j}, r={}", ring.render(r)),
                    });
                }
                let dd = pres.delta(i).apply(ring, &pres.delta(j).apply(ring, r));
                let dd2 = pres.delta(j).apply(ring, &pres.delta(i).apply(ring, r));
                if !ring.eq(&dd, &dd2) {
                    return Err(Error::HypothesesFail {
                        law: "delta_i delta_j = delta_j delta_i",
                        witness: format!("i={i}, j={j}, r={}", ring.render(r)),
                    });
                }
            }
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in 1..=n {
                let c = pres.c_const(i, j);
                if !ring.is_zero(&pres.delta(k).apply(ring, c)) {
                    return Err(Error::HypothesesFail {
                        law: "delta_k(c_ij) = 0",
                        witness: format!("k={k}, c_{{{i},{j}}}={}", ring.render(c)),
                    });
                }
                for (l, r) in pres.r_const(i, j).iter().enumerate() {
                    if !ring.is_zero(&pres.delta(k).apply(ring, r)) {
                        return Err(Error::HypothesesFail {
                            law: "delta_k(r_l^{ij}) = 0",
                            witness: format!("k={k}, r_{l}^{{({i},{j})}}={}", ring.render(r)),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// σ̄_k: applies σ_k to every coefficient.
#[derive(Debug, Clone, Copy)]
pub struct ExtendedSigma {
    k: usize,
}

/// δ̄_k: applies δ_k to every coefficient.
#[derive(Debug, Clone, Copy)]
pub struct ExtendedDelta {
    k: usize,
}

pub fn extend_sigma(pres: &SkewPresentation, k: usize) -> Result<ExtendedSigma> {
    check_extension_hypotheses(pres)?;
    assert!((1..=pres.n()).contains(&k));
    Ok(ExtendedSigma { k })
}

pub fn extend_delta(pres: &SkewPresentation, k: usize) -> Result<ExtendedDelta> {
    check_extension_hypotheses(pres)?;
    assert!((1..=pres.n()).contains(&k));
    Ok(ExtendedDelta { k })
}

impl ExtendedSigma {
    pub fn apply(&self, pres: &SkewPresentation, f: &SkewPoly) -> SkewPoly {
        let ring = pres.ring();
        pres.poly_from_terms(
            f.terms()
                .iter()
                .map(|(e, a)| (e.clone(), pres.sigma(self.k).apply(ring, a))),
        )
    }
}

impl ExtendedDelta {
    pub fn apply(&self, pres: &SkewPresentation, f: &SkewPoly) -> SkewPoly {
        let ring = pres.ring();
        pres.poly_from_terms(
            f.terms()
                .iter()
                .map(|(e, a)| (e.clone(), pres.delta(self.k).apply(ring, a))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::exponent::Exponent;
    use crate::algebra::presentation::{
        trivial_presentation_data, validate_presentation, PresentationData,
    };
    use crate::algebra::MonomialOrder;
    use crate::ring::maps::{product_swap_table, StructuredDelta};
    use crate::ring::{validate_ring, EndoMap, Repr, RingDescriptor, SigmaDerivation};
    use crate::Caps;
    use std::collections::BTreeMap;

    #[test]
    fn trivial_deltas_always_satisfy_hypotheses() {
        let ring = validate_ring(&RingDescriptor::Modular { modulus: 5 }, &Caps::default())
            .unwrap();
        let mut r = BTreeMap::new();
        let mut vec = vec![ring.zero(); 3];
        vec[0] = ring.one();
        r.insert((1, 2), vec);
        let data = trivial_presentation_data(ring, 2, BTreeMap::new(), r);
        let p = validate_presentation(data, Caps::default(), 16).unwrap();
        assert!(check_extension_hypotheses(&p).is_ok());
        let d = extend_delta(&p, 1).unwrap();
        let f = p.monomial(Exponent(vec![1, 1]));
        assert!(d.apply(&p, &f).is_zero());
    }

    #[test]
    fn extended_sigma_is_coefficientwise() {
        let ring = validate_ring(
            &RingDescriptor::DirectProduct {
                factors: vec![
                    RingDescriptor::Modular { modulus: 2 },
                    RingDescriptor::Modular { modulus: 2 },
                ],
            },
            &Caps::default(),
        )
        .unwrap();
        let swap = EndoMap::from_table(&ring, product_swap_table(&ring).unwrap()).unwrap();
        let delta = SigmaDerivation::zero(&ring, swap.clone());
        let data = PresentationData {
            ring: ring.clone(),
            sigmas: vec![swap],
            deltas: vec![delta],
            c: BTreeMap::new(),
            r_consts: BTreeMap::new(),
            order: MonomialOrder::DegLex,
            declared_quasi_commutative: None,
            declared_bijective: None,
        };
        let p = validate_presentation(data, Caps::default(), 16).unwrap();
        let s = extend_sigma(&p, 1).unwrap();
        // f = a + b·x with a=(0,1), b=(1,0): σ̄(f) = swap(a) + swap(b)·x.
        let f = p.poly_from_terms([
            (Exponent(vec![0]), ring.elem(2)),
            (Exponent(vec![1]), ring.elem(3)),
        ]);
        let out = s.apply(&p, &f);
        assert_eq!(p.render_poly(&out), "(0,1)*x1 + (1,0)");
    }

    #[test]
    fn derivative_extension_satisfies_product_rule_instance() {
        let ring = validate_ring(&RingDescriptor::PolyOverField { prime: 5 }, &Caps::default())
            .unwrap();
        let id = EndoMap::identity(&ring);
        let d = SigmaDerivation::from_structured(
            &ring,
            id.clone(),
            StructuredDelta::PolyDerivT,
            &Caps::default(),
        )
        .unwrap();
        let data = PresentationData {
            ring: ring.clone(),
            sigmas: vec![id],
            deltas: vec![d],
            c: BTreeMap::new(),
            r_consts: BTreeMap::new(),
            order: MonomialOrder::DegLex,
            declared_quasi_commutative: None,
            declared_bijective: None,
        };
        let p = validate_presentation(data, Caps::default(), 16).unwrap();
        let sig = extend_sigma(&p, 1).unwrap();
        let del = extend_delta(&p, 1).unwrap();
        let t = RElem {
            ring: ring.id(),
            repr: Repr::Poly(vec![0, 1]),
        };
        let tf = p.const_poly(&t);
        let tx = p.term(&t, Exponent(vec![1]));
        // δ̄(t·(t·x)) = δ̄(t²x) = 2t·x.
        let prod = p.poly_mul(&tf, &tx).unwrap();
        let lhs = del.apply(&p, &prod);
        // σ̄(t)·δ̄(tx) + δ̄(t)·(tx) = t·x + t·x.
        let rhs = p.poly_add(
            &p.poly_mul(&sig.apply(&p, &tf), &del.apply(&p, &tx)).unwrap(),
            &p.poly_mul(&del.apply(&p, &tf), &tx).unwrap(),
        );
        assert_eq!(lhs, rhs);
        assert_eq!(p.render_poly(&lhs), "2*t*x1");
    }
}
