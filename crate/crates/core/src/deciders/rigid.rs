//! The Σ-rigidity decider: r·σ^α(r) = 0 must force r = 0.

use crate::algebra::SkewPresentation;
use crate::ring::maps::sigma_alpha_family;
use crate::verdict::{Verdict, Witness};
use crate::Result;

pub fn decide_sigma_rigid(pres: &SkewPresentation) -> Result<Verdict> {
    let ring = pres.ring();
    // With the identity family, r·σ^α(r) = r², so rigidity is exactly
    // reducedness; structured carriers answer that in closed form.
    if let Some(s) = ring.structured() {
        if pres.sigmas().iter().all(|m| m.is_identity(ring)) {
            return Ok(match s.nilpotent_witness() {
                None => Verdict::holds(0),
                Some(w) => {
                    let elem = crate::ring::RElem {
                        ring: ring.id(),
                        repr: w,
                    };
                    Verdict::fails(
                        Witness::Rigid {
                            r: ring.elem_w(&elem),
                            alpha: crate::algebra::Exponent::zero(pres.n()),
                        },
                        0,
                    )
                }
            });
        }
    }
    let family = sigma_alpha_family(ring, pres.sigmas(), pres.caps())?;
    let candidates = match ring.finite() {
        Some(_) => ring.elements()?,
        None => ring.sample_elements(pres.caps().sample_pairs.min(100), pres.caps().sample_seed),
    };
    let mut examined = 0;
    for r in &candidates {
        if ring.is_zero(r) {
            continue;
        }
        for (alpha, map) in &family.maps {
            examined += 1;
            let image = map.apply(ring, r);
            if ring.is_zero(&ring.mul(r, &image)) {
                return Ok(Verdict::fails(
                    Witness::Rigid {
                        r: ring.elem_w(r),
                        alpha: alpha.clone(),
                    },
                    examined,
                ));
            }
        }
    }
    if ring.is_finite() && family.complete {
        Ok(Verdict::holds(examined))
    } else {
        Ok(Verdict::verified_up_to(pres.caps().alpha_bound, examined))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presentation::{
        trivial_presentation_data, validate_presentation, PresentationData,
    };
    use crate::algebra::{Exponent, MonomialOrder};
    use crate::ring::maps::product_swap_table;
    use crate::ring::{validate_ring, EndoMap, RingDescriptor, SigmaDerivation};
    use crate::verdict::VerdictStatus;
    use crate::Caps;
    use std::collections::BTreeMap;

    #[test]
    fn field_with_identity_maps_is_rigid() {
        let ring = validate_ring(&RingDescriptor::Modular { modulus: 2 }, &Caps::default())
            .unwrap();
        let data = trivial_presentation_data(ring, 1, BTreeMap::new(), BTreeMap::new());
        let p = validate_presentation(data, Caps::default(), 16).unwrap();
        let v = decide_sigma_rigid(&p).unwrap();
        assert_eq!(v.status, VerdictStatus::Holds);
    }

    #[test]
    fn z4_fails_rigidity_at_alpha_zero() {
        let ring = validate_ring(&RingDescriptor::Modular { modulus: 4 }, &Caps::default())
            .unwrap();
        let data = trivial_presentation_data(ring, 1, BTreeMap::new(), BTreeMap::new());
        let p = validate_presentation(data, Caps::default(), 16).unwrap();
        let v = decide_sigma_rigid(&p).unwrap();
        match v.status {
            VerdictStatus::FailsWithWitness(Witness::Rigid { r, alpha }) => {
                assert_eq!(r.label, "2");
                assert_eq!(alpha, Exponent(vec![0]));
            }
            other => panic!("expected rigidity failure, got {other:?}"),
        }
    }

    #[test]
    fn swap_fails_rigidity_with_component_witness() {
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
            ring,
            sigmas: vec![swap],
            deltas: vec![delta],
            c: BTreeMap::new(),
            r_consts: BTreeMap::new(),
            order: MonomialOrder::DegLex,
            declared_quasi_commutative: None,
            declared_bijective: None,
        };
        let p = validate_presentation(data, Caps::default(), 16).unwrap();
        let v = decide_sigma_rigid(&p).unwrap();
        match v.status {
            VerdictStatus::FailsWithWitness(Witness::Rigid { r, alpha }) => {
                // The canonical scan reaches (0,1) first; (0,1)·swap((0,1))
                // = (0,1)·(1,0) = 0.
                assert_eq!(r.label, "(0,1)");
                assert_eq!(alpha, Exponent(vec![1]));
            }
            other => panic!("expected rigidity failure, got {other:?}"),
        }
    }
}
