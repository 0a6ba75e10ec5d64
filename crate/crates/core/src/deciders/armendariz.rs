//! The six Armendariz-variant deciders over one shared pair scan.
//!
//! Finite rings: exhaustive over coefficient vectors, degree shell by
//! degree shell, f-major lexicographic order; the reported witness is the
//! canonical minimum of the first failing shell. Structured rings: the
//! same scan over the small deterministic element pool, which makes
//! failures exact and clean passes bounded.

use crate::algebra::bounded::PolySpace;
use crate::algebra::{Exponent, SkewPoly, SkewPresentation};
use crate::deciders::{cap_error, PropertyId};
use crate::ring::RElem;
use crate::verdict::{Verdict, Witness};
use crate::Result;
use rayon::prelude::*;

pub(crate) fn decide_armendariz(
    pres: &SkewPresentation,
    property: PropertyId,
    degree: u32,
) -> Result<Verdict> {
    if pres.ring().is_finite() {
        decide_finite(pres, property, degree)
    } else {
        decide_sampled(pres, property, degree)
    }
}

fn decide_finite(pres: &SkewPresentation, property: PropertyId, degree: u32) -> Result<Verdict> {
    let cap = pres.caps().multiplications;
    let mut examined: u64 = 0;
    if property.is_weak_variant() {
        let space = PolySpace::linear(pres, cap)?;
        check_pair_cap(&space, cap)?;
        let hit = scan_shell(pres, property, &space, None)?;
        examined += space.total * space.total;
        return Ok(match hit {
            None => Verdict::holds(examined),
            Some(w) => Verdict::fails(w, examined),
        });
    }
    for d in 0..=degree {
        let space = PolySpace::up_to(pres, d, cap)?;
        check_pair_cap(&space, cap)?;
        let hit = scan_shell(pres, property, &space, Some(d))?;
        examined += space.total * space.total;
        if let Some(w) = hit {
            return Ok(Verdict::fails(w, examined));
        }
    }
    Ok(Verdict::verified_up_to(degree, examined))
}

fn check_pair_cap(space: &PolySpace, cap: u64) -> Result<()> {
    let pairs = (space.total as u128) * (space.total as u128);
    if pairs > cap as u128 {
        return Err(cap_error(pairs, cap));
    }
    Ok(())
}

/// Scans every (f, g) pair of the space; `shell` restricts to pairs whose
/// joint support degree is exactly that value. Returns the minimal
/// witness in pair order.
fn scan_shell(
    pres: &SkewPresentation,
    property: PropertyId,
    space: &PolySpace,
    shell: Option<u32>,
) -> Result<Option<Witness>> {
    let total = space.total;
    let best: Option<(u64, Witness)> = (0..total)
        .into_par_iter()
        .filter_map(|fi| {
            let f_deg = space.support_degree(fi);
            if let Some(d) = shell {
                match f_deg {
                    Some(fd) if fd > d => return None,
                    _ => {}
                }
            }
            let f = space.poly(pres, fi);
            if f.is_zero() {
                return None;
            }
            for gi in 0..total {
                if let Some(d) = shell {
                    let g_deg = space.support_degree(gi);
                    let joint = f_deg.max(g_deg);
                    if joint != Some(d) {
                        continue;
                    }
                }
                let g = space.poly(pres, gi);
                if g.is_zero() {
                    continue;
                }
                let product = match pres.poly_mul(&f, &g) {
                    Ok(p) => p,
                    Err(e) => return Some(Err(e)),
                };
                if !product.is_zero() {
                    continue;
                }
                if let Some(w) = conclusion_violation(pres, property, &f, &g, &space.slots) {
                    return Some(Ok((fi * total + gi, w)));
                }
            }
            None
        })
        .try_reduce_with(|a, b| Ok(if a.0 <= b.0 { a } else { b }))
        .transpose()?;
    Ok(best.map(|(_, w)| w))
}

/// Checks the variant's conclusion on a zero product; on failure returns
/// the witness with the first violating slot pair in canonical order.
fn conclusion_violation(
    pres: &SkewPresentation,
    property: PropertyId,
    f: &SkewPoly,
    g: &SkewPoly,
    slots: &[Exponent],
) -> Option<Witness> {
    let ring = pres.ring();
    let witness = |f_slot: &Exponent, g_slot: &Exponent, value: String| Witness::ArmendarizPair {
        f: pres.poly_w(f),
        g: pres.poly_w(g),
        f_slot: f_slot.clone(),
        g_slot: g_slot.clone(),
        value,
    };
    match property {
        PropertyId::SdArmendariz | PropertyId::SdWeakArmendariz => {
            // fg = 0 must force a_iX_i·b_jY_j = 0 in A.
            for fs in slots {
                let Some(a) = f.coefficient(fs) else { continue };
                for gs in slots {
                    let Some(b) = g.coefficient(gs) else { continue };
                    let left = pres.term(a, fs.clone());
                    let right = pres.term(b, gs.clone());
                    let prod = pres.poly_mul(&left, &right).ok()?;
                    if !prod.is_zero() {
                        return Some(witness(fs, gs, pres.render_poly(&prod)));
                    }
                }
            }
            None
        }
        PropertyId::SigmaSkewArmendariz | PropertyId::WeakSigmaSkewArmendariz => {
            for fs in slots {
                let Some(a) = f.coefficient(fs) else { continue };
                for gs in slots {
                    let Some(b) = g.coefficient(gs) else { continue };
                    let image = match property {
                        // a_i·σ^{α_i}(b_j) with α_i = exp(X_i).
                        PropertyId::SigmaSkewArmendariz => sigma_alpha_apply(pres, fs, b),
                        // a_i·σ_i(b_j) with σ_0 = id.
                        _ => match fs.max_var() {
                            None => b.clone(),
                            Some(i) => pres.sigma(i).apply(ring, b),
                        },
                    };
                    let prod = ring.mul(a, &image);
                    if !ring.is_zero(&prod) {
                        return Some(witness(fs, gs, ring.render(&prod)));
                    }
                }
            }
            None
        }
        PropertyId::SkewArmendariz | PropertyId::WeakSkewArmendariz => {
            // fg = 0 must force a_0·b_k = 0 for every k.
            let zero_exp = Exponent::zero(pres.n());
            let a0 = f.coefficient(&zero_exp)?;
            for gs in slots {
                let Some(b) = g.coefficient(gs) else { continue };
                let prod = ring.mul(a0, b);
                if !ring.is_zero(&prod) {
                    return Some(witness(&zero_exp, gs, ring.render(&prod)));
                }
            }
            None
        }
        _ => unreachable!("not an Armendariz variant"),
    }
}

/// σ^α(b) = σ_1^{α_1}(σ_2^{α_2}(…(b))), composed directly.
pub(crate) fn sigma_alpha_apply(pres: &SkewPresentation, alpha: &Exponent, b: &RElem) -> RElem {
    let ring = pres.ring();
    let mut out = b.clone();
    for i in (1..=pres.n()).rev() {
        for _ in 0..alpha.get(i) {
            out = pres.sigma(i).apply(ring, &out);
        }
    }
    out
}

/// δ^α(b) with the convention δ^α = δ_1^{α_1}∘…∘δ_n^{α_n}, parallel to
/// σ^α.
pub(crate) fn delta_alpha_apply(pres: &SkewPresentation, alpha: &Exponent, b: &RElem) -> RElem {
    let ring = pres.ring();
    let mut out = b.clone();
    for i in (1..=pres.n()).rev() {
        for _ in 0..alpha.get(i) {
            out = pres.delta(i).apply(ring, &out);
        }
    }
    out
}

/// Bounded scan over the deterministic sample pool of a structured ring.
fn decide_sampled(pres: &SkewPresentation, property: PropertyId, degree: u32) -> Result<Verdict> {
    let ring = pres.ring();
    let mut pool: Vec<RElem> = vec![ring.zero()];
    for e in ring.small_elements() {
        if !ring.is_zero(&e) && !pool.contains(&e) {
            pool.push(e);
        }
    }
    let slots: Vec<Exponent> = if property.is_weak_variant() {
        let n = pres.n();
        let mut s = vec![Exponent::zero(n)];
        s.extend((1..=n).map(|i| Exponent::unit(n, i)));
        s
    } else {
        crate::algebra::monomials_up_to(pres.n(), degree)
    };
    let m = pool.len() as u64;
    let total = m.checked_pow(slots.len() as u32).ok_or_else(|| {
        cap_error(u128::MAX, pres.caps().multiplications)
    })?;
    let pairs = (total as u128) * (total as u128);
    if pairs > pres.caps().multiplications as u128 {
        return Err(cap_error(pairs, pres.caps().multiplications));
    }
    let build = |mut idx: u64| -> SkewPoly {
        let mut digits = vec![0u32; slots.len()];
        for d in digits.iter_mut().rev() {
            *d = (idx % m) as u32;
            idx /= m;
        }
        pres.poly_from_terms(
            slots
                .iter()
                .zip(digits)
                .filter(|(_, d)| *d != 0)
                .map(|(s, d)| (s.clone(), pool[d as usize].clone())),
        )
    };
    let best: Option<(u64, Witness)> = (0..total)
        .into_par_iter()
        .filter_map(|fi| {
            let f = build(fi);
            if f.is_zero() {
                return None;
            }
            for gi in 0..total {
                let g = build(gi);
                if g.is_zero() {
                    continue;
                }
                let product = match pres.poly_mul(&f, &g) {
                    Ok(p) => p,
                    Err(e) => return Some(Err(e)),
                };
                if !product.is_zero() {
                    continue;
                }
                if let Some(w) = conclusion_violation(pres, property, &f, &g, &slots) {
                    return Some(Ok((fi * total + gi, w)));
                }
            }
            None
        })
        .try_reduce_with(|a, b| Ok(if a.0 <= b.0 { a } else { b }))
        .transpose()?;
    let examined = total * total;
    Ok(match best {
        Some((_, w)) => Verdict::fails(w, examined),
        None => Verdict::verified_up_to(
            if property.is_weak_variant() { 1 } else { degree },
            examined,
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presentation::{
        trivial_presentation_data, validate_presentation, PresentationData,
    };
    use crate::algebra::MonomialOrder;
    use crate::ring::maps::product_swap_table;
    use crate::ring::{validate_ring, EndoMap, RingDescriptor, SigmaDerivation};
    use crate::verdict::VerdictStatus;
    use crate::Caps;
    use std::collections::BTreeMap;
    use std::sync::Arc;

    fn swap_presentation() -> Arc<SkewPresentation> {
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
        validate_presentation(
            PresentationData {
                ring,
                sigmas: vec![swap],
                deltas: vec![delta],
                c: BTreeMap::new(),
                r_consts: BTreeMap::new(),
                order: MonomialOrder::DegLex,
                declared_quasi_commutative: None,
                declared_bijective: None,
            },
            Caps::default(),
            16,
        )
        .unwrap()
    }

    #[test]
    fn swap_fails_skew_armendariz_with_paper_witness() {
        let p = swap_presentation();
        let v = decide_armendariz(&p, PropertyId::SkewArmendariz, 1).unwrap();
        match &v.status {
            VerdictStatus::FailsWithWitness(Witness::ArmendarizPair { f, g, value, .. }) => {
                assert_eq!(f.text, "(0,1)*x1 + (0,1)");
                assert_eq!(g.text, "(0,1)*x1 + (1,0)");
                assert_eq!(value, "(0,1)");
            }
            other => panic!("expected Armendariz failure, got {other:?}"),
        }
    }

    #[test]
    fn z2_is_verified_at_degree_two() {
        let ring = validate_ring(&RingDescriptor::Modular { modulus: 2 }, &Caps::default())
            .unwrap();
        let data = trivial_presentation_data(ring, 1, BTreeMap::new(), BTreeMap::new());
        let p = validate_presentation(data, Caps::default(), 16).unwrap();
        let v = decide_armendariz(&p, PropertyId::SkewArmendariz, 2).unwrap();
        assert_eq!(v.status, VerdictStatus::VerifiedUpTo(2));
        let w = decide_armendariz(&p, PropertyId::WeakSkewArmendariz, 1).unwrap();
        assert_eq!(w.status, VerdictStatus::Holds);
    }

    #[test]
    fn upper_triangular_fails_weak_skew_armendariz() {
        let ring = validate_ring(
            &RingDescriptor::UpperTriangular2x2 {
                base: Box::new(RingDescriptor::Modular { modulus: 2 }),
            },
            &Caps::default(),
        )
        .unwrap();
        let data = trivial_presentation_data(ring, 1, BTreeMap::new(), BTreeMap::new());
        let p = validate_presentation(data, Caps::default(), 16).unwrap();
        let v = decide_armendariz(&p, PropertyId::WeakSkewArmendariz, 1).unwrap();
        assert!(v.is_definitive_failure());
    }

    #[test]
    fn weak_variants_never_report_verified_on_finite_rings() {
        let p = swap_presentation();
        for prop in [
            PropertyId::SdWeakArmendariz,
            PropertyId::WeakSigmaSkewArmendariz,
            PropertyId::WeakSkewArmendariz,
        ] {
            let v = decide_armendariz(&p, prop, 3).unwrap();
            assert!(!matches!(v.status, VerdictStatus::VerifiedUpTo(_)));
        }
    }
}
