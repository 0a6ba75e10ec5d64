//! Independent witness replay: every emitted witness is re-checked
//! against the raw definition, routing products through the slow word
//! normalizer rather than the search path.

use crate::algebra::slow::{normalize_word, slow_mul, Atom};
use crate::algebra::{Exponent, SkewPresentation};
use crate::deciders::armendariz::sigma_alpha_apply;
use crate::deciders::{is_sigma_delta_ideal, PropertyId};
use crate::error::Error;
use crate::ring::classical::replay_classical;
use crate::ring::ideals::{idempotents_i, right_annihilator_i};
use crate::verdict::Witness;
use crate::Result;

/// Replays a witness for the given property. True means the witness
/// reproduces the violation.
pub fn replay(pres: &SkewPresentation, property: PropertyId, witness: &Witness) -> Result<bool> {
    let ring = pres.ring();
    match (property, witness) {
        (PropertyId::SigmaRigid, Witness::Rigid { r, alpha }) => {
            let image = sigma_alpha_apply(pres, alpha, &r.elem);
            Ok(!ring.is_zero(&r.elem) && ring.is_zero(&ring.mul(&r.elem, &image)))
        }
        (PropertyId::SdQuasiBaer, Witness::SdIdealFail { ideal, annihilator }) => {
            let f = ring.require_finite("witness replay")?;
            let elems: Vec<u32> = ideal.iter().map(|e| ring.idx(&e.elem)).collect();
            if !is_sigma_delta_ideal(pres, &elems) {
                return Ok(false);
            }
            let ann = right_annihilator_i(f, &elems);
            let claimed: Vec<u32> = annihilator.iter().map(|e| ring.idx(&e.elem)).collect();
            if ann != claimed {
                return Ok(false);
            }
            Ok(idempotents_i(f).into_iter().all(|e| {
                let mut er: Vec<u32> = (0..f.size()).map(|r| f.mul_i(e, r)).collect();
                er.sort_unstable();
                er.dedup();
                er != ann
            }))
        }
        (PropertyId::Classical(_), w) => replay_classical(ring, w),
        (
            prop,
            Witness::ArmendarizPair {
                f,
                g,
                f_slot,
                g_slot,
                ..
            },
        ) => {
            // fg must really vanish (checked through the slow route).
            let product = slow_mul(pres, &f.poly, &g.poly)?;
            if !product.is_zero() {
                return Ok(false);
            }
            let a = match f.poly.coefficient(f_slot) {
                Some(a) => a.clone(),
                None => return Ok(false),
            };
            let b = match g.poly.coefficient(g_slot) {
                Some(b) => b.clone(),
                None => return Ok(false),
            };
            match prop {
                PropertyId::SdArmendariz | PropertyId::SdWeakArmendariz => {
                    // a·x^{f_slot}·b·x^{g_slot} must be nonzero.
                    let mut word = vec![Atom::Coef(a)];
                    push_vars(&mut word, pres, f_slot);
                    word.push(Atom::Coef(b));
                    push_vars(&mut word, pres, g_slot);
                    Ok(!normalize_word(pres, word)?.is_zero())
                }
                PropertyId::SigmaSkewArmendariz => {
                    Ok(!ring.is_zero(&ring.mul(&a, &sigma_alpha_apply(pres, f_slot, &b))))
                }
                PropertyId::WeakSigmaSkewArmendariz => {
                    let image = match f_slot.max_var() {
                        None => b,
                        Some(i) => pres.sigma(i).apply(ring, &b),
                    };
                    Ok(!ring.is_zero(&ring.mul(&a, &image)))
                }
                PropertyId::SkewArmendariz | PropertyId::WeakSkewArmendariz => {
                    if !f_slot.is_zero() {
                        return Ok(false);
                    }
                    Ok(!ring.is_zero(&ring.mul(&a, &b)))
                }
                _ => Err(Error::Invalid(
                    "witness kind does not match the property".into(),
                )),
            }
        }
        (_, Witness::PolyNilpotent { f }) => {
            let sq = slow_mul(pres, &f.poly, &f.poly)?;
            Ok(!f.poly.is_zero() && sq.is_zero())
        }
        _ => Err(Error::Invalid(
            "witness kind does not match the property".into(),
        )),
    }
}

fn push_vars(word: &mut Vec<Atom>, pres: &SkewPresentation, exp: &Exponent) {
    for i in 1..=pres.n() {
        for _ in 0..exp.get(i) {
            word.push(Atom::Var(i));
        }
    }
}
