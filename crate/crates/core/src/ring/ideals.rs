//! Annihilators, idempotents, semicentral idempotents, and two-sided
//! ideal enumeration on finite rings.

use crate::error::Error;
use crate::ring::{ConcreteRing, FiniteRing, RElem};
use crate::{Caps, Result};
use std::collections::BTreeSet;

/// A verified ideal of a finite ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ideal {
    /// Ascending canonical indices.
    pub elements: Vec<u32>,
    pub generators: Vec<u32>,
    pub is_left: bool,
    pub is_right: bool,
}

impl Ideal {
    pub fn is_two_sided(&self) -> bool {
        self.is_left && self.is_right
    }

    pub fn contains(&self, idx: u32) -> bool {
        self.elements.binary_search(&idx).is_ok()
    }

    pub fn labels(&self, ring: &ConcreteRing) -> Vec<String> {
        self.elements
            .iter()
            .map(|&i| ring.render(&ring.elem(i)))
            .collect()
    }
}

/// {r : s·r = 0 for every s in the subset}. The empty subset is treated
/// as {0}, so the result is the whole ring.
pub fn right_annihilator(ring: &ConcreteRing, subset: &[RElem]) -> Result<Vec<RElem>> {
    let f = ring.require_finite("right annihilator")?;
    let idxs: Vec<u32> = subset.iter().map(|e| ring.idx(e)).collect();
    let ann = right_annihilator_i(f, &idxs);
    debug_assert!(is_right_ideal(f, &ann), "annihilator must be a right ideal");
    Ok(ann.into_iter().map(|i| ring.elem(i)).collect())
}

pub(crate) fn right_annihilator_i(f: &FiniteRing, subset: &[u32]) -> Vec<u32> {
    (0..f.size())
        .filter(|&r| subset.iter().all(|&s| f.mul_i(s, r) == 0))
        .collect()
}

pub(crate) fn is_right_ideal(f: &FiniteRing, sorted: &[u32]) -> bool {
    let set: BTreeSet<u32> = sorted.iter().copied().collect();
    sorted.iter().all(|&a| {
        sorted.iter().all(|&b| set.contains(&f.add_i(a, b)))
            && (0..f.size()).all(|x| set.contains(&f.mul_i(a, x)))
    })
}

pub(crate) fn is_left_ideal(f: &FiniteRing, sorted: &[u32]) -> bool {
    let set: BTreeSet<u32> = sorted.iter().copied().collect();
    sorted.iter().all(|&a| {
        sorted.iter().all(|&b| set.contains(&f.add_i(a, b)))
            && (0..f.size()).all(|x| set.contains(&f.mul_i(x, a)))
    })
}

/// {e : e² = e}; structured rings expose their closed-form list instead.
pub fn idempotents(ring: &ConcreteRing) -> Result<Vec<RElem>> {
    if let Some(closed) = ring.structured_idempotents() {
        return Ok(closed);
    }
    let f = ring.require_finite("idempotent enumeration")?;
    Ok(idempotents_i(f).into_iter().map(|i| ring.elem(i)).collect())
}

pub(crate) fn idempotents_i(f: &FiniteRing) -> Vec<u32> {
    (0..f.size()).filter(|&e| f.mul_i(e, e) == e).collect()
}

/// Left: {e idempotent : exe = xe for all x}; right: exe = ex.
pub fn semicentral_idempotents(ring: &ConcreteRing, left: bool) -> Result<Vec<RElem>> {
    let f = ring.require_finite("semicentral idempotents")?;
    Ok(semicentral_idempotents_i(f, left)
        .into_iter()
        .map(|i| ring.elem(i))
        .collect())
}

pub(crate) fn semicentral_idempotents_i(f: &FiniteRing, left: bool) -> Vec<u32> {
    idempotents_i(f)
        .into_iter()
        .filter(|&e| {
            (0..f.size()).all(|x| {
                let exe = f.mul_i(f.mul_i(e, x), e);
                if left {
                    exe == f.mul_i(x, e)
                } else {
                    exe == f.mul_i(e, x)
                }
            })
        })
        .collect()
}

/// Additive closure of a set of indices.
pub(crate) fn additive_closure(f: &FiniteRing, gens: &[u32]) -> Vec<u32> {
    let mut set: BTreeSet<u32> = gens.iter().copied().collect();
    set.insert(0);
    loop {
        let snapshot: Vec<u32> = set.iter().copied().collect();
        let before = set.len();
        for &a in &snapshot {
            for &b in &snapshot {
                set.insert(f.add_i(a, b));
            }
        }
        if set.len() == before {
            return set.into_iter().collect();
        }
    }
}

/// The two-sided ideal generated by one element: the additive span of
/// R·a·R (the ring is unital, so this contains a, Ra and aR).
pub(crate) fn principal_two_sided_i(f: &FiniteRing, a: u32) -> Vec<u32> {
    let mut prods = BTreeSet::new();
    for x in 0..f.size() {
        let xa = f.mul_i(x, a);
        for y in 0..f.size() {
            prods.insert(f.mul_i(xa, y));
        }
    }
    let gens: Vec<u32> = prods.into_iter().collect();
    additive_closure(f, &gens)
}

/// Every two-sided ideal: principal ideals closed under ideal sum,
/// deduplicated and sorted canonically (by size, then elementwise).
pub fn enumerate_two_sided_ideals(ring: &ConcreteRing, caps: &Caps) -> Result<Vec<Ideal>> {
    let f = ring.require_finite("ideal enumeration")?;
    if f.size() > caps.ideal_ring_size {
        return Err(Error::SizeCapExceeded {
            size: f.size(),
            cap: caps.ideal_ring_size,
        });
    }
    let mut principals: Vec<(u32, Vec<u32>)> = Vec::new();
    for a in 0..f.size() {
        let ideal = principal_two_sided_i(f, a);
        if !principals.iter().any(|(_, i)| *i == ideal) {
            principals.push((a, ideal));
        }
    }
    let mut found: Vec<(Vec<u32>, Vec<u32>)> = vec![(vec![], vec![0])]; // (gens, elements)
    let mut frontier = found.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (gens, elems) in &frontier {
            for (a, principal) in &principals {
                if elems.contains(a) {
                    continue;
                }
                let mut union: Vec<u32> = elems.clone();
                union.extend(principal);
                let sum = additive_closure(f, &union);
                if !found.iter().any(|(_, e)| *e == sum) {
                    let mut g = gens.clone();
                    g.push(*a);
                    found.push((g.clone(), sum.clone()));
                    next.push((g, sum));
                }
            }
        }
        frontier = next;
    }
    let mut ideals: Vec<Ideal> = found
        .into_iter()
        .map(|(generators, elements)| {
            let is_left = is_left_ideal(f, &elements);
            let is_right = is_right_ideal(f, &elements);
            debug_assert!(is_left && is_right);
            Ideal {
                elements,
                generators,
                is_left,
                is_right,
            }
        })
        .collect();
    ideals.sort_by(|a, b| {
        a.elements
            .len()
            .cmp(&b.elements.len())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    Ok(ideals)
}

/// Constructs and verifies an ideal from generators (additive closure of
/// the generators' two-sided span restricted to the claimed sides).
pub fn ideal_from_generators(ring: &ConcreteRing, gens: &[RElem]) -> Result<Ideal> {
    let f = ring.require_finite("ideal construction")?;
    let gidx: Vec<u32> = gens.iter().map(|e| ring.idx(e)).collect();
    let mut all = Vec::new();
    for &g in &gidx {
        all.extend(principal_two_sided_i(f, g));
    }
    let elements = additive_closure(f, &all);
    Ok(Ideal {
        is_left: is_left_ideal(f, &elements),
        is_right: is_right_ideal(f, &elements),
        elements,
        generators: gidx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{validate_ring, RingDescriptor};
    use crate::Caps;
    use std::sync::Arc;

    fn ring(d: RingDescriptor) -> Arc<ConcreteRing> {
        validate_ring(&d, &Caps::default()).unwrap()
    }

    fn z(m: u32) -> Arc<ConcreteRing> {
        ring(RingDescriptor::Modular { modulus: m })
    }

    #[test]
    fn annihilator_of_two_in_z4() {
        let z4 = z(4);
        let ann = right_annihilator(&z4, &[z4.elem(2)]).unwrap();
        let idxs: Vec<u32> = ann.iter().map(|e| z4.idx(e)).collect();
        assert_eq!(idxs, vec![0, 2]);
    }

    #[test]
    fn annihilator_of_zero_is_everything() {
        let z6 = z(6);
        let ann = right_annihilator(&z6, &[z6.elem(0)]).unwrap();
        assert_eq!(ann.len(), 6);
        // Empty subset behaves like {0}.
        let ann_empty = right_annihilator(&z6, &[]).unwrap();
        assert_eq!(ann_empty.len(), 6);
    }

    #[test]
    fn annihilator_of_e12_has_four_elements() {
        // Oracle: scan all 8 elements against E12·M = 0; the result is the
        // matrices (a,b;0,0).
        let t = ring(RingDescriptor::UpperTriangular2x2 {
            base: Box::new(RingDescriptor::Modular { modulus: 2 }),
        });
        let f = t.finite().unwrap();
        // E12 = ut(0,1,0): natural encoding 0 + 2*1 + 4*0 = 2.
        let e12 = f.from_natural(2).unwrap();
        let ann = right_annihilator_i(f, &[e12]);
        assert_eq!(ann.len(), 4);
        for &m in &ann {
            // d-component of annihilating matrices is 0.
            assert_eq!(f.to_natural(m) / 4, 0);
        }
    }

    #[test]
    fn idempotents_of_z4_z6_and_product() {
        let z4 = z(4);
        let i4: Vec<u32> = idempotents(&z4).unwrap().iter().map(|e| z4.idx(e)).collect();
        assert_eq!(i4, vec![0, 1]);

        // Oracle: squares of all six residues; 3² = 9 ≡ 3 and 4² = 16 ≡ 4.
        let z6 = z(6);
        let i6: Vec<u32> = idempotents(&z6).unwrap().iter().map(|e| z6.idx(e)).collect();
        assert_eq!(i6, vec![0, 1, 3, 4]);

        let p = ring(RingDescriptor::DirectProduct {
            factors: vec![
                RingDescriptor::Modular { modulus: 2 },
                RingDescriptor::Modular { modulus: 2 },
            ],
        });
        assert_eq!(idempotents(&p).unwrap().len(), 4);
    }

    #[test]
    fn ideals_of_z4() {
        let z4 = z(4);
        let ideals = enumerate_two_sided_ideals(&z4, &Caps::default()).unwrap();
        let sets: Vec<Vec<u32>> = ideals.iter().map(|i| i.elements.clone()).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn ideals_of_z2xz2() {
        let p = ring(RingDescriptor::DirectProduct {
            factors: vec![
                RingDescriptor::Modular { modulus: 2 },
                RingDescriptor::Modular { modulus: 2 },
            ],
        });
        let ideals = enumerate_two_sided_ideals(&p, &Caps::default()).unwrap();
        assert_eq!(ideals.len(), 4);
    }

    #[test]
    fn ideals_of_upper_triangular_match_brute_force() {
        let t = ring(RingDescriptor::UpperTriangular2x2 {
            base: Box::new(RingDescriptor::Modular { modulus: 2 }),
        });
        let f = t.finite().unwrap();
        // Independent oracle: closure over all 2^8 subsets, deduplicated.
        let mut brute: Vec<Vec<u32>> = Vec::new();
        for mask in 0u32..256 {
            let gens: Vec<u32> = (0..8).filter(|&i| mask & (1 << i) != 0).collect();
            let mut all = Vec::new();
            for &g in &gens {
                all.extend(principal_two_sided_i(f, g));
            }
            let closed = additive_closure(f, &all);
            if is_left_ideal(f, &closed) && is_right_ideal(f, &closed) && !brute.contains(&closed)
            {
                brute.push(closed);
            }
        }
        brute.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let ideals = enumerate_two_sided_ideals(&t, &Caps::default()).unwrap();
        let sets: Vec<Vec<u32>> = ideals.iter().map(|i| i.elements.clone()).collect();
        assert_eq!(sets, brute);
        assert_eq!(sets.len(), 5);
        // The strictly upper triangular set {0, E12} is among them.
        let e12 = f.from_natural(2).unwrap();
        let mut small = vec![0, e12];
        small.sort();
        assert!(sets.contains(&small));
    }

    #[test]
    fn ideal_from_generators_verifies_flags() {
        let t = ring(RingDescriptor::UpperTriangular2x2 {
            base: Box::new(RingDescriptor::Modular { modulus: 2 }),
        });
        let f = t.finite().unwrap();
        let e12 = t.elem(f.from_natural(2).unwrap());
        let ideal = ideal_from_generators(&t, &[e12]).unwrap();
        // The two-sided ideal generated by E12 is the strictly upper set.
        assert_eq!(ideal.elements.len(), 2);
        assert!(ideal.is_left && ideal.is_right && ideal.is_two_sided());
        assert!(ideal.contains(0));
    }

    #[test]
    fn semicentral_in_commutative_equals_idempotents() {
        let z6 = z(6);
        let left: Vec<u32> = semicentral_idempotents(&z6, true)
            .unwrap()
            .iter()
            .map(|e| z6.idx(e))
            .collect();
        assert_eq!(left, vec![0, 1, 3, 4]);
    }

    #[test]
    fn semicentral_in_upper_triangular() {
        let t = ring(RingDescriptor::UpperTriangular2x2 {
            base: Box::new(RingDescriptor::Modular { modulus: 2 }),
        });
        let f = t.finite().unwrap();
        let left = semicentral_idempotents_i(f, true);
        let right = semicentral_idempotents_i(f, false);
        // 0 and 1 are always present.
        assert!(left.contains(&0) && left.contains(&1));
        assert!(right.contains(&0) && right.contains(&1));
        // Triple-loop oracle.
        for &e in &left {
            for x in 0..8 {
                assert_eq!(f.mul_i(f.mul_i(e, x), e), f.mul_i(x, e));
            }
        }
    }
}
