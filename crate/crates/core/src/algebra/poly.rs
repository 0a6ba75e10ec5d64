//! PBW normal forms and the straightening arithmetic of the extension.
//!
//! Elements are finite maps from exponent vectors to nonzero left
//! coefficients. Products are computed by distributing over terms,
//! pushing coefficients left through monomials one variable at a time and
//! straightening variable inversions; every rewrite strictly decreases
//! the (degree, inversion count) measure, and a step budget guards
//! against mis-validated presentations.

use crate::algebra::exponent::{Exponent, MonomialOrder};
use crate::algebra::presentation::SkewPresentation;
use crate::error::Error;
use crate::ring::RElem;
use crate::verdict::PolyW;
use crate::Result;
use std::collections::BTreeMap;

/// An element of the extension in PBW normal form. Zero coefficients are
/// never stored; the zero polynomial is the empty map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SkewPoly {
    pres: u64,
    terms: BTreeMap<Exponent, RElem>,
}

impl SkewPoly {
    pub fn presentation_id(&self) -> u64 {
        self.pres
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, RElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    pub fn coefficient(&self, exp: &Exponent) -> Option<&RElem> {
        self.terms.get(exp)
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }
}

/// Leading data of a polynomial under a monomial order; the zero
/// polynomial has no leading monomial and lc(0) = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingData {
    pub lm: Option<Exponent>,
    pub lc: RElem,
    pub lt: SkewPoly,
    pub exp: Option<Exponent>,
    pub deg: Option<u32>,
}

struct Steps {
    left: u64,
    budget: u64,
}

impl Steps {
    fn new(budget: u64) -> Self {
        Steps {
            left: budget,
            budget,
        }
    }

    fn take(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::RewriteBudgetExceeded {
                budget: self.budget,
            });
        }
        self.left -= 1;
        Ok(())
    }
}

impl SkewPresentation {
    pub fn zero_poly(&self) -> SkewPoly {
        SkewPoly {
            pres: self.id(),
            terms: BTreeMap::new(),
        }
    }

    pub fn const_poly(&self, r: &RElem) -> SkewPoly {
        let mut p = self.zero_poly();
        self.add_term(&mut p, Exponent::zero(self.n()), r.clone());
        p
    }

    pub fn one_poly(&self) -> SkewPoly {
        self.const_poly(&self.ring().one())
    }

    pub fn monomial(&self, exp: Exponent) -> SkewPoly {
        self.term(&self.ring().one(), exp)
    }

    pub fn term(&self, r: &RElem, exp: Exponent) -> SkewPoly {
        assert_eq!(exp.n(), self.n(), "exponent arity mismatch");
        let mut p = self.zero_poly();
        self.add_term(&mut p, exp, r.clone());
        p
    }

    pub fn poly_from_terms(&self, terms: impl IntoIterator<Item = (Exponent, RElem)>) -> SkewPoly {
        let mut p = self.zero_poly();
        for (exp, r) in terms {
            self.add_term(&mut p, exp, r);
        }
        p
    }

    fn add_term(&self, p: &mut SkewPoly, exp: Exponent, r: RElem) {
        if self.ring().is_zero(&r) {
            return;
        }
        match p.terms.remove(&exp) {
            None => {
                p.terms.insert(exp, r);
            }
            Some(existing) => {
                let sum = self.ring().add(&existing, &r);
                if !self.ring().is_zero(&sum) {
                    p.terms.insert(exp, sum);
                }
            }
        }
    }

    pub fn poly_add(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        self.assert_mine(f);
        self.assert_mine(g);
        let mut out = f.clone();
        for (exp, r) in &g.terms {
            self.add_term(&mut out, exp.clone(), r.clone());
        }
        out
    }

    pub fn poly_neg(&self, f: &SkewPoly) -> SkewPoly {
        self.assert_mine(f);
        let terms = f
            .terms
            .iter()
            .map(|(e, r)| (e.clone(), self.ring().neg(r)))
            .collect();
        SkewPoly {
            pres: self.id(),
            terms,
        }
    }

    pub fn poly_sub(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        self.poly_add(f, &self.poly_neg(g))
    }

    /// r·f: left coefficients absorb the ring element.
    pub fn scale_left(&self, r: &RElem, f: &SkewPoly) -> SkewPoly {
        self.assert_mine(f);
        let mut out = self.zero_poly();
        for (exp, a) in &f.terms {
            self.add_term(&mut out, exp.clone(), self.ring().mul(r, a));
        }
        out
    }

    /// x_i·r = σ_i(r)·x_i + δ_i(r).
    pub fn var_times_coeff(&self, i: usize, r: &RElem) -> SkewPoly {
        let ring = self.ring();
        let mut out = self.zero_poly();
        self.add_term(
            &mut out,
            Exponent::unit(self.n(), i),
            self.sigma(i).apply(ring, r),
        );
        self.add_term(&mut out, Exponent::zero(self.n()), self.delta(i).apply(ring, r));
        out
    }

    /// x_j·x_i = c_{i,j}·x_i·x_j + r_0 + Σ_k r_k·x_k, for j > i.
    pub fn swap_rewrite(&self, j: usize, i: usize) -> SkewPoly {
        assert!(i < j && j <= self.n(), "swap_rewrite needs j > i");
        let n = self.n();
        let mut out = self.zero_poly();
        let mut lead = Exponent::zero(n);
        lead.0[i - 1] = 1;
        lead.0[j - 1] = 1;
        self.add_term(&mut out, lead, self.c_const(i, j).clone());
        let r = self.r_const(i, j);
        self.add_term(&mut out, Exponent::zero(n), r[0].clone());
        for (k, rk) in r.iter().enumerate().skip(1) {
            self.add_term(&mut out, Exponent::unit(n, k), rk.clone());
        }
        out
    }

    /// Normal form of x^α·r. The coefficient at x^α equals σ^α(r) and the
    /// remainder has degree < |α|; both are asserted.
    pub fn monomial_times_coeff(&self, alpha: &Exponent, r: &RElem) -> Result<SkewPoly> {
        let mut steps = Steps::new(self.caps().rewrite_budget);
        let out = self.mtc(alpha, r, &mut steps)?;
        let ring = self.ring();
        let mut expected = r.clone();
        for i in (1..=self.n()).rev() {
            for _ in 0..alpha.get(i) {
                expected = self.sigma(i).apply(ring, &expected);
            }
        }
        match out.terms.get(alpha) {
            Some(lc) => assert!(ring.eq(lc, &expected), "leading coefficient must be sigma^alpha(r)"),
            None => assert!(
                ring.is_zero(&expected),
                "leading coefficient must be sigma^alpha(r)"
            ),
        }
        assert!(
            out.terms
                .keys()
                .all(|e| e == alpha || e.degree() < alpha.degree()),
            "remainder of x^alpha*r must have degree < |alpha|"
        );
        Ok(out)
    }

    fn mtc(&self, alpha: &Exponent, r: &RElem, steps: &mut Steps) -> Result<SkewPoly> {
        if self.ring().is_zero(r) {
            return Ok(self.zero_poly());
        }
        let k = match alpha.max_var() {
            None => return Ok(self.const_poly(r)),
            Some(k) => k,
        };
        let ring = self.ring();
        // Single-variable phase: x_k^{α_k}·r as Σ_d c_d·x_k^d.
        let mut sv: BTreeMap<u16, RElem> = BTreeMap::new();
        sv.insert(0, r.clone());
        for _ in 0..alpha.get(k) {
            let mut next: BTreeMap<u16, RElem> = BTreeMap::new();
            for (d, cf) in &sv {
                steps.take()?;
                let up = self.sigma(k).apply(ring, cf);
                let stay = self.delta(k).apply(ring, cf);
                for (exp, val) in [(d + 1, up), (*d, stay)] {
                    if ring.is_zero(&val) {
                        continue;
                    }
                    match next.remove(&exp) {
                        None => {
                            next.insert(exp, val);
                        }
                        Some(old) => {
                            let sum = ring.add(&old, &val);
                            if !ring.is_zero(&sum) {
                                next.insert(exp, sum);
                            }
                        }
                    }
                }
            }
            sv = next;
        }
        // Prefix phase: x^{α'}·c_d with α' = α minus its k-component,
        // then append x_k^d (no straightening: all variables are < k).
        let mut prefix = alpha.clone();
        prefix.0[k - 1] = 0;
        let mut out = self.zero_poly();
        for (d, cf) in sv {
            let p = self.mtc(&prefix, &cf, steps)?;
            for (exp, a) in p.terms {
                let mut bumped = exp;
                bumped.0[k - 1] += d;
                self.add_term(&mut out, bumped, a);
            }
        }
        Ok(out)
    }

    /// Normal form of x^γ·x_j.
    fn mtv(&self, gamma: &Exponent, j: usize, steps: &mut Steps) -> Result<SkewPoly> {
        match gamma.max_var() {
            None => Ok(self.monomial(Exponent::unit(self.n(), j))),
            Some(k) if k <= j => Ok(self.monomial(gamma.bump(j))),
            Some(k) => {
                steps.take()?;
                let sw = self.swap_rewrite(k, j);
                let stem = gamma.lower(k);
                let mut out = self.zero_poly();
                for (beta, cf) in &sw.terms {
                    let p = self.mtc(&stem, cf, steps)?;
                    let q = self.ptm(&p, beta, steps)?;
                    out = self.poly_add(&out, &q);
                }
                Ok(out)
            }
        }
    }

    /// f·x_j.
    fn ptv(&self, f: &SkewPoly, j: usize, steps: &mut Steps) -> Result<SkewPoly> {
        let mut out = self.zero_poly();
        for (gamma, a) in &f.terms {
            let m = self.mtv(gamma, j, steps)?;
            out = self.poly_add(&out, &self.scale_left(a, &m));
        }
        Ok(out)
    }

    /// f·x^β, multiplying by one letter of x^β at a time.
    fn ptm(&self, f: &SkewPoly, beta: &Exponent, steps: &mut Steps) -> Result<SkewPoly> {
        let mut acc = f.clone();
        for i in 1..=self.n() {
            for _ in 0..beta.get(i) {
                acc = self.ptv(&acc, i, steps)?;
            }
        }
        Ok(acc)
    }

    /// f·r.
    fn ptc(&self, f: &SkewPoly, r: &RElem, steps: &mut Steps) -> Result<SkewPoly> {
        let mut out = self.zero_poly();
        for (alpha, a) in &f.terms {
            let m = self.mtc(alpha, r, steps)?;
            out = self.poly_add(&out, &self.scale_left(a, &m));
        }
        Ok(out)
    }

    /// The unique normal form of f·g.
    pub fn poly_mul(&self, f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
        self.assert_mine(f);
        self.assert_mine(g);
        let mut steps = Steps::new(self.caps().rewrite_budget);
        let mut out = self.zero_poly();
        for (beta, b) in &g.terms {
            let h = self.ptc(f, b, &mut steps)?;
            out = self.poly_add(&out, &self.ptm(&h, beta, &mut steps)?);
        }
        Ok(out)
    }

    pub fn poly_pow(&self, f: &SkewPoly, k: u32) -> Result<SkewPoly> {
        let mut acc = self.one_poly();
        for _ in 0..k {
            acc = self.poly_mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// lm/lc/lt/exp/deg of f under the given order.
    pub fn leading_data(&self, f: &SkewPoly, order: MonomialOrder) -> LeadingData {
        self.assert_mine(f);
        match f
            .terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(a, b))
        {
            None => LeadingData {
                lm: None,
                lc: self.ring().zero(),
                lt: self.zero_poly(),
                exp: None,
                deg: None,
            },
            Some((exp, lc)) => LeadingData {
                lm: Some(exp.clone()),
                lc: lc.clone(),
                lt: self.term(lc, exp.clone()),
                exp: Some(exp.clone()),
                deg: f.degree(),
            },
        }
    }

    /// Canonical text: terms in decreasing monomial order, coefficients in
    /// ring-literal syntax, unit coefficients omitted before monomials.
    pub fn render_poly(&self, f: &SkewPoly) -> String {
        self.assert_mine(f);
        if f.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Exponent, &RElem)> = f.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| self.order().compare(b, a));
        let one = self.ring().one();
        let rendered: Vec<String> = terms
            .into_iter()
            .map(|(exp, coef)| {
                let mono = render_monomial(exp);
                if exp.is_zero() {
                    self.ring().render(coef)
                } else if self.ring().eq(coef, &one) {
                    mono
                } else {
                    format!("{}*{}", self.ring().render(coef), mono)
                }
            })
            .collect();
        rendered.join(" + ")
    }

    pub fn poly_w(&self, f: &SkewPoly) -> PolyW {
        PolyW {
            poly: f.clone(),
            text: self.render_poly(f),
        }
    }
}

fn render_monomial(exp: &Exponent) -> String {
    let parts: Vec<String> = exp
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect();
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presentation::{
        trivial_presentation_data, validate_presentation, PresentationData,
    };
    use crate::ring::maps::{product_swap_table, StructuredDelta};
    use crate::ring::{validate_ring, ConcreteRing, EndoMap, Repr, RingDescriptor, SigmaDerivation};
    use crate::Caps;
    use std::collections::BTreeMap;
    use std::sync::Arc;

    fn z(m: u32) -> Arc<ConcreteRing> {
        validate_ring(&RingDescriptor::Modular { modulus: m }, &Caps::default()).unwrap()
    }

    fn quantum_plane_z3() -> Arc<SkewPresentation> {
        let ring = z(3);
        let mut c = BTreeMap::new();
        c.insert((1, 2), ring.elem(2));
        let data = trivial_presentation_data(ring, 2, c, BTreeMap::new());
        validate_presentation(data, Caps::default(), 16).unwrap()
    }

    fn weyl_z5() -> Arc<SkewPresentation> {
        let ring = z(5);
        let mut r = BTreeMap::new();
        let mut vec = vec![ring.zero(); 3];
        vec[0] = ring.one();
        r.insert((1, 2), vec);
        let data = trivial_presentation_data(ring, 2, BTreeMap::new(), r);
        validate_presentation(data, Caps::default(), 16).unwrap()
    }

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
        validate_presentation(data, Caps::default(), 16).unwrap()
    }

    fn diff_poly_z5() -> Arc<SkewPresentation> {
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
            ring,
            sigmas: vec![id],
            deltas: vec![d],
            c: BTreeMap::new(),
            r_consts: BTreeMap::new(),
            order: MonomialOrder::DegLex,
            declared_quasi_commutative: None,
            declared_bijective: None,
        };
        validate_presentation(data, Caps::default(), 16).unwrap()
    }

    #[test]
    fn var_times_coeff_swaps_components() {
        let p = swap_presentation();
        let ring = p.ring().clone();
        // (1,0) has canonical index 3 after relabeling, (0,1) index 2.
        let e = ring.elem(3);
        let out = p.var_times_coeff(1, &e);
        assert_eq!(p.render_poly(&out), "(0,1)*x1");
    }

    #[test]
    fn var_times_one_is_the_variable() {
        let p = quantum_plane_z3();
        let out = p.var_times_coeff(1, &p.ring().one());
        assert_eq!(p.render_poly(&out), "x1");
    }

    #[test]
    fn var_times_t_picks_up_the_derivative() {
        let p = diff_poly_z5();
        let t = RElem {
            ring: p.ring().id(),
            repr: Repr::Poly(vec![0, 1]),
        };
        let out = p.var_times_coeff(1, &t);
        assert_eq!(p.render_poly(&out), "t*x1 + 1");
    }

    #[test]
    fn swap_rewrite_matches_constants() {
        let qp = quantum_plane_z3();
        assert_eq!(qp.render_poly(&qp.swap_rewrite(2, 1)), "2*x1*x2");
        let w = weyl_z5();
        assert_eq!(w.render_poly(&w.swap_rewrite(2, 1)), "x1*x2 + 1");
        let c = quantum_plane_z3();
        let commutative = {
            let ring = z(2);
            let data = trivial_presentation_data(ring, 2, BTreeMap::new(), BTreeMap::new());
            validate_presentation(data, Caps::default(), 16).unwrap()
        };
        assert_eq!(commutative.render_poly(&commutative.swap_rewrite(2, 1)), "x1*x2");
        drop(c);
    }

    #[test]
    fn monomial_times_coeff_base_cases() {
        let p = swap_presentation();
        let ring = p.ring().clone();
        let e = ring.elem(3); // (1,0)
        // α = 0 is the empty product.
        let id = p.monomial_times_coeff(&Exponent::zero(1), &e).unwrap();
        assert_eq!(id, p.const_poly(&e));
        // x²·e = σ²(e)x² = e·x² under the swap.
        let sq = p.monomial_times_coeff(&Exponent(vec![2]), &e).unwrap();
        assert_eq!(p.render_poly(&sq), "(1,0)*x1^2");
    }

    #[test]
    fn monomial_times_coeff_with_derivation() {
        let p = diff_poly_z5();
        let t = RElem {
            ring: p.ring().id(),
            repr: Repr::Poly(vec![0, 1]),
        };
        // x²·t = t·x² + 2x.
        let out = p.monomial_times_coeff(&Exponent(vec![2]), &t).unwrap();
        assert_eq!(p.render_poly(&out), "t*x1^2 + 2*x1");
    }

    #[test]
    fn paper_shaped_product_vanishes() {
        // (e' + e'x)(e - e'x) = 0 over Z_2×Z_2 with the swap.
        let p = swap_presentation();
        let ring = p.ring().clone();
        let e = ring.elem(3);
        let ep = ring.elem(2);
        let f = p.poly_from_terms([
            (Exponent(vec![0]), ep.clone()),
            (Exponent(vec![1]), ep.clone()),
        ]);
        let g = p.poly_from_terms([
            (Exponent(vec![0]), e),
            (Exponent(vec![1]), ring.neg(&ep)),
        ]);
        let prod = p.poly_mul(&f, &g).unwrap();
        assert!(prod.is_zero(), "got {}", p.render_poly(&prod));
    }

    #[test]
    fn characteristic_two_square() {
        let ring = z(2);
        let data = trivial_presentation_data(ring, 1, BTreeMap::new(), BTreeMap::new());
        let p = validate_presentation(data, Caps::default(), 16).unwrap();
        let f = p.poly_add(&p.one_poly(), &p.monomial(Exponent(vec![1])));
        let sq = p.poly_mul(&f, &f).unwrap();
        assert_eq!(p.render_poly(&sq), "x1^2 + 1");
    }

    #[test]
    fn weyl_product_is_associative_on_the_witness_triple() {
        let p = weyl_z5();
        let x1 = p.monomial(Exponent(vec![1, 0]));
        let x2 = p.monomial(Exponent(vec![0, 1]));
        let left = p.poly_mul(&x2, &p.poly_mul(&x2, &x1).unwrap()).unwrap();
        let right = p.poly_mul(&p.poly_mul(&x2, &x2).unwrap(), &x1).unwrap();
        assert_eq!(left, right);
        assert_eq!(p.render_poly(&left), "x1*x2^2 + 2*x2");
    }

    #[test]
    fn leading_data_examples() {
        let p = quantum_plane_z3();
        let f = p.poly_from_terms([
            (Exponent(vec![0, 0]), p.ring().elem(1)),
            (Exponent(vec![1, 0]), p.ring().elem(2)),
            (Exponent(vec![1, 1]), p.ring().elem(1)),
        ]);
        let ld = p.leading_data(&f, MonomialOrder::DegLex);
        assert_eq!(ld.lm, Some(Exponent(vec![1, 1])));
        assert_eq!(p.ring().idx(&ld.lc), 1);
        assert_eq!(ld.deg, Some(2));

        let zero = p.zero_poly();
        let ld0 = p.leading_data(&zero, MonomialOrder::DegLex);
        assert_eq!(ld0.lm, None);
        assert!(p.ring().is_zero(&ld0.lc));
        assert!(ld0.lt.is_zero());

        // Equal degree, tie broken by the x2 exponent.
        let g = p.poly_from_terms([
            (Exponent(vec![2, 0]), p.ring().elem(1)),
            (Exponent(vec![1, 1]), p.ring().elem(1)),
        ]);
        let ldg = p.leading_data(&g, MonomialOrder::DegLex);
        assert_eq!(ldg.lm, Some(Exponent(vec![1, 1])));
    }

    #[test]
    fn quasi_commutative_products_of_monomials_are_monomials() {
        let p = quantum_plane_z3();
        for a in [
            Exponent(vec![0, 0]),
            Exponent(vec![1, 0]),
            Exponent(vec![0, 1]),
            Exponent(vec![2, 1]),
        ] {
            for b in [
                Exponent(vec![1, 1]),
                Exponent(vec![0, 2]),
                Exponent(vec![2, 0]),
            ] {
                let prod = p
                    .poly_mul(&p.monomial(a.clone()), &p.monomial(b.clone()))
                    .unwrap();
                assert_eq!(prod.terms().len(), 1);
                let (exp, _) = prod.terms().iter().next().unwrap();
                assert_eq!(*exp, a.add(&b));
            }
        }
    }

    #[test]
    fn rendering_orders_terms_descending() {
        let p = weyl_z5();
        let f = p.poly_from_terms([
            (Exponent(vec![0, 0]), p.ring().elem(1)),
            (Exponent(vec![1, 1]), p.ring().elem(3)),
            (Exponent(vec![0, 1]), p.ring().elem(1)),
        ]);
        assert_eq!(p.render_poly(&f), "3*x1*x2 + x2 + 1");
    }
}
