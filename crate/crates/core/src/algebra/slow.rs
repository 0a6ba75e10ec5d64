//! A second, independent normalizer.
//!
//! Words are alternating sequences of coefficients and variable letters;
//! the leftmost redex is rewritten first and branches go onto a worklist.
//! This is deliberately a different strategy from the production engine
//! in `poly.rs`: witness replay and the normal-form oracle tests route
//! through here so that the two implementations check each other.

use crate::algebra::exponent::Exponent;
use crate::algebra::poly::SkewPoly;
use crate::algebra::presentation::SkewPresentation;
use crate::error::Error;
use crate::ring::RElem;
use crate::Result;

#[derive(Debug, Clone)]
pub enum Atom {
    Coef(RElem),
    Var(usize),
}

/// Normalizes a single word (product of coefficients and variables read
/// left to right) into PBW normal form.
pub fn normalize_word(pres: &SkewPresentation, atoms: Vec<Atom>) -> Result<SkewPoly> {
    let ring = pres.ring();
    let budget = pres.caps().rewrite_budget;
    let mut spent: u64 = 0;
    let mut out = pres.zero_poly();
    let mut worklist: Vec<Vec<Atom>> = vec![atoms];
    while let Some(word) = worklist.pop() {
        spent += 1;
        if spent > budget {
            return Err(Error::RewriteBudgetExceeded { budget });
        }
        // Drop words that contain an explicit zero.
        if word
            .iter()
            .any(|a| matches!(a, Atom::Coef(c) if ring.is_zero(c)))
        {
            continue;
        }
        let redex = word.windows(2).position(|w| {
            matches!(
                (&w[0], &w[1]),
                (Atom::Coef(_), Atom::Coef(_)) | (Atom::Var(_), Atom::Coef(_))
            ) || matches!((&w[0], &w[1]), (Atom::Var(j), Atom::Var(i)) if j > i)
        });
        match redex {
            None => {
                // Normal: at most one coefficient, then nondecreasing
                // variables.
                let mut coef = ring.one();
                let mut exp = Exponent::zero(pres.n());
                for atom in &word {
                    match atom {
                        Atom::Coef(c) => coef = ring.mul(&coef, c),
                        Atom::Var(i) => exp.0[i - 1] += 1,
                    }
                }
                out = pres.poly_add(&out, &pres.term(&coef, exp));
            }
            Some(p) => {
                let before = &word[..p];
                let after = &word[p + 2..];
                let glue = |mid: Vec<Atom>| -> Vec<Atom> {
                    let mut w = before.to_vec();
                    w.extend(mid);
                    w.extend(after.to_vec());
                    w
                };
                match (&word[p], &word[p + 1]) {
                    (Atom::Coef(a), Atom::Coef(b)) => {
                        worklist.push(glue(vec![Atom::Coef(ring.mul(a, b))]));
                    }
                    (Atom::Var(i), Atom::Coef(r)) => {
                        // x_i·r = σ_i(r)·x_i + δ_i(r)
                        worklist.push(glue(vec![
                            Atom::Coef(pres.sigma(*i).apply(ring, r)),
                            Atom::Var(*i),
                        ]));
                        worklist.push(glue(vec![Atom::Coef(pres.delta(*i).apply(ring, r))]));
                    }
                    (Atom::Var(j), Atom::Var(i)) => {
                        // x_j·x_i = c_{i,j}·x_i·x_j + r_0 + Σ_k r_k·x_k
                        worklist.push(glue(vec![
                            Atom::Coef(pres.c_const(*i, *j).clone()),
                            Atom::Var(*i),
                            Atom::Var(*j),
                        ]));
                        let r = pres.r_const(*i, *j).to_vec();
                        worklist.push(glue(vec![Atom::Coef(r[0].clone())]));
                        for (k, rk) in r.iter().enumerate().skip(1) {
                            worklist.push(glue(vec![Atom::Coef(rk.clone()), Atom::Var(k)]));
                        }
                    }
                    _ => unreachable!(),
                }
            }
        }
    }
    Ok(out)
}

/// Multiplies two normal forms by expanding every term pair into a word
/// and normalizing each word independently.
pub fn slow_mul(pres: &SkewPresentation, f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    let mut out = pres.zero_poly();
    for (alpha, a) in f.terms() {
        for (beta, b) in g.terms() {
            let mut word = vec![Atom::Coef(a.clone())];
            for i in 1..=pres.n() {
                for _ in 0..alpha.get(i) {
                    word.push(Atom::Var(i));
                }
            }
            word.push(Atom::Coef(b.clone()));
            for i in 1..=pres.n() {
                for _ in 0..beta.get(i) {
                    word.push(Atom::Var(i));
                }
            }
            out = pres.poly_add(&out, &normalize_word(pres, word)?);
        }
    }
    Ok(out)
}
