//! Exponent vectors and monomial orders.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Exponent vector of a standard monomial x₁^{α₁}⋯xₙ^{αₙ}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Exponent(pub Vec<u16>);

impl Exponent {
    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// Unit vector e_i for the 1-based variable index `i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Exponent(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Total degree |α|.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    /// Exponent of the variable with 1-based index `i`.
    pub fn get(&self, i: usize) -> u16 {
        self.0[i - 1]
    }

    /// Copy with the exponent of variable `i` bumped by one.
    pub fn bump(&self, i: usize) -> Exponent {
        let mut v = self.0.clone();
        v[i - 1] += 1;
        Exponent(v)
    }

    /// Copy with the exponent of variable `i` lowered by one.
    pub fn lower(&self, i: usize) -> Exponent {
        let mut v = self.0.clone();
        v[i - 1] -= 1;
        Exponent(v)
    }

    /// Largest 1-based variable index with a nonzero exponent, if any.
    pub fn max_var(&self) -> Option<usize> {
        (1..=self.0.len()).rev().find(|&i| self.0[i - 1] > 0)
    }
}

/// Total orders on monomials. Variable precedence is xₙ ≻ xₙ₋₁ ≻ … ≻ x₁
/// throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Total degree first, ties broken lexicographically from xₙ downward.
    #[default]
    DegLex,
    /// Lexicographic from xₙ downward.
    Lex,
    /// Total degree first, ties broken reverse-lexicographically.
    DegRevLex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Ordering {
        match self {
            MonomialOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex_from_top(a, b)),
            MonomialOrder::Lex => lex_from_top(a, b),
            MonomialOrder::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_from_bottom(a, b)),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "deglex" => Some(MonomialOrder::DegLex),
            "lex" => Some(MonomialOrder::Lex),
            "degrevlex" => Some(MonomialOrder::DegRevLex),
            _ => None,
        }
    }
}

fn lex_from_top(a: &Exponent, b: &Exponent) -> Ordering {
    for i in (0..a.0.len()).rev() {
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn revlex_from_bottom(a: &Exponent, b: &Exponent) -> Ordering {
    for i in 0..a.0.len() {
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => continue,
            // Smaller exponent in the least variable wins.
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

/// All exponent vectors in `n` variables of total degree ≤ `max_degree`,
/// in ascending deglex order. This is the canonical slot order used by
/// coefficient-vector enumerations.
pub fn monomials_up_to(n: usize, max_degree: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut level = Vec::new();
        collect_of_degree(n, d, &mut vec![0u16; n], 0, d, &mut level);
        level.sort_by(|a, b| MonomialOrder::DegLex.compare(a, b));
        out.extend(level);
    }
    out
}

fn collect_of_degree(
    n: usize,
    _degree: u32,
    cur: &mut Vec<u16>,
    pos: usize,
    remaining: u32,
    out: &mut Vec<Exponent>,
) {
    if pos == n {
        if remaining == 0 {
            out.push(Exponent(cur.clone()));
        }
        return;
    }
    for e in 0..=remaining {
        cur[pos] = e as u16;
        collect_of_degree(n, _degree, cur, pos + 1, remaining - e, out);
    }
    cur[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u16]) -> Exponent {
        Exponent(v.to_vec())
    }

    #[test]
    fn deglex_prefers_degree_then_top_variable() {
        let ord = MonomialOrder::DegLex;
        // x1x2 beats x1^2: equal degree, tie broken on x2's exponent.
        assert_eq!(ord.compare(&e(&[1, 1]), &e(&[2, 0])), Ordering::Greater);
        // degree dominates.
        assert_eq!(ord.compare(&e(&[3, 0]), &e(&[1, 1])), Ordering::Greater);
        assert_eq!(ord.compare(&e(&[0, 0]), &e(&[1, 0])), Ordering::Less);
    }

    #[test]
    fn degrevlex_orders_variables_consistently() {
        let ord = MonomialOrder::DegRevLex;
        // x2 ≻ x1 must survive in every order with that precedence.
        assert_eq!(ord.compare(&e(&[0, 1]), &e(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn monomial_enumeration_is_sorted_and_complete() {
        let ms = monomials_up_to(2, 2);
        let expect: Vec<Exponent> = vec![
            e(&[0, 0]),
            e(&[1, 0]),
            e(&[0, 1]),
            e(&[2, 0]),
            e(&[1, 1]),
            e(&[0, 2]),
        ];
        assert_eq!(ms, expect);
    }

    #[test]
    fn monomial_count_matches_binomial() {
        // C(n + D, n) monomials of degree ≤ D.
        assert_eq!(monomials_up_to(2, 3).len(), 10);
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_up_to(1, 5).len(), 6);
    }
}
