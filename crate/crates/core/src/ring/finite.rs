//! Finite rings as explicit Cayley tables.
//!
//! Every finite kind (modular, direct product, upper triangular 2×2,
//! truncated polynomial, raw table) compiles down to one flat table
//! representation. Elements are canonical indices `0..m` with index 0 the
//! zero and index 1 the one; the permutation from the kind's natural
//! encoding is kept so literals can be decoded.

use crate::error::Error;
use crate::Result;

/// How composite literals map onto natural indices. Component rings are
/// embedded so nested literals can be decoded through their own
/// relabelings.
#[derive(Debug, Clone, PartialEq)]
pub enum FiniteShape {
    /// Raw table; literals are the original indices.
    Opaque,
    Modular(u32),
    /// Component rings; the first component varies fastest.
    Product(Vec<FiniteRing>),
    /// Matrices (a,b;0,d) over the base, encoded a + m·b + m²·d.
    Ut2(Box<FiniteRing>),
    /// Residues c₀ + c₁t + … + c_{k-1}t^{k-1}, encoded Σ cᵢ·mⁱ.
    TruncPoly { base: Box<FiniteRing>, len: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteRing {
    size: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    /// Canonical index -> rendered label.
    labels: Vec<String>,
    /// Natural encoding -> canonical index.
    from_nat: Vec<u32>,
    /// Canonical index -> natural encoding.
    to_nat: Vec<u32>,
    shape: FiniteShape,
}

impl FiniteRing {
    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn shape(&self) -> &FiniteShape {
        &self.shape
    }

    #[inline]
    pub fn add_i(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.size + b) as usize]
    }

    #[inline]
    pub fn mul_i(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.size + b) as usize]
    }

    #[inline]
    pub fn neg_i(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    pub fn sub_i(&self, a: u32, b: u32) -> u32 {
        self.add_i(a, self.neg_i(b))
    }

    pub fn label(&self, a: u32) -> &str {
        &self.labels[a as usize]
    }

    pub fn from_natural(&self, nat: u32) -> Option<u32> {
        self.from_nat.get(nat as usize).copied()
    }

    pub fn to_natural(&self, canon: u32) -> u32 {
        self.to_nat[canon as usize]
    }

    pub fn is_commutative(&self) -> bool {
        let m = self.size;
        (0..m).all(|a| (0..m).all(|b| self.mul_i(a, b) == self.mul_i(b, a)))
    }

    /// Two-sided regular: neither a left nor a right zero divisor.
    pub fn is_regular_i(&self, s: u32) -> bool {
        if s == 0 {
            return self.size == 1;
        }
        (1..self.size).all(|r| self.mul_i(s, r) != 0 && self.mul_i(r, s) != 0)
    }

    /// Multiplicative inverse, if one exists.
    pub fn inverse_i(&self, s: u32) -> Option<u32> {
        (0..self.size).find(|&t| self.mul_i(s, t) == 1 && self.mul_i(t, s) == 1)
    }

    /// Builds a ring from natural-order tables, relabeling so that the
    /// canonical indices 0 and 1 are the zero and the one. The axioms are
    /// checked exhaustively.
    #[allow(clippy::too_many_arguments)]
    pub fn from_tables(
        size: u32,
        add: Vec<u32>,
        mul: Vec<u32>,
        neg: Vec<u32>,
        zero: u32,
        one: u32,
        labels: Vec<String>,
        shape: FiniteShape,
    ) -> Result<FiniteRing> {
        if size == 0 {
            return Err(Error::InvalidTable("ring must be nonempty".into()));
        }
        let m = size as usize;
        if add.len() != m * m || mul.len() != m * m {
            return Err(Error::InvalidTable(format!(
                "tables must be {m}x{m} for size {m}"
            )));
        }
        if neg.len() != m || labels.len() != m {
            return Err(Error::InvalidTable(
                "negation table and labels must have one entry per element".into(),
            ));
        }
        if add.iter().chain(&mul).chain(&neg).any(|&v| v >= size) {
            return Err(Error::InvalidTable("table entry out of range".into()));
        }
        if zero >= size || one >= size {
            return Err(Error::InvalidTable("zero/one index out of range".into()));
        }
        if size > 1 && zero == one {
            return Err(Error::InvalidTable(
                "zero and one coincide in a ring with more than one element".into(),
            ));
        }
        {
            let mut seen = vec![false; m];
            for &v in &neg {
                if seen[v as usize] {
                    return Err(Error::InvalidTable("negation is not bijective".into()));
                }
                seen[v as usize] = true;
            }
        }

        // Relabel: zero to index 0, one to index 1.
        let mut to_nat: Vec<u32> = (0..size).collect();
        to_nat.swap(0, zero as usize);
        if size > 1 {
            let pos_one = to_nat.iter().position(|&v| v == one).unwrap();
            to_nat.swap(1, pos_one);
        }
        let mut from_nat = vec![0u32; m];
        for (canon, &nat) in to_nat.iter().enumerate() {
            from_nat[nat as usize] = canon as u32;
        }
        let at = |t: &[u32], a: u32, b: u32| t[(a * size + b) as usize];
        let mut cadd = vec![0u32; m * m];
        let mut cmul = vec![0u32; m * m];
        let mut cneg = vec![0u32; m];
        let mut clabels = vec![String::new(); m];
        for a in 0..size {
            let na = to_nat[a as usize];
            cneg[a as usize] = from_nat[neg[na as usize] as usize];
            clabels[a as usize] = labels[na as usize].clone();
            for b in 0..size {
                let nb = to_nat[b as usize];
                cadd[(a * size + b) as usize] = from_nat[at(&add, na, nb) as usize];
                cmul[(a * size + b) as usize] = from_nat[at(&mul, na, nb) as usize];
            }
        }

        let ring = FiniteRing {
            size,
            add: cadd,
            mul: cmul,
            neg: cneg,
            labels: clabels,
            from_nat,
            to_nat,
            shape,
        };
        ring.check_axioms()?;
        Ok(ring)
    }

    fn check_axioms(&self) -> Result<()> {
        let m = self.size;
        let w2 = |a: u32, b: u32| format!("a={}, b={}", self.label(a), self.label(b));
        let w3 = |a: u32, b: u32, c: u32| {
            format!(
                "a={}, b={}, c={}",
                self.label(a),
                self.label(b),
                self.label(c)
            )
        };
        for a in 0..m {
            if self.add_i(0, a) != a || self.add_i(a, 0) != a {
                return Err(Error::AxiomViolation {
                    axiom: "additive identity",
                    witness: w2(a, 0),
                });
            }
            if self.add_i(a, self.neg_i(a)) != 0 {
                return Err(Error::AxiomViolation {
                    axiom: "additive inverse",
                    witness: w2(a, self.neg_i(a)),
                });
            }
            let one = if m > 1 { 1 } else { 0 };
            if self.mul_i(one, a) != a || self.mul_i(a, one) != a {
                return Err(Error::AxiomViolation {
                    axiom: "multiplicative identity",
                    witness: w2(a, one),
                });
            }
        }
        for a in 0..m {
            for b in 0..m {
                if self.add_i(a, b) != self.add_i(b, a) {
                    return Err(Error::AxiomViolation {
                        axiom: "additive commutativity",
                        witness: w2(a, b),
                    });
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if self.add_i(self.add_i(a, b), c) != self.add_i(a, self.add_i(b, c)) {
                        return Err(Error::AxiomViolation {
                            axiom: "additive associativity",
                            witness: w3(a, b, c),
                        });
                    }
                    if self.mul_i(self.mul_i(a, b), c) != self.mul_i(a, self.mul_i(b, c)) {
                        return Err(Error::AxiomViolation {
                            axiom: "multiplicative associativity",
                            witness: w3(a, b, c),
                        });
                    }
                    if self.mul_i(a, self.add_i(b, c)) != self.add_i(self.mul_i(a, b), self.mul_i(a, c))
                    {
                        return Err(Error::AxiomViolation {
                            axiom: "left distributivity",
                            witness: w3(a, b, c),
                        });
                    }
                    if self.mul_i(self.add_i(a, b), c) != self.add_i(self.mul_i(a, c), self.mul_i(b, c))
                    {
                        return Err(Error::AxiomViolation {
                            axiom: "right distributivity",
                            witness: w3(a, b, c),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn modular(m: u32) -> Result<FiniteRing> {
        if m < 2 {
            return Err(Error::InvalidTable("modulus must be at least 2".into()));
        }
        let mut add = Vec::with_capacity((m * m) as usize);
        let mut mul = Vec::with_capacity((m * m) as usize);
        for a in 0..m as u64 {
            for b in 0..m as u64 {
                add.push(((a + b) % m as u64) as u32);
                mul.push(((a * b) % m as u64) as u32);
            }
        }
        let neg = (0..m).map(|a| (m - a) % m).collect();
        let labels = (0..m).map(|a| a.to_string()).collect();
        FiniteRing::from_tables(m, add, mul, neg, 0, 1, labels, FiniteShape::Modular(m))
    }

    /// Direct product; the first factor varies fastest in the natural
    /// encoding.
    pub fn product(factors: Vec<FiniteRing>) -> Result<FiniteRing> {
        if factors.len() < 2 {
            return Err(Error::InvalidTable(
                "direct product needs at least two factors".into(),
            ));
        }
        let sizes: Vec<u32> = factors.iter().map(|f| f.size()).collect();
        let total: u64 = sizes.iter().map(|&s| s as u64).product();
        if total > u32::MAX as u64 {
            return Err(Error::InvalidTable("product ring too large".into()));
        }
        let total = total as u32;
        let decode = |mut idx: u32| -> Vec<u32> {
            sizes
                .iter()
                .map(|&s| {
                    let c = idx % s;
                    idx /= s;
                    c
                })
                .collect()
        };
        let encode = |comps: &[u32]| -> u32 {
            let mut idx = 0u32;
            for (c, &s) in comps.iter().zip(&sizes).rev() {
                idx = idx * s + c;
            }
            idx
        };
        let mut add = Vec::with_capacity((total * total) as usize);
        let mut mul = Vec::with_capacity((total * total) as usize);
        for a in 0..total {
            let ca = decode(a);
            for b in 0..total {
                let cb = decode(b);
                let sum: Vec<u32> = ca
                    .iter()
                    .zip(&cb)
                    .zip(&factors)
                    .map(|((&x, &y), f)| f.add_i(x, y))
                    .collect();
                let prod: Vec<u32> = ca
                    .iter()
                    .zip(&cb)
                    .zip(&factors)
                    .map(|((&x, &y), f)| f.mul_i(x, y))
                    .collect();
                add.push(encode(&sum));
                mul.push(encode(&prod));
            }
        }
        let neg: Vec<u32> = (0..total)
            .map(|a| {
                let ca = decode(a);
                let nc: Vec<u32> = ca
                    .iter()
                    .zip(&factors)
                    .map(|(&x, f)| f.neg_i(x))
                    .collect();
                encode(&nc)
            })
            .collect();
        let labels: Vec<String> = (0..total)
            .map(|a| {
                let ca = decode(a);
                let parts: Vec<&str> = ca
                    .iter()
                    .zip(&factors)
                    .map(|(&x, f)| f.label(x))
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let one = encode(&std::iter::repeat_n(1u32, factors.len()).collect::<Vec<_>>());
        let shape = FiniteShape::Product(factors);
        FiniteRing::from_tables(total, add, mul, neg, 0, one, labels, shape)
    }

    /// Upper triangular 2×2 matrices (a,b;0,d) over the base.
    pub fn upper_triangular_2x2(base: &FiniteRing) -> Result<FiniteRing> {
        let m = base.size();
        let total = m
            .checked_mul(m)
            .and_then(|v| v.checked_mul(m))
            .ok_or_else(|| Error::InvalidTable("upper triangular ring too large".into()))?;
        let dec = |idx: u32| -> (u32, u32, u32) { (idx % m, (idx / m) % m, idx / (m * m)) };
        let enc = |a: u32, b: u32, d: u32| a + m * b + m * m * d;
        let mut add = Vec::with_capacity((total * total) as usize);
        let mut mul = Vec::with_capacity((total * total) as usize);
        for x in 0..total {
            let (a, b, d) = dec(x);
            for y in 0..total {
                let (a2, b2, d2) = dec(y);
                add.push(enc(base.add_i(a, a2), base.add_i(b, b2), base.add_i(d, d2)));
                // (a,b;0,d)(a',b';0,d') = (aa', ab'+bd'; 0, dd')
                mul.push(enc(
                    base.mul_i(a, a2),
                    base.add_i(base.mul_i(a, b2), base.mul_i(b, d2)),
                    base.mul_i(d, d2),
                ));
            }
        }
        let neg: Vec<u32> = (0..total)
            .map(|x| {
                let (a, b, d) = dec(x);
                enc(base.neg_i(a), base.neg_i(b), base.neg_i(d))
            })
            .collect();
        let labels: Vec<String> = (0..total)
            .map(|x| {
                let (a, b, d) = dec(x);
                format!("ut({},{},{})", base.label(a), base.label(b), base.label(d))
            })
            .collect();
        let one = enc(1, 0, 1);
        let shape = FiniteShape::Ut2(Box::new(base.clone()));
        FiniteRing::from_tables(total, add, mul, neg, 0, one, labels, shape)
    }

    /// Base\[t\]/(modulus). The modulus is given by its canonical-index
    /// coefficients, must be monic of degree ≥ 1, and t is central.
    pub fn truncated_poly(base: &FiniteRing, modulus: &[u32]) -> Result<FiniteRing> {
        let m = base.size();
        if modulus.len() < 2 {
            return Err(Error::InvalidTable(
                "modulus polynomial must have degree at least 1".into(),
            ));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidTable("modulus polynomial must be monic".into()));
        }
        if modulus.iter().any(|&c| c >= m) {
            return Err(Error::InvalidTable("modulus coefficient out of range".into()));
        }
        let k = modulus.len() - 1;
        let total = (m as u64).checked_pow(k as u32).filter(|&v| v <= u32::MAX as u64);
        let total = total.ok_or_else(|| Error::InvalidTable("truncated ring too large".into()))? as u32;
        let dec = |mut idx: u32| -> Vec<u32> {
            (0..k)
                .map(|_| {
                    let c = idx % m;
                    idx /= m;
                    c
                })
                .collect()
        };
        let enc = |cs: &[u32]| -> u32 {
            let mut idx = 0;
            for &c in cs.iter().rev() {
                idx = idx * m + c;
            }
            idx
        };
        // t^k = -(m_0 + m_1 t + ... + m_{k-1} t^{k-1})
        let top: Vec<u32> = modulus[..k].iter().map(|&c| base.neg_i(c)).collect();
        let reduce = |mut cs: Vec<u32>| -> Vec<u32> {
            while cs.len() > k {
                let lead = cs.pop().unwrap();
                if lead == 0 {
                    continue;
                }
                let deg = cs.len() - k;
                for (i, &t) in top.iter().enumerate() {
                    cs[deg + i] = base.add_i(cs[deg + i], base.mul_i(lead, t));
                }
            }
            cs.resize(k, 0);
            cs
        };
        let mut add = Vec::with_capacity((total * total) as usize);
        let mut mul = Vec::with_capacity((total * total) as usize);
        for x in 0..total {
            let cx = dec(x);
            for y in 0..total {
                let cy = dec(y);
                let sum: Vec<u32> = cx.iter().zip(&cy).map(|(&a, &b)| base.add_i(a, b)).collect();
                let mut conv = vec![0u32; 2 * k - 1];
                for (i, &a) in cx.iter().enumerate() {
                    for (j, &b) in cy.iter().enumerate() {
                        conv[i + j] = base.add_i(conv[i + j], base.mul_i(a, b));
                    }
                }
                add.push(enc(&sum));
                mul.push(enc(&reduce(conv)));
            }
        }
        let neg: Vec<u32> = (0..total)
            .map(|x| {
                let cs: Vec<u32> = dec(x).iter().map(|&c| base.neg_i(c)).collect();
                enc(&cs)
            })
            .collect();
        let labels: Vec<String> = (0..total)
            .map(|x| {
                let cs = dec(x);
                let parts: Vec<&str> = cs.iter().map(|&c| base.label(c)).collect();
                format!("poly({})", parts.join(","))
            })
            .collect();
        let one = enc(&{
            let mut v = vec![0; k];
            v[0] = 1;
            v
        });
        let shape = FiniteShape::TruncPoly {
            base: Box::new(base.clone()),
            len: k as u32,
        };
        FiniteRing::from_tables(total, add, mul, neg, 0, one, labels, shape)
    }

    /// Raw user tables with explicit zero/one indices; labels are the
    /// original indices.
    pub fn from_raw_tables(
        size: u32,
        add: Vec<u32>,
        mul: Vec<u32>,
        neg: Vec<u32>,
        zero: u32,
        one: u32,
    ) -> Result<FiniteRing> {
        let labels = (0..size).map(|a| a.to_string()).collect();
        FiniteRing::from_tables(size, add, mul, neg, zero, one, labels, FiniteShape::Opaque)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_four_is_valid() {
        let r = FiniteRing::modular(4).unwrap();
        assert_eq!(r.size(), 4);
        assert_eq!(r.add_i(2, 3), 1);
        assert_eq!(r.mul_i(2, 2), 0);
        assert_eq!(r.neg_i(1), 3);
        assert_eq!(r.label(3), "3");
    }

    #[test]
    fn size_mismatch_is_rejected() {
        // Z_2 multiplication against a 3x3 addition grid.
        let add = vec![0, 1, 2, 1, 2, 0, 2, 0, 1];
        let mul = vec![0, 0, 0, 1];
        let err = FiniteRing::from_raw_tables(3, add, mul, vec![0, 2, 1], 0, 1).unwrap_err();
        assert!(matches!(err, Error::InvalidTable(_)));
    }

    #[test]
    fn product_relabels_one_to_index_one() {
        let z2 = FiniteRing::modular(2).unwrap();
        let p = FiniteRing::product(vec![z2.clone(), z2]).unwrap();
        assert_eq!(p.label(0), "(0,0)");
        assert_eq!(p.label(1), "(1,1)");
        // Little-endian natural order puts (0,1) before (1,0) after the swap.
        assert_eq!(p.label(2), "(0,1)");
        assert_eq!(p.label(3), "(1,0)");
        assert_eq!(p.mul_i(2, 3), 0);
        assert_eq!(p.add_i(2, 3), 1);
    }

    #[test]
    fn upper_triangular_over_z2_is_a_valid_ring_of_size_8() {
        // Oracle for the 8^3 associativity example: the builder checks all
        // triples exhaustively, so constructing it is the check.
        let z2 = FiniteRing::modular(2).unwrap();
        let t = FiniteRing::upper_triangular_2x2(&z2).unwrap();
        assert_eq!(t.size(), 8);
        assert_eq!(t.label(1), "ut(1,0,1)");
        assert!(!t.is_commutative());
    }

    #[test]
    fn every_single_entry_corruption_of_z4_is_rejected() {
        let m = 4u32;
        let mut add = Vec::new();
        let mut mul = Vec::new();
        for a in 0..m {
            for b in 0..m {
                add.push((a + b) % m);
                mul.push((a * b) % m);
            }
        }
        let neg: Vec<u32> = (0..m).map(|a| (m - a) % m).collect();
        assert!(FiniteRing::from_raw_tables(m, add.clone(), mul.clone(), neg.clone(), 0, 1).is_ok());
        for idx in 0..add.len() {
            for v in 0..m {
                if add[idx] == v {
                    continue;
                }
                let mut bad = add.clone();
                bad[idx] = v;
                assert!(
                    FiniteRing::from_raw_tables(m, bad, mul.clone(), neg.clone(), 0, 1).is_err(),
                    "corrupted add[{idx}]={v} slipped through"
                );
            }
        }
        for idx in 0..mul.len() {
            for v in 0..m {
                if mul[idx] == v {
                    continue;
                }
                let mut bad = mul.clone();
                bad[idx] = v;
                assert!(
                    FiniteRing::from_raw_tables(m, add.clone(), bad, neg.clone(), 0, 1).is_err(),
                    "corrupted mul[{idx}]={v} slipped through"
                );
            }
        }
    }

    #[test]
    fn truncated_poly_squares_to_zero_modulo_t_squared() {
        let z2 = FiniteRing::modular(2).unwrap();
        // Z_2[t]/(t^2): modulus t^2 = (0,0,1).
        let r = FiniteRing::truncated_poly(&z2, &[0, 0, 1]).unwrap();
        assert_eq!(r.size(), 4);
        // t is natural (0,1) = index 2; t^2 = 0.
        let t = r.from_natural(2).unwrap();
        assert_eq!(r.mul_i(t, t), 0);
    }
}
