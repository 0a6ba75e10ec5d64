//! Structured (infinite) coefficient rings with exact arithmetic.
//!
//! No floating point anywhere: integers are arbitrary precision, rationals
//! are exact, polynomial coefficients are residues. Enumeration is never
//! offered; callers get closed forms and documented sample sets instead.

use crate::error::Error;
use crate::ring::{RElem, Repr, RingId};
use crate::Result;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The supported structured carriers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuredRing {
    /// The ring of integers.
    Integers,
    /// Matrices (a,t;0,a) with a an integer and t a rational.
    MatrixZQ,
    /// The polynomial ring Z_p\[t\] for a prime p.
    PolyOverPrime(u32),
    /// A localization of a commutative structured base at a set of
    /// regular denominators; elements are reduced pairs num/den.
    Fraction(Box<FractionBase>),
}

/// Base data of a structured fraction ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionBase {
    pub base: StructuredRing,
    pub base_id: RingId,
}

impl StructuredRing {
    pub fn zero(&self) -> Repr {
        match self {
            StructuredRing::Integers => Repr::Int(BigInt::zero()),
            StructuredRing::MatrixZQ => Repr::MatZQ(BigInt::zero(), BigRational::zero()),
            StructuredRing::PolyOverPrime(_) => Repr::Poly(vec![]),
            StructuredRing::Fraction(b) => Repr::Frac(
                Box::new(b.base.zero()),
                Box::new(b.base.one()),
            ),
        }
    }

    pub fn one(&self) -> Repr {
        match self {
            StructuredRing::Integers => Repr::Int(BigInt::one()),
            StructuredRing::MatrixZQ => Repr::MatZQ(BigInt::one(), BigRational::zero()),
            StructuredRing::PolyOverPrime(_) => Repr::Poly(vec![1]),
            StructuredRing::Fraction(b) => Repr::Frac(
                Box::new(b.base.one()),
                Box::new(b.base.one()),
            ),
        }
    }

    pub fn add(&self, a: &Repr, b: &Repr) -> Repr {
        match (self, a, b) {
            (StructuredRing::Integers, Repr::Int(x), Repr::Int(y)) => Repr::Int(x + y),
            (StructuredRing::MatrixZQ, Repr::MatZQ(x, s), Repr::MatZQ(y, t)) => {
                Repr::MatZQ(x + y, s + t)
            }
            (StructuredRing::PolyOverPrime(p), Repr::Poly(x), Repr::Poly(y)) => {
                Repr::Poly(poly_add(x, y, *p))
            }
            (StructuredRing::Fraction(fb), Repr::Frac(an, ad), Repr::Frac(bn, bd)) => {
                // a/s + b/t = (at + bs)/(st)
                let num = fb.base.add(
                    &fb.base.mul(an, bd),
                    &fb.base.mul(bn, ad),
                );
                let den = fb.base.mul(ad, bd);
                fb.reduce(num, den)
            }
            _ => panic!("mismatched structured payloads"),
        }
    }

    pub fn neg(&self, a: &Repr) -> Repr {
        match (self, a) {
            (StructuredRing::Integers, Repr::Int(x)) => Repr::Int(-x),
            (StructuredRing::MatrixZQ, Repr::MatZQ(x, s)) => Repr::MatZQ(-x, -s),
            (StructuredRing::PolyOverPrime(p), Repr::Poly(x)) => {
                Repr::Poly(normalize(x.iter().map(|&c| (*p - c) % *p).collect()))
            }
            (StructuredRing::Fraction(fb), Repr::Frac(n, d)) => {
                Repr::Frac(Box::new(fb.base.neg(n)), d.clone())
            }
            _ => panic!("mismatched structured payloads"),
        }
    }

    pub fn mul(&self, a: &Repr, b: &Repr) -> Repr {
        match (self, a, b) {
            (StructuredRing::Integers, Repr::Int(x), Repr::Int(y)) => Repr::Int(x * y),
            (StructuredRing::MatrixZQ, Repr::MatZQ(x, s), Repr::MatZQ(y, t)) => {
                // (x,s)(y,t) = (xy, xt + sy): multiplication of (x s; 0 x).
                let xt = BigRational::from(x.clone()) * t;
                let sy = s * BigRational::from(y.clone());
                Repr::MatZQ(x * y, xt + sy)
            }
            (StructuredRing::PolyOverPrime(p), Repr::Poly(x), Repr::Poly(y)) => {
                Repr::Poly(poly_mul(x, y, *p))
            }
            (StructuredRing::Fraction(fb), Repr::Frac(an, ad), Repr::Frac(bn, bd)) => {
                let num = fb.base.mul(an, bn);
                let den = fb.base.mul(ad, bd);
                fb.reduce(num, den)
            }
            _ => panic!("mismatched structured payloads"),
        }
    }

    pub fn eq(&self, a: &Repr, b: &Repr) -> bool {
        // All representations are kept canonical, so structural equality
        // is ring equality.
        a == b
    }

    pub fn is_zero(&self, a: &Repr) -> bool {
        self.eq(a, &self.zero())
    }

    /// All current carriers are commutative.
    pub fn is_commutative(&self) -> bool {
        true
    }

    /// Closed-form idempotent list.
    pub fn idempotents(&self) -> Vec<Repr> {
        // Integers and Z_p[t] are domains; for MatrixZQ, (a,t)² = (a,t)
        // forces t(2a-1) = 0 and a² = a, so a∈{0,1}, t = 0. Localizing a
        // domain or MatrixZQ at regular elements adds no idempotents.
        vec![self.zero(), self.one()]
    }

    /// Closed-form reducedness: Some(witness) when a nonzero nilpotent
    /// exists.
    pub fn nilpotent_witness(&self) -> Option<Repr> {
        match self {
            StructuredRing::Integers | StructuredRing::PolyOverPrime(_) => None,
            StructuredRing::MatrixZQ => {
                Some(Repr::MatZQ(BigInt::zero(), BigRational::one()))
            }
            StructuredRing::Fraction(fb) => fb.base.nilpotent_witness().map(|w| {
                Repr::Frac(Box::new(w), Box::new(fb.base.one()))
            }),
        }
    }

    /// Regularity (non-zero-divisor) check.
    pub fn is_regular(&self, a: &Repr) -> bool {
        match (self, a) {
            (StructuredRing::Integers, Repr::Int(x)) => !x.is_zero(),
            (StructuredRing::MatrixZQ, Repr::MatZQ(x, _)) => !x.is_zero(),
            (StructuredRing::PolyOverPrime(_), Repr::Poly(x)) => !x.is_empty(),
            (StructuredRing::Fraction(fb), Repr::Frac(n, _)) => fb.base.is_regular(n),
            _ => panic!("mismatched structured payloads"),
        }
    }

    /// Documented generator set used by validation and sampling.
    pub fn generator_set(&self) -> Vec<Repr> {
        match self {
            StructuredRing::Integers => [0i64, 1, -1, 2, 3, -2, 5, 10]
                .iter()
                .map(|&v| Repr::Int(BigInt::from(v)))
                .collect(),
            StructuredRing::MatrixZQ => {
                let rat = |p: i64, q: i64| BigRational::new(BigInt::from(p), BigInt::from(q));
                vec![
                    Repr::MatZQ(BigInt::from(0), rat(0, 1)),
                    Repr::MatZQ(BigInt::from(1), rat(0, 1)),
                    Repr::MatZQ(BigInt::from(0), rat(1, 1)),
                    Repr::MatZQ(BigInt::from(1), rat(1, 1)),
                    Repr::MatZQ(BigInt::from(-1), rat(0, 1)),
                    Repr::MatZQ(BigInt::from(2), rat(0, 1)),
                    Repr::MatZQ(BigInt::from(0), rat(1, 2)),
                    Repr::MatZQ(BigInt::from(1), rat(-1, 3)),
                    Repr::MatZQ(BigInt::from(0), rat(-1, 1)),
                    Repr::MatZQ(BigInt::from(3), rat(2, 5)),
                ]
            }
            StructuredRing::PolyOverPrime(p) => {
                let mut gens = vec![
                    Repr::Poly(vec![]),
                    Repr::Poly(vec![1]),
                    Repr::Poly(vec![0, 1]),
                    Repr::Poly(vec![1, 1]),
                    Repr::Poly(vec![0, 0, 1]),
                    Repr::Poly(vec![0, 1, 1]),
                    Repr::Poly(vec![0, 0, 0, 1]),
                ];
                if *p > 2 {
                    gens.push(Repr::Poly(vec![2]));
                    gens.push(Repr::Poly(vec![2, 1]));
                }
                gens
            }
            StructuredRing::Fraction(fb) => {
                let gens = fb.base.generator_set();
                let dens: Vec<Repr> = gens
                    .iter()
                    .filter(|d| fb.base.is_regular(d))
                    .cloned()
                    .collect();
                let mut out = Vec::new();
                for n in &gens {
                    for d in &dens {
                        out.push(fb.reduce(n.clone(), d.clone()));
                    }
                }
                out.sort();
                out.dedup();
                out
            }
        }
    }

    /// Deterministic pseudo-random element stream (fixed seed).
    pub fn sample(&self, count: u32, seed: u64) -> Vec<Repr> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count as usize);
        for _ in 0..count {
            out.push(self.random_elem(&mut rng));
        }
        out
    }

    fn random_elem(&self, rng: &mut ChaCha8Rng) -> Repr {
        match self {
            StructuredRing::Integers => Repr::Int(BigInt::from(rng.gen_range(-50i64..=50))),
            StructuredRing::MatrixZQ => {
                let a = BigInt::from(rng.gen_range(-9i64..=9));
                let p = BigInt::from(rng.gen_range(-9i64..=9));
                let q = BigInt::from(rng.gen_range(1i64..=9));
                Repr::MatZQ(a, BigRational::new(p, q))
            }
            StructuredRing::PolyOverPrime(p) => {
                let deg = rng.gen_range(0usize..=3);
                let coeffs: Vec<u32> = (0..=deg).map(|_| rng.gen_range(0..*p)).collect();
                Repr::Poly(normalize(coeffs))
            }
            StructuredRing::Fraction(fb) => {
                let num = fb.base.random_elem(rng);
                loop {
                    let den = fb.base.random_elem(rng);
                    if fb.base.is_regular(&den) {
                        return fb.reduce(num, den);
                    }
                }
            }
        }
    }

    pub fn render(&self, a: &Repr) -> String {
        match (self, a) {
            (StructuredRing::Integers, Repr::Int(x)) => x.to_string(),
            (StructuredRing::MatrixZQ, Repr::MatZQ(x, t)) => {
                format!("[{},{}]", x, render_rational(t))
            }
            (StructuredRing::PolyOverPrime(_), Repr::Poly(cs)) => render_poly_in_t(cs),
            (StructuredRing::Fraction(fb), Repr::Frac(n, d)) => {
                if fb.base.eq(d, &fb.base.one()) {
                    fb.base.render(n)
                } else {
                    let wrap = |s: String| {
                        if s.contains(' ') || s.contains('/') {
                            format!("({s})")
                        } else {
                            s
                        }
                    };
                    format!(
                        "{}/{}",
                        wrap(fb.base.render(n)),
                        wrap(fb.base.render(d))
                    )
                }
            }
            _ => panic!("mismatched structured payloads"),
        }
    }

    pub fn check_payload(&self, a: &Repr) -> Result<()> {
        let ok = matches!(
            (self, a),
            (StructuredRing::Integers, Repr::Int(_))
                | (StructuredRing::MatrixZQ, Repr::MatZQ(_, _))
                | (StructuredRing::PolyOverPrime(_), Repr::Poly(_))
                | (StructuredRing::Fraction(_), Repr::Frac(_, _))
        );
        if !ok {
            return Err(Error::RingMismatch(
                "payload does not match the structured carrier".into(),
            ));
        }
        if let (StructuredRing::PolyOverPrime(p), Repr::Poly(cs)) = (self, a) {
            if cs.iter().any(|&c| c >= *p) {
                return Err(Error::RingMismatch("coefficient out of range".into()));
            }
            if cs.last() == Some(&0) {
                return Err(Error::RingMismatch("non-normalized polynomial".into()));
            }
        }
        Ok(())
    }
}

impl FractionBase {
    /// Canonical reduction. Unique representatives for all three bases:
    /// integers are gcd-reduced with positive denominator, polynomials are
    /// gcd-reduced with monic denominator, and MatrixZQ denominators are
    /// rationalized to (c,0) with c > 0 and gcd(num.a, c) = 1.
    pub fn reduce(&self, num: Repr, den: Repr) -> Repr {
        assert!(
            self.base.is_regular(&den),
            "fraction denominator must be regular"
        );
        match (&self.base, &num, &den) {
            (StructuredRing::Integers, Repr::Int(n), Repr::Int(d)) => {
                let g = n.gcd(d);
                let (mut n, mut d) = if g.is_zero() {
                    (n.clone(), d.clone())
                } else {
                    (n / &g, d / &g)
                };
                if d.is_negative() {
                    n = -n;
                    d = -d;
                }
                Repr::Frac(Box::new(Repr::Int(n)), Box::new(Repr::Int(d)))
            }
            (StructuredRing::PolyOverPrime(p), Repr::Poly(n), Repr::Poly(d)) => {
                let g = poly_gcd(n, d, *p);
                let (n, d) = if g.len() > 1 {
                    (poly_div_exact(n, &g, *p), poly_div_exact(d, &g, *p))
                } else {
                    (n.clone(), d.clone())
                };
                // Make the denominator monic.
                let lead = *d.last().expect("regular denominator is nonzero");
                let inv = mod_inverse(lead, *p);
                let scale = |cs: &[u32]| -> Vec<u32> {
                    normalize(cs.iter().map(|&c| mulmod(c, inv, *p)).collect())
                };
                Repr::Frac(
                    Box::new(Repr::Poly(scale(&n))),
                    Box::new(Repr::Poly(scale(&d))),
                )
            }
            (StructuredRing::MatrixZQ, _, Repr::MatZQ(b, u)) => {
                // Multiply through by (b,-u): the denominator becomes
                // (b², 0).
                let conj = Repr::MatZQ(b.clone(), -u);
                let num2 = self.base.mul(&num, &conj);
                let den2 = self.base.mul(&den, &conj);
                let (mut na, mut nt, mut c) = match (num2, den2) {
                    (Repr::MatZQ(na, nt), Repr::MatZQ(c, _)) => (na, nt, c),
                    _ => unreachable!(),
                };
                if c.is_negative() {
                    na = -na;
                    nt = -nt;
                    c = -c;
                }
                let g = na.gcd(&c);
                if !g.is_zero() && !g.is_one() {
                    na /= &g;
                    nt /= BigRational::from(g.clone());
                    c /= &g;
                }
                Repr::Frac(
                    Box::new(Repr::MatZQ(na, nt)),
                    Box::new(Repr::MatZQ(c, BigRational::zero())),
                )
            }
            _ => panic!("unsupported fraction base"),
        }
    }
}

pub fn render_rational(t: &BigRational) -> String {
    if t.denom().is_one() {
        t.numer().to_string()
    } else {
        format!("{}/{}", t.numer(), t.denom())
    }
}

/// Renders a Z_p\[t\] element in human form: `0`, `3`, `t`, `2*t^2`,
/// `(1 + t)`. Multi-term values are parenthesized so they can stand as
/// factors inside expressions.
pub fn render_poly_in_t(cs: &[u32]) -> String {
    let terms: Vec<String> = cs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "t".to_string(),
            (1, c) => format!("{c}*t"),
            (i, 1) => format!("t^{i}"),
            (i, c) => format!("{c}*t^{i}"),
        })
        .collect();
    match terms.len() {
        0 => "0".to_string(),
        1 => terms.into_iter().next().unwrap(),
        _ => format!("({})", terms.join(" + ")),
    }
}

pub fn normalize(mut cs: Vec<u32>) -> Vec<u32> {
    while cs.last() == Some(&0) {
        cs.pop();
    }
    cs
}

fn mulmod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn poly_add(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + y) % p
        })
        .collect();
    normalize(out)
}

pub fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    normalize(out)
}

/// Formal derivative d/dt.
pub fn poly_derivative(a: &[u32], p: u32) -> Vec<u32> {
    normalize(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(i as u32 % p, c, p))
            .collect(),
    )
}

pub fn mod_inverse(a: u32, p: u32) -> u32 {
    // p is prime; Fermat.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut rem: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    let inv = mod_inverse(*b.last().unwrap(), p);
    while rem.len() > db {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let q = mulmod(lead, inv, p);
            let shift = rem.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                let sub = mulmod(q, bc, p);
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
        }
        rem.pop();
        rem = normalize(rem);
        if rem.is_empty() {
            break;
        }
    }
    normalize(rem)
}

pub fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let (mut x, mut y) = (normalize(a.to_vec()), normalize(b.to_vec()));
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = mod_inverse(lead, p);
        x = normalize(x.iter().map(|&c| mulmod(c, inv, p)).collect());
    }
    x
}

pub fn poly_div_exact(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() {
        return vec![];
    }
    let mut rem: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    let inv = mod_inverse(*b.last().unwrap(), p);
    let mut quot = vec![0u32; a.len() - db];
    while rem.len() > db {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - db;
        if lead != 0 {
            let q = mulmod(lead, inv, p);
            quot[shift] = q;
            for (i, &bc) in b.iter().enumerate() {
                let sub = mulmod(q, bc, p);
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
        }
        rem.pop();
        rem = normalize(rem);
        if rem.is_empty() {
            break;
        }
    }
    assert!(rem.is_empty(), "non-exact polynomial division");
    normalize(quot)
}

/// Creates an element wrapper for a structured ring.
pub fn elem(ring_id: RingId, repr: Repr) -> RElem {
    RElem {
        ring: ring_id,
        repr,
    }
}
