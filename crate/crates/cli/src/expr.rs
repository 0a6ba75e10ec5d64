//! The polynomial expression grammar and its evaluator.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := literal | var | '(' expr ')'
//! ```
//!
//! `*` is noncommutative and no reordering happens at parse time;
//! normalization is the algebra's business. Literals are kind-dispatched:
//! integers, `(a,b)` tuples for products, `[a,p/q]` for the integer
//! matrix ring, `poly(c0,c1,...)` and `t` for polynomial carriers,
//! `ut(a,b,d)` for upper triangular matrices.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use spbw_core::algebra::{Exponent, SkewPoly, SkewPresentation};
use spbw_core::ring::{ConcreteRing, FiniteRing, FiniteShape, RElem, Repr, StructuredRing};
use spbw_core::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Int(BigInt),
    Tuple(Vec<Literal>),
    Bracket { a: BigInt, num: BigInt, den: BigInt },
    PolyCall(Vec<Literal>),
    TVar,
    Ut(Vec<Literal>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Lit(Literal),
    Var(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Group(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn lex(input: &str) -> Result<Vec<Token>, Error> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            '[' => {
                tokens.push(Token::LBracket);
                i += 1;
            }
            ']' => {
                tokens.push(Token::RBracket);
                i += 1;
            }
            ',' => {
                tokens.push(Token::Comma);
                i += 1;
            }
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                tokens.push(Token::Int(text.parse().unwrap()));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => {
                return Err(Error::Invalid(format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, token: Token) -> Result<(), Error> {
        match self.next() {
            Some(t) if t == token => Ok(()),
            other => Err(Error::Invalid(format!(
                "expected {token:?}, found {other:?}"
            ))),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, Error> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = Expr::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = Expr::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, Error> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            let rhs = self.parse_factor()?;
            acc = Expr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Expr, Error> {
        let atom = self.parse_atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Token::Int(v)) => {
                    let exp: u32 = v
                        .try_into()
                        .map_err(|_| Error::Invalid("exponent out of range".into()))?;
                    Ok(Expr::Pow(Box::new(atom), exp))
                }
                other => Err(Error::Invalid(format!(
                    "expected a nonnegative integer exponent, found {other:?}"
                ))),
            }
        } else {
            Ok(atom)
        }
    }

    fn parse_atom(&mut self) -> Result<Expr, Error> {
        match self.peek().cloned() {
            Some(Token::LParen) => {
                // A '(' opens either a tuple literal or a grouped
                // expression; try the tuple first and rewind on failure.
                let save = self.pos;
                if let Ok(lit) = self.parse_literal() {
                    if matches!(lit, Literal::Tuple(_)) {
                        return Ok(Expr::Lit(lit));
                    }
                }
                self.pos = save;
                self.expect(Token::LParen)?;
                let inner = self.parse_expr()?;
                self.expect(Token::RParen)?;
                Ok(Expr::Group(Box::new(inner)))
            }
            Some(Token::Ident(name)) if is_var(&name) => {
                self.pos += 1;
                Ok(Expr::Var(var_index(&name)))
            }
            _ => Ok(Expr::Lit(self.parse_literal()?)),
        }
    }

    fn parse_signed_int(&mut self) -> Result<BigInt, Error> {
        match self.next() {
            Some(Token::Int(v)) => Ok(v),
            Some(Token::Minus) => match self.next() {
                Some(Token::Int(v)) => Ok(-v),
                other => Err(Error::Invalid(format!(
                    "expected an integer after '-', found {other:?}"
                ))),
            },
            other => Err(Error::Invalid(format!(
                "expected an integer, found {other:?}"
            ))),
        }
    }

    fn parse_literal(&mut self) -> Result<Literal, Error> {
        match self.peek().cloned() {
            Some(Token::Int(_)) | Some(Token::Minus) => {
                Ok(Literal::Int(self.parse_signed_int()?))
            }
            Some(Token::Ident(name)) if name == "t" => {
                self.pos += 1;
                Ok(Literal::TVar)
            }
            Some(Token::Ident(name)) if name == "poly" || name == "ut" => {
                self.pos += 1;
                self.expect(Token::LParen)?;
                let mut entries = vec![self.parse_literal()?];
                while self.peek() == Some(&Token::Comma) {
                    self.pos += 1;
                    entries.push(self.parse_literal()?);
                }
                self.expect(Token::RParen)?;
                if name == "poly" {
                    Ok(Literal::PolyCall(entries))
                } else {
                    Ok(Literal::Ut(entries))
                }
            }
            Some(Token::LBracket) => {
                self.pos += 1;
                let a = self.parse_signed_int()?;
                self.expect(Token::Comma)?;
                let num = self.parse_signed_int()?;
                let den = if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    let d = self.parse_signed_int()?;
                    if d.is_zero() {
                        return Err(Error::Invalid("zero denominator".into()));
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                self.expect(Token::RBracket)?;
                Ok(Literal::Bracket { a, num, den })
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let mut entries = vec![self.parse_literal()?];
                while self.peek() == Some(&Token::Comma) {
                    self.pos += 1;
                    entries.push(self.parse_literal()?);
                }
                self.expect(Token::RParen)?;
                if entries.len() < 2 {
                    return Err(Error::Invalid(
                        "tuple literals need at least two entries".into(),
                    ));
                }
                Ok(Literal::Tuple(entries))
            }
            other => Err(Error::Invalid(format!("expected a literal, found {other:?}"))),
        }
    }
}

fn is_var(name: &str) -> bool {
    name.len() > 1
        && name.starts_with('x')
        && name[1..].chars().all(|c| c.is_ascii_digit())
        && !name[1..].starts_with('0')
}

fn var_index(name: &str) -> usize {
    name[1..].parse().unwrap()
}

pub fn parse(input: &str) -> Result<Expr, Error> {
    let tokens = lex(input)?;
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.parse_expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Invalid(format!(
            "trailing input after expression at token {}",
            parser.pos
        )));
    }
    Ok(expr)
}

pub fn render(expr: &Expr) -> String {
    match expr {
        Expr::Lit(lit) => render_literal(lit),
        Expr::Var(i) => format!("x{i}"),
        Expr::Add(a, b) => format!("{} + {}", render(a), render(b)),
        Expr::Sub(a, b) => format!("{} - {}", render(a), render(b)),
        Expr::Mul(a, b) => format!("{}*{}", render(a), render(b)),
        Expr::Pow(a, k) => format!("{}^{k}", render(a)),
        Expr::Group(a) => format!("({})", render(a)),
    }
}

fn render_literal(lit: &Literal) -> String {
    match lit {
        Literal::Int(v) => v.to_string(),
        Literal::Tuple(entries) => {
            let parts: Vec<String> = entries.iter().map(render_literal).collect();
            format!("({})", parts.join(","))
        }
        Literal::Bracket { a, num, den } => {
            if *den == BigInt::from(1) {
                format!("[{a},{num}]")
            } else {
                format!("[{a},{num}/{den}]")
            }
        }
        Literal::PolyCall(entries) => {
            let parts: Vec<String> = entries.iter().map(render_literal).collect();
            format!("poly({})", parts.join(","))
        }
        Literal::TVar => "t".to_string(),
        Literal::Ut(entries) => {
            let parts: Vec<String> = entries.iter().map(render_literal).collect();
            format!("ut({})", parts.join(","))
        }
    }
}

/// Decodes a literal into a canonical index of a finite ring.
fn decode_finite(ring: &FiniteRing, lit: &Literal) -> Result<u32, Error> {
    let mismatch = || {
        Error::Invalid(format!(
            "literal {} does not fit this ring kind",
            render_literal(lit)
        ))
    };
    match (ring.shape(), lit) {
        (FiniteShape::Opaque, Literal::Int(v)) => {
            let idx: u32 = v.try_into().map_err(|_| mismatch())?;
            ring.from_natural(idx).ok_or_else(mismatch)
        }
        (FiniteShape::Modular(m), Literal::Int(v)) => {
            let m_big = BigInt::from(*m);
            let mut residue = v % &m_big;
            if residue.is_negative() {
                residue += &m_big;
            }
            let idx: u32 = residue.try_into().unwrap();
            ring.from_natural(idx).ok_or_else(mismatch)
        }
        (FiniteShape::Product(factors), Literal::Tuple(entries)) => {
            if entries.len() != factors.len() {
                return Err(mismatch());
            }
            let mut natural: u64 = 0;
            let mut stride: u64 = 1;
            for (factor, entry) in factors.iter().zip(entries) {
                let idx = decode_finite(factor, entry)?;
                natural += idx as u64 * stride;
                stride *= factor.size() as u64;
            }
            ring.from_natural(natural as u32).ok_or_else(mismatch)
        }
        (FiniteShape::Ut2(base), Literal::Ut(entries)) => {
            if entries.len() != 3 {
                return Err(mismatch());
            }
            let m = base.size();
            let a = decode_finite(base, &entries[0])?;
            let b = decode_finite(base, &entries[1])?;
            let d = decode_finite(base, &entries[2])?;
            ring.from_natural(a + m * b + m * m * d).ok_or_else(mismatch)
        }
        (FiniteShape::TruncPoly { base, len }, Literal::PolyCall(entries)) => {
            if entries.len() > *len as usize {
                return Err(mismatch());
            }
            let m = base.size() as u64;
            let mut natural: u64 = 0;
            let mut stride: u64 = 1;
            for entry in entries {
                natural += decode_finite(base, entry)? as u64 * stride;
                stride *= m;
            }
            ring.from_natural(natural as u32).ok_or_else(mismatch)
        }
        (FiniteShape::TruncPoly { base, len }, Literal::TVar) => {
            if *len < 2 {
                return Err(mismatch());
            }
            ring.from_natural(base.size()).ok_or_else(mismatch)
        }
        (FiniteShape::TruncPoly { base, .. }, Literal::Int(_)) => {
            let c = decode_finite(base, lit)?;
            ring.from_natural(c).ok_or_else(mismatch)
        }
        // Any integer embeds through the canonical map Z -> R.
        (_, Literal::Int(v)) => Ok(integer_embedding(ring, v)),
        _ => Err(mismatch()),
    }
}

/// v·1 in a finite ring, via the characteristic.
fn integer_embedding(ring: &FiniteRing, v: &BigInt) -> u32 {
    let one = if ring.size() > 1 { 1 } else { 0 };
    let mut characteristic: u32 = 1;
    let mut acc = one;
    while acc != 0 {
        acc = ring.add_i(acc, one);
        characteristic += 1;
    }
    let char_big = BigInt::from(characteristic);
    let mut residue = v % &char_big;
    if residue.is_negative() {
        residue += &char_big;
    }
    let times: u32 = residue.try_into().unwrap();
    let mut out = 0;
    for _ in 0..times {
        out = ring.add_i(out, one);
    }
    out
}

/// Decodes a literal into an element of the given ring.
pub fn literal_to_elem(ring: &ConcreteRing, lit: &Literal) -> Result<RElem, Error> {
    if let Some(f) = ring.finite() {
        let idx = decode_finite(f, lit)?;
        return Ok(ring.elem(idx));
    }
    let s = ring.structured().unwrap();
    let mismatch = || {
        Error::Invalid(format!(
            "literal {} does not fit this ring kind",
            render_literal(lit)
        ))
    };
    let repr = match (s, lit) {
        (StructuredRing::Integers, Literal::Int(v)) => Repr::Int(v.clone()),
        (StructuredRing::MatrixZQ, Literal::Int(v)) => {
            Repr::MatZQ(v.clone(), BigRational::zero())
        }
        (StructuredRing::MatrixZQ, Literal::Bracket { a, num, den }) => {
            Repr::MatZQ(a.clone(), BigRational::new(num.clone(), den.clone()))
        }
        (StructuredRing::PolyOverPrime(p), Literal::Int(v)) => {
            let p_big = BigInt::from(*p);
            let mut residue = v % &p_big;
            if residue.is_negative() {
                residue += &p_big;
            }
            let c: u32 = residue.try_into().unwrap();
            if c == 0 {
                Repr::Poly(vec![])
            } else {
                Repr::Poly(vec![c])
            }
        }
        (StructuredRing::PolyOverPrime(_), Literal::TVar) => Repr::Poly(vec![0, 1]),
        (StructuredRing::PolyOverPrime(p), Literal::PolyCall(entries)) => {
            let mut coeffs = Vec::new();
            for entry in entries {
                match entry {
                    Literal::Int(v) => {
                        let p_big = BigInt::from(*p);
                        let mut residue = v % &p_big;
                        if residue.is_negative() {
                            residue += &p_big;
                        }
                        coeffs.push(u32::try_from(residue).unwrap());
                    }
                    _ => return Err(mismatch()),
                }
            }
            while coeffs.last() == Some(&0) {
                coeffs.pop();
            }
            Repr::Poly(coeffs)
        }
        _ => return Err(mismatch()),
    };
    let elem = RElem {
        ring: ring.id(),
        repr,
    };
    ring.check_member(&elem)?;
    Ok(elem)
}

/// Evaluates an expression tree into PBW normal form.
pub fn eval(pres: &SkewPresentation, expr: &Expr) -> Result<SkewPoly, Error> {
    match expr {
        Expr::Lit(lit) => {
            let elem = literal_to_elem(pres.ring(), lit)?;
            Ok(pres.const_poly(&elem))
        }
        Expr::Var(i) => {
            if *i == 0 || *i > pres.n() {
                return Err(Error::Invalid(format!(
                    "variable x{i} out of range: this extension has {} variable(s)",
                    pres.n()
                )));
            }
            Ok(pres.monomial(Exponent::unit(pres.n(), *i)))
        }
        Expr::Add(a, b) => Ok(pres.poly_add(&eval(pres, a)?, &eval(pres, b)?)),
        Expr::Sub(a, b) => Ok(pres.poly_sub(&eval(pres, a)?, &eval(pres, b)?)),
        Expr::Mul(a, b) => pres.poly_mul(&eval(pres, a)?, &eval(pres, b)?),
        Expr::Pow(a, k) => pres.poly_pow(&eval(pres, a)?, *k),
        Expr::Group(a) => eval(pres, a),
    }
}

/// Parses a constant expression (no variables) into a ring element; used
/// for the c/r entries of definition documents.
pub fn parse_constant(ring: &ConcreteRing, input: &str) -> Result<RElem, Error> {
    let expr = parse(input)?;
    constant_value(ring, &expr)
}

fn constant_value(ring: &ConcreteRing, expr: &Expr) -> Result<RElem, Error> {
    match expr {
        Expr::Lit(lit) => literal_to_elem(ring, lit),
        Expr::Var(_) => Err(Error::Invalid(
            "variables are not allowed in constant position".into(),
        )),
        Expr::Add(a, b) => Ok(ring.add(&constant_value(ring, a)?, &constant_value(ring, b)?)),
        Expr::Sub(a, b) => Ok(ring.sub(&constant_value(ring, a)?, &constant_value(ring, b)?)),
        Expr::Mul(a, b) => Ok(ring.mul(&constant_value(ring, a)?, &constant_value(ring, b)?)),
        Expr::Pow(a, k) => {
            let base = constant_value(ring, a)?;
            let mut acc = ring.one();
            for _ in 0..*k {
                acc = ring.mul(&acc, &base);
            }
            Ok(acc)
        }
        Expr::Group(a) => constant_value(ring, a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use spbw_core::catalog;

    #[test]
    fn parses_and_renders_fixed_point() {
        for s in [
            "x1*x2",
            "(0,1)*x1 + (1,0)",
            "x1^2*t",
            "2*x1*x2 + 1",
            "(1,0) - (0,1)*x1",
            "poly(1,2)*x1",
            "[0,1/2]*x1^3",
            "ut(1,0,1)*x1 - ut(0,1,0)",
            "(x1 + 1)*(x1 - 1)",
            "x1^0",
        ] {
            let tree = parse(s).unwrap();
            let rendered = render(&tree);
            let reparsed = parse(&rendered).unwrap();
            assert_eq!(tree, reparsed, "fixed point failed for {s}");
        }
    }

    #[test]
    fn tuple_versus_group_disambiguation() {
        assert!(matches!(parse("(1,0)").unwrap(), Expr::Lit(Literal::Tuple(_))));
        assert!(matches!(parse("(1)").unwrap(), Expr::Group(_)));
        assert!(matches!(parse("(x1 + 1)").unwrap(), Expr::Group(_)));
        assert!(parse("(1,)").is_err());
    }

    #[test]
    fn eval_weyl_commutator() {
        let entry = catalog::load("weyl-z5").unwrap();
        let pres = &entry.presentation;
        let out = eval(pres, &parse("x2*x1").unwrap()).unwrap();
        assert_eq!(pres.render_poly(&out), "x1*x2 + 1");
        let pow0 = eval(pres, &parse("x1^0").unwrap()).unwrap();
        assert_eq!(pres.render_poly(&pow0), "1");
    }

    #[test]
    fn eval_diff_poly_pushes_t() {
        let entry = catalog::load("diff-poly-z5").unwrap();
        let pres = &entry.presentation;
        let out = eval(pres, &parse("x1*t").unwrap()).unwrap();
        assert_eq!(pres.render_poly(&out), "t*x1 + 1");
        let out2 = eval(pres, &parse("x1^2*t").unwrap()).unwrap();
        assert_eq!(pres.render_poly(&out2), "t*x1^2 + 2*x1");
    }

    #[test]
    fn modular_literals_reduce() {
        let entry = catalog::load("z4-trivial").unwrap();
        let ring = &entry.ring;
        let e = literal_to_elem(ring, &Literal::Int(BigInt::from(-1))).unwrap();
        assert_eq!(ring.render(&e), "3");
    }

    #[test]
    fn product_literals_decode_componentwise() {
        let entry = catalog::load("z2xz2-swap").unwrap();
        let ring = &entry.ring;
        let e = parse_constant(ring, "(1,0)").unwrap();
        assert_eq!(ring.render(&e), "(1,0)");
        let ep = parse_constant(ring, "(0,1)").unwrap();
        assert!(ring.is_zero(&ring.mul(&e, &ep)));
    }

    #[test]
    fn normalization_is_parse_stable_on_rendered_forms() {
        for name in ["z2xz2-swap", "weyl-z5", "quantum-plane-z3", "ut2z2-trivial"] {
            let entry = catalog::load(name).unwrap();
            let pres = &entry.presentation;
            let space = (0..pres.n())
                .map(|i| Exponent::unit(pres.n(), i + 1))
                .collect::<Vec<_>>();
            // A handful of structured polynomials.
            let ring = pres.ring();
            let m = ring.size().unwrap();
            for seed in 0..10u32 {
                let poly = pres.poly_from_terms(space.iter().enumerate().map(|(k, e)| {
                    (e.clone(), ring.elem((seed + k as u32 * 3) % m))
                }));
                let text = pres.render_poly(&poly);
                let back = eval(pres, &parse(&text).unwrap()).unwrap();
                assert_eq!(back, poly, "{name}: {text}");
            }
        }
    }
}
