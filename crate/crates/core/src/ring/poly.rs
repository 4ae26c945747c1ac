use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::{FieldElem, FieldSpec};
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// A polynomial ring `k[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: FieldSpec,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: FieldSpec, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<Self>> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables declared".into()));
        }
        let mut seen = HashSet::new();
        for v in &vars {
            let ok = v
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    /// Convenience constructor from a whitespace separated variable list.
    pub fn parse_vars(field: FieldSpec, vars: &str, order: MonomialOrder) -> Result<Arc<Self>> {
        Self::new(
            field,
            vars.split_whitespace().map(String::from).collect(),
            order,
        )
    }

    /// The same variables and field under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            order,
            ..self.clone()
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Sparse polynomial in canonical form: terms sorted by decreasing monomial
/// order, no zero coefficients.
#[derive(Clone, Debug)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, FieldElem)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Poly {
        Poly::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: FieldElem) -> Poly {
        Poly::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: FieldElem) -> Poly {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial) -> Poly {
        Poly::term(ring, m, ring.field.one())
    }

    /// The variable `x_i`.
    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Poly {
        Poly::monomial(ring, Monomial::var(i, ring.nvars()))
    }

    /// Build a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, FieldElem)>,
    ) -> Poly {
        let order = ring.order;
        let mut terms: Vec<(Monomial, FieldElem)> = terms.into_iter().collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, FieldElem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => lc.add_assign_ref(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, FieldElem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, FieldElem)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Drop the leading term.
    pub fn without_leading(mut self) -> Poly {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
        self
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> FieldElem {
        let order = self.ring.order;
        match self.terms.binary_search_by(|(t, _)| order.cmp(m, t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field.zero(),
        }
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `self + c * m * g` by a single merge pass (`m = None` means 1).
    fn merge_scaled(&self, g: &Poly, c: &FieldElem, m: Option<&Monomial>) -> Poly {
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let scaled = g.terms.iter().map(|(gm, gc)| {
            let mm = match m {
                Some(m) => gm.mul(m),
                None => gm.clone(),
            };
            (mm, gc * c)
        });
        let mut b = scaled.peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((am, _)), Some((bm, _))) => order.cmp(am, bm),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (am, ac) = a.next().unwrap();
                    let (_, bc) = b.next().unwrap();
                    let s = ac + &bc;
                    if !s.is_zero() {
                        out.push((am.clone(), s));
                    }
                }
            }
        }
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// `self - c * m * g`, the reduction step of multivariate division.
    pub fn sub_scaled(&self, c: &FieldElem, m: &Monomial, g: &Poly) -> Poly {
        self.merge_scaled(g, &-c, Some(m))
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        // multiplication by a monomial preserves the order
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// Scale so the leading coefficient is one. Zero stays zero.
    pub fn make_monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let field = self.ring.field;
        Poly::from_terms(
            &self.ring,
            self.terms.iter().filter_map(|(m, c)| {
                let e = m.exponents()[i];
                (e > 0).then(|| (m.div_var(i).unwrap(), c * &field.from_i64(e as i64)))
            }),
        )
    }

    /// Evaluate at a point with coordinates in the coefficient field.
    pub fn eval(&self, point: &[FieldElem]) -> FieldElem {
        let mut acc = self.ring.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = &t * x;
                }
            }
            acc.add_assign_ref(&t);
        }
        acc
    }

    /// The same polynomial viewed in `ring`, which must have the same
    /// variables and field (typically a different monomial order).
    pub fn to_ring(&self, ring: &Arc<PolyRing>) -> Result<Poly> {
        if ring.vars != self.ring.vars || ring.field != self.ring.field {
            return Err(Error::RingMismatch);
        }
        Ok(Poly::from_terms(ring, self.terms.iter().cloned()))
    }

    /// Canonical textual form; parses back to the same polynomial.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&m.render(&self.ring.vars));
            } else {
                s.push_str(&format!("{}*{}", abs, m.render(&self.ring.vars)));
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Arithmetic operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked polynomial arithmetic; fails on a ring mismatch.
pub fn poly_arith(op: PolyOp, f: &Poly, g: &Poly) -> Result<Poly> {
    f.check_ring(g)?;
    Ok(match op {
        PolyOp::Add => f + g,
        PolyOp::Sub => f - g,
        PolyOp::Mul => f * g,
    })
}

// The operator impls assume both operands share a ring; use `poly_arith`
// when that is not guaranteed.

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        debug_assert!(same_ring(&self.ring, &rhs.ring));
        self.merge_scaled(rhs, &self.ring.field.one(), None)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        debug_assert!(same_ring(&self.ring, &rhs.ring));
        self.merge_scaled(rhs, &-self.ring.field.one(), None)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        debug_assert!(same_ring(&self.ring, &rhs.ring));
        let (small, big) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms = Vec::with_capacity(small.len() * big.len());
        for (m, c) in &small.terms {
            for (n, d) in &big.terms {
                terms.push((m.mul(n), c * d));
            }
        }
        Poly::from_terms(&self.ring, terms)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq(vars: &str) -> Arc<PolyRing> {
        PolyRing::parse_vars(FieldSpec::Rationals, vars, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = qq("x y");
        let (x, y) = (Poly::var(&r, 0), Poly::var(&r, 1));
        let p = poly_arith(PolyOp::Mul, &(&x + &y), &(&x - &y)).unwrap();
        assert_eq!(p, &(&x * &x) - &(&y * &y));
        assert_eq!(p.render(), "x^2 - y^2");
    }

    #[test]
    fn additive_identity_and_zero() {
        let r = qq("x y");
        let f = &Poly::var(&r, 0) + &Poly::one(&r);
        assert_eq!(poly_arith(PolyOp::Add, &f, &Poly::zero(&r)).unwrap(), f);
        assert!((&f - &f).is_zero());
        assert_eq!(Poly::zero(&r).render(), "0");
    }

    #[test]
    fn frobenius_over_f5() {
        let r = PolyRing::parse_vars(FieldSpec::prime(5).unwrap(), "x", MonomialOrder::Grevlex)
            .unwrap();
        let x1 = &Poly::var(&r, 0) + &Poly::one(&r);
        let fifth = x1.pow(5);
        // brute force: multiply out five times
        let mut brute = Poly::one(&r);
        for _ in 0..5 {
            brute = &brute * &x1;
        }
        assert_eq!(fifth, brute);
        assert_eq!(fifth, &Poly::var(&r, 0).pow(5) + &Poly::one(&r));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Poly::var(&qq("x y"), 0);
        let b = Poly::var(&qq("x z"), 0);
        assert_eq!(poly_arith(PolyOp::Add, &a, &b), Err(Error::RingMismatch));
    }

    #[test]
    fn ring_validation() {
        assert!(PolyRing::parse_vars(FieldSpec::Rationals, "x x", MonomialOrder::Lex).is_err());
        assert!(PolyRing::parse_vars(FieldSpec::Rationals, "", MonomialOrder::Lex).is_err());
        assert!(PolyRing::parse_vars(FieldSpec::Rationals, "1x", MonomialOrder::Lex).is_err());
    }

    #[test]
    fn derivative_and_eval() {
        let r = qq("x y");
        let (x, y) = (Poly::var(&r, 0), Poly::var(&r, 1));
        let f = &(&x.pow(3) * &y) + &y.pow(2);
        assert_eq!(
            f.derivative(0),
            &x.pow(2).scale(&r.field().from_i64(3)) * &y
        );
        let k = r.field();
        assert_eq!(f.eval(&[k.from_i64(2), k.from_i64(3)]), k.from_i64(33));
    }
}
