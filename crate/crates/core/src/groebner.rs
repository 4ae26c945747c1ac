//! Reduced Gröbner bases (Buchberger with the product and chain criteria),
//! normal forms, ideal arithmetic, and standard monomials.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ring::{parse_poly, same_ring, Monomial, MonomialOrder, Poly, PolyRing};

/// Multivariate division with full reduction: the remainder of `f` modulo
/// `basis`, none of whose terms is divisible by a leading monomial of `basis`.
/// Zero elements of `basis` are ignored.
pub fn reduce_by(f: &Poly, basis: &[Poly]) -> Poly {
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut rem = Vec::new();
    'outer: while let Some((m, c)) = p.leading_term().cloned() {
        for g in basis {
            let Some((gm, gc)) = g.leading_term() else {
                continue;
            };
            if let Some(q) = gm.quotient_of(&m) {
                let factor = if gc.is_one() {
                    c
                } else {
                    &c * &gc.inv().expect("nonzero")
                };
                p = p.sub_scaled(&factor, &q, g);
                continue 'outer;
            }
        }
        rem.push((m, c));
        p = p.without_leading();
    }
    // remainder terms were collected in decreasing order
    Poly::from_terms(&ring, rem)
}

fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l).unwrap(), &fc.inv().unwrap());
    let b = g.mul_term(&gm.quotient_of(&l).unwrap(), &gc.inv().unwrap());
    &a - &b
}

/// Turn any Gröbner basis into the reduced one: drop elements with
/// redundant leading monomials, tail-reduce, make monic, and sort by
/// increasing leading monomial.
fn reduce_basis(mut g: Vec<Poly>, order: MonomialOrder) -> Vec<Poly> {
    g.retain(|p| !p.is_zero());
    let mut keep: Vec<Poly> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let lm = p.leading_monomial().unwrap();
        let redundant = g.iter().enumerate().any(|(j, q)| {
            let qm = q.leading_monomial().unwrap();
            j != i && qm.divides(lm) && (qm != lm || j < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Poly> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        out.push(reduce_by(&keep[i], &others).make_monic());
    }
    out.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are selected by the normal strategy (smallest lcm degree, then
/// smallest lcm in the monomial order, then generator indices); the product
/// criterion and Buchberger's chain criterion prune pairs.
pub fn buchberger(gens: &[Poly]) -> Result<Vec<Poly>> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroIdeal);
    };
    let ring = first.ring().clone();
    if gens.iter().any(|g| !same_ring(g.ring(), &ring)) {
        return Err(Error::RingMismatch);
    }
    let order = ring.order();
    let mut basis: Vec<Poly> = Vec::new();
    let mut seen = HashSet::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let m = g.make_monic();
        if seen.insert(m.render()) {
            basis.push(m);
        }
    }
    if basis.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    if basis.iter().any(|g| g.leading_monomial().unwrap().is_one()) {
        return Ok(vec![Poly::one(&ring)]);
    }

    // pending pairs (lcm, i, j) with i < j; membership mirrored in a set
    let mut pending: Vec<(Monomial, usize, usize)> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    let lcm_of = |basis: &[Poly], i: usize, j: usize| {
        basis[i]
            .leading_monomial()
            .unwrap()
            .lcm(basis[j].leading_monomial().unwrap())
    };
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((lcm_of(&basis, i, j), i, j));
            pending_set.insert((i, j));
        }
    }

    while !pending.is_empty() {
        let best = (0..pending.len())
            .min_by(|&a, &b| {
                let (l1, i1, j1) = &pending[a];
                let (l2, i2, j2) = &pending[b];
                l1.degree()
                    .cmp(&l2.degree())
                    .then_with(|| order.cmp(l1, l2))
                    .then_with(|| (i1, j1).cmp(&(i2, j2)))
            })
            .unwrap();
        let (l, i, j) = pending.swap_remove(best);
        pending_set.remove(&(i, j));

        let mi = basis[i].leading_monomial().unwrap();
        let mj = basis[j].leading_monomial().unwrap();
        if mi.is_coprime(mj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let r = reduce_by(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.make_monic();
        if r.leading_monomial().unwrap().is_one() {
            return Ok(vec![Poly::one(&ring)]);
        }
        let n = basis.len();
        basis.push(r);
        for k in 0..n {
            pending.push((lcm_of(&basis, k, n), k, n));
            pending_set.insert((k, n));
        }
    }
    Ok(reduce_basis(basis, order))
}

struct IdealInner {
    ring: Arc<PolyRing>,
    generators: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
}

/// An ideal given by generators, with a lazily computed reduced Gröbner
/// basis. Clones share the cached basis.
#[derive(Clone)]
pub struct Ideal(Arc<IdealInner>);

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.0.generators.iter().map(Poly::render).collect();
        write!(f, "Ideal({})", gens.join(", "))
    }
}

impl Ideal {
    /// Ideal generated by `generators`; zero generators are dropped, and at
    /// least one nonzero generator is required.
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Poly>) -> Result<Ideal> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let generators: Vec<Poly> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        Ok(Ideal(Arc::new(IdealInner {
            ring: ring.clone(),
            generators,
            gb: OnceLock::new(),
        })))
    }

    pub fn parse(ring: &Arc<PolyRing>, generators: &[&str]) -> Result<Ideal> {
        let gens = generators
            .iter()
            .map(|s| parse_poly(s, ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    /// The ideal generated by the variables `x_1, ..., x_n`.
    pub fn maximal_at_origin(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(
            ring,
            (0..ring.nvars()).map(|i| Poly::var(ring, i)).collect(),
        )
        .expect("variables are nonzero")
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.0.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.0.generators
    }

    /// Reduced Gröbner basis, computed once.
    pub fn groebner_basis(&self) -> &[Poly] {
        self.0.gb.get_or_init(|| {
            buchberger(&self.0.generators).expect("generators are nonzero and share a ring")
        })
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.groebner_basis()
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        if !same_ring(f.ring(), self.ring()) {
            return Err(Error::RingMismatch);
        }
        Ok(reduce_by(f, self.groebner_basis()))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_proper(&self) -> bool {
        !self
            .groebner_basis()
            .iter()
            .any(|g| g.leading_monomial().unwrap().is_one())
    }

    /// Equality as ideals (equal reduced Gröbner bases).
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        same_ring(self.ring(), other.ring()) && self.groebner_basis() == other.groebner_basis()
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::ImproperIdeal)
        }
    }

    /// First variable with no pure power among the leading monomials.
    fn missing_pure_power(&self) -> Option<usize> {
        let lms = self.leading_monomials();
        (0..self.ring().nvars()).find(|&i| {
            !lms.iter()
                .any(|m| matches!(m.as_pure_power(), Some((j, _)) if j == i))
        })
    }

    pub fn is_zero_dimensional(&self) -> Result<bool> {
        self.require_proper()?;
        Ok(self.missing_pure_power().is_none())
    }

    /// Error unless the ideal is proper and zero-dimensional.
    pub fn require_zero_dimensional(&self) -> Result<()> {
        self.require_proper()?;
        match self.missing_pure_power() {
            None => Ok(()),
            Some(i) => Err(Error::NotZeroDimensional(self.ring().vars()[i].clone())),
        }
    }

    /// Monomials outside the initial ideal, in increasing monomial order.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        self.require_zero_dimensional()?;
        let lms = self.leading_monomials();
        let n = self.ring().nvars();
        let mut found: HashSet<Monomial> = HashSet::new();
        let mut stack = vec![Monomial::one(n)];
        found.insert(Monomial::one(n));
        while let Some(m) = stack.pop() {
            for i in 0..n {
                let next = m.mul_var(i);
                if !found.contains(&next) && !lms.iter().any(|l| l.divides(&next)) {
                    found.insert(next.clone());
                    stack.push(next);
                }
            }
        }
        let order = self.ring().order();
        let mut out: Vec<Monomial> = found.into_iter().collect();
        out.sort_by(|a, b| order.cmp(a, b));
        Ok(out)
    }

    /// Krull dimension of `R/I`: the largest set of variables containing the
    /// support of no leading monomial.
    pub fn krull_dimension(&self) -> Result<usize> {
        self.require_proper()?;
        let n = self.ring().nvars();
        let lms = self.leading_monomials();
        let mut best = 0;
        for mask in 0u64..(1 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let independent = lms.iter().all(|m| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .any(|(i, &e)| e > 0 && mask & (1 << i) == 0)
            });
            if independent {
                best = size;
            }
        }
        Ok(best)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(self.ring(), other.ring()) {
            return Err(Error::RingMismatch);
        }
        let gens = self
            .generators()
            .iter()
            .chain(other.generators())
            .cloned()
            .collect();
        Ideal::new(self.ring(), gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(self.ring(), other.ring()) {
            return Err(Error::RingMismatch);
        }
        let mut gens: Vec<Poly> = Vec::new();
        let mut seen = HashSet::new();
        for f in self.generators() {
            for g in other.generators() {
                let p = f * g;
                if seen.insert(p.render()) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(self.ring(), gens)
    }

    pub fn power(&self, k: u32) -> Result<Ideal> {
        if k == 0 {
            return Err(Error::Precondition(
                "ideal power exponent must be at least 1".into(),
            ));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// The same generators in the ring with another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        let ring = self.ring().with_order(order);
        let gens = self
            .generators()
            .iter()
            .map(|g| g.to_ring(&ring).expect("same variables"))
            .collect();
        Ideal::new(&ring, gens).expect("nonzero generators")
    }
}

/// Ideal arithmetic selector for [`ideal_ops`].
#[derive(Clone, Debug)]
pub enum IdealOp<'a> {
    Sum(&'a Ideal),
    Product(&'a Ideal),
    Power(u32),
}

pub fn ideal_ops(ideal: &Ideal, op: IdealOp<'_>) -> Result<Ideal> {
    match op {
        IdealOp::Sum(j) => ideal.sum(j),
        IdealOp::Product(j) => ideal.product(j),
        IdealOp::Power(k) => ideal.power(k),
    }
}
