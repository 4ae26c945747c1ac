//! Finite-dimensional quotient algebras `A = R/I` of zero-dimensional ideals,
//! represented by a standard-monomial basis and one multiplication matrix
//! per variable.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::{zero_vector, Matrix, Vector};
use crate::ring::{same_ring, FieldElem, FieldSpec, Monomial, Poly, PolyRing};

#[derive(Debug)]
pub struct ArtinAlgebra {
    ideal: Ideal,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    // for basis[j] != 1: (variable i, index of basis[j] / x_i)
    parents: Vec<Option<(usize, usize)>>,
    mult: Vec<Matrix>,
}

/// Build `R/I` for a proper zero-dimensional ideal.
pub fn quotient_algebra(ideal: &Ideal) -> Result<Arc<ArtinAlgebra>> {
    ArtinAlgebra::new(ideal)
}

/// Vector space dimension of the algebra.
pub fn degree(algebra: &ArtinAlgebra) -> usize {
    algebra.degree()
}

impl ArtinAlgebra {
    pub fn new(ideal: &Ideal) -> Result<Arc<ArtinAlgebra>> {
        let basis = ideal.standard_monomials()?;
        let index: HashMap<Monomial, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let n = ideal.ring().nvars();
        let parents = basis
            .iter()
            .map(|m| (0..n).find_map(|i| m.div_var(i).map(|q| (i, index[&q]))))
            .collect();
        let mut algebra = ArtinAlgebra {
            ideal: ideal.clone(),
            basis,
            index,
            parents,
            mult: Vec::new(),
        };
        let ring = ideal.ring().clone();
        let mut mult = Vec::with_capacity(n);
        for i in 0..n {
            let cols: Vec<Vector> = algebra
                .basis
                .iter()
                .map(|m| {
                    let xm = m.mul_var(i);
                    match algebra.index.get(&xm) {
                        Some(&k) => algebra.unit_vector(k),
                        None => algebra
                            .element_vector(&Poly::monomial(&ring, xm))
                            .expect("same ring"),
                    }
                })
                .collect();
            mult.push(Matrix::from_columns(
                ring.field(),
                algebra.basis.len(),
                &cols,
            ));
        }
        algebra.mult = mult;
        Ok(Arc::new(algebra))
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.ideal.ring()
    }

    pub fn field(&self) -> FieldSpec {
        self.ring().field()
    }

    pub fn nvars(&self) -> usize {
        self.ring().nvars()
    }

    pub fn degree(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Index of a standard monomial in the basis.
    pub fn basis_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// For a basis monomial other than 1, a variable `x_i` dividing it and
    /// the basis index of the quotient.
    pub fn parent(&self, j: usize) -> Option<(usize, usize)> {
        self.parents[j]
    }

    /// Multiplication-by-`x_i` matrix.
    pub fn mult_matrix(&self, i: usize) -> &Matrix {
        &self.mult[i]
    }

    pub fn mult_matrices(&self) -> &[Matrix] {
        &self.mult
    }

    pub fn unit_vector(&self, k: usize) -> Vector {
        let mut v = zero_vector(self.field(), self.degree());
        v[k] = self.field().one();
        v
    }

    pub fn one_vector(&self) -> Vector {
        self.unit_vector(0)
    }

    /// Coordinates of the normal form of `f` in the standard-monomial basis.
    pub fn element_vector(&self, f: &Poly) -> Result<Vector> {
        if !same_ring(f.ring(), self.ring()) {
            return Err(Error::RingMismatch);
        }
        let r = self.ideal.normal_form(f)?;
        let mut v = zero_vector(self.field(), self.degree());
        for (m, c) in r.terms() {
            v[self.index[m]] = c.clone();
        }
        Ok(v)
    }

    /// The standard representative of a coordinate vector.
    pub fn lift(&self, v: &[FieldElem]) -> Poly {
        Poly::from_terms(
            self.ring(),
            self.basis
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Matrix of multiplication by the element with coordinates `a`.
    pub fn element_matrix(&self, a: &[FieldElem]) -> Matrix {
        let mats = self.monomial_matrices(&self.mult, self.degree());
        let mut acc = Matrix::zeros(self.field(), self.degree(), self.degree());
        for (c, m) in a.iter().zip(&mats) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    pub fn multiply(&self, a: &[FieldElem], b: &[FieldElem]) -> Vector {
        self.element_matrix(a).mul_vec(b)
    }

    /// Given commuting matrices `actions` (one per variable) on a space of
    /// dimension `dim`, the matrices by which each basis monomial acts.
    pub fn monomial_matrices(&self, actions: &[Matrix], dim: usize) -> Vec<Matrix> {
        let mut out: Vec<Matrix> = Vec::with_capacity(self.degree());
        for j in 0..self.degree() {
            let m = match self.parents[j] {
                None => Matrix::identity(self.field(), dim),
                Some((i, p)) => actions[i].mul(&out[p]),
            };
            out.push(m);
        }
        out
    }

    /// Whether two algebras are the same quotient of the same ring.
    pub fn same_algebra(&self, other: &ArtinAlgebra) -> bool {
        std::ptr::eq(self, other) || self.ideal.same_ideal(&other.ideal)
    }
}
