//! Finitely generated modules over an [`ArtinAlgebra`], stored as one
//! commuting action matrix per ring variable.
//!
//! Hom modules are computed from generators and relations: an A-linear map
//! out of `M` is determined by the images of A-generators `u_1..u_s`, and a
//! tuple of images extends to a map iff it is killed by every relation among
//! the `u_t`. This keeps the linear systems much smaller than the full
//! commutation system, which is kept as [`hom_dim_by_commutation`] for
//! cross-checking.

use std::sync::{Arc, OnceLock};

use crate::artin::ArtinAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vector, zero_vector, Matrix, Subspace, Vector};
use crate::ring::{FieldElem, FieldSpec, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Free,
    Cokernel,
    Hom,
    Subquotient,
    Other,
}

#[derive(Clone, Debug)]
pub struct FinModule {
    algebra: Arc<ArtinAlgebra>,
    dim: usize,
    actions: Vec<Matrix>,
    provenance: Provenance,
    generators: Option<Vec<Vector>>,
    monomial_actions: OnceLock<Vec<Matrix>>,
}

fn same_algebra(a: &Arc<ArtinAlgebra>, b: &Arc<ArtinAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || a.same_algebra(b)
}

impl FinModule {
    /// A module from explicit action matrices. Shapes are checked here; the
    /// module axioms are checked by [`FinModule::validate`].
    pub fn new(
        algebra: &Arc<ArtinAlgebra>,
        actions: Vec<Matrix>,
        provenance: Provenance,
    ) -> Result<FinModule> {
        if actions.len() != algebra.nvars() {
            return Err(Error::DimensionMismatch {
                expected: algebra.nvars(),
                actual: actions.len(),
            });
        }
        let dim = actions.first().map_or(0, Matrix::nrows);
        for a in &actions {
            if a.nrows() != dim || a.ncols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: a.ncols(),
                });
            }
        }
        Ok(FinModule {
            algebra: algebra.clone(),
            dim,
            actions,
            provenance,
            generators: None,
            monomial_actions: OnceLock::new(),
        })
    }

    fn zero_of(algebra: &Arc<ArtinAlgebra>, provenance: Provenance) -> FinModule {
        let k = algebra.field();
        let actions = (0..algebra.nvars())
            .map(|_| Matrix::zeros(k, 0, 0))
            .collect();
        FinModule::new(algebra, actions, provenance).expect("shapes agree")
    }

    /// Record a preferred list of A-generators. They are only a hint:
    /// [`hom_module`] completes the list if it does not generate.
    pub fn with_generators(mut self, generators: Vec<Vector>) -> FinModule {
        self.generators = Some(generators);
        self
    }

    pub fn algebra(&self) -> &Arc<ArtinAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.actions[i]
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn generator_hint(&self) -> Option<&[Vector]> {
        self.generators.as_deref()
    }

    /// Matrices by which the basis monomials of the algebra act.
    pub fn monomial_actions(&self) -> &[Matrix] {
        self.monomial_actions
            .get_or_init(|| self.algebra.monomial_matrices(&self.actions, self.dim))
    }

    /// `m_j · v` for every basis monomial `m_j` of the algebra.
    pub fn orbit(&self, v: &[FieldElem]) -> Vec<Vector> {
        let mut out: Vec<Vector> = Vec::with_capacity(self.algebra.degree());
        for j in 0..self.algebra.degree() {
            let w = match self.algebra.parent(j) {
                None => v.to_vec(),
                Some((i, p)) => self.actions[i].mul_vec(&out[p]),
            };
            out.push(w);
        }
        out
    }

    /// The element of the algebra with coordinates `a` applied to `v`.
    pub fn act(&self, a: &[FieldElem], v: &[FieldElem]) -> Vector {
        let mut acc = zero_vector(self.field(), self.dim);
        for (c, w) in a.iter().zip(self.orbit(v)) {
            axpy(&mut acc, c, &w);
        }
        acc
    }

    /// Matrix of the element with coordinates `a`.
    pub fn element_action(&self, a: &[FieldElem]) -> Matrix {
        let mut acc = Matrix::zeros(self.field(), self.dim, self.dim);
        for (c, m) in a.iter().zip(self.monomial_actions()) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    /// The polynomial `f` evaluated at the action matrices.
    pub fn poly_action(&self, f: &Poly) -> Matrix {
        let k = self.field();
        let mut acc = Matrix::zeros(k, self.dim, self.dim);
        for (m, c) in f.terms() {
            let mm = Matrix::monomial_in(&self.actions, m.exponents(), self.dim, k);
            acc = acc.add(&mm.scale(c));
        }
        acc
    }

    /// Check the module axioms: the actions commute and every element of the
    /// defining ideal acts as zero.
    pub fn validate(&self) -> Result<()> {
        for i in 0..self.actions.len() {
            for j in i + 1..self.actions.len() {
                if self.actions[i].mul(&self.actions[j]) != self.actions[j].mul(&self.actions[i]) {
                    return Err(Error::Precondition(format!(
                        "actions of variables {i} and {j} do not commute"
                    )));
                }
            }
        }
        for g in self.algebra.ideal().groebner_basis() {
            if !self.poly_action(g).is_zero() {
                return Err(Error::Precondition(format!(
                    "ideal element {g} does not act as zero"
                )));
            }
        }
        Ok(())
    }

    pub fn is_stable(&self, s: &Subspace) -> bool {
        s.basis()
            .iter()
            .all(|v| self.actions.iter().all(|x| s.contains(&x.mul_vec(v))))
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// A-generators of the module, greedily chosen from the generator hint
    /// and then the standard basis vectors.
    pub fn minimal_generators(&self) -> Vec<Vector> {
        let k = self.field();
        let mut chosen = Vec::new();
        let mut span = Subspace::zero(k, self.dim);
        let hint = self.generators.iter().flatten().cloned();
        let units = (0..self.dim).map(|c| {
            let mut e = zero_vector(k, self.dim);
            e[c] = k.one();
            e
        });
        for v in hint.chain(units) {
            if span.dim() == self.dim {
                break;
            }
            if span.contains(&v) {
                continue;
            }
            grow_closure(self, &mut span, v.clone());
            chosen.push(v);
        }
        chosen
    }
}

/// Insert `v` into an action-stable subspace and close it up again.
fn grow_closure(m: &FinModule, span: &mut Subspace, v: Vector) {
    let mut queue = vec![v];
    while let Some(w) = queue.pop() {
        if span.insert(w.clone()) {
            for x in &m.actions {
                queue.push(x.mul_vec(&w));
            }
        }
    }
}

/// `A^rank` with block-diagonal actions.
pub fn free_module(algebra: &Arc<ArtinAlgebra>, rank: usize) -> Result<FinModule> {
    if rank == 0 {
        return Err(Error::Precondition(
            "free module rank must be positive".into(),
        ));
    }
    let d = algebra.degree();
    let k = algebra.field();
    let actions = algebra
        .mult_matrices()
        .iter()
        .map(|x| {
            let mut big = Matrix::zeros(k, rank * d, rank * d);
            for b in 0..rank {
                for r in 0..d {
                    for c in 0..d {
                        big.set(b * d + r, b * d + c, x.get(r, c).clone());
                    }
                }
            }
            big
        })
        .collect();
    let gens = (0..rank)
        .map(|b| {
            let mut e = zero_vector(k, rank * d);
            e[b * d] = k.one();
            e
        })
        .collect();
    Ok(FinModule::new(algebra, actions, Provenance::Free)?.with_generators(gens))
}

/// Embed a tuple of algebra elements into `A^s` coordinates.
pub fn tuple_vector(algebra: &ArtinAlgebra, entries: &[Poly]) -> Result<Vector> {
    let mut out = Vec::with_capacity(entries.len() * algebra.degree());
    for e in entries {
        out.extend(algebra.element_vector(e)?);
    }
    Ok(out)
}

/// A quotient module together with the projection from its parent.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub module: FinModule,
    /// Subspace that was divided out.
    pub kernel: Subspace,
}

impl Quotient {
    /// Coordinates of the class of `v`.
    pub fn project(&self, v: &[FieldElem]) -> Vector {
        self.kernel.quotient_coordinates(v)
    }

    pub fn projection_matrix(&self) -> Matrix {
        let n = self.kernel.ambient_dim();
        let k = self.kernel.field();
        let cols: Vec<Vector> = (0..n)
            .map(|c| {
                let mut e = zero_vector(k, n);
                e[c] = k.one();
                self.project(&e)
            })
            .collect();
        Matrix::from_columns(k, self.module.dim(), &cols)
    }
}

/// The cokernel of `A^b -> A^a` given by a polynomial matrix with `rows = a`
/// rows; `columns` lists the `b` columns.
pub fn cokernel_presentation(
    algebra: &Arc<ArtinAlgebra>,
    rows: usize,
    columns: &[Vec<Poly>],
) -> Result<Quotient> {
    let free = free_module(algebra, rows)?;
    let mut span = Subspace::zero(algebra.field(), free.dim());
    for col in columns {
        if col.len() != rows {
            return Err(Error::LengthMismatch(rows, col.len()));
        }
        let v = tuple_vector(algebra, col)?;
        if !span.contains(&v) {
            grow_closure(&free, &mut span, v);
        }
    }
    let mut q = quotient_by_subspace(&free, &span)?;
    q.module.provenance = Provenance::Cokernel;
    Ok(q)
}

/// The smallest action-stable subspace containing `v`.
pub fn submodule_closure(m: &FinModule, v: &Subspace) -> Result<Subspace> {
    m.check_subspace(v)?;
    let mut span = Subspace::zero(m.field(), m.dim());
    for b in v.basis() {
        if !span.contains(b) {
            grow_closure(m, &mut span, b.clone());
        }
    }
    Ok(span)
}

/// `M / S` for an action-stable `S`, with coordinates on the free columns of `S`.
pub fn quotient_by_subspace(m: &FinModule, s: &Subspace) -> Result<Quotient> {
    m.check_subspace(s)?;
    if !m.is_stable(s) {
        return Err(Error::NotSubmodule);
    }
    let k = m.field();
    let free = s.free_columns();
    let reps: Vec<Vector> = free
        .iter()
        .map(|&c| {
            let mut e = zero_vector(k, m.dim());
            e[c] = k.one();
            e
        })
        .collect();
    let actions = m
        .actions
        .iter()
        .map(|x| {
            let cols: Vec<Vector> = reps
                .iter()
                .map(|e| s.quotient_coordinates(&x.mul_vec(e)))
                .collect();
            Matrix::from_columns(k, free.len(), &cols)
        })
        .collect();
    let mut module = FinModule::new(&m.algebra, actions, Provenance::Subquotient)?;
    if free.is_empty() {
        module = FinModule::zero_of(&m.algebra, Provenance::Subquotient);
    }
    if let Some(g) = &m.generators {
        module.generators = Some(g.iter().map(|v| s.quotient_coordinates(v)).collect());
    }
    Ok(Quotient {
        module,
        kernel: s.clone(),
    })
}

/// An action-stable subspace as a module in its own right, in the
/// coordinates of its echelon basis.
pub fn submodule(m: &FinModule, s: &Subspace) -> Result<FinModule> {
    m.check_subspace(s)?;
    if !m.is_stable(s) {
        return Err(Error::NotSubmodule);
    }
    if s.dim() == 0 {
        return Ok(FinModule::zero_of(&m.algebra, Provenance::Subquotient));
    }
    let k = m.field();
    let actions = m
        .actions
        .iter()
        .map(|x| {
            let cols: Vec<Vector> = s
                .basis()
                .iter()
                .map(|b| s.coordinates(&x.mul_vec(b)).expect("stable"))
                .collect();
            Matrix::from_columns(k, s.dim(), &cols)
        })
        .collect();
    FinModule::new(&m.algebra, actions, Provenance::Subquotient)
}

/// `Hom_A(M, N)` with the data needed to evaluate its elements.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub module: FinModule,
    source: FinModule,
    target: FinModule,
    /// A-generators `u_t` of the source.
    generators: Vec<Vector>,
    /// Row `k`: coefficients `(a_t)` in `A^s` with `sum a_t u_t = e_k`.
    section: Matrix,
    /// Hom elements as tuples of generator images in `N^s`.
    solutions: Subspace,
}

impl HomModule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn source(&self) -> &FinModule {
        &self.source
    }

    pub fn target(&self) -> &FinModule {
        &self.target
    }

    pub fn source_generators(&self) -> &[Vector] {
        &self.generators
    }

    /// The generator images of the element with coordinates `phi`.
    pub fn images(&self, phi: &[FieldElem]) -> Vec<Vector> {
        let mut tuple = zero_vector(self.module.field(), self.solutions.ambient_dim());
        for (c, b) in phi.iter().zip(self.solutions.basis()) {
            axpy(&mut tuple, c, b);
        }
        tuple
            .chunks(self.target.dim())
            .map(<[FieldElem]>::to_vec)
            .collect()
    }

    /// Coordinates of the map sending `u_t` to `images[t]`, if it is A-linear.
    pub fn from_images(&self, images: &[Vector]) -> Option<Vector> {
        if images.len() != self.generators.len() {
            return None;
        }
        let tuple: Vector = images.iter().flatten().cloned().collect();
        self.solutions.coordinates(&tuple)
    }

    /// `phi(v)` for `v` in the source.
    pub fn apply(&self, phi: &[FieldElem], v: &[FieldElem]) -> Vector {
        let images = self.images(phi);
        let d = self.source.algebra.degree();
        let coeffs = self.section.transpose().mul_vec(v);
        let mut out = zero_vector(self.module.field(), self.target.dim());
        for (t, n) in images.iter().enumerate() {
            let w = self.target.act(&coeffs[t * d..(t + 1) * d], n);
            axpy(&mut out, &self.module.field().one(), &w);
        }
        out
    }

    /// The element as a `dim N x dim M` matrix.
    pub fn map_matrix(&self, phi: &[FieldElem]) -> Matrix {
        let k = self.module.field();
        let cols: Vec<Vector> = (0..self.source.dim())
            .map(|c| {
                let mut e = zero_vector(k, self.source.dim());
                e[c] = k.one();
                self.apply(phi, &e)
            })
            .collect();
        Matrix::from_columns(k, self.target.dim(), &cols)
    }
}

/// `Hom_A(M, N)`, with the A-module structure acting through `N`.
pub fn hom_module(m: &FinModule, n: &FinModule) -> Result<HomModule> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let algebra = &m.algebra;
    let k = m.field();
    let d = algebra.degree();
    let gens = m.minimal_generators();
    let s = gens.len();

    // surjection A^s -> M, columns indexed by (t, basis monomial)
    let mut cols = Vec::with_capacity(s * d);
    for u in &gens {
        cols.extend(m.orbit(u));
    }
    let surj = Matrix::from_columns(k, m.dim(), &cols);
    let section = surj
        .solve_many(&Matrix::identity(k, m.dim()))
        .expect("generators span")
        .transpose();

    // A-generators of the relation module inside A^s
    let relations = if s == 0 {
        Vec::new()
    } else {
        let free = free_module(algebra, s)?;
        let mut span = Subspace::zero(k, s * d);
        let mut chosen = Vec::new();
        for r in surj.kernel() {
            if !span.contains(&r) {
                grow_closure(&free, &mut span, r.clone());
                chosen.push(r);
            }
        }
        chosen
    };

    let nd = n.dim();
    let mut rows: Vec<Vector> = Vec::with_capacity(relations.len() * nd);
    for r in &relations {
        let blocks: Vec<Matrix> = r.chunks(d).map(|a| n.element_action(a)).collect();
        for i in 0..nd {
            rows.push(
                blocks
                    .iter()
                    .flat_map(|b| b.row(i).iter().cloned())
                    .collect(),
            );
        }
    }
    let solutions = if rows.is_empty() {
        Subspace::full(k, s * nd)
    } else {
        let system = Matrix::from_rows(k, s * nd, rows);
        Subspace::span(k, s * nd, system.kernel())
    };

    let module = if solutions.dim() == 0 {
        FinModule::zero_of(algebra, Provenance::Hom)
    } else {
        let actions = n
            .actions
            .iter()
            .map(|x| {
                let cols: Vec<Vector> = solutions
                    .basis()
                    .iter()
                    .map(|b| {
                        let moved: Vector = b.chunks(nd).flat_map(|blk| x.mul_vec(blk)).collect();
                        solutions.coordinates(&moved).expect("hom is a submodule")
                    })
                    .collect();
                Matrix::from_columns(k, solutions.dim(), &cols)
            })
            .collect();
        FinModule::new(algebra, actions, Provenance::Hom)?
    };
    Ok(HomModule {
        module,
        source: m.clone(),
        target: n.clone(),
        generators: gens,
        section,
        solutions,
    })
}

/// `dim Hom_A(M, N)` from the full commutation system `phi X = Y phi`.
pub fn hom_dim_by_commutation(m: &FinModule, n: &FinModule) -> Result<usize> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    if unknowns == 0 {
        return Ok(0);
    }
    let k = m.field();
    let mut rows = Vec::new();
    for (x, y) in m.actions.iter().zip(&n.actions) {
        for r in 0..dn {
            for c in 0..dm {
                let mut row = zero_vector(k, unknowns);
                for j in 0..dm {
                    // (phi X)[r][c] = sum_j phi[r][j] X[j][c]
                    row[r * dm + j].add_assign_ref(x.get(j, c));
                }
                for j in 0..dn {
                    // (Y phi)[r][c] = sum_j Y[r][j] phi[j][c]
                    row[j * dm + c] = &row[j * dm + c] - y.get(r, j);
                }
                if !is_zero_vector(&row) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(unknowns);
    }
    Ok(unknowns - Matrix::from_rows(k, unknowns, rows).rank())
}

/// An A-linear map between two modules over the same algebra.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: FinModule,
    target: FinModule,
    matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: &FinModule, target: &FinModule, matrix: Matrix) -> Result<ModuleMap> {
        if !same_algebra(&source.algebra, &target.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if matrix.nrows() != target.dim() || matrix.ncols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim(),
                actual: matrix.nrows(),
            });
        }
        for (x, y) in source.actions.iter().zip(&target.actions) {
            if matrix.mul(x) != y.mul(&matrix) {
                return Err(Error::NotModuleMap);
            }
        }
        Ok(ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn source(&self) -> &FinModule {
        &self.source
    }

    pub fn target(&self) -> &FinModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapDims {
    pub rank: usize,
    pub kernel: usize,
    pub cokernel: usize,
}

pub fn induced_map_dim(f: &ModuleMap) -> MapDims {
    let rank = f.matrix.rank();
    MapDims {
        rank,
        kernel: f.source.dim() - rank,
        cokernel: f.target.dim() - rank,
    }
}
