//! Dense exact linear algebra: matrices, reduced row echelon forms, kernels,
//! and subspaces kept in canonical echelon form.
//!
//! Pivoting is deterministic: the earliest nonzero entry of each reduced
//! vector becomes its pivot. Because every subspace is stored in reduced row
//! echelon form, two subspaces are equal iff their stored bases are equal.

use std::fmt;

use crate::ring::{FieldElem, FieldSpec};

pub type Vector = Vec<FieldElem>;

pub fn zero_vector(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn is_zero_vector(v: &[FieldElem]) -> bool {
    v.iter().all(FieldElem::is_zero)
}

/// `acc += c * v`.
pub fn axpy(acc: &mut [FieldElem], c: &FieldElem, v: &[FieldElem]) {
    if c.is_zero() {
        return;
    }
    let neg = -c;
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            a.sub_mul_assign(&neg, x);
        }
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vector>) -> Matrix {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix {
            field,
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, e) in c.iter().enumerate() {
                m.set(i, j, e.clone());
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[FieldElem]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Vector {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        let mut out = zero_vector(self.field, self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let neg = -x;
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    o.sub_mul_assign(&neg, a);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                axpy(orow, a, other.row(k));
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let rows = (0..self.rows)
            .map(|i| self.row(i).iter().chain(other.row(i)).cloned().collect())
            .collect();
        Matrix::from_rows(self.field, self.cols + other.cols, rows)
    }

    /// The row space in canonical echelon form.
    pub fn row_space(&self) -> Subspace {
        let mut s = Subspace::zero(self.field, self.cols);
        for r in self.rows() {
            s.insert(r.to_vec());
        }
        s
    }

    /// The column space (image) in canonical echelon form.
    pub fn column_space(&self) -> Subspace {
        self.transpose().row_space()
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.row_space().dim()
        } else {
            self.column_space().dim()
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let s = self.row_space();
        let pivots = s.pivots().to_vec();
        let mut rows = s.basis().to_vec();
        while rows.len() < self.rows {
            rows.push(zero_vector(self.field, self.cols));
        }
        (Matrix::from_rows(self.field, self.cols, rows), pivots)
    }

    /// Basis of the right kernel `{v : self * v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vector> {
        self.row_space().orthogonal_kernel()
    }

    /// Some solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[FieldElem]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let bcol = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        self.solve_many(&bcol).map(|x| x.column(0))
    }

    /// Some `X` with `self * X = b`, solving all columns of `b` at once.
    pub fn solve_many(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.rows, self.rows);
        let s = self.hstack(b).row_space();
        if s.pivots().iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (row, &p) in s.basis().iter().zip(s.pivots()) {
            for j in 0..b.cols {
                x.set(p, j, row[self.cols + j].clone());
            }
        }
        Some(x)
    }

    /// Evaluate a monomial in a list of commuting matrices.
    pub fn monomial_in(mats: &[Matrix], exponents: &[u32], dim: usize, field: FieldSpec) -> Matrix {
        let mut acc = Matrix::identity(field, dim);
        for (m, &e) in mats.iter().zip(exponents) {
            for _ in 0..e {
                acc = m.mul(&acc);
            }
        }
        acc
    }
}

/// A linear subspace of `k^n` stored as a reduced row echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in k^{}, pivots {:?})",
            self.dim(),
            self.ambient,
            self.pivots
        )
    }
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        let id = Matrix::identity(field, ambient);
        id.row_space()
    }

    pub fn span(
        field: FieldSpec,
        ambient: usize,
        vectors: impl IntoIterator<Item = Vector>,
    ) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots, in increasing order. Their entries in
    /// [`Subspace::reduce`] give canonical quotient coordinates.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    /// Canonical representative of `v` modulo the subspace: zero at every pivot.
    pub fn reduce(&self, v: &[FieldElem]) -> Vector {
        assert_eq!(
            v.len(),
            self.ambient,
            "vector has wrong length for subspace"
        );
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for j in p..self.ambient {
                if !row[j].is_zero() {
                    v[j].sub_mul_assign(&c, &row[j]);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Add `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("pivot is nonzero");
        for e in r.iter_mut().skip(p) {
            if !e.is_zero() {
                *e = &*e * &inv;
            }
        }
        // clear the new pivot column from the existing rows
        for row in self.basis.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for j in p..self.ambient {
                if !r[j].is_zero() {
                    row[j].sub_mul_assign(&c, &r[j]);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[FieldElem]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates of the class of `v` in the quotient `k^n / self`, indexed
    /// by [`Subspace::free_columns`].
    pub fn quotient_coordinates(&self, v: &[FieldElem]) -> Vector {
        let r = self.reduce(v);
        self.free_columns()
            .into_iter()
            .map(|j| r[j].clone())
            .collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone());
        }
        s
    }

    /// Kernel of the linear map whose rows span this subspace.
    pub fn orthogonal_kernel(&self) -> Vec<Vector> {
        let free = self.free_columns();
        free.iter()
            .map(|&f| {
                let mut v = zero_vector(self.field, self.ambient);
                v[f] = self.field.one();
                for (row, &p) in self.basis.iter().zip(&self.pivots) {
                    v[p] = -&row[f];
                }
                v
            })
            .collect()
    }

    /// The image of this subspace under `m`.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        Subspace::span(
            self.field,
            m.nrows(),
            self.basis.iter().map(|v| m.mul_vec(v)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let k = FieldSpec::Rationals;
        let cols = rows[0].len();
        Matrix::from_rows(
            k,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| k.from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn kernel_and_rank() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(is_zero_vector(&m.mul_vec(&ker[0])));
    }

    #[test]
    fn rref_is_canonical() {
        let a = q(&[&[2, 4, 0], &[0, 1, 1]]);
        let b = q(&[&[0, 3, 3], &[1, 3, 1]]);
        assert_eq!(a.row_space(), b.row_space());
        let (r, piv) = a.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r, q(&[&[1, 0, -2], &[0, 1, 1]]));
    }

    #[test]
    fn solve_and_inconsistency() {
        let k = FieldSpec::Rationals;
        let m = q(&[&[1, 1], &[1, -1]]);
        let x = m.solve(&[k.from_i64(3), k.from_i64(1)]).unwrap();
        assert_eq!(x, vec![k.from_i64(2), k.from_i64(1)]);
        let singular = q(&[&[1, 1], &[2, 2]]);
        assert!(singular.solve(&[k.from_i64(1), k.from_i64(3)]).is_none());
    }

    #[test]
    fn subspace_quotient_coordinates() {
        let k = FieldSpec::Rationals;
        let s = Subspace::span(k, 3, vec![vec![k.one(), k.one(), k.zero()]]);
        assert_eq!(s.free_columns(), vec![1, 2]);
        let v = vec![k.from_i64(2), k.from_i64(5), k.from_i64(7)];
        assert_eq!(
            s.quotient_coordinates(&v),
            vec![k.from_i64(3), k.from_i64(7)]
        );
        assert_eq!(
            s.coordinates(&[k.from_i64(4), k.from_i64(4), k.zero()]),
            Some(vec![k.from_i64(4)])
        );
    }

    #[test]
    fn nilpotent_jordan_block() {
        let m = q(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.mul(&m).mul(&m), Matrix::zeros(FieldSpec::Rationals, 3, 3));
    }
}
