//! Independent dense-elimination oracle for tangent degrees of ideals that
//! contain a power of the maximal ideal. No Gröbner bases: everything lives
//! in the truncated space of polynomials of degree < k.
//!
//! Derivations D of A = R/I into A are determined by a_i = D(x_i), subject to
//! D(f_j) = sum_i d_i(f_j) a_i in I for each generator. Writing W for the
//! image of I among truncated polynomials, the solutions (a, c) of
//! sum_i d_i(f_j) a_i = sum_l c_jl w_l (mod m^k) project onto the tuples a,
//! and the tangent degree is that dimension minus n * dim W.

#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

type Dense = HashMap<Vec<u32>, BigRational>;

fn monomials_below(n: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; n]];
    let mut frontier = out.clone();
    for _ in 1..k {
        let mut next = Vec::new();
        for m in &frontier {
            let last = m.iter().rposition(|&e| e > 0).unwrap_or(0);
            for i in last..n {
                let mut e = m.clone();
                e[i] += 1;
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn mul(a: &Dense, b: &Dense, k: u32) -> Dense {
    let mut out = Dense::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            if m.iter().sum::<u32>() < k {
                *out.entry(m).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
    }
    out
}

fn deriv(a: &Dense, i: usize) -> Dense {
    let mut out = Dense::new();
    for (m, c) in a {
        if m[i] > 0 {
            let mut e = m.clone();
            e[i] -= 1;
            *out.entry(e).or_insert_with(BigRational::zero) +=
                c * BigRational::from_integer(BigInt::from(m[i]));
        }
    }
    out
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][c];
        let pivot: Vec<BigRational> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// Tangent degree of `(generators) + m^k` in `n` variables; generators are
/// given as maps from exponent vectors to coefficients.
pub fn tangent_degree(n: usize, k: u32, generators: &[Dense]) -> usize {
    let basis = monomials_below(n, k);
    let index: HashMap<Vec<u32>, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let dense = |p: &Dense| {
        let mut v = vec![BigRational::zero(); basis.len()];
        for (m, c) in p {
            if let Some(&i) = index.get(m) {
                v[i] += c;
            }
        }
        v
    };
    // W: truncated multiples of the generators
    let mut w_rows = Vec::new();
    for f in generators {
        for m in &basis {
            let mono: Dense = [(m.clone(), BigRational::one())].into_iter().collect();
            w_rows.push(dense(&mul(f, &mono, k)));
        }
    }
    // keep an independent subset of W
    let mut w_basis: Vec<Vec<BigRational>> = Vec::new();
    for v in w_rows {
        let mut trial = w_basis.clone();
        trial.push(v.clone());
        if rank(trial) > w_basis.len() {
            w_basis.push(v);
        }
    }
    let nb = basis.len();
    let nw = w_basis.len();
    let g = generators.len();
    // unknowns: a_i (n * nb), then c_jl (g * nw)
    let unknowns = n * nb + g * nw;
    let mut rows = Vec::new();
    for (j, f) in generators.iter().enumerate() {
        let grads: Vec<Dense> = (0..n).map(|i| deriv(f, i)).collect();
        // column contributions of each unknown a_i[m] = image of d_i f * m
        let mut block = vec![vec![BigRational::zero(); unknowns]; nb];
        for (i, gi) in grads.iter().enumerate() {
            for (mi, m) in basis.iter().enumerate() {
                let mono: Dense = [(m.clone(), BigRational::one())].into_iter().collect();
                let col = dense(&mul(gi, &mono, k));
                for (r, x) in col.into_iter().enumerate() {
                    block[r][i * nb + mi] = x;
                }
            }
        }
        for (l, w) in w_basis.iter().enumerate() {
            for (r, x) in w.iter().enumerate() {
                block[r][n * nb + j * nw + l] = -x.clone();
            }
        }
        rows.extend(block);
    }
    let solutions = unknowns - rank(rows);
    // the c-part is determined by a, since W's basis is independent
    solutions - n * nw
}

/// A polynomial from `(coefficient, exponents)` pairs.
pub fn poly(terms: &[(i64, &[u32])]) -> Dense {
    terms
        .iter()
        .map(|(c, e)| (e.to_vec(), BigRational::from_integer(BigInt::from(*c))))
        .collect()
}

/// All monomials of degree exactly `d` in `n` variables, as generators.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Dense> {
    monomials_below(n, d + 1)
        .into_iter()
        .filter(|m| m.iter().sum::<u32>() == d)
        .map(|m| [(m, BigRational::one())].into_iter().collect())
        .collect()
}
