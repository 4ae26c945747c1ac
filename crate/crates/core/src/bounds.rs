//! Exact evaluation of the fiber inequalities, the Boardman test schemes, and
//! the least source dimension compatible with a given fiber scheme.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::invariants::tangent_degree;
use crate::ring::{Poly, PolyRing};

/// Source dimension `n`, codimension increment `c`, family dimension `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiberScenario {
    pub n: u64,
    pub c: u64,
    pub m: u64,
}

impl FiberScenario {
    pub fn new(n: u64, c: u64, m: u64) -> Result<FiberScenario> {
        if n == 0 {
            return Err(Error::Precondition("n must be at least 1".into()));
        }
        if c == 0 {
            return Err(Error::Precondition("c must be at least 1".into()));
        }
        Ok(FiberScenario { n, c, m })
    }

    fn rhs(&self) -> BigRational {
        ratio(self.n, self.c) + BigRational::one()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    Subscheme,
    ThomBoardman,
    Family,
    Fiber,
}

impl BoundKind {
    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::Subscheme => "subscheme",
            BoundKind::ThomBoardman => "tb",
            BoundKind::Family => "family",
            BoundKind::Fiber => "fiber",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<BoundKind> {
        match s {
            "subscheme" => Ok(BoundKind::Subscheme),
            "tb" => Ok(BoundKind::ThomBoardman),
            "family" => Ok(BoundKind::Family),
            "fiber" => Ok(BoundKind::Fiber),
            other => Err(Error::Precondition(format!("unknown bound kind `{other}`"))),
        }
    }
}

/// Outcome of one inequality `lhs <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub satisfied: bool,
    /// `rhs - lhs`.
    pub margin: BigRational,
    pub inputs: BTreeMap<String, String>,
}

impl BoundReport {
    fn new(
        kind: BoundKind,
        lhs: BigRational,
        rhs: BigRational,
        inputs: BTreeMap<String, String>,
    ) -> BoundReport {
        let margin = &rhs - &lhs;
        BoundReport {
            kind,
            satisfied: !margin.is_negative(),
            lhs,
            rhs,
            margin,
            inputs,
        }
    }
}

fn ratio(a: u64, b: u64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn int(a: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(a))
}

fn echo(s: &FiberScenario, extra: &[(&str, String)]) -> BTreeMap<String, String> {
    let mut m: BTreeMap<String, String> = [("n", s.n), ("c", s.c), ("m", s.m)]
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    for (k, v) in extra {
        m.insert(k.to_string(), v.clone());
    }
    m
}

/// `deg Y + deg T_Y / c <= n/c + 1` for a scheme `Y` in a fiber.
pub fn check_subscheme_bound(deg_y: u64, deg_t: u64, s: &FiberScenario) -> Result<BoundReport> {
    if deg_y == 0 {
        return Err(Error::Precondition("deg Y must be at least 1".into()));
    }
    let lhs = int(deg_y) + ratio(deg_t, s.c);
    let inputs = echo(
        s,
        &[("deg_y", deg_y.to_string()), ("deg_t", deg_t.to_string())],
    );
    Ok(BoundReport::new(BoundKind::Subscheme, lhs, s.rhs(), inputs))
}

/// `sum (d_i^2/c + d_i + 1) <= n/c + 1` over the points of a fiber with
/// coranks `d_i`.
pub fn check_thom_boardman(coranks: &[u64], s: &FiberScenario) -> Result<BoundReport> {
    let lhs = coranks.iter().fold(BigRational::zero(), |acc, &d| {
        acc + ratio(d * d, s.c) + int(d) + BigRational::one()
    });
    let list = coranks
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(BoundReport::new(
        BoundKind::ThomBoardman,
        lhs,
        s.rhs(),
        echo(s, &[("coranks", list)]),
    ))
}

/// `(1 - m/c) deg U + min deg T / c <= n/c + 1` for an `m`-dimensional flat
/// family of fiber schemes.
pub fn check_family_bound(deg_u: u64, min_deg_t: u64, s: &FiberScenario) -> Result<BoundReport> {
    let lhs = (BigRational::one() - ratio(s.m, s.c)) * int(deg_u) + ratio(min_deg_t, s.c);
    let inputs = echo(
        s,
        &[
            ("deg_u", deg_u.to_string()),
            ("min_deg_t", min_deg_t.to_string()),
        ],
    );
    Ok(BoundReport::new(BoundKind::Family, lhs, s.rhs(), inputs))
}

/// `deg Z <= deg O_Z V / (n + c) + 1`, where `deg_closure` is the degree of the
/// submodule of the rank `n + c` free module generated by the tangent image.
pub fn check_fiber_bound(deg_z: u64, deg_closure: u64, s: &FiberScenario) -> Result<BoundReport> {
    let rank = s.n + s.c;
    if deg_closure > rank * deg_z {
        return Err(Error::Precondition(format!(
            "closure degree {deg_closure} exceeds the free module degree {}",
            rank * deg_z
        )));
    }
    let rhs = ratio(deg_closure, rank) + BigRational::one();
    let inputs = echo(
        s,
        &[
            ("deg_z", deg_z.to_string()),
            ("deg_closure", deg_closure.to_string()),
        ],
    );
    Ok(BoundReport::new(BoundKind::Fiber, int(deg_z), rhs, inputs))
}

/// Least `n` with `(c - m) deg Y + deg T <= n + c`.
pub fn min_n_from_degrees(deg_y: u64, deg_t: u64, c: u64, m: u64) -> i64 {
    (c as i64 - m as i64) * deg_y as i64 + deg_t as i64 - c as i64
}

/// The least source dimension for which a fiber can contain `V(ideal)`
/// (`m = 0`) or a member of an `m`-dimensional family through it.
///
/// For families the tangent degree of the given member stands in for the
/// minimum over the family. Tangent degree is upper semicontinuous, so the
/// true minimum can only be smaller: probe several members and take the
/// least value to tighten the result.
pub fn min_n_for_subscheme(ideal: &Ideal, c: u64, m: u64) -> Result<i64> {
    if c == 0 {
        return Err(Error::Precondition("c must be at least 1".into()));
    }
    let deg_y = ideal.standard_monomials()?.len() as u64;
    let deg_t = tangent_degree(ideal)? as u64;
    Ok(min_n_from_degrees(deg_y, deg_t, c, m))
}

/// `(x_1, ..., x_d)^2`, the scheme carried by a corank-`d` point.
pub fn corank_scheme(d: usize, ring: &Arc<PolyRing>) -> Result<Ideal> {
    if d == 0 {
        return Err(Error::Precondition("corank must be at least 1".into()));
    }
    if ring.nvars() < d {
        return Err(Error::TooFewVariables {
            needed: d,
            available: ring.nvars(),
        });
    }
    nested_power(ring, d, 2)
}

fn nested_power(ring: &Arc<PolyRing>, k: usize, t: u32) -> Result<Ideal> {
    let vars: Vec<Poly> = (0..k).map(|i| Poly::var(ring, i)).collect();
    Ideal::new(ring, vars)?.power(t)
}

/// `(x_1)^{t_1} + (x_1, x_2)^{t_2} + ... + (x_1, ..., x_k)^{t_k}` for a
/// nonincreasing Boardman symbol `t`.
pub fn boardman_scheme(t: &[u32], ring: &Arc<PolyRing>) -> Result<Ideal> {
    if t.is_empty() {
        return Err(Error::BoardmanSymbol("symbol is empty".into()));
    }
    if t.contains(&0) {
        return Err(Error::BoardmanSymbol("entries must be positive".into()));
    }
    if t.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::BoardmanSymbol(format!("{t:?} is not nonincreasing")));
    }
    if ring.nvars() < t.len() {
        return Err(Error::TooFewVariables {
            needed: t.len(),
            available: ring.nvars(),
        });
    }
    let mut acc = nested_power(ring, 1, t[0])?;
    for (i, &ti) in t.iter().enumerate().skip(1) {
        acc = acc.sum(&nested_power(ring, i + 1, ti)?)?;
    }
    Ok(acc)
}
