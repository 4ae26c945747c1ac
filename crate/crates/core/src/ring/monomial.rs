use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Exponent vector of a monomial; its length is the number of ring variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The variable `x_i` among `nvars` variables.
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this monomial is `x_i^e` with `e > 0`, returns `(i, e)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Lower the exponent of `x_i` by one, if positive.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Monomial(e))
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// Render with the given variable names, e.g. `x^2*y`; `1` for the unit.
    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| {
                if *e == 1 {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Monomial orders. Variables are ordered `x_1 > x_2 > ... > x_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    /// Graded lexicographic.
    Grlex,
    Lex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 3] = [
        MonomialOrder::Grevlex,
        MonomialOrder::Grlex,
        MonomialOrder::Lex,
    ];

    /// Compare monomials of equal length. Callers guarantee equal lengths;
    /// see [`order_compare`] for the checked variant.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::Grlex => a.degree().cmp(&b.degree()).then_with(|| ea.cmp(eb)),
            MonomialOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in ea.iter().zip(eb).rev() {
                    if x != y {
                        // smaller exponent in the last differing variable is larger
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Grlex => "grlex",
            MonomialOrder::Lex => "lex",
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "grlex" => Ok(MonomialOrder::Grlex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(Error::InvalidRing(format!(
                "unknown monomial order `{other}`"
            ))),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checked comparison of two monomials under `order`.
pub fn order_compare(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::LengthMismatch(a.nvars(), b.nvars()));
    }
    Ok(order.cmp(a, b))
}

/// All monomials in `nvars` variables of total degree exactly `d`.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Ordering::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn textbook_grevlex_table() {
        // x > y > z; degree-2 monomials in descending grevlex order
        let expected = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in expected.windows(2) {
            assert_eq!(MonomialOrder::Grevlex.cmp(&w[0], &w[1]), Greater, "{w:?}");
        }
        // grlex on the same set: x^2 > xy > xz > y^2 > yz > z^2
        let grlex = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[1, 0, 1]),
            m(&[0, 2, 0]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in grlex.windows(2) {
            assert_eq!(MonomialOrder::Grlex.cmp(&w[0], &w[1]), Greater, "{w:?}");
        }
        // x*z^2 vs y^3 separates grevlex from grlex
        assert_eq!(
            MonomialOrder::Grevlex.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])),
            Less
        );
        assert_eq!(
            MonomialOrder::Grlex.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])),
            Greater
        );
    }

    #[test]
    fn two_variable_examples() {
        assert_eq!(
            order_compare(&m(&[2, 0]), &m(&[1, 1]), MonomialOrder::Grevlex).unwrap(),
            Greater
        );
        assert_eq!(
            order_compare(&m(&[0, 3]), &m(&[1, 0]), MonomialOrder::Lex).unwrap(),
            Less
        );
        for o in MonomialOrder::ALL {
            assert_eq!(order_compare(&m(&[3, 1]), &m(&[3, 1]), o).unwrap(), Equal);
        }
        assert_eq!(
            order_compare(&m(&[1]), &m(&[1, 0]), MonomialOrder::Lex),
            Err(Error::LengthMismatch(1, 2))
        );
    }

    #[test]
    fn order_axioms_exhaustive_degree_4_three_vars() {
        let all: Vec<Monomial> = (0..=4).flat_map(|d| monomials_of_degree(3, d)).collect();
        let one = Monomial::one(3);
        for o in MonomialOrder::ALL {
            for a in &all {
                assert_ne!(o.cmp(a, &one), Less, "1 must be minimal");
                for b in &all {
                    let ab = o.cmp(a, b);
                    assert_eq!(ab, o.cmp(b, a).reverse());
                    assert_eq!(ab == Equal, a == b);
                    for c in &all {
                        if ab == Less && o.cmp(b, c) == Less {
                            assert_eq!(o.cmp(a, c), Less);
                        }
                        if ab == Less {
                            assert_eq!(o.cmp(&a.mul(c), &b.mul(c)), Less);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_helpers() {
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(m(&[0, 3, 0]).as_pure_power(), Some((1, 3)));
        assert_eq!(m(&[1, 1]).as_pure_power(), None);
        assert_eq!(m(&[1, 2]).quotient_of(&m(&[3, 2])), Some(m(&[2, 0])));
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(m(&[2, 1]).render(&names), "x^2*y");
        assert_eq!(m(&[0, 0]).render(&names), "1");
    }
}
