//! Coefficient fields, monomials and orders, sparse polynomials, and the
//! expression parser.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::{FieldElem, FieldSpec};
pub use monomial::{monomials_of_degree, order_compare, Monomial, MonomialOrder};
pub use parse::parse_poly;
pub(crate) use poly::same_ring;
pub use poly::{poly_arith, Poly, PolyOp, PolyRing};
