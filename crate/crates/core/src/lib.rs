//! Exact invariants of zero-dimensional schemes and the fiber bounds for
//! generic linear projections built on them.
//!
//! The stack is layered bottom-up: [`ring`] (fields, polynomials, parser),
//! [`groebner`] (reduced Gröbner bases and standard monomials), [`artin`]
//! (finite quotient algebras as multiplication matrices), [`finmod`]
//! (finite modules as commuting matrices), [`invariants`] (Kähler
//! differentials, tangent, conormal and normal modules, `q`, deformations
//! fixing Ω) and [`bounds`] (exact evaluation of the inequalities).

pub mod artin;
pub mod bounds;
pub mod error;
pub mod finmod;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod ring;

pub use error::{Error, Result};
