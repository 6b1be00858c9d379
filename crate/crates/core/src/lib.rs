//! Exact computation with standard bigraded algebras over prime fields.
//!
//! The crate builds diagonal subalgebras and generalized Veronese subrings of
//! bigraded quotient rings, symmetric and Rees algebras, truncated minimal
//! free resolutions with Betti tables, regularity and Koszulness reports, and
//! the divisor-poset side of the same story for affine semigroups.

pub mod constructions;
pub mod error;
pub mod exec;
pub mod field;
pub mod graded;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod semigroup;

pub use error::{Error, Result};
pub use field::{PrimeField, DEFAULT_PRIME};
pub use monomial::{Bidegree, Monomial, TermOrder};
pub use poly::Polynomial;
pub use ring::{PolyRing, RingPresentation};
