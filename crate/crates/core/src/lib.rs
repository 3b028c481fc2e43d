//! Exact elimination theory: resultants by the Poisson recursion, the
//! Macaulay quotient formula and multivariate interpolation; discriminants;
//! and the Chow-form toolchain (Plücker and Stiefel coordinates, Chow
//! equations, the Cayley trick, dual varieties).
//!
//! All arithmetic is exact over the integers, the rationals, prime fields or
//! polynomial rings over those.

pub mod budget;
pub mod chow;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod resultant;
pub mod ring;
pub mod syntax;

pub use error::{Error, Result};
pub use groebner::{Ideal, RingMap};
pub use linalg::Matrix;
pub use poly::{Homogeneity, Monomial, MonomialOrder, Poly, PolyRing};
pub use resultant::{discriminant, resultant, Algorithm, HomSystem, ResultantOptions, ResultantOutcome};
pub use ring::{CoeffDomain, Field, IntegerRing, PolyDomain, PrimeField, RationalField, Ring};
