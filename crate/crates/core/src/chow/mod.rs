//! Grassmannians in Plücker coordinates and the Chow-form toolchain: Chow
//! forms and Chow equations, duality of Grassmannians, Stiefel
//! coordinates, the Cayley trick and dual varieties.

mod dual;
mod form;
mod plucker;

#[cfg(test)]
mod tests;

pub use dual::{dual_variety, dual_variety_with, DualStrategy};
pub use form::{cayley_trick, chow_equations, chow_equations_in, chow_form, veronese, ChowFormResult};
pub use plucker::{colex_subsets, dualize, from_plucker_to_stiefel, stiefel_ring, PluckerElement, PluckerRing};
