//! Finite-dimensional graded modules over algebras given by their
//! indecomposable projectives.

pub mod hom;
pub mod projective;
pub mod rep;
pub mod resolution;

pub use hom::{apply_hom, compose_homs, ext1_by_restriction, hom, hom_morphism, identity_coords, shift_window, stable_hom, ungraded_hom, HomSpace, Presentation, StableHom};
pub use projective::{Algebra, Cyclic, PathElement};
pub use rep::{ActionArrow, ActionQuiver, Module, Morphism, Slot, SlotSpaces};
pub use resolution::{
    ext_restriction, ext_stable, global_dimension, projective_dimension, syzygy, syzygy_chain, GlobalDimension,
};
