//! Exact computations for graded preprojective quotients attached to Coxeter
//! words: the algebra, its modules, the combinatorial quiver of a word and
//! certificates for silting and tilting objects.

pub mod coxeter;
pub mod error;
pub mod linalg;
pub mod modules;
pub mod preprojective;
pub mod qw;
pub mod tilting;

pub use error::Error;
