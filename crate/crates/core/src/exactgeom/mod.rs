//! Exact rational linear algebra and single-polyhedron geometry.

mod dd;
mod faces;
mod linalg;
pub mod lp;
mod polyhedron;
mod project;
mod vector;

pub use linalg::{rank, rref};
pub use polyhedron::{Constraint, HRep, Polyhedron, Side, VRep};
pub use vector::{int, parse_rational, rat, RatMatrix, RatVec, Rational};

pub(crate) use vector::scale_to_integers;
