//! Exact generalized differentiation for set-valued mappings with
//! piecewise-polyhedral graphs.
//!
//! Everything here works over arbitrary-precision rationals. Sets are finite
//! unions of closed convex polyhedra, mappings are represented by their
//! graphs, and normal cones are computed by finite stratification instead of
//! sequence limits, so every verdict is exact.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! Layout:
//! - [`exactgeom`]: rationals, double description, projection, faces, polars.
//! - [`polyset`]: finite unions of polyhedra and arrangement refinement.
//! - [`setmap`]: mappings as graphs, sums, compositions, epigraphical maps.
//! - [`varcone`]: tangent, regular and limiting normal cones.
//! - [`subcalc`]: coderivatives, ordered subdifferentials, well-posedness.
//! - [`verifier`]: executable sum/chain rule checks with structured reports.
//! - [`oracle`]: brute-force sampling references for low dimensions.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod exactgeom;
pub mod oracle;
pub mod polyset;
pub mod setmap;
pub mod subcalc;
pub mod varcone;
pub mod verifier;

pub use error::{Error, Result};
pub use exactgeom::{Constraint, HRep, Polyhedron, RatMatrix, RatVec, Rational, VRep};
pub use polyset::{ConeUnion, PolySet};
pub use setmap::{OrderCone, PolyMap};
