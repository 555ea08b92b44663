//! Hyperbolicity recognition for compact orientable 3-manifolds whose
//! boundary is a nonempty union of tori.
//!
//! A manifold is given as a triangulation (ideal or finite). The decision
//! procedure searches the triangulation's fundamental and vertex normal
//! surfaces for faults: essential surfaces of nonnegative Euler
//! characteristic. See [`decide::is_hyperbolic`].

mod dsu;
pub mod cut;
pub mod decide;
pub mod enumerate;
pub mod error;
pub mod faults;
pub mod fixtures;
pub mod format;
pub mod group;
pub mod homology;
pub mod moves;
pub mod normal;
pub mod perm;
pub mod recognition;
pub mod simplify;
pub mod snf;
pub mod surface;
pub mod triangulation;

pub use error::{Error, Result};
pub use perm::Perm4;
pub use triangulation::Triangulation;
