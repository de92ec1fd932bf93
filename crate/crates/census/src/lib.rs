//! Exact combinatorial machinery for building censuses of minimal ideal
//! triangulations of cusped finite-volume hyperbolic 3-manifolds: candidate
//! enumeration, certification of non-minimality and non-hyperbolicity via
//! normal surfaces and retriangulation, manifold class grouping, and exact
//! algebraic invariants.  No floating point anywhere.

pub mod algebra;
pub mod enumerate;
pub mod graph;
pub mod moves;
pub mod normal;
pub mod perm;
pub mod pipeline;
pub mod recognize;
pub mod samples;
pub mod tri;

pub use perm::Perm4;
pub use tri::{IsoSignature, Triangulation};
