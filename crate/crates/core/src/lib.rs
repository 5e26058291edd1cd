//! Vanishing ideals of combinatorial designs.
//!
//! A k-uniform hypergraph on `v` points is viewed as the finite set of 0/1
//! incidence vectors of its blocks. The crate builds designs (geometries,
//! Steiner triple systems, the Witt family), explicit generator families for
//! the ideal of polynomials vanishing on those vectors, and certifies the two
//! degree parameters: `gamma1`, the least degree of a vanishing polynomial
//! outside the trivial ideal, and `gamma2`, the least maximal degree of a
//! generating set.

pub mod budget;
pub mod combin;
pub mod designs;
pub mod error;
pub mod exactla;
pub mod gamma;
pub mod pointset;
pub mod poly;
pub mod sts;
pub mod witt;

pub use error::{Error, Result};
pub use pointset::PointSet;
