//! Multilinear polynomials and the generator families of design ideals.

mod families;
mod generator;
mod multilinear;
mod octagon;

pub use families::{
    custom_generators, derive_generators, g_bj, gy_generators, jacobian_rank, m12_f, m12_orbit_generators,
    m12_orbit_polys, partial_design_generators, projective_generators, steiner_generators,
    symbibd_generators, witt22_generators, witt23_generators, witt24_generators,
};
pub use generator::{trivial_generators, Factor, Family, Generator, GeneratorSet, StructuredPoly, Term};
pub use multilinear::{elementary_symmetric, zonal, MultilinearPoly};
pub use octagon::{
    octagon_cover, octagon_cycle, octagon_generators, octagon_poly, octagon_search, OctagonSpec,
};
