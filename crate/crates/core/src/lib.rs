//! Matroids with building sets: lattices of flats, nested set complexes,
//! Chow polynomials by several independent methods, γ-vectors, descents
//! and the Γ-complex.

pub mod building;
pub mod complete;
pub mod complex;
pub mod corpus;
pub mod deletion;
pub mod descent;
pub mod diagnostics;
pub mod error;
pub mod families;
pub mod flat;
pub mod fy;
pub mod lattice;
pub mod modular;
pub mod nested;
pub mod ops;
pub mod poly;
pub mod registry;
pub mod stellar;
pub mod toric;
pub mod trees;

pub use building::{g_max, g_min, validate_building_set, BuildingSet, BuiltMatroid, GroundSet};
pub use error::{Error, Result};
pub use flat::Flat;
pub use lattice::{GeomLattice, Matroid};
pub use modular::ModularCut;
pub use poly::{gamma_expansion, GammaVector, Polynomial};
