//! The six regular 4-polytopes with exact coordinates, edge/facet detection,
//! and the radial graph in S^3.

pub mod build;
pub mod facets;
pub mod gamma;
pub mod kind;

pub use build::{detect_edges, Polytope};
pub use facets::{enumerate_facets, euler_check, facet_adjacency, validate_facet_geometry, FacetComplex};
pub use gamma::{radial_graph, GammaGraph};
pub use kind::PolytopeKind;
