//! Finite rotation groups of the polytopes: exact SO(4) elements, closures,
//! stabilizers, fixed planes, and the edge-fixing censuses.

pub mod analysis;
pub mod group;
pub mod rotor;

pub use analysis::{
    census_edge_fixing, edge_orbit_size, edge_stabilizer, facet_cycles, fixed_plane, in_plane,
    plane_edge_partition, rotation_trace, setwise_edge_stabilizer_order, transitivity_report,
    vertex_cycles, EdgeStabilizer, FixedSpace, PlaneClass, PlanePartition, TransitivityReport,
};
pub use group::{
    cell24_generators, cell8_generators, pair_generators, perm_cycles, polytope_group,
    realize_from_vertex_permutation, SymmetryGroup, VertexPerm, DEFAULT_CLOSURE_CAP,
};
pub use rotor::Rotor;
