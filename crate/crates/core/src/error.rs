use thiserror::Error;

/// Errors raised by the exact-arithmetic, polytope, symmetry and cover layers.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("division by zero in Q(sqrt5)")]
    DivisionByZero,

    #[error("quaternion is not a unit: |q|^2 = {norm}")]
    NonUnitQuaternion { norm: String },

    #[error("matrix is not a rotation: {reason}")]
    NotARotation { reason: String },

    #[error("unexpected fixed-space dimension {dim} for a non-identity rotation")]
    UnexpectedKernelDimension { dim: usize },

    #[error("minimal pairwise distance^2 {found} does not match prescribed edge length^2 {expected}")]
    EdgeLengthMismatch { found: String, expected: String },

    #[error("vertex {vertex} has valency {valency}, expected uniform valency")]
    NonUniformValency { vertex: usize, valency: usize },

    #[error("facet enumeration is not supported for {kind}")]
    UnsupportedKind { kind: String },

    #[error("facet census mismatch: found {found}, expected {expected}")]
    FacetCountMismatch { found: usize, expected: usize },

    #[error("facets around edge ({u},{v}) do not form a single {r}-cycle")]
    BrokenEdgeFigure { u: usize, v: usize, r: usize },

    #[error("edge ({u},{v}) has antipodal endpoints; radial projection is degenerate")]
    AntipodalEdge { u: usize, v: usize },

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("vertex {vertex} has odd valency {valency}; no edge-loop decomposition exists")]
    OddValency { vertex: usize, valency: usize },

    #[error("generator {index} does not preserve the vertex set")]
    GeneratorNotPreserving { index: usize },

    #[error("group closure exceeded cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("permutation is not realized by a rotation: {reason}")]
    NonIsometricPermutation { reason: String },

    #[error("edge stabilizer is not cyclic of order {expected}: found order {found}")]
    BadEdgeStabilizer { expected: usize, found: usize },

    #[error("edges sharing the plane of edge ({u},{v}) form neither a closed polygon nor a matching")]
    BrokenPlanePolygon { u: usize, v: usize },

    #[error("cover obstruction: edge ({u},{v}) has {r} facets around it, holonomy +1")]
    CoverObstruction { u: usize, v: usize, r: usize },

    #[error("map does not permute the edges of the radial graph")]
    NotEdgePermuting,

    #[error("lift compatibility system is inconsistent over the dual graph")]
    InconsistentLift,

    #[error("fixed-point certificate requires an involution distinct from +/-identity")]
    NotAProperInvolution,

    #[error("presentation relation {word} fails downstairs (exact matrix product is not the identity)")]
    RelationFailsDownstairs { word: String },

    #[error("generator search failed: {reason}")]
    GeneratorSearchFailed { reason: String },
}

pub type Result<T> = std::result::Result<T, CoreError>;
