//! Numerical side of the polytope singularity models: equivariant selection
//! rules and indicial exponents (exact), radial ODE profiles with Frobenius
//! exponent recovery, the Almgren frequency function on sampled fields, and
//! a finite-element eigensolver for the branched vertex-link problem on S^2.

pub mod error;
pub mod frequency;
pub mod link;
pub mod local;
pub mod mesh;
pub mod ode;
pub mod quad;
pub mod sparse;

pub use error::{Result, SpectralError};
