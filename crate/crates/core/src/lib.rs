//! Exact construction and verification of the regular 4-polytope models:
//! golden-field arithmetic, the quaternionic SO(4) picture, finite symmetry
//! groups by closure, and the combinatorial double cover of the complement of
//! the radial edge graph with its symmetry lifts.

pub mod cache;
pub mod cover;
pub mod error;
pub mod exact;
pub mod polytope;
pub mod symmetry;

pub use cache::{group_for, model_for};
pub use error::{CoreError, Result};
