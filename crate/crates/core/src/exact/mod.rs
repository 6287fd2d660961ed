//! Exact arithmetic: the field Q(sqrt5), quaternions over it, and 4x4
//! matrices with decidable equality and sign. All downstream equality tests
//! in this crate go through these types; floating point never decides.

pub mod matrix;
pub mod quaternion;
pub mod scalar;

pub use matrix::{kernel_basis, matrix_from_pair, rank, rref, solve_columns, ExactMatrix4, ExactVec4};
pub use quaternion::{ad_action, Quaternion};
pub use scalar::ExactScalar;
