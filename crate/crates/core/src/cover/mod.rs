//! Monodromy, the combinatorial double cover, symmetry lifts, and splitting
//! verification.

pub mod lift;
pub mod loops;
pub mod model;
pub mod splitting;

pub use lift::{facet_permutation, lift_symmetry, Lift};
pub use loops::{edge_loop_decomposition, h1_rank, EdgeLoopDecomposition, MonodromyCharacter};
pub use model::{check_monodromy_invariance, CoverModel};
pub use splitting::{
    evaluate_word, fixed_circle_avoids_gamma, lift_group_order, presentation_for,
    presentation_generators, verify_splitting_certificate, verify_splitting_model, Certificate,
    ExtensionLedger, GeneratorLiftReport, Presentation, RelationOutcome, SplitMode, SplitVerdict,
};
