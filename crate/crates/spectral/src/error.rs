use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("stabilizer order m = {m} must be an odd integer >= 3; the Z/m action does not lift for even m")]
    EvenStabilizerOrder { m: i64 },

    #[error("eigenvalue parameter must be nonnegative, got {lambda}")]
    NegativeLambda { lambda: f64 },

    #[error("ODE integration failed: {reason}")]
    IntegrationFailure { reason: String },

    #[error("exponent fit residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    FitResidualTooLarge { residual: f64, tolerance: f64 },

    #[error("field magnitude {value:.3e} fell below the degeneracy floor {floor:.3e}")]
    DegenerateField { value: f64, floor: f64 },

    #[error("probe radius {radius} is outside the field domain (max {max})")]
    ProbeOutsideDomain { radius: f64, max: f64 },

    #[error("branch points must be distinct and off the mesh seams: {reason}")]
    BadBranchConfiguration { reason: String },

    #[error("cut arcs intersect; choose a different pairing or resolution")]
    IntersectingCuts,

    #[error("eigensolver did not converge: {reason}")]
    EigensolverDiverged { reason: String },

    #[error("mesh resolution ladder must be strictly increasing and nonempty")]
    BadResolutionLadder,
}

pub type Result<T> = std::result::Result<T, SpectralError>;
