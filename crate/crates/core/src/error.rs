use thiserror::Error;

/// Errors shared across the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polyhedron is unbounded")]
    UnboundedPolyhedron,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("point is not in the convex hull of the generators")]
    PointNotInHull,
    #[error("operation requires a polyhedral norm, got a smooth l_p norm")]
    SmoothNormUnsupported,
    #[error("point is not on the dual unit sphere")]
    NotOnSphere,
    #[error("the two points coincide")]
    SamePoint,
    #[error("space contains no constants")]
    NoConstants,
    #[error("weak space contains no constants")]
    NoConstantsInHw,
    #[error("function space is not weakly simplicial")]
    NotWeaklySimplicial,
    #[error("measure has a negative atom")]
    NegativeMeasure,
    #[error("barycenters differ")]
    BarycenterMismatch,
    #[error("measure is not in N(mu)")]
    NotInNMu,
    #[error("measure is not maximal (not carried by the boundary)")]
    NotMaximal,
    #[error("product representation mass differs from the functional norm")]
    MassMismatch,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal cross-check failed: {0}")]
    InternalCheck(String),
}
