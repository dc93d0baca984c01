use alloc::string::String;

/// Failure modes of the exact geometry layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("all homogeneous coordinates are zero")]
    ZeroVector,
    #[error("points coincide, the joining line is undefined")]
    CoincidentPoints,
    #[error("lines coincide, the meeting point is undefined")]
    CoincidentLines,
    #[error("input does not determine a unique conic")]
    DegenerateInput,
    #[error("conic is degenerate (zero determinant)")]
    DegenerateConic,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("triangle vertices are collinear")]
    DegenerateTriangle,
    #[error("trace coincides with a vertex of the triangle")]
    TraceAtVertex,
    #[error("point does not lie on the expected sideline")]
    NotOnSideline,
    #[error("point lies on a sideline, conjugate undefined")]
    OnSideline,
    #[error("point or line at infinity where a finite one is required")]
    PointAtInfinity,
    #[error("hexagon point at infinity, perpendicular foot undefined")]
    HexagonPointAtInfinity,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("concurrency violated: {0}")]
    ConcurrencyViolation(String),
    #[error("degenerate triangle pair: {0}")]
    DegeneratePair(String),
    #[error("generator exhausted after {0} rejected draws")]
    GeneratorExhausted(u32),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}
