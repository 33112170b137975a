use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials live in different variable sets")]
    VariableMismatch,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("no assignment for variable {0}")]
    MissingAssignment(String),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("degree {k} out of range for {n} variables")]
    DegreeOutOfRange { k: usize, n: usize },
    #[error("expected a homogeneous quadratic form")]
    NotQuadratic,
    #[error("too many variables ({0})")]
    TooManyVariables(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymplecticError {
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("matrix does not commute with M")]
    NotInCentralizer,
    #[error("fixed lattice has rank {0}, expected 4")]
    WrongKernelRank(usize),
    #[error("identity {name} failed: {detail}")]
    IdentityFailed { name: &'static str, detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("vector is not a root: b(a, a) = {0}")]
    NotARoot(String),
    #[error("generator {0} does not preserve the form b")]
    NotAnIsometry(usize),
    #[error("matrix is not integral on the root lattice")]
    NotIntegral,
    #[error("element is not in the group")]
    NotInGroup,
    #[error("eigenspace has dimension {0}, expected 3")]
    EigenspaceDimension(usize),
    #[error("fundamental weight index {0} out of range")]
    BadIndex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VarietyError {
    #[error("{0}")]
    Poly(#[from] PolyError),
    #[error("{0}")]
    Weyl(#[from] WeylError),
    #[error("exact division failed: {0}")]
    DivisionFailed(&'static str),
    #[error("polynomials are not proportional: {0}")]
    NotProportional(&'static str),
    #[error("generator {0} does not fix F")]
    NotInvariant(usize),
    #[error("count mismatch for {what}: expected {expected}, got {actual}")]
    CountMismatch { what: &'static str, expected: usize, actual: usize },
    #[error("no group element found for {0}")]
    NoSuchElement(&'static str),
    #[error("{0}")]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ThetaError {
    #[error("imaginary part is not positive definite")]
    NotPositiveDefinite,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("theta series did not converge (change {0:e} at truncation radius)")]
    NotConverged(f64),
    #[error("invalid configuration: {0}")]
    BadConfig(&'static str),
    #[error("point is not fixed by {0} (residual {1:e})")]
    NotFixed(&'static str, f64),
    #[error("eigenspace identity violated (relative deviation {0:e})")]
    EigenspaceViolation(f64),
    #[error("fixed-point solver did not converge (residual {0:e})")]
    SolverFailed(f64),
}
