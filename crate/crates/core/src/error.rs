use polyforge::PolyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PrismError {
    #[error("malformed ring document: {0}")]
    Malformed(String),
    #[error("coefficient block is not {rank}x{rank}x{rank}")]
    NotSquare { rank: usize },
    #[error("negative coefficient N[{i}][{j}][{k}] = {value}")]
    Negative { i: usize, j: usize, k: usize, value: i64 },
    #[error("object `{label}` has {count} dual candidates (expected exactly one)")]
    DualCandidates { label: String, count: usize },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("unknown catalog ring `{0}`")]
    UnknownRing(String),
    #[error("power iteration did not converge in {0} steps")]
    NoConvergence(u32),
    #[error("the ring is not integral")]
    NotIntegral,
    #[error("the ring is not commutative: N[{i}][{j}] differs from N[{j}][{i}]")]
    NotCommutative { i: usize, j: usize },
    #[error("character table residual {residual:.3e} exceeds {tol:.1e}")]
    Residual { residual: f64, tol: f64 },
    #[error("localization hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("`{0}` is not self-dual")]
    NotSelfDual(String),
    #[error("multiplicity {n} on the triple ({a}, {b}, {c})")]
    Multiplicity { a: String, b: String, c: String, n: u32 },
    #[error("no variable for tetrahedron {0}")]
    IdMapMiss(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

impl PrismError {
    /// Process exit status used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            PrismError::Poly(PolyError::ResourceCap { .. }) => 2,
            _ => 1,
        }
    }

    /// Stable identifier printed in JSON error reports.
    pub fn code(&self) -> &'static str {
        match self {
            PrismError::Malformed(_) | PrismError::NotSquare { .. } | PrismError::Negative { .. } => "malformed-ring",
            PrismError::DualCandidates { .. } => "duality",
            PrismError::UnknownLabel(_) => "unknown-label",
            PrismError::UnknownRing(_) => "unknown-ring",
            PrismError::NoConvergence(_) => "no-convergence",
            PrismError::NotIntegral => "not-integral",
            PrismError::NotCommutative { .. } => "not-commutative",
            PrismError::Residual { .. } => "residual",
            PrismError::Hypothesis(_) => "hypothesis",
            PrismError::InvalidSubset(_) => "invalid-subset",
            PrismError::NotSelfDual(_) => "not-self-dual",
            PrismError::Multiplicity { .. } => "multiplicity",
            PrismError::IdMapMiss(_) => "idmap-miss",
            PrismError::Poly(PolyError::ResourceCap { .. }) => "resource-cap",
            PrismError::Poly(PolyError::NonInvertibleConstant { .. }) => "non-invertible-constant",
            PrismError::Poly(_) => "polynomial",
            PrismError::Io(_) => "io",
            PrismError::Usage(_) => "usage",
        }
    }
}
