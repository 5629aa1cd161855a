use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("arc ({u}, {v}) has an endpoint outside 0..{n}")]
    ArcOutOfRange { u: usize, v: usize, n: usize },

    #[error("a digraph needs at least one vertex")]
    EmptyDigraph,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("image array is not a bijection on 0..{degree}")]
    NotAPermutation { degree: usize },

    #[error("point {point} is outside 0..{degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("group is not transitive on its domain ({orbit} of {degree} points reached)")]
    NotTransitive { orbit: usize, degree: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("lift is ill-defined on the quotient: element {element} has psi-period {period}, which does not divide q/k = {blocks}")]
    IllDefinedLift {
        element: usize,
        period: usize,
        blocks: usize,
    },

    #[error("family members g_{t} and g_{next} do not form a two-fold automorphism", next = .t + 1)]
    NotTfPair { t: i64 },

    #[error("family has no member for t = {t}")]
    MissingFamilyMember { t: i64 },

    #[error("incompatible level structures: {0}")]
    IncompatibleLevels(String),

    #[error("arc ({u}, {v}) does not increase the level by one")]
    LevelViolation { u: usize, v: usize },

    #[error("invalid psi map: {0}")]
    InvalidPsi(String),

    #[error("subgroup is not psi-stable for this digraph")]
    NotPsiStable,

    #[error("vertex {vertex} has no neighbours; colour the double half-cover sides explicitly")]
    IsolatedVertex { vertex: usize },

    #[error("search exceeded the budget of {budget} nodes")]
    BudgetExceeded { budget: u64 },

    #[error("memory guard tripped: more than {limit} elements")]
    MemoryGuard { limit: usize },

    #[error("need at least {needed} values, got {found}")]
    TooFewValues { needed: usize, found: usize },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by exhausting a configured resource ceiling.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::MemoryGuard { .. }
        )
    }
}
