use thiserror::Error;

/// Errors raised across the crate. Every variant names the violated
/// precondition; the CLI serializes them as machine-readable objects.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    /// A factor `K` contributes nothing to the module theory; the paper's
    /// convention is to drop it, ours is to make the caller do so.
    #[error("cluster {cluster} is a trivial factor (weight list [1]); remove it from the spec")]
    TrivialFactor { cluster: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("dimension vector is not balanced: {0}")]
    NotBalanced(String),

    #[error("dimension vector is zero")]
    ZeroVector,

    #[error("invalid ray tuple: {0}")]
    InvalidRayTuple(String),

    #[error("dimension vector is not theta-stable: {0}")]
    NotStable(String),

    #[error("no theta-stable dimension vector with d0 = {n}")]
    NoStableVector { n: u64 },

    #[error("nontrivial weight at cluster {cluster}, position {position}; d_n_min is defined for trivial weights only")]
    NontrivialWeight { cluster: usize, position: usize },

    #[error("d0 = {d0} exceeds the search bound {bound}")]
    BoundExceeded { d0: u64, bound: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid module action: {0}")]
    InvalidModule(String),

    #[error("oracle cap exceeded: {0}")]
    CapExceeded(String),

    /// The stability criterion is computed twice, once from the extremal-ray
    /// characterization and once from the max-sum form. They are provably
    /// equivalent; a disagreement is reported rather than resolved silently.
    #[error("internal stability criteria disagree on {dim}: ray-form says {cone_form}, max-sum form says {max_sum_form}")]
    CriterionMismatch {
        dim: String,
        cone_form: bool,
        max_sum_form: bool,
    },
}

impl Error {
    /// Stable machine-readable tag for each variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidAlgebra(_) => "invalid_algebra",
            Error::TrivialFactor { .. } => "trivial_factor",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::NotBalanced(_) => "not_balanced",
            Error::ZeroVector => "zero_vector",
            Error::InvalidRayTuple(_) => "invalid_ray_tuple",
            Error::NotStable(_) => "not_stable",
            Error::NoStableVector { .. } => "no_stable_vector",
            Error::NontrivialWeight { .. } => "nontrivial_weight",
            Error::BoundExceeded { .. } => "bound_exceeded",
            Error::NotPrime(_) => "not_prime",
            Error::InvalidMatrix(_) => "invalid_matrix",
            Error::InvalidRepresentation(_) => "invalid_representation",
            Error::InvalidModule(_) => "invalid_module",
            Error::CapExceeded(_) => "cap_exceeded",
            Error::CriterionMismatch { .. } => "criterion_mismatch",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
