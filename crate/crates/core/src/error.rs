use crate::monomial::Bidegree;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime (need an odd prime >= 3)")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported range (must fit in 31 bits)")]
    ModulusTooLarge(u64),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not bihomogeneous: saw bidegrees {0} and {1}")]
    NotBihomogeneous(Bidegree, Bidegree),
    #[error("monomials live in rings with {0} and {1} variables")]
    DimensionMismatch(usize, usize),
    #[error("expected a bihomogeneous polynomial of bidegree ({expected}), got ({got})")]
    BadDegree { expected: String, got: String },
    #[error("the active term order does not eliminate the leading {0}-variable block")]
    BadOrder(usize),
    #[error("generic initial ideal did not stabilize over {trials} trials (seed {seed})")]
    Unstable { trials: usize, seed: u64 },
    #[error("generator {0} does not have total degree 2")]
    NotQuadratic(String),
    #[error("quadratic stability fails: {present} present but {missing} missing")]
    StarViolated { present: String, missing: String },
    #[error("no monomials exist in the bidegree required by the diagonal")]
    EmptyDiagonal,
    #[error("offset ({0}) is not in the canonical index set of the diagonal")]
    BadOffset(Bidegree),
    #[error("strand needs a generator in internal degree {needed}, above the bound {bound}")]
    TruncationTooSmall { needed: u32, bound: u32 },
    #[error("module generators sit in distinct degrees ({0} vs {1})")]
    MixedGeneratorDegrees(Bidegree, Bidegree),
    #[error("ideal generators have unequal degrees ({0} vs {1})")]
    UnequalDegrees(u32, u32),
    #[error("requested degree {requested} exceeds the module truncation bound {bound}")]
    BoundExceeded { requested: u32, bound: u32 },
    #[error("semigroup grading conflict: {vector:?} arises with bidegrees ({first}) and ({second})")]
    GradingConflict {
        vector: Vec<u32>,
        first: Bidegree,
        second: Bidegree,
    },
    #[error("{0:?} is not a member of the semigroup within the validated range")]
    NotMember(Vec<u32>),
    #[error("a relation reduces to a unit; the presented ring is zero")]
    UnitRelation,
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
