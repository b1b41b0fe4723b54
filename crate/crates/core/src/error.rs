use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(i64),
    #[error("membership window of size {0} exceeds the supported limit")]
    TooLarge(u128),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not a positive member of the semigroup")]
    NotAMember(i64),
    #[error("operation undefined for the full semigroup N")]
    FullSemigroup,
    #[error("ideals live over different ambient semigroups")]
    AmbientMismatch,
    #[error("set is not a numerical semigroup: {0}")]
    NotASemigroup(String),
    #[error("set is not an ideal of the given semigroup")]
    NotAnIdeal,
    #[error("semigroup is not GAS")]
    NotGas,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("gluing parameters {a} and {b} are not coprime")]
    NotCoprime { a: i64, b: i64 },
    #[error("{0} is a minimal generator")]
    MinimalGenerator(i64),
    #[error("{0} is not a member of the semigroup")]
    NotMember(i64),
    #[error("duplication parameter b = {0} is even")]
    EvenB(i64),
    #[error("duplication parameter b = {0} is not in the semigroup")]
    BNotMember(i64),
    #[error("ideal is not contained in the semigroup")]
    IdealNotIntegral,
    #[error("2b = {0} is not in the semigroup")]
    TwoBNotMember(i64),
    #[error("dilatation parameter {0} is not a positive element of M-2M")]
    NotInM2M(i64),
    #[error("oracle bound {got} is smaller than the required {needed}")]
    BoundTooSmall { needed: i64, got: i64 },
}

impl Error {
    /// Errors raised by a construction whose parameters violate its spec.
    pub fn is_construction_spec(&self) -> bool {
        matches!(
            self,
            Error::NotCoprime { .. }
                | Error::MinimalGenerator(_)
                | Error::NotMember(_)
                | Error::EvenB(_)
                | Error::BNotMember(_)
                | Error::IdealNotIntegral
                | Error::TwoBNotMember(_)
                | Error::NotInM2M(_)
                | Error::NotAnIdeal
        )
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::InternalInconsistency(msg.into())
    }
}
