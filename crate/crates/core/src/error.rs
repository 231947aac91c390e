use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

/// Homology profile: shift `i` mapped to the dimension vector of `Hom(T, X[i])`.
pub type Profile = BTreeMap<i32, Vec<usize>>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("relation ideal is not admissible: {0}")]
    NotAdmissible(String),
    #[error("structure constants are not associative")]
    NotAssociative,
    #[error("algebra has no identity: {0}")]
    NoIdentity(String),
    #[error("trace-form radical is not nilpotent")]
    RadicalNotNilpotent,
    #[error("algebra is not basic and split: {0}")]
    NotBasic(String),
    #[error("representation violates relations: {0}")]
    RelationViolated(String),
    #[error("module is not projective: {0}")]
    NotProjective(String),
    #[error("element is not an idempotent up to homotopy")]
    NotIdempotent,
    #[error("complex is not radical")]
    NotRadical,
    #[error("differentials do not square to zero at degree {0}")]
    DSquaredNonzero(i32),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("complex is not self-orthogonal: Hom(T, T[{0}]) != 0")]
    NotSelfOrthogonal(i32),
    #[error("complex is not tilting: {0}")]
    NotTilting(String),
    #[error("homology is not concentrated in degree 0")]
    NotConcentrated(Profile),
    #[error("internal disagreement: {0}")]
    InternalDisagreement(String),
}

pub type Result<T> = core::result::Result<T, Error>;
