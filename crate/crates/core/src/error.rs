use thiserror::Error;

/// Errors surfaced by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cap exceeded for {what}: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("matrix dimensions do not match entry count: {rows}x{cols} with {len} entries")]
    DimensionMismatch { rows: usize, cols: usize, len: usize },
    #[error("not a valid group table: {0}")]
    InvalidGroup(String),
    #[error("not a subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("not an automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("subgroup is not normal in its parent")]
    NotNormal,
    #[error("elements belong to different groups")]
    OwnerMismatch,
    #[error("homomorphism does not respect the defining relations: {0}")]
    RelationViolation(String),
    #[error("operation requires a different virtually cyclic type: {0}")]
    TypeMismatch(String),
    #[error("matrix shapes are incompatible: {0}")]
    ShapeMismatch(String),
    #[error("values belong to different rings")]
    RingMismatch,
    #[error("composite morphism fails the category filter")]
    FilterViolation,
    #[error("no connecting isomorphism between the given base objects")]
    NoIsoAvailable,
    #[error("functor data fails functoriality on sampled morphisms: {0}")]
    NotAFunctor(String),
    #[error("coefficient transformation is not natural for the category action: {0}")]
    NotNatural(String),
    #[error("operation requires a one-object monoid category")]
    NotMonoidCat,
    #[error("lift does not project to the chosen generator")]
    LiftMismatch,
    #[error("ambient twist is not conjugation by the given element")]
    TwistMismatch,
    #[error("unknown diagram: {0}")]
    UnknownDiagram(String),
    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
