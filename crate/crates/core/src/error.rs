use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("relations are not admissible: {0}")]
    NonAdmissibleRelations(String),
    #[error("algebra is infinite dimensional: paths of length {0} survive")]
    InfiniteDimensional(usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("module is not projective")]
    NotProjective,
    #[error("complex does not consist of projective modules")]
    NotProjectiveComplex,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error(
        "endomorphism algebra has a semisimple quotient that does not split over the ground field"
    )]
    NonSplitResidue,
    #[error("object is not indecomposable")]
    NotIndecomposable,
    #[error("no consistent sign for the shift comparison map: {0}")]
    NoConsistentSign(String),
}

pub type Result<T> = std::result::Result<T, Error>;
