use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ring mismatch: {left} vs {right}")]
    DescriptorMismatch { left: String, right: String },
    #[error("{element} is not a unit in {ring}: {witness}")]
    NotAUnit {
        element: String,
        ring: String,
        witness: String,
    },
    #[error("no canonical map from {from} to {to}")]
    UnsupportedCoercion { from: String, to: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("quadratic space is not diagonal")]
    NotDiagonal,
    #[error("q(v) = {value} is not a unit")]
    IsotropicVector { value: String },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("bilinear form is not the standard hyperbolic form")]
    NotHyperbolicForm,
    #[error("oe_{k}{l} pairs two coordinates of one hyperbolic plane")]
    SamePlane { k: usize, l: usize },
    #[error("letter {index} ({letter}) is not a supported conjugator")]
    UnsupportedConjugator { index: usize, letter: String },
    #[error("letter {index} ({letter}) is not a DSER generator")]
    NotDserLetter { index: usize, letter: String },
    #[error("matrix is not orthogonal for the given form")]
    NotOrthogonal,
    #[error("det = {det} squares to 1 but is not ±1; the ring is not local")]
    NotLocalRing { det: String },
    #[error("conjugator letter {index} has a genuine denominator: {param}")]
    NonIntegralConjugator { index: usize, param: String },
    #[error("cover elements do not generate the unit ideal: {0}")]
    NotComaximal(String),
    #[error("invalid certificate: {0}")]
    Certificate(String),
}

impl Error {
    /// Stable machine-readable name used in CLI error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidRing(_) => "InvalidRing",
            Error::Parse(_) => "Parse",
            Error::DescriptorMismatch { .. } => "DescriptorMismatch",
            Error::NotAUnit { .. } => "NotAUnit",
            Error::UnsupportedCoercion { .. } => "UnsupportedCoercion",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotSymmetric => "NotSymmetric",
            Error::NotDiagonal => "NotDiagonal",
            Error::IsotropicVector { .. } => "IsotropicVector",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::NotHyperbolicForm => "NotHyperbolicForm",
            Error::SamePlane { .. } => "SamePlane",
            Error::UnsupportedConjugator { .. } => "UnsupportedConjugator",
            Error::NotDserLetter { .. } => "NotDserLetter",
            Error::NotOrthogonal => "NotOrthogonal",
            Error::NotLocalRing { .. } => "NotLocalRing",
            Error::NonIntegralConjugator { .. } => "NonIntegralConjugator",
            Error::NotComaximal(_) => "NotComaximal",
            Error::Certificate(_) => "Certificate",
        }
    }
}
