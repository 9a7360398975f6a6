use thiserror::Error;

use crate::rootsys::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system type {series}{rank}")]
    UnsupportedType { series: String, rank: usize },

    #[error("weights belong to different root systems")]
    MismatchedSystem,

    #[error("opposite roots have a Cartan-valued bracket")]
    OppositeRoots,

    #[error("weight {0} is not a root of the system")]
    NotARoot(Weight),

    #[error("parabolic must remove at least one simple root")]
    EmptySigma,

    #[error("simple root index {index} out of range 1..={rank}")]
    SigmaOutOfRange { index: usize, rank: usize },

    #[error("Levi component check failed: {0}")]
    ComponentVerificationFailed(String),

    #[error("vertex weight {0} is not Levi-dominant")]
    NotLeviDominant(Weight),

    #[error("duplicate vertex weight {0}")]
    DuplicateVertex(Weight),

    #[error("relations are only generated for Borel quivers")]
    UnsupportedParabolic,

    #[error("flatness needs a quiver with all nilradical arrows (FULL mode)")]
    ModeMismatch,

    #[error("map for arrow {arrow} has shape {got:?}, expected {expected:?}")]
    ShapeMismatch {
        arrow: usize,
        got: (usize, usize),
        expected: (usize, usize),
    },

    #[error("representation is not multiplicity free")]
    NotMultiplicityFree,

    #[error("Weyl coset enumeration needs {needed} elements, budget is {budget}")]
    BudgetExceeded { needed: String, budget: usize },

    #[error("exponent vector must have {expected} entries summing to {degree}")]
    BadExponents { expected: usize, degree: usize },

    #[error("Levi coroot pairing of the determinant is nonzero: {0:?}")]
    NotLeviTrivialDeterminant(Vec<i64>),

    #[error("polarization must have {expected} positive entries, got {got:?}")]
    NotAmple { expected: usize, got: Vec<i64> },

    #[error("boundary computation needs exactly two polarization parameters")]
    NotTwoParameter,

    #[error("inequality is not quadratic after removing monomial factors")]
    NotQuadratic,

    #[error("stable region is not a single interval of slopes")]
    NotAnInterval,

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("character does not vanish on the representation (sum = {0})")]
    CharacterNotBalanced(i128),

    #[error("{0}")]
    Invalid(String),
}
