use alloc::string::String;

use crate::quandle::AxiomReport;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("image list is not a bijection on 0..{degree}")]
    NotAPermutation { degree: usize },

    #[error("generator list is empty")]
    NoGenerators,

    #[error("group exceeds the element cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("generator index {index} out of range ({count} generators)")]
    LetterOutOfRange { index: usize, count: usize },

    #[error("element is not contained in the group")]
    NotInGroup,

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("table violates the quandle axioms ({} violations)", .0.violations.len())]
    AxiomsViolated(AxiomReport),

    #[error("a quandle needs at least one point")]
    EmptyQuandle,

    #[error("invalid abelian group or automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("subset is empty")]
    EmptySubset,

    #[error("point {point} out of range for a quandle of order {n}")]
    PointOutOfRange { point: usize, n: usize },

    #[error("subset is not stable under conjugation")]
    NotConjugationStable,

    #[error("subset does not generate the group")]
    NotGenerating,

    #[error("not faithful: {0}")]
    NotFaithful(String),

    #[error("map is not surjective")]
    NotSurjective,

    #[error("map is not injective")]
    NotInjective,

    #[error("morphisms are not composable")]
    NotComposable,

    #[error("map is not a valid morphism: {0}")]
    InvalidMorphism(String),

    #[error("search space exceeds the subset cap of {cap}")]
    SubsetCapExceeded { cap: usize },

    /// An internal consistency check failed. The constructions involved are
    /// proven well-defined under their preconditions, so this signals a bug.
    #[error("verification failed: {0}")]
    Verification(String),
}
