use thiserror::Error;

/// Domain and input errors shared by all modules.
///
/// The variant name is part of the public contract: the CLI prints it
/// verbatim (`NotDivisor: ...`), and callers match on it to distinguish
/// domain failures from malformed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The word has no embedded positively oriented representative.
    #[error("NotNonCrossing: `{0}` is not non-crossing")]
    NotNonCrossing(String),

    /// The word is non-crossing but not a divisor of the maximal element.
    #[error("NotDivisor: `{word}` does not divide `{garside}`")]
    NotDivisor { word: String, garside: String },

    /// A tuple fails the reduced-decomposition test.
    #[error("NotReduced: {0}")]
    NotReduced(String),

    /// The squarefree word is not a palindrome of odd length.
    #[error("NotReflection: `{0}` is not a reflection")]
    NotReflection(String),

    /// No completion of the reflection to a reduced tuple was found
    /// within the search radius. This signals either non-membership or
    /// an insufficient radius; the radius is reported so callers can
    /// retry with a larger one.
    #[error("NotInTc: no tuple containing `{word}` found within orbit radius {radius}")]
    NotInTc { word: String, radius: usize },

    /// Interior queried on a self-intersecting curve.
    #[error("NotEmbedded: `{word}` has {intersections} self-intersection(s)")]
    NotEmbedded { word: String, intersections: usize },

    /// Braid generator index outside `1..=n-1`.
    #[error("IndexOutOfRange: braid generator {index} does not act on {size}-tuples")]
    IndexOutOfRange { index: i32, size: usize },

    /// A slid product failed simple certification. This indicates an
    /// engine bug, not a user error.
    #[error("NotSimple: {0}")]
    NotSimple(String),

    /// Malformed input under one of the published grammars.
    #[error("parse: {0}")]
    Parse(String),
}

impl Error {
    /// True for grammar/usage errors, false for domain errors.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
