use crate::word::Word;

/// Errors reported by parsing, the equation solvers, and the class-map
/// operations.
///
/// Violations of documented preconditions that cannot arise from well-formed
/// user input (empty words passed to the comparison functions, block length
/// mismatches in family expansion) panic instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A character outside {L, M, R} in a word string.
    #[error("invalid letter {ch:?} at index {index}: words use only L, M, R")]
    InvalidLetter { ch: char, index: usize },

    /// The ZW = W̄Z̄ solver needs 0 < r < m.
    #[error("ZW equation needs 0 < r < m, got m={m}, r={r}")]
    ZwLengths { m: usize, r: usize },

    /// The XY = ȲX solver needs both lengths positive.
    #[error("XY equation needs positive lengths, got |X|={x_len}, |Y|={y_len}")]
    XyLengths { x_len: usize, y_len: usize },

    /// XY = ȲZ forces |X| = |Z|; a triple violating that is ill-posed.
    #[error("XY = ȲZ forces |X| = |Z|, got |X|={x_len}, |Z|={z_len}")]
    UnequalEnds { x_len: usize, z_len: usize },

    /// An operation that requires a primitive word was given a proper power.
    #[error("word {word} is not primitive")]
    NotPrimitive { word: Word },

    /// An operation that requires the greatest class representative was
    /// given another member.
    #[error("word {word} is not the greatest member of its class")]
    NotGreatest { word: Word },

    /// `classify_collision` was asked about two words whose doubled
    /// conjugate classes differ.
    #[error("doubled classes of {beta1} and {beta2} differ")]
    ImagesDiffer { beta1: Word, beta2: Word },

    /// The doubled word ββ̄ fell outside the primitive self-complementary
    /// necklaces. Reachable only for the length-1 all-M class; anywhere else
    /// it signals a defect.
    #[error("image word {image} is not primitive")]
    ImageNotPrimitive { image: Word },

    /// The class-map surveys are defined for lengths ≥ 2.
    #[error("operation needs n ≥ {min}, got n={n}")]
    LengthBelowMinimum { n: usize, min: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
