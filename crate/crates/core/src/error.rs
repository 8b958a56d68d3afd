use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or combining the lab's values.
///
/// Variants are deliberately fine-grained so callers (and the CLI) can tell a
/// malformed input apart from a violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {0} is outside the supported range 2..=26")]
    RankOutOfRange(usize),
    #[error("invalid character {ch:?} at position {pos}")]
    InvalidCharacter { ch: char, pos: usize },
    #[error("letter {ch:?} at position {pos} is outside the rank-{rank} alphabet")]
    LetterOutOfRank { ch: char, pos: usize, rank: usize },
    #[error("generator index {index} is outside the rank-{rank} alphabet")]
    GeneratorOutOfRank { index: usize, rank: usize },
    #[error("alphabet mismatch: rank {left} vs rank {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("image list {0:?} is not a permutation of the generator indices")]
    InvalidPermutation(Vec<usize>),
    #[error("right-multiply move must use distinct generators, got index {0} twice")]
    SelfMultiply(usize),
    #[error("pattern is not in block form (empty or single-generator cyclic word)")]
    DegeneratePattern,
    #[error("word has an empty cyclic core")]
    EmptyCore,
    #[error("word must be nonempty")]
    EmptyWord,
    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,
    #[error("decomposition is not reduced as written")]
    NotReducedAsWritten,
    #[error("cores must have equal length, got {left} and {right}")]
    CoreLengthMismatch { left: usize, right: usize },
    #[error("cores must be neither equal nor mutually inverse")]
    CoreCollision,
    #[error("carrier pair is not in the requested cancellation case")]
    CaseMismatch,
    #[error("product cancels against both ends of the middle word")]
    TwoSidedCancellation,
    #[error("exponents must be positive, got {0}")]
    NonPositiveExponent(i64),
    #[error("exponent sums differ: {left} vs {right}")]
    ExponentSumMismatch { left: i64, right: i64 },
    #[error("the pair (g, g^-1) is excluded here: powers of such a pair collapse")]
    InversePairExcluded,
}
