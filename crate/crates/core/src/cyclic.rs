use std::fmt;

use serde::{Serialize, Serializer};

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::word::Word;

/// The unique shortest-carrier factorization `v = carrier · core · carrier⁻¹`
/// of a reduced word, with the core cyclically reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicDecomposition {
    carrier: Word,
    core: Word,
}

impl CyclicDecomposition {
    /// The conjugating prefix; empty iff the word is already cyclically reduced.
    #[must_use]
    pub fn carrier(&self) -> &Word {
        &self.carrier
    }

    /// The cyclically reduced middle; empty iff the word is empty.
    #[must_use]
    pub fn core(&self) -> &Word {
        &self.core
    }

    /// Reassembles `carrier · core · carrier⁻¹`.
    #[must_use]
    pub fn recompose(&self) -> Word {
        self.carrier
            .concat(&self.core)
            .and_then(|w| w.concat(&self.carrier.inverse()))
            .expect("decomposition parts share one alphabet")
    }
}

impl Word {
    /// Peels matching ends off the word until the middle is cyclically
    /// reduced: `v = A · v̄ · A⁻¹` with `A` the carrier and `v̄` the core.
    #[must_use]
    pub fn cyclic_decomposition(&self) -> CyclicDecomposition {
        let letters = self.letters();
        let mut lo = 0;
        let mut hi = letters.len();
        while hi - lo >= 2 && letters[lo].cancels(letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        CyclicDecomposition {
            carrier: Word::from_reduced_letters(self.alphabet(), letters[..lo].to_vec()),
            core: Word::from_reduced_letters(self.alphabet(), letters[lo..hi].to_vec()),
        }
    }

    /// The cyclically reduced core of the word.
    #[must_use]
    pub fn cyclic_core(&self) -> Word {
        self.cyclic_decomposition().core
    }

    /// The cyclic length `‖v‖`: the length of the cyclic core.
    #[must_use]
    pub fn cyclic_length(&self) -> usize {
        let letters = self.letters();
        let mut lo = 0;
        let mut hi = letters.len();
        while hi - lo >= 2 && letters[lo].cancels(letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        hi - lo
    }

    /// Whether the word survives its own rotation: no cancellation between
    /// the last and first letter. Empty and single-letter words qualify.
    #[must_use]
    pub fn is_cyclically_reduced(&self) -> bool {
        self.len() < 2 || !self.letters()[0].cancels(*self.letters().last().expect("nonempty"))
    }

    /// Whether the cyclic cores of `self` and `other` are rotations of each
    /// other, i.e. the two words are conjugate. Checked by searching one core
    /// inside the doubled other rather than materializing all rotations.
    #[must_use]
    pub fn cyclically_equal(&self, other: &Word) -> bool {
        rotation_of(self.cyclic_core().letters(), other.cyclic_core().letters())
    }
}

/// Whether `needle` is a rotation of `haystack` (as plain letter sequences).
fn rotation_of(needle: &[Letter], haystack: &[Letter]) -> bool {
    if needle.len() != haystack.len() {
        return false;
    }
    if needle.is_empty() {
        return true;
    }
    let doubled: Vec<Letter> = haystack.iter().chain(haystack.iter()).copied().collect();
    doubled.windows(needle.len()).any(|window| window == needle)
}

/// A cyclic word: a cyclically reduced word up to rotation.
///
/// One concrete representative is stored; comparisons are rotation-aware and
/// serialization uses the canonical (lexicographically least) rotation.
#[derive(Clone, Debug)]
pub struct CyclicWord {
    representative: Word,
}

impl CyclicWord {
    /// The cyclic word `[v]` of any reduced word `v` (its conjugacy class).
    #[must_use]
    pub fn of(word: &Word) -> CyclicWord {
        CyclicWord {
            representative: word.cyclic_core(),
        }
    }

    /// Wraps a word that must already be cyclically reduced.
    pub fn from_cyclically_reduced(word: Word) -> Result<CyclicWord> {
        if word.is_cyclically_reduced() {
            Ok(CyclicWord {
                representative: word,
            })
        } else {
            Err(Error::NotCyclicallyReduced)
        }
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.representative.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    /// The stored representative (some rotation of the cyclic word).
    #[must_use]
    pub fn representative(&self) -> &Word {
        &self.representative
    }

    /// The representative rotated left by `offset` positions.
    #[must_use]
    pub fn rotated(&self, offset: usize) -> Word {
        let letters = self.representative.letters();
        if letters.is_empty() {
            return self.representative.clone();
        }
        let offset = offset % letters.len();
        let mut rotated = Vec::with_capacity(letters.len());
        rotated.extend_from_slice(&letters[offset..]);
        rotated.extend_from_slice(&letters[..offset]);
        Word::from_reduced_letters(self.representative.alphabet(), rotated)
    }

    /// The canonical rotation: lexicographically least under the letter
    /// order (generator index, then plain before inverted).
    #[must_use]
    pub fn canonical(&self) -> Word {
        let letters = self.representative.letters();
        let n = letters.len();
        if n == 0 {
            return self.representative.clone();
        }
        let at = |start: usize, k: usize| letters[(start + k) % n];
        let mut best = 0;
        for candidate in 1..n {
            for k in 0..n {
                match at(candidate, k).cmp(&at(best, k)) {
                    std::cmp::Ordering::Less => {
                        best = candidate;
                        break;
                    }
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        self.rotated(best)
    }
}

impl PartialEq for CyclicWord {
    fn eq(&self, other: &CyclicWord) -> bool {
        rotation_of(
            self.representative.letters(),
            other.representative.letters(),
        )
    }
}

impl Eq for CyclicWord {}

impl fmt::Display for CyclicWord {
    /// The canonical rotation in compact notation, bracketed: `[abAB]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.canonical())
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
