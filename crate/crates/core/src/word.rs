use std::fmt;

use serde::{Serialize, Serializer};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// A freely reduced word over a fixed alphabet.
///
/// The letter sequence never contains an adjacent cancelling pair; every
/// constructor and operation reduces its output, so equality of `Word`s is
/// equality of group elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

/// Pushes `letter` onto `buffer`, cancelling against the top if possible.
///
/// Feeding a letter sequence through this yields its free reduction: the
/// buffer is always reduced, and an inverse pair at the boundary pops instead
/// of pushing.
pub(crate) fn push_reduced(buffer: &mut Vec<Letter>, letter: Letter) {
    if buffer.last().is_some_and(|top| top.cancels(letter)) {
        buffer.pop();
    } else {
        buffer.push(letter);
    }
}

impl Word {
    /// The empty word (the group identity).
    #[must_use]
    pub fn empty(alphabet: Alphabet) -> Word {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Freely reduces an arbitrary letter sequence into a word.
    ///
    /// Adjacent inverse pairs are deleted until none remain; the result is
    /// independent of deletion order. Letters outside the alphabet are
    /// rejected.
    pub fn reduce(alphabet: Alphabet, letters: impl IntoIterator<Item = Letter>) -> Result<Word> {
        let iter = letters.into_iter();
        let mut buffer = Vec::with_capacity(iter.size_hint().0);
        for letter in iter {
            if !alphabet.contains(letter) {
                return Err(Error::GeneratorOutOfRank {
                    index: letter.index(),
                    rank: alphabet.rank(),
                });
            }
            push_reduced(&mut buffer, letter);
        }
        Ok(Word {
            alphabet,
            letters: buffer,
        })
    }

    /// Builds a word from letters already known to be valid and reduced.
    pub(crate) fn from_reduced_letters(alphabet: Alphabet, letters: Vec<Letter>) -> Word {
        debug_assert!(letters.iter().all(|&l| alphabet.contains(l)));
        debug_assert!(letters.windows(2).all(|w| !w[0].cancels(w[1])));
        Word { alphabet, letters }
    }

    /// Parses compact notation: lowercase letters are generators, uppercase
    /// letters their inverses, and whitespace is ignored. The result is
    /// freely reduced. Errors name the offending character and its 1-based
    /// position in `text`.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Word> {
        let mut buffer = Vec::with_capacity(text.len());
        for (pos, ch) in text.chars().enumerate() {
            if ch.is_whitespace() {
                continue;
            }
            let letter =
                Letter::from_char(ch).ok_or(Error::InvalidCharacter { ch, pos: pos + 1 })?;
            if !alphabet.contains(letter) {
                return Err(Error::LetterOutOfRank {
                    ch,
                    pos: pos + 1,
                    rank: alphabet.rank(),
                });
            }
            push_reduced(&mut buffer, letter);
        }
        Ok(Word {
            alphabet,
            letters: buffer,
        })
    }

    #[must_use]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Number of letters of the reduced word.
    #[must_use]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    #[must_use]
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    #[must_use]
    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    #[must_use]
    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Checks that `other` lives in the same alphabet.
    pub(crate) fn require_same_alphabet(&self, other: &Word) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.alphabet.rank(),
                right: other.alphabet.rank(),
            })
        }
    }

    /// The reduced product `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.require_same_alphabet(other)?;
        let mut buffer = Vec::with_capacity(self.len() + other.len());
        buffer.extend_from_slice(&self.letters);
        for &letter in &other.letters {
            push_reduced(&mut buffer, letter);
        }
        Ok(Word {
            alphabet: self.alphabet,
            letters: buffer,
        })
    }

    /// The inverse word: letters reversed, orientations flipped. A reduced
    /// word stays reduced under inversion, so no reduction pass is needed.
    #[must_use]
    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().map(Letter::inverse).collect();
        Word {
            alphabet: self.alphabet,
            letters,
        }
    }

    /// The reduced power `self^exponent`; negative exponents invert first and
    /// `power(0)` is the empty word.
    #[must_use]
    pub fn power(&self, exponent: i64) -> Word {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let reps = exponent.unsigned_abs() as usize;
        let mut buffer = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            for &letter in &base.letters {
                push_reduced(&mut buffer, letter);
            }
        }
        Word {
            alphabet: self.alphabet,
            letters: buffer,
        }
    }
}

impl fmt::Display for Word {
    /// Compact notation; the empty word renders as an empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in &self.letters {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"@{}", self.alphabet.rank())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
