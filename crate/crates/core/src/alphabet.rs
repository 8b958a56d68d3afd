use std::fmt;

use crate::error::{Error, Result};

/// Orientation of a letter: a generator occurs either plain or inverted.
///
/// `Plus` sorts before `Minus`; together with the generator index this fixes
/// the letter order used for canonical rotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The opposite orientation.
    #[must_use]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `-1`, for serialized move records.
    #[must_use]
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Parses `+1`/`-1`.
    pub fn from_i8(value: i8) -> Option<Sign> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// A free basis `x_0, …, x_{rank-1}`.
///
/// Generators render as the lowercase letters `a..z` and their inverses as
/// the corresponding uppercase letters, which caps the rank at 26.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    rank: u8,
}

impl Alphabet {
    pub const MIN_RANK: usize = 2;
    pub const MAX_RANK: usize = 26;

    /// An alphabet with `rank` generators, `2..=26`.
    pub fn new(rank: usize) -> Result<Alphabet> {
        if (Alphabet::MIN_RANK..=Alphabet::MAX_RANK).contains(&rank) {
            Ok(Alphabet { rank: rank as u8 })
        } else {
            Err(Error::RankOutOfRange(rank))
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        usize::from(self.rank)
    }

    /// Whether `letter` names a generator of this alphabet.
    #[must_use]
    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.rank()
    }

    /// The positive letter for generator `index`.
    pub fn generator(&self, index: usize) -> Result<Letter> {
        if index < self.rank() {
            Ok(Letter::new(index, Sign::Plus))
        } else {
            Err(Error::GeneratorOutOfRank {
                index,
                rank: self.rank(),
            })
        }
    }

    /// The display name of generator `index` (`'a'`, `'b'`, …).
    #[must_use]
    pub fn generator_name(index: usize) -> char {
        debug_assert!(index < Alphabet::MAX_RANK);
        (b'a' + index as u8) as char
    }
}

/// One signed generator occurrence inside a word.
///
/// The derived order (index first, then `Plus` before `Minus`) is the letter
/// order used everywhere a canonical rotation is needed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    index: u8,
    sign: Sign,
}

impl Letter {
    /// A letter for generator `index` with the given orientation.
    ///
    /// `index` must be below [`Alphabet::MAX_RANK`]; membership in a concrete
    /// alphabet is checked where words are built.
    #[must_use]
    pub fn new(index: usize, sign: Sign) -> Letter {
        assert!(
            index < Alphabet::MAX_RANK,
            "generator index {index} too large"
        );
        Letter {
            index: index as u8,
            sign,
        }
    }

    #[must_use]
    pub fn index(&self) -> usize {
        usize::from(self.index)
    }

    #[must_use]
    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// The formal inverse (same generator, flipped orientation).
    #[must_use]
    pub fn inverse(&self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    /// Whether `self · other` is a cancelling pair.
    #[must_use]
    pub fn cancels(&self, other: Letter) -> bool {
        *self == other.inverse()
    }

    /// Reads a compact-notation character: lowercase for a generator,
    /// uppercase for its inverse. Returns `None` for anything else.
    pub fn from_char(ch: char) -> Option<Letter> {
        if ch.is_ascii_lowercase() {
            Some(Letter::new((ch as u8 - b'a') as usize, Sign::Plus))
        } else if ch.is_ascii_uppercase() {
            Some(Letter::new((ch as u8 - b'A') as usize, Sign::Minus))
        } else {
            None
        }
    }

    /// The compact-notation character for this letter.
    #[must_use]
    pub fn to_char(&self) -> char {
        let base = match self.sign {
            Sign::Plus => b'a',
            Sign::Minus => b'A',
        };
        (base + self.index) as char
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}
