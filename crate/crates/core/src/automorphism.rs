use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::alphabet::{Alphabet, Letter, Sign};
use crate::error::{Error, Result};
use crate::word::{push_reduced, Word};

/// A basis move of the free group, in one of the three classical families.
///
/// Every automorphism of a finitely generated free group is a composition of
/// such moves, so sampling over them reaches the whole automorphism group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementaryMove {
    /// `x_i -> x_{images[i]}` for a permutation `images` of the indices.
    Permute(Vec<usize>),
    /// `x_i -> x_i^-1`, other generators fixed.
    InvertGen(usize),
    /// `x_target -> x_target · x_mult^sign` with `target != mult`, other
    /// generators fixed.
    RightMultiply {
        target: usize,
        mult: usize,
        sign: Sign,
    },
}

impl ElementaryMove {
    /// Validates the move against `alphabet`.
    fn check(&self, alphabet: Alphabet) -> Result<()> {
        let rank = alphabet.rank();
        let check_index = |index: usize| {
            if index < rank {
                Ok(())
            } else {
                Err(Error::GeneratorOutOfRank { index, rank })
            }
        };
        match self {
            ElementaryMove::Permute(images) => {
                let mut seen = vec![false; rank];
                if images.len() != rank {
                    return Err(Error::InvalidPermutation(images.clone()));
                }
                for &image in images {
                    check_index(image)?;
                    if seen[image] {
                        return Err(Error::InvalidPermutation(images.clone()));
                    }
                    seen[image] = true;
                }
                Ok(())
            }
            ElementaryMove::InvertGen(index) => check_index(*index),
            ElementaryMove::RightMultiply { target, mult, .. } => {
                check_index(*target)?;
                check_index(*mult)?;
                if target == mult {
                    Err(Error::SelfMultiply(*target))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// The move undoing this one.
    #[must_use]
    fn inverse(&self) -> ElementaryMove {
        match self {
            ElementaryMove::Permute(images) => {
                let mut inverted = vec![0; images.len()];
                for (source, &image) in images.iter().enumerate() {
                    inverted[image] = source;
                }
                ElementaryMove::Permute(inverted)
            }
            ElementaryMove::InvertGen(index) => ElementaryMove::InvertGen(*index),
            ElementaryMove::RightMultiply { target, mult, sign } => ElementaryMove::RightMultiply {
                target: *target,
                mult: *mult,
                sign: sign.flip(),
            },
        }
    }

    /// Pushes the image of one letter onto a reduction buffer.
    fn apply_letter(&self, letter: Letter, buffer: &mut Vec<Letter>) {
        match self {
            ElementaryMove::Permute(images) => {
                push_reduced(buffer, Letter::new(images[letter.index()], letter.sign()));
            }
            ElementaryMove::InvertGen(index) => {
                let image = if letter.index() == *index {
                    letter.inverse()
                } else {
                    letter
                };
                push_reduced(buffer, image);
            }
            ElementaryMove::RightMultiply { target, mult, sign } => {
                if letter.index() != *target {
                    push_reduced(buffer, letter);
                } else {
                    match letter.sign() {
                        // x_t -> x_t · x_s^sign
                        Sign::Plus => {
                            push_reduced(buffer, letter);
                            push_reduced(buffer, Letter::new(*mult, *sign));
                        }
                        // x_t^-1 -> x_s^-sign · x_t^-1
                        Sign::Minus => {
                            push_reduced(buffer, Letter::new(*mult, sign.flip()));
                            push_reduced(buffer, letter);
                        }
                    }
                }
            }
        }
    }
}

/// An automorphism of the free group on a fixed alphabet, stored as the
/// sequence of elementary moves that defines it (applied left to right).
///
/// Keeping the move sequence makes every sampled automorphism invertible by
/// construction and gives it a faithful serialized form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    alphabet: Alphabet,
    moves: Vec<ElementaryMove>,
}

impl Automorphism {
    /// The identity automorphism (no moves).
    #[must_use]
    pub fn identity(alphabet: Alphabet) -> Automorphism {
        Automorphism {
            alphabet,
            moves: Vec::new(),
        }
    }

    /// Wraps a move sequence after validating every move against `alphabet`.
    pub fn from_moves(alphabet: Alphabet, moves: Vec<ElementaryMove>) -> Result<Automorphism> {
        for one in &moves {
            one.check(alphabet)?;
        }
        Ok(Automorphism { alphabet, moves })
    }

    #[must_use]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[must_use]
    pub fn moves(&self) -> &[ElementaryMove] {
        &self.moves
    }

    /// Number of elementary moves (the sampling depth that produced it).
    #[must_use]
    pub fn depth(&self) -> usize {
        self.moves.len()
    }

    #[must_use]
    pub fn is_identity_sequence(&self) -> bool {
        self.moves.is_empty()
    }

    /// The image of `word`, reduced. Errors if `word` lives in a different
    /// alphabet.
    pub fn apply(&self, word: &Word) -> Result<Word> {
        if word.alphabet() != self.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.rank(),
                right: word.alphabet().rank(),
            });
        }
        let mut current = word.clone();
        for one in &self.moves {
            let mut buffer = Vec::with_capacity(current.len() * 2);
            for &letter in current.letters() {
                one.apply_letter(letter, &mut buffer);
            }
            current = Word::from_reduced_letters(self.alphabet, buffer);
        }
        Ok(current)
    }

    /// The inverse automorphism: moves reversed and individually undone.
    #[must_use]
    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            alphabet: self.alphabet,
            moves: self
                .moves
                .iter()
                .rev()
                .map(ElementaryMove::inverse)
                .collect(),
        }
    }

    /// Applies the automorphism to each generator, giving its basis images.
    #[must_use]
    pub fn generator_images(&self) -> Vec<Word> {
        (0..self.alphabet.rank())
            .map(|index| {
                let letter = Letter::new(index, Sign::Plus);
                let gen = Word::from_reduced_letters(self.alphabet, vec![letter]);
                self.apply(&gen).expect("generator lives in the alphabet")
            })
            .collect()
    }

    /// Samples a uniform sequence of `depth` elementary moves.
    ///
    /// The move family is drawn uniformly among the three kinds, then its
    /// parameters uniformly among the valid choices. The same `seed` always
    /// yields the same automorphism, on every platform.
    #[must_use]
    pub fn sample(alphabet: Alphabet, depth: usize, seed: u64) -> Automorphism {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Automorphism::sample_with(alphabet, depth, &mut rng)
    }

    /// Like [`Automorphism::sample`], drawing from a caller-owned generator.
    #[must_use]
    pub fn sample_with(alphabet: Alphabet, depth: usize, rng: &mut impl Rng) -> Automorphism {
        let moves = (0..depth).map(|_| sample_move(alphabet, rng)).collect();
        Automorphism { alphabet, moves }
    }
}

fn sample_move(alphabet: Alphabet, rng: &mut impl Rng) -> ElementaryMove {
    let rank = alphabet.rank();
    match rng.random_range(0..3u8) {
        0 => {
            let mut images: Vec<usize> = (0..rank).collect();
            images.shuffle(rng);
            ElementaryMove::Permute(images)
        }
        1 => ElementaryMove::InvertGen(rng.random_range(0..rank)),
        _ => {
            let target = rng.random_range(0..rank);
            let mut mult = rng.random_range(0..rank - 1);
            if mult >= target {
                mult += 1;
            }
            let sign = if rng.random::<bool>() {
                Sign::Plus
            } else {
                Sign::Minus
            };
            ElementaryMove::RightMultiply { target, mult, sign }
        }
    }
}

/// Serialized form of one move, using generator names instead of indices:
/// `{"kind":"perm","images":["b","a"]}`, `{"kind":"inv","gen":"a"}`,
/// `{"kind":"rmul","target":"a","mult":"b","sign":-1}`.
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
enum MoveRecord {
    #[serde(rename = "perm")]
    Perm { images: Vec<String> },
    #[serde(rename = "inv")]
    Inv { gen: String },
    #[serde(rename = "rmul")]
    Rmul {
        target: String,
        mult: String,
        sign: i8,
    },
}

fn index_name(index: usize) -> String {
    Alphabet::generator_name(index).to_string()
}

fn name_index(name: &str) -> std::result::Result<usize, String> {
    let mut chars = name.chars();
    match (chars.next(), chars.next()) {
        (Some(ch), None) if ch.is_ascii_lowercase() => Ok((ch as u8 - b'a') as usize),
        _ => Err(format!(
            "expected a single generator name a..z, got {name:?}"
        )),
    }
}

impl Serialize for ElementaryMove {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let record = match self {
            ElementaryMove::Permute(images) => MoveRecord::Perm {
                images: images.iter().map(|&i| index_name(i)).collect(),
            },
            ElementaryMove::InvertGen(index) => MoveRecord::Inv {
                gen: index_name(*index),
            },
            ElementaryMove::RightMultiply { target, mult, sign } => MoveRecord::Rmul {
                target: index_name(*target),
                mult: index_name(*mult),
                sign: sign.as_i8(),
            },
        };
        record.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ElementaryMove {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let record = MoveRecord::deserialize(deserializer)?;
        let parsed = match record {
            MoveRecord::Perm { images } => {
                let indices = images
                    .iter()
                    .map(|name| name_index(name))
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(D::Error::custom)?;
                ElementaryMove::Permute(indices)
            }
            MoveRecord::Inv { gen } => {
                ElementaryMove::InvertGen(name_index(&gen).map_err(D::Error::custom)?)
            }
            MoveRecord::Rmul { target, mult, sign } => ElementaryMove::RightMultiply {
                target: name_index(&target).map_err(D::Error::custom)?,
                mult: name_index(&mult).map_err(D::Error::custom)?,
                sign: Sign::from_i8(sign)
                    .ok_or_else(|| D::Error::custom(format!("sign must be 1 or -1, got {sign}")))?,
            },
        };
        Ok(parsed)
    }
}

impl Serialize for Automorphism {
    /// An automorphism serializes as the bare array of its move records.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.moves.serialize(serializer)
    }
}
