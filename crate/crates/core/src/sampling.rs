use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Alphabet, Letter, Sign};
use crate::cancellation::{classify_carriers, require_framed, CaseClass};
use crate::pattern::Pattern;
use crate::word::Word;

/// Derives a decorrelated child seed from a base seed and a stream index.
///
/// This is the splitmix64 output function applied to `seed + index·golden`,
/// so nearby indices yield unrelated streams and every derived value is a
/// pure function of `(seed, index)`.
#[must_use]
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A deterministic generator for the given base seed and stream index.
#[must_use]
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix_seed(seed, index))
}

fn letter_from_code(code: usize) -> Letter {
    let sign = if code % 2 == 0 {
        Sign::Plus
    } else {
        Sign::Minus
    };
    Letter::new(code / 2, sign)
}

fn letter_code(letter: Letter) -> usize {
    2 * letter.index() + usize::from(letter.sign() == Sign::Minus)
}

/// A uniformly random signed letter of the alphabet.
pub fn random_letter(alphabet: Alphabet, rng: &mut impl Rng) -> Letter {
    letter_from_code(rng.random_range(0..2 * alphabet.rank()))
}

/// A uniformly random freely reduced word of exactly `len` letters.
///
/// Each letter after the first is uniform over the `2·rank − 1` letters that
/// do not cancel its predecessor.
pub fn random_reduced_word(alphabet: Alphabet, len: usize, rng: &mut impl Rng) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let letter = match letters.last() {
            None => random_letter(alphabet, rng),
            Some(&last) => {
                let banned = letter_code(last.inverse());
                let mut code = rng.random_range(0..2 * alphabet.rank() - 1);
                if code >= banned {
                    code += 1;
                }
                letter_from_code(code)
            }
        };
        letters.push(letter);
    }
    Word::from_reduced_letters(alphabet, letters)
}

/// A random cyclically reduced word of exactly `len` letters (rejection
/// sampled from [`random_reduced_word`]).
pub fn random_cyclically_reduced_word(alphabet: Alphabet, len: usize, rng: &mut impl Rng) -> Word {
    loop {
        let word = random_reduced_word(alphabet, len, rng);
        if word.is_cyclically_reduced() {
            return word;
        }
    }
}

/// A random cyclically reduced two-generator word of exactly `len` letters
/// that uses both generators, so its run decomposition is in block form.
/// Requires `len >= 2`.
pub fn random_block_word(len: usize, rng: &mut impl Rng) -> Word {
    debug_assert!(
        len >= 2,
        "block words need at least one letter of each generator"
    );
    let alphabet = Alphabet::new(2).expect("rank 2 is valid");
    loop {
        let word = random_cyclically_reduced_word(alphabet, len, rng);
        let has_a = word.letters().iter().any(|l| l.index() == 0);
        let has_b = word.letters().iter().any(|l| l.index() == 1);
        if has_a && has_b {
            return word;
        }
    }
}

/// A sampled configuration of the partially-surviving-carrier shape: two
/// framed conjugates whose carriers keep a nonempty stub of each other, plus
/// a block-form pattern to expand over them.
#[derive(Clone, Debug)]
pub struct Case1Config {
    pub pattern: Pattern,
    pub x_core: Word,
    pub y_core: Word,
    pub x_carrier: Word,
    pub y_carrier: Word,
}

/// Draws a valid [`Case1Config`]: cores of length 1–6, carriers of length
/// 1–4, patterns from block words of length 2–10. Rejection keeps only
/// framed decompositions whose carrier product leaves both stubs alive.
pub fn sample_case1_config(rng: &mut impl Rng) -> Case1Config {
    let alphabet = Alphabet::new(2).expect("rank 2 is valid");
    let pattern_len = rng.random_range(2..=10);
    let pattern = Pattern::of(&random_block_word(pattern_len, rng));
    loop {
        let x_core = random_cyclically_reduced_word(alphabet, rng.random_range(1..=6), rng);
        let y_core = random_cyclically_reduced_word(alphabet, rng.random_range(1..=6), rng);
        let x_carrier = random_reduced_word(alphabet, rng.random_range(1..=4), rng);
        let y_carrier = random_reduced_word(alphabet, rng.random_range(1..=4), rng);
        if require_framed(&x_carrier, &x_core).is_err()
            || require_framed(&y_carrier, &y_core).is_err()
        {
            continue;
        }
        if classify_carriers(&x_carrier, &y_carrier) != Ok(CaseClass::Case1) {
            continue;
        }
        return Case1Config {
            pattern: pattern.clone(),
            x_core,
            y_core,
            x_carrier,
            y_carrier,
        };
    }
}

/// A sampled configuration of the touching-cores shape: two cyclically
/// reduced words of equal length, neither equal nor mutually inverse, plus a
/// block-form pattern to expand over them.
#[derive(Clone, Debug)]
pub struct Case2Config {
    pub pattern: Pattern,
    pub x_core: Word,
    pub y_core: Word,
}

/// Draws a valid [`Case2Config`]: cores of one shared length 1–6, patterns
/// from block words of length 2–10.
pub fn sample_case2_config(rng: &mut impl Rng) -> Case2Config {
    let alphabet = Alphabet::new(2).expect("rank 2 is valid");
    let pattern_len = rng.random_range(2..=10);
    let pattern = Pattern::of(&random_block_word(pattern_len, rng));
    loop {
        let len = rng.random_range(1..=6);
        let x_core = random_cyclically_reduced_word(alphabet, len, rng);
        let y_core = random_cyclically_reduced_word(alphabet, len, rng);
        if x_core == y_core || x_core == y_core.inverse() {
            continue;
        }
        return Case2Config {
            pattern: pattern.clone(),
            x_core,
            y_core,
        };
    }
}
