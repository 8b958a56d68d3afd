use serde::Serialize;

use crate::alphabet::{Alphabet, Letter, Sign};
use crate::cyclic::CyclicWord;
use crate::error::{Error, Result};
use crate::word::Word;

/// One block of a two-generator cyclic word: a maximal run of the first
/// generator followed by a maximal run of the second, recorded as signed
/// exponents. Both exponents are nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Signed exponent of the `a`-run.
    pub a_exp: i64,
    /// Signed exponent of the `b`-run.
    pub b_exp: i64,
}

/// The run structure of a two-generator cyclic word.
///
/// A cyclic word over `{a, b}` either is empty, uses a single generator, or
/// decomposes into an alternating sequence of `a`-runs and `b`-runs. The
/// block form starts at an `a`-run boundary of the canonical rotation, which
/// makes the decomposition a deterministic function of the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Pattern {
    /// The empty cyclic word.
    Trivial,
    /// A power of one generator: `index^exponent` with `exponent != 0`.
    Power { index: usize, exponent: i64 },
    /// Alternating runs of both generators, at least one block.
    Blocks(Vec<Block>),
}

impl Pattern {
    /// Decomposes the cyclic word of `word` into runs.
    ///
    /// `word` must be over a rank-2 alphabet; the decomposition reads the
    /// canonical rotation of its cyclic core.
    #[must_use]
    pub fn of(word: &Word) -> Pattern {
        assert_eq!(
            word.alphabet().rank(),
            2,
            "block decomposition reads two-generator words"
        );
        let core = CyclicWord::of(word);
        if core.is_empty() {
            return Pattern::Trivial;
        }
        let canonical = core.canonical();
        let letters = canonical.letters();
        let n = letters.len();
        if letters.iter().all(|l| l.index() == letters[0].index()) {
            // A cyclically reduced one-generator word has a uniform sign.
            let magnitude = n as i64;
            let exponent = match letters[0].sign() {
                Sign::Plus => magnitude,
                Sign::Minus => -magnitude,
            };
            return Pattern::Power {
                index: letters[0].index(),
                exponent,
            };
        }
        // Both generators occur. The canonical rotation starts at the head of
        // an `a`-run (the least letter is an `a`-letter and the least
        // rotation starts where its run starts), but find the boundary
        // explicitly rather than rely on that.
        let start = (0..n)
            .find(|&i| letters[i].index() == 0 && letters[(i + n - 1) % n].index() == 1)
            .expect("a two-generator cyclic word has an a-run boundary");
        let mut runs: Vec<(usize, i64)> = Vec::new();
        for k in 0..n {
            let letter = letters[(start + k) % n];
            let step = match letter.sign() {
                Sign::Plus => 1,
                Sign::Minus => -1,
            };
            match runs.last_mut() {
                Some((index, exp)) if *index == letter.index() => *exp += step,
                _ => runs.push((letter.index(), step)),
            }
        }
        debug_assert!(runs.len() % 2 == 0, "runs alternate starting at an a-run");
        let blocks = runs
            .chunks_exact(2)
            .map(|pair| {
                debug_assert_eq!(pair[0].0, 0);
                debug_assert_eq!(pair[1].0, 1);
                Block {
                    a_exp: pair[0].1,
                    b_exp: pair[1].1,
                }
            })
            .collect();
        Pattern::Blocks(blocks)
    }

    /// Whether the pattern has the alternating-run (block) form.
    #[must_use]
    pub fn is_block_form(&self) -> bool {
        matches!(self, Pattern::Blocks(_))
    }

    /// Number of blocks; zero for the degenerate forms.
    #[must_use]
    pub fn block_count(&self) -> usize {
        match self {
            Pattern::Blocks(blocks) => blocks.len(),
            _ => 0,
        }
    }

    /// Total unsigned `a`-exponent: the number of `a`-letters of the cycle.
    #[must_use]
    pub fn a_weight(&self) -> usize {
        match self {
            Pattern::Trivial => 0,
            Pattern::Power { index, exponent } => {
                if *index == 0 {
                    exponent.unsigned_abs() as usize
                } else {
                    0
                }
            }
            Pattern::Blocks(blocks) => blocks.iter().map(|b| b.a_exp.unsigned_abs() as usize).sum(),
        }
    }

    /// Total unsigned `b`-exponent: the number of `b`-letters of the cycle.
    #[must_use]
    pub fn b_weight(&self) -> usize {
        match self {
            Pattern::Trivial => 0,
            Pattern::Power { index, exponent } => {
                if *index == 1 {
                    exponent.unsigned_abs() as usize
                } else {
                    0
                }
            }
            Pattern::Blocks(blocks) => blocks.iter().map(|b| b.b_exp.unsigned_abs() as usize).sum(),
        }
    }

    /// Expands the runs back into a concrete cyclically reduced word over
    /// `alphabet` (which must have rank 2).
    #[must_use]
    pub fn expand(&self, alphabet: Alphabet) -> Word {
        assert_eq!(alphabet.rank(), 2, "patterns expand over two generators");
        let mut letters = Vec::new();
        let mut push_run = |index: usize, exponent: i64| {
            let sign = if exponent >= 0 {
                Sign::Plus
            } else {
                Sign::Minus
            };
            for _ in 0..exponent.unsigned_abs() {
                letters.push(Letter::new(index, sign));
            }
        };
        match self {
            Pattern::Trivial => {}
            Pattern::Power { index, exponent } => push_run(*index, *exponent),
            Pattern::Blocks(blocks) => {
                for block in blocks {
                    push_run(0, block.a_exp);
                    push_run(1, block.b_exp);
                }
            }
        }
        // Runs of a single sign never cancel internally, and adjacent runs
        // use different generators, so the expansion is already reduced.
        Word::from_reduced_letters(alphabet, letters)
    }
}

/// Counts of the eight mixed two-letter junctions read once around a
/// two-generator cyclic word, wrap-around pair included.
///
/// Field names follow compact notation with `i` marking an inverse: `ab`
/// counts junctions `a·b`, `aibi` counts `a⁻¹·b⁻¹`, `abi` counts `a·b⁻¹`,
/// and so on. Same-generator junctions (`a·a`, `b⁻¹·b⁻¹`, …) are not
/// counted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PairCountTable {
    pub ab: usize,
    pub ba: usize,
    pub aibi: usize,
    pub biai: usize,
    pub abi: usize,
    pub bai: usize,
    pub aib: usize,
    pub bia: usize,
    /// `(abi + aib) - (bai + bia)`: the imbalance between mixed-sign
    /// junctions read a-first and b-first. Always even.
    pub skew: i64,
}

impl PairCountTable {
    /// Junctions where an `a`-run hands over to a `b`-run.
    #[must_use]
    pub fn forward_total(&self) -> usize {
        self.ab + self.aibi + self.abi + self.aib
    }

    /// Junctions where a `b`-run hands over to an `a`-run.
    #[must_use]
    pub fn backward_total(&self) -> usize {
        self.ba + self.biai + self.bai + self.bia
    }
}

/// Tallies the mixed junctions of a block-form pattern.
///
/// Degenerate patterns (empty or one-generator cycles) have no mixed
/// junctions and are rejected.
pub fn pair_counts(pattern: &Pattern) -> Result<PairCountTable> {
    if !pattern.is_block_form() {
        return Err(Error::DegeneratePattern);
    }
    let alphabet = Alphabet::new(2).expect("rank 2 is valid");
    let word = pattern.expand(alphabet);
    let letters = word.letters();
    let n = letters.len();
    let mut table = PairCountTable::default();
    for i in 0..n {
        let first = letters[i];
        let second = letters[(i + 1) % n];
        if first.index() == second.index() {
            continue;
        }
        let a_first = first.index() == 0;
        let slot = match (a_first, first.sign(), second.sign()) {
            (true, Sign::Plus, Sign::Plus) => &mut table.ab,
            (false, Sign::Plus, Sign::Plus) => &mut table.ba,
            (true, Sign::Minus, Sign::Minus) => &mut table.aibi,
            (false, Sign::Minus, Sign::Minus) => &mut table.biai,
            (true, Sign::Plus, Sign::Minus) => &mut table.abi,
            (false, Sign::Plus, Sign::Minus) => &mut table.bai,
            (true, Sign::Minus, Sign::Plus) => &mut table.aib,
            (false, Sign::Minus, Sign::Plus) => &mut table.bia,
        };
        *slot += 1;
    }
    table.skew = (table.abi + table.aib) as i64 - (table.bai + table.bia) as i64;
    Ok(table)
}
