use rand::Rng;
use serde::Serialize;

use crate::alphabet::Sign;
use crate::automorphism::Automorphism;
use crate::error::{Error, Result};
use crate::sampling::rng_for;
use crate::word::{push_reduced, Word};

/// Substitutes `g` for the first generator and `h` for the second in a
/// two-generator template word, reducing as it goes.
///
/// The result lives in the alphabet of `g` and `h`, which may have any rank.
pub fn substitute(template: &Word, g: &Word, h: &Word) -> Result<Word> {
    if template.alphabet().rank() != 2 {
        return Err(Error::AlphabetMismatch {
            left: 2,
            right: template.alphabet().rank(),
        });
    }
    g.require_same_alphabet(h)?;
    let mut buffer = Vec::with_capacity(template.len() * g.len().max(h.len()).max(1));
    for &letter in template.letters() {
        let replacement = if letter.index() == 0 { g } else { h };
        match letter.sign() {
            Sign::Plus => {
                for &piece in replacement.letters() {
                    push_reduced(&mut buffer, piece);
                }
            }
            Sign::Minus => {
                for &piece in replacement.letters().iter().rev() {
                    push_reduced(&mut buffer, piece.inverse());
                }
            }
        }
    }
    Ok(Word::from_reduced_letters(g.alphabet(), buffer))
}

/// The reversal companion of a two-generator template: substitute the
/// inverses of both generators, then invert the whole word.
///
/// Concretely this rewrites the template back to front with every sign kept,
/// which is what the property tests pin down against this definition.
pub fn reverse_word(template: &Word) -> Result<Word> {
    let alphabet = template.alphabet();
    let a_inverse = Word::parse("A", alphabet)?;
    let b_inverse = Word::parse("B", alphabet)?;
    Ok(substitute(template, &a_inverse, &b_inverse)?.inverse())
}

/// Search budget for randomized falsification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Number of sampled automorphisms to try after the identity.
    pub trials: u32,
    /// Upper bound on the move-sequence depth of each sample.
    pub depth: u32,
    /// Base seed; every trial derives its own stream from it.
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            trials: 200,
            depth: 8,
            seed: 0,
        }
    }
}

/// What a falsification search concluded.
///
/// `Falsified` is a proof (the witness exhibits the length split);
/// `NoCounterexampleFound` is evidence bounded by the budget, not a proof.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    Falsified,
    NoCounterexampleFound,
}

/// An automorphism that separates the cyclic lengths of the two words.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub automorphism: Automorphism,
    #[serde(rename = "lenLeft")]
    pub len_left: usize,
    #[serde(rename = "lenRight")]
    pub len_right: usize,
}

/// Outcome of one equivalence check, with the budget echoed for replay.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceVerdict {
    pub status: VerdictStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub trials: u32,
    pub depth: u32,
    pub seed: u64,
}

impl EquivalenceVerdict {
    pub fn is_falsified(&self) -> bool {
        self.status == VerdictStatus::Falsified
    }
}

fn try_witness(phi: &Automorphism, left: &Word, right: &Word) -> Result<Option<Witness>> {
    let len_left = phi.apply(left)?.cyclic_length();
    let len_right = phi.apply(right)?.cyclic_length();
    if len_left == len_right {
        return Ok(None);
    }
    Ok(Some(Witness {
        automorphism: phi.clone(),
        len_left,
        len_right,
    }))
}

/// Searches for an automorphism under which the cyclic lengths of `left`
/// and `right` differ.
///
/// The identity is always tried first (it alone settles pairs of unequal
/// cyclic length); each subsequent trial draws a depth in `0..=budget.depth`
/// and a move sequence from its own derived stream, so verdicts are a pure
/// function of the inputs and the budget. The first falsifier found wins.
pub fn check_equivalence(left: &Word, right: &Word, budget: &Budget) -> Result<EquivalenceVerdict> {
    left.require_same_alphabet(right)?;
    let alphabet = left.alphabet();
    let mut witness = try_witness(&Automorphism::identity(alphabet), left, right)?;
    if witness.is_none() {
        for trial in 1..=budget.trials {
            let mut rng = rng_for(budget.seed, u64::from(trial));
            let depth = rng.random_range(0..=budget.depth);
            let phi = Automorphism::sample_with(alphabet, depth as usize, &mut rng);
            witness = try_witness(&phi, left, right)?;
            if witness.is_some() {
                break;
            }
        }
    }
    Ok(EquivalenceVerdict {
        status: if witness.is_some() {
            VerdictStatus::Falsified
        } else {
            VerdictStatus::NoCounterexampleFound
        },
        witness,
        trials: budget.trials,
        depth: budget.depth,
        seed: budget.seed,
    })
}

/// Checks a template word against its reversal companion over the pair
/// `(g, h)`: the two substituted words should never be separated.
pub fn verify_reversal_pair(
    template: &Word,
    g: &Word,
    h: &Word,
    budget: &Budget,
) -> Result<EquivalenceVerdict> {
    let left = substitute(template, g, h)?;
    let right = substitute(&reverse_word(template)?, g, h)?;
    check_equivalence(&left, &right, budget)
}

/// Checks `g^p·h^q` against `g^i·h^j` for a pair `(g, h)` supplied as
/// equivalent by construction.
///
/// All four exponents must be positive, the sums `p+q` and `i+j` must agree,
/// and `h` must not be the inverse of `g` — that pair genuinely breaks the
/// conclusion and is excluded rather than tested.
pub fn verify_power_pair(
    g: &Word,
    h: &Word,
    p: i64,
    q: i64,
    i: i64,
    j: i64,
    budget: &Budget,
) -> Result<EquivalenceVerdict> {
    g.require_same_alphabet(h)?;
    for exponent in [p, q, i, j] {
        if exponent < 1 {
            return Err(Error::NonPositiveExponent(exponent));
        }
    }
    if p + q != i + j {
        return Err(Error::ExponentSumMismatch {
            left: p + q,
            right: i + j,
        });
    }
    if *h == g.inverse() {
        return Err(Error::InversePairExcluded);
    }
    let left = g.power(p).concat(&h.power(q))?;
    let right = g.power(i).concat(&h.power(j))?;
    check_equivalence(&left, &right, budget)
}

/// Checks the template applied to `(g, h)` against the template applied to
/// `(h, g)` for a pair supplied as equivalent by construction.
pub fn verify_swap_pair(
    template: &Word,
    g: &Word,
    h: &Word,
    budget: &Budget,
) -> Result<EquivalenceVerdict> {
    let left = substitute(template, g, h)?;
    let right = substitute(template, h, g)?;
    check_equivalence(&left, &right, budget)
}

/// A recipe for producing a pair of words to feed the checker.
///
/// All variants except [`PairSource::UserSupplied`] construct pairs that are
/// equivalent by a structural guarantee, so a falsification of such a pair
/// is a genuine counterexample to the guarantee itself.
#[derive(Clone, Debug)]
pub enum PairSource {
    /// `(w(g,h), wᴿ(g,h))` for a two-generator template `w`.
    ReverseWord { template: Word, g: Word, h: Word },
    /// `(g^p·h^q, g^i·h^j)` for a base pair equivalent by construction.
    PowerPair {
        g: Word,
        h: Word,
        p: i64,
        q: i64,
        i: i64,
        j: i64,
    },
    /// `(g, c·g·c⁻¹)`: conjugation never changes any cyclic length.
    Conjugate { g: Word, conjugator: Word },
    /// `(g, g⁻¹)`: inversion never changes any cyclic length.
    InversePair { g: Word },
    /// An arbitrary pair with no guarantee attached.
    UserSupplied { g: Word, h: Word },
}

impl PairSource {
    /// Materializes the pair, validating the variant's own preconditions.
    pub fn pair(&self) -> Result<(Word, Word)> {
        match self {
            PairSource::ReverseWord { template, g, h } => {
                let left = substitute(template, g, h)?;
                let right = substitute(&reverse_word(template)?, g, h)?;
                Ok((left, right))
            }
            PairSource::PowerPair { g, h, p, q, i, j } => {
                g.require_same_alphabet(h)?;
                for exponent in [*p, *q, *i, *j] {
                    if exponent < 1 {
                        return Err(Error::NonPositiveExponent(exponent));
                    }
                }
                if p + q != i + j {
                    return Err(Error::ExponentSumMismatch {
                        left: p + q,
                        right: i + j,
                    });
                }
                if *h == g.inverse() {
                    return Err(Error::InversePairExcluded);
                }
                let left = g.power(*p).concat(&h.power(*q))?;
                let right = g.power(*i).concat(&h.power(*j))?;
                Ok((left, right))
            }
            PairSource::Conjugate { g, conjugator } => {
                let conjugate = conjugator.concat(g)?.concat(&conjugator.inverse())?;
                Ok((g.clone(), conjugate))
            }
            PairSource::InversePair { g } => Ok((g.clone(), g.inverse())),
            PairSource::UserSupplied { g, h } => {
                g.require_same_alphabet(h)?;
                Ok((g.clone(), h.clone()))
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            PairSource::ReverseWord { .. } => "reverse-word",
            PairSource::PowerPair { .. } => "power-pair",
            PairSource::Conjugate { .. } => "conjugate",
            PairSource::InversePair { .. } => "inverse-pair",
            PairSource::UserSupplied { .. } => "user",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::automorphism::ElementaryMove;

    fn rank2() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    fn w(text: &str) -> Word {
        Word::parse(text, rank2()).unwrap()
    }

    #[test]
    fn substitute_reduces_across_replacements() {
        // Template a²b⁻¹ over g = b, h = ab: b·b·(ab)⁻¹ = b·b·b⁻¹a⁻¹ = ba⁻¹.
        let result = substitute(&w("aaB"), &w("b"), &w("ab")).unwrap();
        assert_eq!(result.to_string(), "bA");

        // Substitution into a larger alphabet.
        let rank3 = Alphabet::new(3).unwrap();
        let g = Word::parse("c", rank3).unwrap();
        let h = Word::parse("ab", rank3).unwrap();
        let result = substitute(&w("ab"), &g, &h).unwrap();
        assert_eq!(result.to_string(), "cab");

        // The generators themselves reproduce the template.
        let result = substitute(&w("abAB"), &w("a"), &w("b")).unwrap();
        assert_eq!(result, w("abAB"));
    }

    #[test]
    fn substitute_rejects_bad_shapes() {
        let rank3 = Alphabet::new(3).unwrap();
        let template = Word::parse("abc", rank3).unwrap();
        assert_eq!(
            substitute(&template, &w("a"), &w("b")).unwrap_err(),
            Error::AlphabetMismatch { left: 2, right: 3 }
        );
        let g3 = Word::parse("a", rank3).unwrap();
        assert_eq!(
            substitute(&w("ab"), &g3, &w("b")).unwrap_err(),
            Error::AlphabetMismatch { left: 3, right: 2 }
        );
    }

    #[test]
    fn reverse_word_reads_back_to_front() {
        assert_eq!(reverse_word(&w("abaB")).unwrap().to_string(), "Baba");
        assert_eq!(reverse_word(&w("ab")).unwrap().to_string(), "ba");
        assert_eq!(reverse_word(&w("aaB")).unwrap().to_string(), "Baa");
        assert_eq!(reverse_word(&w("")).unwrap(), w(""));
        // Reversal is an involution.
        let template = w("abbAB");
        assert_eq!(
            reverse_word(&reverse_word(&template).unwrap()).unwrap(),
            template
        );
    }

    #[test]
    fn identity_separates_unequal_cyclic_lengths() {
        let verdict = check_equivalence(&w("a"), &w("aa"), &Budget::default()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Falsified);
        let witness = verdict.witness.unwrap();
        assert!(witness.automorphism.is_identity_sequence());
        assert_eq!(witness.len_left, 1);
        assert_eq!(witness.len_right, 2);
    }

    #[test]
    fn sampling_separates_ab_from_abi() {
        // ‖ab‖ = ‖ab⁻¹‖ = 2, so the identity cannot split this pair, but the
        // move b ↦ b·a⁻¹ sends them to lengths 1 and 3.
        let verdict = check_equivalence(&w("ab"), &w("aB"), &Budget::default()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Falsified);
        let witness = verdict.witness.unwrap();
        assert!(!witness.automorphism.is_identity_sequence());
        assert_ne!(witness.len_left, witness.len_right);

        // The known explicit witness, checked directly.
        let psi = Automorphism::from_moves(
            rank2(),
            vec![ElementaryMove::RightMultiply {
                target: 1,
                mult: 0,
                sign: Sign::Minus,
            }],
        )
        .unwrap();
        assert_eq!(psi.apply(&w("ab")).unwrap().cyclic_length(), 1);
        assert_eq!(psi.apply(&w("aB")).unwrap().cyclic_length(), 3);
    }

    #[test]
    fn conjugates_survive_the_search() {
        // c·w·c⁻¹ has the same cyclic length as w under every automorphism,
        // so no budget can falsify a conjugate pair.
        let budget = Budget {
            trials: 60,
            ..Budget::default()
        };
        let g = w("abb");
        let conjugate = w("ba").concat(&g).unwrap().concat(&w("AB")).unwrap();
        let verdict = check_equivalence(&g, &conjugate, &budget).unwrap();
        assert_eq!(verdict.status, VerdictStatus::NoCounterexampleFound);
        assert!(verdict.witness.is_none());
        assert_eq!(verdict.trials, 60);
    }

    #[test]
    fn verify_power_pair_validates_inputs() {
        let g = w("a");
        let h = w("baB");
        let budget = Budget {
            trials: 40,
            ..Budget::default()
        };
        assert_eq!(
            verify_power_pair(&g, &h, 0, 4, 2, 2, &budget).unwrap_err(),
            Error::NonPositiveExponent(0)
        );
        assert_eq!(
            verify_power_pair(&g, &h, 1, 2, 2, 2, &budget).unwrap_err(),
            Error::ExponentSumMismatch { left: 3, right: 4 }
        );
        assert_eq!(
            verify_power_pair(&w("ab"), &w("BA"), 1, 3, 2, 2, &budget).unwrap_err(),
            Error::InversePairExcluded
        );
        let verdict = verify_power_pair(&g, &h, 1, 3, 2, 2, &budget).unwrap();
        assert_eq!(verdict.status, VerdictStatus::NoCounterexampleFound);
    }

    #[test]
    fn pair_sources_materialize() {
        let source = PairSource::Conjugate {
            g: w("ab"),
            conjugator: w("bA"),
        };
        let (left, right) = source.pair().unwrap();
        assert_eq!(left, w("ab"));
        assert_eq!(
            right,
            w("bA").concat(&w("ab")).unwrap().concat(&w("aB")).unwrap()
        );
        assert_eq!(source.kind_name(), "conjugate");

        let source = PairSource::InversePair { g: w("abb") };
        let (left, right) = source.pair().unwrap();
        assert_eq!(left, w("abb"));
        assert_eq!(right, w("BBA"));

        let source = PairSource::ReverseWord {
            template: w("aab"),
            g: w("ab"),
            h: w("ba"),
        };
        let (left, right) = source.pair().unwrap();
        assert_eq!(left, substitute(&w("aab"), &w("ab"), &w("ba")).unwrap());
        assert_eq!(right, substitute(&w("baa"), &w("ab"), &w("ba")).unwrap());

        let source = PairSource::PowerPair {
            g: w("a"),
            h: w("a"),
            p: 1,
            q: 2,
            i: 2,
            j: 1,
        };
        let (left, right) = source.pair().unwrap();
        assert_eq!(left, w("aaa"));
        assert_eq!(right, w("aaa"));

        let source = PairSource::PowerPair {
            g: w("a"),
            h: w("A"),
            p: 1,
            q: 1,
            i: 1,
            j: 1,
        };
        assert_eq!(source.pair().unwrap_err(), Error::InversePairExcluded);
    }

    #[test]
    fn verdict_serialization_shape() {
        let verdict = check_equivalence(&w("a"), &w("aa"), &Budget::default()).unwrap();
        let json = serde_json::to_value(&verdict).unwrap();
        assert_eq!(json["status"], "falsified");
        assert_eq!(json["witness"]["lenLeft"], 1);
        assert_eq!(json["witness"]["lenRight"], 2);
        assert_eq!(json["witness"]["automorphism"], serde_json::json!([]));
        assert_eq!(json["trials"], 200);
        assert_eq!(json["depth"], 8);
        assert_eq!(json["seed"], 0);

        let verdict = check_equivalence(
            &w("ab"),
            &w("ba"),
            &Budget {
                trials: 25,
                depth: 6,
                seed: 7,
            },
        )
        .unwrap();
        let json = serde_json::to_value(&verdict).unwrap();
        assert_eq!(json["status"], "no-counterexample-found");
        assert!(json.get("witness").is_none());
    }
}
