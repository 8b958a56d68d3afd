// Shared oracles for the integration suites: deliberately naive
// re-implementations of the library's bookkeeping, used as independent
// routes to the same answers. Each test binary compiles this module
// separately and uses a different subset of it.
#![allow(dead_code)]

use fglab_core::{Alphabet, Letter, Pattern, Sign, Word};
use proptest::prelude::*;

/// Fixpoint free reduction: scan for any cancelling adjacent pair, delete
/// it, and restart from scratch until no pair is left.
pub fn naive_reduce(alphabet: Alphabet, letters: &[Letter]) -> Vec<Letter> {
    let mut current: Vec<Letter> = letters.to_vec();
    assert!(current.iter().all(|l| alphabet.contains(*l)));
    'scan: loop {
        for i in 0..current.len().saturating_sub(1) {
            if current[i].cancels(current[i + 1]) {
                current.drain(i..=i + 1);
                continue 'scan;
            }
        }
        return current;
    }
}

/// Cyclic length by peeling matching end letters off the reduced word.
pub fn naive_cyclic_length(word: &Word) -> usize {
    let mut letters = word.letters().to_vec();
    while letters.len() >= 2 && letters[0].cancels(*letters.last().unwrap()) {
        letters.pop();
        letters.remove(0);
    }
    letters.len()
}

/// The cyclic core as a plain letter vector, by the same peeling.
pub fn naive_cyclic_core(word: &Word) -> Vec<Letter> {
    let mut letters = word.letters().to_vec();
    while letters.len() >= 2 && letters[0].cancels(*letters.last().unwrap()) {
        letters.pop();
        letters.remove(0);
    }
    letters
}

/// Conjugacy oracle: two words are cyclically equal iff some rotation of
/// one core equals the other core.
pub fn naive_cyclically_equal(left: &Word, right: &Word) -> bool {
    let a = naive_cyclic_core(left);
    let b = naive_cyclic_core(right);
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|shift| (0..a.len()).all(|k| a[(shift + k) % a.len()] == b[k]))
}

/// Junction counts read directly off the given core letters (wrap included),
/// without any canonical rotation or run decomposition. Returns the eight
/// mixed-junction counts in the order
/// `(ab, ba, aibi, biai, abi, bai, aib, bia)`.
pub fn naive_junction_counts(core: &[Letter]) -> [usize; 8] {
    let n = core.len();
    let mut counts = [0usize; 8];
    for i in 0..n {
        let first = core[i];
        let second = core[(i + 1) % n];
        if first.index() == second.index() {
            continue;
        }
        let slot = match (first.index() == 0, first.sign(), second.sign()) {
            (true, Sign::Plus, Sign::Plus) => 0,
            (false, Sign::Plus, Sign::Plus) => 1,
            (true, Sign::Minus, Sign::Minus) => 2,
            (false, Sign::Minus, Sign::Minus) => 3,
            (true, Sign::Plus, Sign::Minus) => 4,
            (false, Sign::Plus, Sign::Minus) => 5,
            (true, Sign::Minus, Sign::Plus) => 6,
            (false, Sign::Minus, Sign::Plus) => 7,
        };
        counts[slot] += 1;
    }
    counts
}

/// How many extension letters cancel into powers of the core, by literal
/// comparison against the periodic continuation of the core (left seam) or
/// of its inverse (right seam). Independent of the library's
/// provenance-tracking reduction.
pub fn naive_absorbed_len(core: &Word, extension: &Word) -> usize {
    let n = core.len();
    assert!(n > 0);
    let core_letters = core.letters();
    let ext = extension.letters();
    let left = (0..ext.len())
        .take_while(|&k| ext[k] == core_letters[k % n])
        .count();
    let right = (0..ext.len())
        .take_while(|&k| ext[k] == core_letters[(2 * n - 1 - (k % n)) % n].inverse())
        .count();
    left.max(right)
}

/// Substitution oracle: splice the replacement letters without any
/// on-the-fly reduction, then reduce the whole thing in one pass.
pub fn naive_substitute(template: &Word, g: &Word, h: &Word) -> Word {
    let mut letters: Vec<Letter> = Vec::new();
    for &letter in template.letters() {
        let replacement = if letter.index() == 0 { g } else { h };
        match letter.sign() {
            Sign::Plus => letters.extend_from_slice(replacement.letters()),
            Sign::Minus => letters.extend(replacement.letters().iter().rev().map(|l| l.inverse())),
        }
    }
    Word::reduce(g.alphabet(), letters).expect("oracle letters are in rank")
}

/// Decodes `0, 1, 2, 3, …` as `a, a⁻¹, b, b⁻¹, …`.
pub fn letters_from_codes(codes: &[usize]) -> Vec<Letter> {
    codes
        .iter()
        .map(|&code| {
            Letter::new(
                code / 2,
                if code % 2 == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                },
            )
        })
        .collect()
}

/// A random freely reduced word over `alphabet`, at most `max_len` letters
/// before reduction.
pub fn arb_word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    let alphabet = Alphabet::new(rank).expect("test ranks are valid");
    proptest::collection::vec(0..2 * rank, 0..=max_len).prop_map(move |codes| {
        let letters = codes.into_iter().map(|code| {
            Letter::new(
                code / 2,
                if code % 2 == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                },
            )
        });
        Word::reduce(alphabet, letters).expect("codes are in rank")
    })
}

/// A random nonempty cyclically reduced word over `alphabet`.
pub fn arb_cyclically_reduced(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    arb_word(rank, max_len).prop_map(|word| {
        let core = word.cyclic_decomposition().core().clone();
        if core.is_empty() {
            Word::parse("ab", word.alphabet()).expect("rank is at least 2")
        } else {
            core
        }
    })
}

/// A random two-generator word whose cyclic core uses both generators, so
/// its run decomposition is in block form.
pub fn arb_block_word(max_len: usize) -> impl Strategy<Value = Word> {
    arb_cyclically_reduced(2, max_len).prop_map(|word| {
        let both = word.letters().iter().any(|l| l.index() == 0)
            && word.letters().iter().any(|l| l.index() == 1);
        if both {
            word
        } else {
            // Pad a one-generator draw into the nearest block word; the pad
            // letter uses the other generator, so nothing cancels.
            let pad_text = if word.letters()[0].index() == 0 {
                "b"
            } else {
                "a"
            };
            let pad = Word::parse(pad_text, word.alphabet()).expect("rank is at least 2");
            word.concat(&pad).expect("same alphabet")
        }
    })
}

/// A random block-form pattern.
pub fn arb_pattern(max_len: usize) -> impl Strategy<Value = Pattern> {
    arb_block_word(max_len).prop_map(|word| Pattern::of(&word))
}

/// A random cyclically reduced two-generator word of exactly `len` letters:
/// each drawn letter is nudged forward until it cancels neither its
/// predecessor nor (for the last position) the first letter.
pub fn arb_exact_core(len: usize) -> impl Strategy<Value = Word> {
    let alphabet = Alphabet::new(2).expect("rank 2 is valid");
    proptest::collection::vec(0usize..4, len).prop_map(move |codes| {
        let mut letters: Vec<Letter> = Vec::with_capacity(codes.len());
        for (i, &code) in codes.iter().enumerate() {
            let candidate = (0..4)
                .map(|bump| letters_from_codes(&[(code + bump) % 4])[0])
                .find(|&c| {
                    let clashes_previous = letters.last().is_some_and(|p| p.cancels(c));
                    let clashes_wrap =
                        i + 1 == codes.len() && !letters.is_empty() && letters[0].cancels(c);
                    !clashes_previous && !clashes_wrap
                })
                .expect("at most two of four letters are banned");
            letters.push(candidate);
        }
        Word::reduce(alphabet, letters).expect("letters are in rank")
    })
}

/// A random pair of cyclically reduced two-generator words sharing one
/// length in `1..=max_len`.
pub fn arb_core_pair(max_len: usize) -> impl Strategy<Value = (Word, Word)> {
    (1..=max_len).prop_flat_map(|len| (arb_exact_core(len), arb_exact_core(len)))
}
