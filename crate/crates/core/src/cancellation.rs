use crate::alphabet::Letter;
use crate::automorphism::Automorphism;
use crate::error::{Error, Result};
use crate::pattern::{pair_counts, Pattern};
use crate::word::Word;

/// Outcome of reducing a concatenation of factor words while remembering
/// which factor each letter came from.
pub(crate) struct ProvenanceReduction {
    /// Surviving letters with the index of the factor they came from.
    pub survivors: Vec<(Letter, usize)>,
    /// Number of letters each factor lost to cancellation.
    pub deleted: Vec<usize>,
}

/// Reduces `factors[0] · factors[1] · …` with per-factor letter provenance.
///
/// "Factor k was completely cancelled" is then the concrete statement
/// `deleted[k] == factors[k].len()`.
pub(crate) fn reduce_with_provenance(factors: &[&Word]) -> ProvenanceReduction {
    let mut survivors: Vec<(Letter, usize)> = Vec::new();
    let mut deleted = vec![0usize; factors.len()];
    for (factor_index, factor) in factors.iter().enumerate() {
        for &letter in factor.letters() {
            match survivors.last() {
                Some(&(top, top_index)) if top.cancels(letter) => {
                    survivors.pop();
                    deleted[top_index] += 1;
                    deleted[factor_index] += 1;
                }
                _ => survivors.push((letter, factor_index)),
            }
        }
    }
    ProvenanceReduction { survivors, deleted }
}

/// Which image's carrier was completely absorbed in a [`CaseClass::Case3`]
/// configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbsorbedCarrier {
    /// The first word's carrier `A`: `A⁻¹` vanished in `A⁻¹·B`, so `B = A·extension`.
    OfFirst,
    /// The second word's carrier `B`: it vanished in `A⁻¹·B`, so `A = B·extension`.
    OfSecond,
}

/// How the carriers of two decomposed images interact in the product
/// `A⁻¹ · B` of their conjugating prefixes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseClass {
    /// Neither carrier is completely cancelled: a nonempty stub of each
    /// survives between the cores.
    Case1,
    /// The carriers are equal (`A = B`), the product collapses entirely; the
    /// cores meet head-on.
    Case2,
    /// Exactly one carrier is completely absorbed by the other; `extension`
    /// is the surviving tail of the longer carrier.
    Case3 {
        absorbed: AbsorbedCarrier,
        extension: Word,
    },
}

/// Classifies the carrier interaction for the images of `g` and `h` under
/// `phi`. Both images must have nonempty cyclic cores.
pub fn classify_case(g: &Word, h: &Word, phi: &Automorphism) -> Result<CaseClass> {
    let image_g = phi.apply(g)?;
    let image_h = phi.apply(h)?;
    let dec_g = image_g.cyclic_decomposition();
    let dec_h = image_h.cyclic_decomposition();
    if dec_g.core().is_empty() || dec_h.core().is_empty() {
        return Err(Error::EmptyCore);
    }
    classify_carriers(dec_g.carrier(), dec_h.carrier())
}

/// Case analysis on the reduced product `first⁻¹ · second` of two carriers.
pub(crate) fn classify_carriers(first: &Word, second: &Word) -> Result<CaseClass> {
    first.require_same_alphabet(second)?;
    let first_inverse = first.inverse();
    let reduction = reduce_with_provenance(&[&first_inverse, second]);
    let first_gone = reduction.deleted[0] == first.len();
    let second_gone = reduction.deleted[1] == second.len();
    let class = match (first_gone, second_gone) {
        (true, true) => CaseClass::Case2,
        (false, false) => CaseClass::Case1,
        (true, false) => CaseClass::Case3 {
            absorbed: AbsorbedCarrier::OfFirst,
            extension: survivors_of(&reduction, 1, second.alphabet()),
        },
        (false, true) => CaseClass::Case3 {
            absorbed: AbsorbedCarrier::OfSecond,
            // The survivors of `first⁻¹` are the inverse of the tail of `first`.
            extension: survivors_of(&reduction, 0, first.alphabet()).inverse(),
        },
    };
    Ok(class)
}

fn survivors_of(
    reduction: &ProvenanceReduction,
    factor: usize,
    alphabet: crate::alphabet::Alphabet,
) -> Word {
    let letters = reduction
        .survivors
        .iter()
        .filter(|&&(_, index)| index == factor)
        .map(|&(letter, _)| letter)
        .collect();
    Word::from_reduced_letters(alphabet, letters)
}

/// The number of letters that cancel when `left · right` is reduced.
/// Always even in spirit (each cancellation removes one letter from each
/// side); recorded as the total drop `|left| + |right| - |left·right|`.
fn cancelled_between(left: &Word, right: &Word) -> Result<usize> {
    Ok(left.len() + right.len() - left.concat(right)?.len())
}

/// Cancellation lengths for all eight signed orders of two core words.
///
/// Field names mirror the products they measure, with `i` marking an
/// inverse: `xy` is the cancellation in `X̄·Ȳ`, `xiyi` the cancellation in
/// `X̄⁻¹·Ȳ⁻¹`, `yix` the cancellation in `Ȳ⁻¹·X̄`, and so on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CancellationTable {
    pub xy: usize,
    pub yx: usize,
    pub xiyi: usize,
    pub yixi: usize,
    pub xyi: usize,
    pub yxi: usize,
    pub xiy: usize,
    pub yix: usize,
}

/// Computes the eight pairwise cancellation lengths of `x_core` and `y_core`.
pub fn cancellation_table(x_core: &Word, y_core: &Word) -> Result<CancellationTable> {
    let xi = x_core.inverse();
    let yi = y_core.inverse();
    Ok(CancellationTable {
        xy: cancelled_between(x_core, y_core)?,
        yx: cancelled_between(y_core, x_core)?,
        xiyi: cancelled_between(&xi, &yi)?,
        yixi: cancelled_between(&yi, &xi)?,
        xyi: cancelled_between(x_core, &yi)?,
        yxi: cancelled_between(y_core, &xi)?,
        xiy: cancelled_between(&xi, y_core)?,
        yix: cancelled_between(&yi, x_core)?,
    })
}

/// Checks that `carrier · core · carrier⁻¹` is reduced as written.
pub(crate) fn require_framed(carrier: &Word, core: &Word) -> Result<()> {
    carrier.require_same_alphabet(core)?;
    if let (Some(edge), Some(head), Some(tail)) = (carrier.last(), core.first(), core.last()) {
        // Left seam: `edge · head` must not cancel. Right seam: the first
        // letter of `carrier⁻¹` is `edge⁻¹`, so `tail` must differ from `edge`.
        if head.cancels(edge) || tail == edge {
            return Err(Error::NotReducedAsWritten);
        }
    }
    Ok(())
}

fn require_core(core: &Word) -> Result<()> {
    if core.is_empty() {
        return Err(Error::EmptyCore);
    }
    if !core.is_cyclically_reduced() {
        return Err(Error::NotCyclicallyReduced);
    }
    Ok(())
}

fn require_core_pair(x_core: &Word, y_core: &Word) -> Result<()> {
    x_core.require_same_alphabet(y_core)?;
    require_core(x_core)?;
    require_core(y_core)?;
    if x_core.len() != y_core.len() {
        return Err(Error::CoreLengthMismatch {
            left: x_core.len(),
            right: y_core.len(),
        });
    }
    if x_core == y_core || *x_core == y_core.inverse() {
        return Err(Error::CoreCollision);
    }
    Ok(())
}

/// Cyclic length of the pattern expanded over conjugated cores whose
/// carriers survive partially (the [`CaseClass::Case1`] shape).
///
/// With `X = A·X̄·A⁻¹`, `Y = B·Ȳ·B⁻¹` and neither carrier completely
/// cancelled in `A⁻¹·B`, every junction word survives intact between the
/// core powers, so the length is exact bookkeeping:
/// `a_weight·|X̄| + b_weight·|Ȳ| + k·|A⁻¹B| + k·|B⁻¹A|`.
pub fn case1_length(
    x_core: &Word,
    y_core: &Word,
    x_carrier: &Word,
    y_carrier: &Word,
    pattern: &Pattern,
) -> Result<usize> {
    if !pattern.is_block_form() {
        return Err(Error::DegeneratePattern);
    }
    require_core(x_core)?;
    require_core(y_core)?;
    x_core.require_same_alphabet(y_core)?;
    require_framed(x_carrier, x_core)?;
    require_framed(y_carrier, y_core)?;
    if classify_carriers(x_carrier, y_carrier)? != CaseClass::Case1 {
        return Err(Error::CaseMismatch);
    }
    let junction = x_carrier.inverse().concat(y_carrier)?;
    let reverse_junction = y_carrier.inverse().concat(x_carrier)?;
    let k = pattern.block_count();
    Ok(pattern.a_weight() * x_core.len()
        + pattern.b_weight() * y_core.len()
        + k * junction.len()
        + k * reverse_junction.len())
}

/// Cyclic length of the pattern expanded directly over two touching cores
/// (the [`CaseClass::Case2`] shape, equal carriers).
///
/// Requires cyclically reduced cores of equal length that are neither equal
/// nor mutually inverse. Under those premises every junction of the expanded
/// cycle cancels independently (no factor is ever consumed whole — see
/// [`claim_holds`]), so the length is the expanded letter count minus one
/// cancellation term per junction:
/// `a_weight·n + b_weight·n - Σ count(junction)·cancellation(junction)`.
pub fn case2_length(x_core: &Word, y_core: &Word, pattern: &Pattern) -> Result<usize> {
    if !pattern.is_block_form() {
        return Err(Error::DegeneratePattern);
    }
    require_core_pair(x_core, y_core)?;
    let counts = pair_counts(pattern)?;
    let table = cancellation_table(x_core, y_core)?;
    let expanded = (pattern.a_weight() * x_core.len() + pattern.b_weight() * y_core.len()) as i64;
    let cancelled = (table.xy * counts.ab
        + table.yx * counts.ba
        + table.xiyi * counts.aibi
        + table.yixi * counts.biai
        + table.xyi * counts.abi
        + table.yxi * counts.bai
        + table.xiy * counts.aib
        + table.yix * counts.bia) as i64;
    let total = expanded - cancelled;
    usize::try_from(total).map_err(|_| Error::CaseMismatch)
}

/// Verifies, for one pair of cores, that no sandwiched factor is ever
/// consumed whole.
///
/// For every choice of signs, reducing `u^±1 · v^±1 · u^±1` (and the
/// mirrored `v^±1 · u^±1 · v^±1`) must delete strictly fewer letters of the
/// middle factor than its length. Requires the same premises as
/// [`case2_length`]; under them this always holds, which is exactly what
/// licenses the per-junction bookkeeping.
pub fn claim_holds(x_core: &Word, y_core: &Word) -> Result<bool> {
    require_core_pair(x_core, y_core)?;
    for (outer, middle) in [(x_core, y_core), (y_core, x_core)] {
        let outer_inv = outer.inverse();
        let middle_inv = middle.inverse();
        for first in [outer, &outer_inv] {
            for mid in [middle, &middle_inv] {
                for last in [outer, &outer_inv] {
                    let reduction = reduce_with_provenance(&[first, mid, last]);
                    if reduction.deleted[1] >= mid.len() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The result of absorbing a carrier tail into a core: conjugating a
/// cyclically reduced `core` by `extension` rotates it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case3Split {
    /// Prefix of the extension eaten by cancellation against core powers.
    pub absorbed: Word,
    /// Suffix of the extension that survives on both sides of the rotated core.
    pub remainder: Word,
    /// `absorbed⁻¹ · core · absorbed` reduced: a rotation of `core`.
    pub rotated_core: Word,
}

/// Splits `extension` into the part absorbed by `extension⁻¹ · core · extension`
/// and the surviving remainder, and computes the rotated core.
///
/// Cancellation can occur at only one seam of the product when `core` is
/// cyclically reduced; a product that cancels at both seams is rejected.
pub fn case3_split(core: &Word, extension: &Word) -> Result<Case3Split> {
    core.require_same_alphabet(extension)?;
    if core.is_empty() {
        return Err(Error::EmptyCore);
    }
    if extension.is_empty() {
        return Err(Error::EmptyWord);
    }
    let head = extension.first().expect("nonempty");
    let left_seam = Some(head) == core.first(); // extension⁻¹ ends with head⁻¹
    let right_seam = core.last().is_some_and(|tail| head.cancels(tail));
    if left_seam && right_seam {
        return Err(Error::TwoSidedCancellation);
    }
    let extension_inv = extension.inverse();
    let reduction = reduce_with_provenance(&[&extension_inv, core, extension]);
    // Letters of the extension disappear only on the cancelling side: as a
    // suffix of `extension⁻¹` (left seam) or a prefix of `extension` (right
    // seam); both counts equal the absorbed length, and at most one is nonzero
    // alongside wrap-around deletions, so the larger one is the split point.
    let absorbed_len = reduction.deleted[0].max(reduction.deleted[2]);
    let letters = extension.letters();
    let absorbed = Word::from_reduced_letters(core.alphabet(), letters[..absorbed_len].to_vec());
    let remainder = Word::from_reduced_letters(core.alphabet(), letters[absorbed_len..].to_vec());
    let rotated_core = absorbed.inverse().concat(core)?.concat(&absorbed)?;
    Ok(Case3Split {
        absorbed,
        remainder,
        rotated_core,
    })
}
