use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::cancellation::{case1_length, case2_length, claim_holds};
use crate::equivalence::{check_equivalence, substitute, Budget, EquivalenceVerdict, PairSource};
use crate::error::{Error, Result};
use crate::pattern::{pair_counts, Pattern};
use crate::sampling::{
    mix_seed, random_cyclically_reduced_word, random_reduced_word, rng_for, sample_case1_config,
    sample_case2_config,
};
use crate::word::Word;

/// Version stamp carried by every report.
pub const SCHEMA_VERSION: u32 = 1;

/// Largest exponent drawn for power-pair instances.
pub const MAX_EXPONENT: i64 = 5;

const MAX_REPORTED_WITNESSES: usize = 20;
const MAX_REPORTED_FAILURES: usize = 20;

/// Knobs for a randomized verification campaign.
#[derive(Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignConfig {
    /// Rank of the alphabet the sampled word pairs live in.
    pub rank: usize,
    /// Number of valid instances to check (skipped draws do not count).
    pub instances: u64,
    /// Sampled automorphisms per instance, beyond the identity.
    pub trials: u32,
    /// Upper bound on each sampled automorphism's move-sequence depth.
    pub depth: u32,
    /// Base seed; instances and trials derive their own streams from it.
    pub seed: u64,
    /// Largest two-generator template length.
    pub max_pattern_len: usize,
    /// Largest sampled word length.
    pub max_word_len: usize,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            rank: 2,
            instances: 500,
            trials: 200,
            depth: 8,
            seed: 0,
            max_pattern_len: 12,
            max_word_len: 10,
        }
    }
}

/// A falsified instance, kept in full so the witness can be replayed.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InstanceWitness {
    /// Draw index of the instance (also its seed-stream index).
    pub instance: u64,
    /// Which pair source produced the instance.
    pub source: &'static str,
    pub left: Word,
    pub right: Word,
    pub verdict: EquivalenceVerdict,
}

/// Outcome of a verification campaign.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub schema: u32,
    pub suite: &'static str,
    pub config: CampaignConfig,
    /// Valid instances actually checked (equals `config.instances`).
    pub instances_run: u64,
    /// Draws rejected by a source precondition before any checking.
    pub skipped: u64,
    /// Instances with a falsifying automorphism.
    pub falsified: u64,
    /// The first falsified instances, at most [`MAX_REPORTED_WITNESSES`].
    pub witnesses: Vec<InstanceWitness>,
    pub pass: bool,
}

struct PreparedInstance {
    index: u64,
    source: &'static str,
    left: Word,
    right: Word,
    budget: Budget,
}

/// The engine behind the named campaigns, also usable with a caller-supplied
/// instance stream. Draws instances serially until `config.instances` pass
/// their source preconditions (`materialize` returns `None` to skip a draw),
/// then checks them in parallel. The report is a pure function of the config
/// and the stream: instance order is the draw order and every random stream
/// is derived from `(seed, draw index)`.
pub fn run_verify_campaign(
    suite: &'static str,
    config: &CampaignConfig,
    mut materialize: impl FnMut(u64, &mut ChaCha8Rng) -> Option<(&'static str, Word, Word)>,
) -> VerifyReport {
    let mut prepared: Vec<PreparedInstance> = Vec::with_capacity(config.instances as usize);
    let mut skipped = 0u64;
    let mut index = 0u64;
    while (prepared.len() as u64) < config.instances {
        let mut rng = rng_for(config.seed, index);
        match materialize(index, &mut rng) {
            Some((source, left, right)) => prepared.push(PreparedInstance {
                index,
                source,
                left,
                right,
                budget: Budget {
                    trials: config.trials,
                    depth: config.depth,
                    seed: mix_seed(config.seed, index),
                },
            }),
            None => skipped += 1,
        }
        index += 1;
    }
    let outcomes: Vec<(PreparedInstance, EquivalenceVerdict)> = prepared
        .into_par_iter()
        .map(|instance| {
            let verdict = check_equivalence(&instance.left, &instance.right, &instance.budget)
                .expect("prepared instances share one alphabet");
            (instance, verdict)
        })
        .collect();
    let mut witnesses = Vec::new();
    let mut falsified = 0u64;
    for (instance, verdict) in outcomes {
        if verdict.is_falsified() {
            falsified += 1;
            if witnesses.len() < MAX_REPORTED_WITNESSES {
                witnesses.push(InstanceWitness {
                    instance: instance.index,
                    source: instance.source,
                    left: instance.left,
                    right: instance.right,
                    verdict,
                });
            }
        }
    }
    VerifyReport {
        schema: SCHEMA_VERSION,
        suite,
        config: *config,
        instances_run: config.instances,
        skipped,
        falsified,
        witnesses,
        pass: falsified == 0,
    }
}

fn two_generator_alphabet() -> Alphabet {
    Alphabet::new(2).expect("rank 2 is valid")
}

fn sample_template(config: &CampaignConfig, rng: &mut impl Rng) -> Word {
    let len = rng.random_range(1..=config.max_pattern_len);
    random_reduced_word(two_generator_alphabet(), len, rng)
}

fn sample_word(alphabet: Alphabet, config: &CampaignConfig, rng: &mut impl Rng) -> Word {
    let len = rng.random_range(1..=config.max_word_len);
    random_reduced_word(alphabet, len, rng)
}

fn sample_exponents(rng: &mut impl Rng) -> (i64, i64, i64, i64) {
    let p = rng.random_range(1..=MAX_EXPONENT);
    let q = rng.random_range(1..=MAX_EXPONENT);
    let total = p + q;
    let i = rng.random_range((total - MAX_EXPONENT).max(1)..=(total - 1).min(MAX_EXPONENT));
    (p, q, i, total - i)
}

/// Campaign: every template/pair draw is checked against its reversal
/// companion. No preconditions apply, so nothing is ever skipped.
pub fn run_reversal_campaign(config: &CampaignConfig) -> Result<VerifyReport> {
    let alphabet = Alphabet::new(config.rank)?;
    Ok(run_verify_campaign("reversal-pairs", config, |_, rng| {
        let source = PairSource::ReverseWord {
            template: sample_template(config, rng),
            g: sample_word(alphabet, config, rng),
            h: sample_word(alphabet, config, rng),
        };
        let kind = source.kind_name();
        let (left, right) = source.pair().expect("templates are two-generator");
        Some((kind, left, right))
    }))
}

/// Campaign: power pairs `g^p·h^q` vs `g^i·h^j` over base pairs that are
/// equivalent by construction. Bases rotate through the guarantee-bearing
/// sources; draws whose base violates a precondition (an inverse pair, or a
/// reversal template that collapses to one) are skipped and recorded.
pub fn run_power_campaign(config: &CampaignConfig) -> Result<VerifyReport> {
    let alphabet = Alphabet::new(config.rank)?;
    Ok(run_verify_campaign("power-pairs", config, |index, rng| {
        let base = match index % 3 {
            0 => PairSource::Conjugate {
                g: sample_word(alphabet, config, rng),
                conjugator: sample_word(alphabet, config, rng),
            },
            1 => PairSource::InversePair {
                g: sample_word(alphabet, config, rng),
            },
            _ => PairSource::ReverseWord {
                template: sample_template(config, rng),
                g: sample_word(alphabet, config, rng),
                h: sample_word(alphabet, config, rng),
            },
        };
        let kind = base.kind_name();
        let (g, h) = base.pair().ok()?;
        let (p, q, i, j) = sample_exponents(rng);
        let source = PairSource::PowerPair { g, h, p, q, i, j };
        let (left, right) = source.pair().ok()?;
        Some((kind, left, right))
    }))
}

/// Campaign: a template over `(g, h)` vs the same template over `(h, g)`,
/// for base pairs equivalent by construction. Bases rotate through all
/// guarantee-bearing sources, including power pairs over conjugate bases.
pub fn run_swap_campaign(config: &CampaignConfig) -> Result<VerifyReport> {
    let alphabet = Alphabet::new(config.rank)?;
    Ok(run_verify_campaign("swap-pairs", config, |index, rng| {
        let source = match index % 4 {
            0 => PairSource::Conjugate {
                g: sample_word(alphabet, config, rng),
                conjugator: sample_word(alphabet, config, rng),
            },
            1 => PairSource::InversePair {
                g: sample_word(alphabet, config, rng),
            },
            2 => PairSource::ReverseWord {
                template: sample_template(config, rng),
                g: sample_word(alphabet, config, rng),
                h: sample_word(alphabet, config, rng),
            },
            _ => {
                let g = sample_word(alphabet, config, rng);
                let conjugator = sample_word(alphabet, config, rng);
                let h = conjugator
                    .concat(&g)
                    .and_then(|cg| cg.concat(&conjugator.inverse()))
                    .expect("sampled words share one alphabet");
                let (p, q, i, j) = sample_exponents(rng);
                PairSource::PowerPair { g, h, p, q, i, j }
            }
        };
        let kind = source.kind_name();
        let (g, h) = source.pair().ok()?;
        let template = sample_template(config, rng);
        let left = substitute(&template, &g, &h).expect("templates are two-generator");
        let right = substitute(&template, &h, &g).expect("templates are two-generator");
        Some((kind, left, right))
    }))
}

/// Knobs for a deterministic lab run (labs always work over rank 2).
#[derive(Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LabConfig {
    /// Number of valid instances to check (skipped draws do not count).
    pub instances: u64,
    /// Base seed for the per-draw streams.
    pub seed: u64,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            instances: 1000,
            seed: 0,
        }
    }
}

/// One failed lab instance, with a human-readable account of the mismatch.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LabFailure {
    pub instance: u64,
    pub detail: String,
}

/// Outcome of a lab run.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LabReport {
    pub schema: u32,
    pub check: &'static str,
    pub config: LabConfig,
    pub instances_run: u64,
    pub skipped: u64,
    pub failures: u64,
    /// The first failures, at most [`MAX_REPORTED_FAILURES`].
    pub failure_samples: Vec<LabFailure>,
    pub pass: bool,
}

enum LabOutcome {
    Pass,
    Skipped,
    Fail(String),
}

fn run_lab(
    check: &'static str,
    config: &LabConfig,
    mut instance: impl FnMut(&mut ChaCha8Rng) -> LabOutcome,
) -> LabReport {
    let mut run = 0u64;
    let mut skipped = 0u64;
    let mut failures = 0u64;
    let mut samples = Vec::new();
    let mut index = 0u64;
    while run < config.instances {
        let mut rng = rng_for(config.seed, index);
        match instance(&mut rng) {
            LabOutcome::Pass => run += 1,
            LabOutcome::Skipped => skipped += 1,
            LabOutcome::Fail(detail) => {
                run += 1;
                failures += 1;
                if samples.len() < MAX_REPORTED_FAILURES {
                    samples.push(LabFailure {
                        instance: index,
                        detail,
                    });
                }
            }
        }
        index += 1;
    }
    LabReport {
        schema: SCHEMA_VERSION,
        check,
        config: *config,
        instances_run: run,
        skipped,
        failures,
        failure_samples: samples,
        pass: failures == 0,
    }
}

/// Lab: junction-count identities on random cyclically reduced two-generator
/// words of length 2–40. Draws that use only one generator have no junction
/// table and are skipped.
pub fn run_junction_identity_lab(config: &LabConfig) -> LabReport {
    let alphabet = two_generator_alphabet();
    run_lab("junction-identities", config, |rng| {
        let len = rng.random_range(2..=40);
        let word = random_cyclically_reduced_word(alphabet, len, rng);
        let pattern = Pattern::of(&word);
        let Ok(table) = pair_counts(&pattern) else {
            return LabOutcome::Skipped;
        };
        let half = table.skew / 2;
        let checks = [
            (
                "forward junctions equal backward junctions",
                table.forward_total() == table.backward_total(),
            ),
            (
                "junction totals equal the block count",
                table.forward_total() == pattern.block_count(),
            ),
            ("skew is even", table.skew % 2 == 0),
            (
                "biai balances aibi through half the skew",
                table.biai as i64 == table.aibi as i64 + half,
            ),
            (
                "ba balances ab through half the skew",
                table.ba as i64 == table.ab as i64 + half,
            ),
            (
                "cross sums agree",
                table.ab + table.biai == table.ba + table.aibi,
            ),
        ];
        match checks.iter().find(|(_, ok)| !ok) {
            None => LabOutcome::Pass,
            Some((name, _)) => LabOutcome::Fail(format!("{name} failed for {word}: {table:?}")),
        }
    })
}

/// Lab: the no-factor-consumed-whole property on random same-length pairs of
/// cyclically reduced two-generator words of length 1–20. Draws that collide
/// (equal or mutually inverse words) fall outside the premises and are
/// skipped.
pub fn run_claim_lab(config: &LabConfig) -> LabReport {
    let alphabet = two_generator_alphabet();
    run_lab("sandwich-claim", config, |rng| {
        let len = rng.random_range(1..=20);
        let x = random_cyclically_reduced_word(alphabet, len, rng);
        let y = random_cyclically_reduced_word(alphabet, len, rng);
        match claim_holds(&x, &y) {
            Ok(true) => LabOutcome::Pass,
            Ok(false) => LabOutcome::Fail(format!("a factor of {x} / {y} was consumed whole")),
            Err(Error::CoreCollision) => LabOutcome::Skipped,
            Err(error) => LabOutcome::Fail(format!("premise check failed for {x} / {y}: {error}")),
        }
    })
}

/// Lab: the case-shaped length formulas against direct expansion. Even draws
/// exercise the surviving-carrier formula, odd draws the touching-cores
/// formula; the samplers enforce each formula's premises, so nothing is
/// skipped.
pub fn run_case_formula_lab(config: &LabConfig) -> LabReport {
    let alphabet = two_generator_alphabet();
    run_lab("case-formulas", config, |rng| {
        // Alternate via the rng rather than the draw index so the choice
        // stays a pure function of the per-draw stream.
        let pick_first = rng.random::<bool>();
        if pick_first {
            let case = sample_case1_config(rng);
            let formula = match case1_length(
                &case.x_core,
                &case.y_core,
                &case.x_carrier,
                &case.y_carrier,
                &case.pattern,
            ) {
                Ok(value) => value,
                Err(error) => {
                    return LabOutcome::Fail(format!(
                        "formula rejected a sampled carrier config: {error}"
                    ))
                }
            };
            let x = case
                .x_carrier
                .concat(&case.x_core)
                .and_then(|w| w.concat(&case.x_carrier.inverse()))
                .expect("sampled words share one alphabet");
            let y = case
                .y_carrier
                .concat(&case.y_core)
                .and_then(|w| w.concat(&case.y_carrier.inverse()))
                .expect("sampled words share one alphabet");
            let template = case.pattern.expand(alphabet);
            let direct = substitute(&template, &x, &y)
                .expect("expansion is two-generator")
                .cyclic_length();
            if formula == direct {
                LabOutcome::Pass
            } else {
                LabOutcome::Fail(format!(
                    "carrier formula {formula} != direct {direct} for cores {}/{}, carriers {}/{}, template {template}",
                    case.x_core, case.y_core, case.x_carrier, case.y_carrier,
                ))
            }
        } else {
            let case = sample_case2_config(rng);
            let formula = match case2_length(&case.x_core, &case.y_core, &case.pattern) {
                Ok(value) => value,
                Err(error) => {
                    return LabOutcome::Fail(format!(
                        "formula rejected a sampled core pair: {error}"
                    ))
                }
            };
            let template = case.pattern.expand(alphabet);
            let direct = substitute(&template, &case.x_core, &case.y_core)
                .expect("expansion is two-generator")
                .cyclic_length();
            if formula == direct {
                LabOutcome::Pass
            } else {
                LabOutcome::Fail(format!(
                    "touching-cores formula {formula} != direct {direct} for cores {}/{}, template {template}",
                    case.x_core, case.y_core,
                ))
            }
        }
    })
}
