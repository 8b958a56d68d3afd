#![forbid(unsafe_code)]

//! Computations in finite-rank free groups: freely reduced words, cyclic
//! words and their block structure, elementary automorphisms, cancellation
//! bookkeeping for conjugate decompositions, and seeded randomized searches
//! for automorphisms that separate two words' cyclic lengths.
//!
//! Words use compact notation throughout: a lowercase letter is a generator,
//! the matching uppercase letter its inverse, so `"abA"` reads `a·b·a⁻¹`.
//! Every randomized entry point is a pure function of its seed, and every
//! report serializes identically across runs with the same inputs.

pub mod alphabet;
pub mod automorphism;
pub mod campaign;
pub mod cancellation;
pub mod cyclic;
pub mod equivalence;
pub mod error;
pub mod pattern;
pub mod sampling;
pub mod word;

pub use alphabet::{Alphabet, Letter, Sign};
pub use automorphism::{Automorphism, ElementaryMove};
pub use campaign::{
    run_case_formula_lab, run_claim_lab, run_junction_identity_lab, run_power_campaign,
    run_reversal_campaign, run_swap_campaign, run_verify_campaign, CampaignConfig, InstanceWitness,
    LabConfig, LabFailure, LabReport, VerifyReport, MAX_EXPONENT, SCHEMA_VERSION,
};
pub use cancellation::{
    cancellation_table, case1_length, case2_length, case3_split, claim_holds, classify_case,
    AbsorbedCarrier, CancellationTable, Case3Split, CaseClass,
};
pub use cyclic::{CyclicDecomposition, CyclicWord};
pub use equivalence::{
    check_equivalence, reverse_word, substitute, verify_power_pair, verify_reversal_pair,
    verify_swap_pair, Budget, EquivalenceVerdict, PairSource, VerdictStatus, Witness,
};
pub use error::{Error, Result};
pub use pattern::{pair_counts, Block, PairCountTable, Pattern};
pub use sampling::{
    mix_seed, random_block_word, random_cyclically_reduced_word, random_letter,
    random_reduced_word, rng_for, sample_case1_config, sample_case2_config, Case1Config,
    Case2Config,
};
pub use word::Word;
