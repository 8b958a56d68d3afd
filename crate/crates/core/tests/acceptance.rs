//! The acceptance gate: one test per criterion, each printing a single
//! `acceptance NN <name>: PASS/FAIL (...)` line (visible with
//! `cargo test --test acceptance -- --nocapture`). Budgets, seeds, and
//! instance counts are pinned in the tests themselves.

use std::sync::{Mutex, MutexGuard, PoisonError};
use std::time::{Duration, Instant};

use fglab_core::{
    case1_length, case2_length, check_equivalence, rng_for, run_claim_lab,
    run_junction_identity_lab, run_power_campaign, run_reversal_campaign, run_swap_campaign,
    sample_case1_config, sample_case2_config, substitute, Alphabet, Automorphism, Budget,
    CampaignConfig, ElementaryMove, LabConfig, Sign, VerdictStatus, Word,
};

/// Serializes the criteria so that each wall-clock budget is measured on an
/// otherwise idle process.
static GATE: Mutex<()> = Mutex::new(());

fn solo() -> MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(PoisonError::into_inner)
}

fn report(number: u8, name: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("acceptance {number:02} {name}: {status} ({detail})");
}

fn rank2() -> Alphabet {
    Alphabet::new(2).expect("rank 2 is valid")
}

fn w(text: &str) -> Word {
    Word::parse(text, rank2()).expect("test words parse")
}

#[test]
fn a01_junction_identities() {
    let _guard = solo();
    let budget = Duration::from_secs(5);
    let start = Instant::now();
    let lab = run_junction_identity_lab(&LabConfig {
        instances: 10_000,
        seed: 101,
    });
    let elapsed = start.elapsed();
    let pass = lab.pass && lab.instances_run == 10_000 && elapsed <= budget;
    report(
        1,
        "junction identities",
        pass,
        &format!(
            "{} instances, {} failures, {} skipped, {elapsed:.2?} of {budget:?}",
            lab.instances_run, lab.failures, lab.skipped
        ),
    );
    assert!(pass, "failures: {:?}", lab.failure_samples);
}

#[test]
fn a02_sandwich_claim() {
    let _guard = solo();
    let budget = Duration::from_secs(5);
    let start = Instant::now();
    let lab = run_claim_lab(&LabConfig {
        instances: 2_000,
        seed: 202,
    });
    let elapsed = start.elapsed();
    let pass = lab.pass && lab.instances_run == 2_000 && elapsed <= budget;
    report(
        2,
        "sandwich claim",
        pass,
        &format!(
            "{} instances, {} failures, {} skipped, {elapsed:.2?} of {budget:?}",
            lab.instances_run, lab.failures, lab.skipped
        ),
    );
    assert!(pass, "failures: {:?}", lab.failure_samples);
}

#[test]
fn a03_length_formulas_match_direct_expansion() {
    let _guard = solo();
    let budget = Duration::from_secs(30);
    let alphabet = rank2();
    let start = Instant::now();
    let mut carrier_mismatches = 0u32;
    for index in 0..1_000u64 {
        let mut rng = rng_for(303, index);
        let case = sample_case1_config(&mut rng);
        let formula = case1_length(
            &case.x_core,
            &case.y_core,
            &case.x_carrier,
            &case.y_carrier,
            &case.pattern,
        )
        .expect("sampled configs satisfy the formula premises");
        let x = case
            .x_carrier
            .concat(&case.x_core)
            .and_then(|v| v.concat(&case.x_carrier.inverse()))
            .expect("one alphabet");
        let y = case
            .y_carrier
            .concat(&case.y_core)
            .and_then(|v| v.concat(&case.y_carrier.inverse()))
            .expect("one alphabet");
        let template = case.pattern.expand(alphabet);
        let direct = substitute(&template, &x, &y)
            .expect("two-generator template")
            .cyclic_length();
        if formula != direct {
            carrier_mismatches += 1;
        }
    }
    let mut touching_mismatches = 0u32;
    for index in 0..1_000u64 {
        let mut rng = rng_for(313, index);
        let case = sample_case2_config(&mut rng);
        let formula = case2_length(&case.x_core, &case.y_core, &case.pattern)
            .expect("sampled configs satisfy the formula premises");
        let template = case.pattern.expand(alphabet);
        let direct = substitute(&template, &case.x_core, &case.y_core)
            .expect("two-generator template")
            .cyclic_length();
        if formula != direct {
            touching_mismatches += 1;
        }
    }
    let elapsed = start.elapsed();
    let pass = carrier_mismatches == 0 && touching_mismatches == 0 && elapsed <= budget;
    report(
        3,
        "length formulas vs direct expansion",
        pass,
        &format!(
            "1000 carrier configs ({carrier_mismatches} mismatches), \
             1000 touching configs ({touching_mismatches} mismatches), {elapsed:.2?} of {budget:?}"
        ),
    );
    assert!(pass);
}

#[test]
fn a04_reversal_campaign() {
    let _guard = solo();
    let budget = Duration::from_secs(120);
    let start = Instant::now();
    let base = CampaignConfig {
        rank: 2,
        instances: 250,
        trials: 200,
        depth: 8,
        seed: 404,
        max_pattern_len: 12,
        max_word_len: 10,
    };
    let rank2_report = run_reversal_campaign(&base).expect("rank 2 is valid");
    let rank3_report = run_reversal_campaign(&CampaignConfig {
        rank: 3,
        seed: 414,
        ..base
    })
    .expect("rank 3 is valid");
    let elapsed = start.elapsed();
    let pass = rank2_report.pass
        && rank3_report.pass
        && rank2_report.instances_run + rank3_report.instances_run == 500
        && elapsed <= budget;
    report(
        4,
        "reversal-pair campaign",
        pass,
        &format!(
            "rank 2: {} falsified / {}, rank 3: {} falsified / {}, {elapsed:.2?} of {budget:?}",
            rank2_report.falsified,
            rank2_report.instances_run,
            rank3_report.falsified,
            rank3_report.instances_run
        ),
    );
    assert!(
        pass,
        "witnesses: {:?} / {:?}",
        rank2_report.witnesses, rank3_report.witnesses
    );
}

#[test]
fn a05_power_campaign() {
    let _guard = solo();
    let budget = Duration::from_secs(120);
    let start = Instant::now();
    let config = CampaignConfig {
        rank: 2,
        instances: 500,
        trials: 200,
        depth: 8,
        seed: 505,
        max_pattern_len: 12,
        max_word_len: 10,
    };
    let campaign = run_power_campaign(&config).expect("rank 2 is valid");
    let elapsed = start.elapsed();
    let pass = campaign.pass && campaign.instances_run == 500 && elapsed <= budget;
    report(
        5,
        "power-pair campaign",
        pass,
        &format!(
            "{} falsified / {} instances, {} skipped draws, {elapsed:.2?} of {budget:?}",
            campaign.falsified, campaign.instances_run, campaign.skipped
        ),
    );
    assert!(pass, "witnesses: {:?}", campaign.witnesses);
}

#[test]
fn a06_swap_campaign() {
    let _guard = solo();
    let budget = Duration::from_secs(120);
    let start = Instant::now();
    let config = CampaignConfig {
        rank: 2,
        instances: 500,
        trials: 200,
        depth: 8,
        seed: 606,
        max_pattern_len: 12,
        max_word_len: 10,
    };
    let campaign = run_swap_campaign(&config).expect("rank 2 is valid");
    let elapsed = start.elapsed();
    let pass = campaign.pass && campaign.instances_run == 500 && elapsed <= budget;
    report(
        6,
        "swap-pair campaign",
        pass,
        &format!(
            "{} falsified / {} instances, {} skipped draws, {elapsed:.2?} of {budget:?}",
            campaign.falsified, campaign.instances_run, campaign.skipped
        ),
    );
    assert!(pass, "witnesses: {:?}", campaign.witnesses);
}

#[test]
fn a07_negative_controls() {
    let _guard = solo();
    let mut ok = true;
    let mut notes: Vec<String> = Vec::new();

    // A word against its square: the identity alone separates them.
    let square = check_equivalence(&w("a"), &w("aa"), &Budget::default()).expect("one alphabet");
    match (&square.status, &square.witness) {
        (VerdictStatus::Falsified, Some(witness))
            if witness.automorphism.is_identity_sequence()
                && witness.len_left == 1
                && witness.len_right == 2 => {}
        _ => {
            ok = false;
            notes.push(format!("square control returned {square:?}"));
        }
    }

    // ab vs ab⁻¹: equal cyclic length, separated only by a sampled move.
    let mixed = check_equivalence(&w("ab"), &w("aB"), &Budget::default()).expect("one alphabet");
    if mixed.status != VerdictStatus::Falsified {
        ok = false;
        notes.push("mixed-sign control was not falsified".to_string());
    }

    // The known explicit witness for that pair: b ↦ b·a⁻¹.
    let psi = Automorphism::from_moves(
        rank2(),
        vec![ElementaryMove::RightMultiply {
            target: 1,
            mult: 0,
            sign: Sign::Minus,
        }],
    )
    .expect("the move is valid");
    let psi_left = psi.apply(&w("ab")).expect("same alphabet").cyclic_length();
    let psi_right = psi.apply(&w("aB")).expect("same alphabet").cyclic_length();
    if (psi_left, psi_right) != (1, 3) {
        ok = false;
        notes.push(format!("explicit witness gave ({psi_left}, {psi_right})"));
    }

    // Replay the found witness from its serialized form.
    let json = serde_json::to_value(&mixed).expect("verdicts serialize");
    let moves: Vec<ElementaryMove> =
        serde_json::from_value(json["witness"]["automorphism"].clone())
            .expect("witness moves deserialize");
    let replay = Automorphism::from_moves(rank2(), moves).expect("witness moves are valid");
    let replay_left = replay
        .apply(&w("ab"))
        .expect("same alphabet")
        .cyclic_length();
    let replay_right = replay
        .apply(&w("aB"))
        .expect("same alphabet")
        .cyclic_length();
    if json["witness"]["lenLeft"] != replay_left || json["witness"]["lenRight"] != replay_right {
        ok = false;
        notes.push(format!(
            "witness replay gave ({replay_left}, {replay_right}), report said ({}, {})",
            json["witness"]["lenLeft"], json["witness"]["lenRight"]
        ));
    }
    if replay_left == replay_right {
        ok = false;
        notes.push("witness replay does not separate the pair".to_string());
    }

    report(
        7,
        "negative controls",
        ok,
        &if notes.is_empty() {
            format!(
                "square split 1 vs 2 by identity; mixed pair split {replay_left} vs {replay_right}"
            )
        } else {
            notes.join("; ")
        },
    );
    assert!(ok, "{notes:?}");
}

#[test]
fn a08_reports_are_byte_identical() {
    let _guard = solo();
    let config = CampaignConfig {
        rank: 2,
        instances: 40,
        trials: 50,
        depth: 6,
        seed: 808,
        max_pattern_len: 12,
        max_word_len: 10,
    };
    let mut ok = true;
    let mut notes: Vec<String> = Vec::new();
    let runs = [
        ("reversal", {
            let a = serde_json::to_string(&run_reversal_campaign(&config).unwrap()).unwrap();
            let b = serde_json::to_string(&run_reversal_campaign(&config).unwrap()).unwrap();
            a == b
        }),
        ("power", {
            let a = serde_json::to_string(&run_power_campaign(&config).unwrap()).unwrap();
            let b = serde_json::to_string(&run_power_campaign(&config).unwrap()).unwrap();
            a == b
        }),
        ("swap", {
            let a = serde_json::to_string(&run_swap_campaign(&config).unwrap()).unwrap();
            let b = serde_json::to_string(&run_swap_campaign(&config).unwrap()).unwrap();
            a == b
        }),
        ("lab", {
            let lab = LabConfig {
                instances: 200,
                seed: 818,
            };
            let a = serde_json::to_string(&run_junction_identity_lab(&lab)).unwrap();
            let b = serde_json::to_string(&run_junction_identity_lab(&lab)).unwrap();
            a == b
        }),
    ];
    for (name, same) in runs {
        if !same {
            ok = false;
            notes.push(format!("{name} reports differ across runs"));
        }
    }
    report(
        8,
        "report determinism",
        ok,
        &if notes.is_empty() {
            "reversal, power, swap, and lab reports byte-identical across reruns".to_string()
        } else {
            notes.join("; ")
        },
    );
    assert!(ok, "{notes:?}");
}

#[test]
fn a09_core_micro_suite() {
    let _guard = solo();
    let budget = Duration::from_secs(10);
    let instances = 10_000u64;
    let start = Instant::now();
    let mut failures = 0u64;
    for index in 0..instances {
        let mut rng = rng_for(909, index);
        let rank = if index % 2 == 0 { 2 } else { 3 };
        let alphabet = Alphabet::new(rank).expect("test ranks are valid");
        let len = rand::Rng::random_range(&mut rng, 0..=30);
        let u = fglab_core::random_reduced_word(alphabet, len, &mut rng);
        let v = fglab_core::random_reduced_word(
            alphabet,
            rand::Rng::random_range(&mut rng, 0..=30),
            &mut rng,
        );
        let c = fglab_core::random_reduced_word(
            alphabet,
            rand::Rng::random_range(&mut rng, 0..=10),
            &mut rng,
        );
        let depth = rand::Rng::random_range(&mut rng, 0..=6usize);
        let phi = Automorphism::sample_with(alphabet, depth, &mut rng);

        let re_reduced = Word::reduce(alphabet, u.letters().iter().copied()).unwrap();
        let uv = u.concat(&v).unwrap();
        let conjugate = c.concat(&u).unwrap().concat(&c.inverse()).unwrap();
        let round_trip = phi.inverse().apply(&phi.apply(&u).unwrap()).unwrap();

        let checks = [
            re_reduced == u,
            uv.len() <= u.len() + v.len(),
            uv.len() % 2 == (u.len() + v.len()) % 2,
            uv.inverse() == v.inverse().concat(&u.inverse()).unwrap(),
            conjugate.cyclic_length() == u.cyclic_length(),
            u.inverse().cyclic_length() == u.cyclic_length(),
            round_trip == u,
        ];
        if checks.iter().any(|&ok| !ok) {
            failures += 1;
        }
    }
    let elapsed = start.elapsed();
    let pass = failures == 0 && elapsed <= budget;
    report(
        9,
        "core micro-suite",
        pass,
        &format!(
            "{instances} instances x 7 invariants, {failures} failures, {elapsed:.2?} of {budget:?}"
        ),
    );
    assert!(pass);
}
