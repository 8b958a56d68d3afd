//! Text renderings of the CLI reports. JSON is the machine format; these
//! are line-oriented summaries with one record per line.

use std::fmt::Write;

use fglab_core::{Alphabet, ElementaryMove, LabReport, Sign, VerifyReport};

use crate::{ReduceReport, SampleAutReport};

fn verdict_line(pass: bool) -> &'static str {
    if pass {
        "verdict: PASS\n"
    } else {
        "verdict: FAIL\n"
    }
}

pub fn reduce_text(report: &ReduceReport) -> String {
    let mut text = String::new();
    for row in &report.words {
        writeln!(
            text,
            "line {}: input=\"{}\" reduced=\"{}\" len={} cyclicLen={} carrier=\"{}\" core=\"{}\"",
            row.line, row.input, row.reduced, row.len, row.cyclic_len, row.carrier, row.core
        )
        .expect("writing to a string cannot fail");
    }
    writeln!(text, "words: {} (rank {})", report.words.len(), report.rank)
        .expect("writing to a string cannot fail");
    text
}

pub fn verify_text(report: &VerifyReport) -> String {
    let config = &report.config;
    let mut text = format!(
        "suite: {}\nconfig: rank={} instances={} trials={} depth={} seed={} \
         maxPatternLen={} maxWordLen={}\ninstances: {} run, {} draws skipped\nfalsified: {}\n",
        report.suite,
        config.rank,
        config.instances,
        config.trials,
        config.depth,
        config.seed,
        config.max_pattern_len,
        config.max_word_len,
        report.instances_run,
        report.skipped,
        report.falsified,
    );
    for witness in &report.witnesses {
        let (lengths, moves) = match &witness.verdict.witness {
            Some(found) => (
                format!("lengths {} vs {}", found.len_left, found.len_right),
                found.automorphism.depth(),
            ),
            None => ("lengths unavailable".to_string(), 0),
        };
        writeln!(
            text,
            "witness: instance {} [{}] left=\"{}\" right=\"{}\" {lengths} after {moves} moves",
            witness.instance, witness.source, witness.left, witness.right
        )
        .expect("writing to a string cannot fail");
    }
    text.push_str(verdict_line(report.pass));
    text
}

pub fn lab_text(report: &LabReport) -> String {
    let mut text = format!(
        "check: {}\nconfig: instances={} seed={}\ninstances: {} run, {} draws skipped\nfailures: {}\n",
        report.check,
        report.config.instances,
        report.config.seed,
        report.instances_run,
        report.skipped,
        report.failures,
    );
    for failure in &report.failure_samples {
        writeln!(
            text,
            "failure: instance {}: {}",
            failure.instance, failure.detail
        )
        .expect("writing to a string cannot fail");
    }
    text.push_str(verdict_line(report.pass));
    text
}

fn move_text(step: &ElementaryMove) -> String {
    match step {
        ElementaryMove::Permute(images) => {
            let targets: String = images
                .iter()
                .map(|&image| Alphabet::generator_name(image))
                .collect();
            format!("perm:{targets}")
        }
        ElementaryMove::InvertGen(index) => {
            let name = Alphabet::generator_name(*index);
            format!("{name}->{}", name.to_ascii_uppercase())
        }
        ElementaryMove::RightMultiply { target, mult, sign } => {
            let name = Alphabet::generator_name(*target);
            let factor = Alphabet::generator_name(*mult);
            let factor = match sign {
                Sign::Plus => factor,
                Sign::Minus => factor.to_ascii_uppercase(),
            };
            format!("{name}->{name}{factor}")
        }
    }
}

pub fn sample_aut_text(report: &SampleAutReport) -> String {
    let mut text = format!(
        "sampled {} automorphisms (rank {}, depth {}, seed {})\n",
        report.count, report.rank, report.depth, report.seed
    );
    for sampled in &report.automorphisms {
        let moves = if sampled.moves.moves().is_empty() {
            "identity".to_string()
        } else {
            sampled
                .moves
                .moves()
                .iter()
                .map(move_text)
                .collect::<Vec<_>>()
                .join("; ")
        };
        writeln!(text, "automorphism {}: {moves}", sampled.index)
            .expect("writing to a string cannot fail");
        let images = sampled
            .images
            .iter()
            .enumerate()
            .map(|(index, image)| format!("{}=\"{image}\"", Alphabet::generator_name(index)))
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(text, "  images: {images}").expect("writing to a string cannot fail");
    }
    text
}
