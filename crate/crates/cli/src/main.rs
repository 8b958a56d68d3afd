//! `fglab`: batch front end for the free-group computation library.
//!
//! Exit codes: 0 when every check passed, 1 when a falsification or
//! mismatch was found, 2 on usage, configuration, or parse errors.

mod pairs;
mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fglab_core::{
    rng_for, run_case_formula_lab, run_claim_lab, run_junction_identity_lab, run_power_campaign,
    run_reversal_campaign, run_swap_campaign, Alphabet, Automorphism, CampaignConfig, LabConfig,
    Word, SCHEMA_VERSION,
};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] fglab_core::Error),
}

/// What a successfully executed command concluded.
enum Outcome {
    Pass,
    Falsified,
}

#[derive(Parser)]
#[command(
    name = "fglab",
    version,
    about = "Free-group word computations and seeded randomized equivalence checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce words from a file and report lengths and cyclic decompositions.
    Reduce(ReduceArgs),
    /// Run an equivalence-verification suite (12, 13, or 14).
    Verify(VerifyArgs),
    /// Run a bookkeeping lab: identities, claim, or case-formulas.
    Lab(LabArgs),
    /// Sample elementary-move automorphisms deterministically.
    SampleAut(SampleAutArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    /// UTF-8 file with one word per line; '#' starts a comment.
    file: PathBuf,
    /// Alphabet rank (number of generators, 2..=26).
    #[arg(long, default_value_t = 2)]
    rank: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite id: 12 (reversal pairs), 13 (power pairs), or 14 (swap pairs).
    #[arg(value_parser = clap::value_parser!(u8).range(12..=14))]
    suite: u8,
    /// JSON file of pair sources (suites 13 and 14); omit for the built-in
    /// random campaign.
    #[arg(long)]
    pairs: Option<PathBuf>,
    /// Alphabet rank for the built-in campaign.
    #[arg(long, default_value_t = 2)]
    rank: usize,
    /// Instances to run (built-in campaign only).
    #[arg(long, default_value_t = 500)]
    instances: u64,
    /// Sampled automorphisms per instance, beyond the identity.
    #[arg(long, default_value_t = 200)]
    trials: u32,
    /// Maximum number of elementary moves per sampled automorphism.
    #[arg(long, default_value_t = 8)]
    depth: u32,
    /// Campaign seed; same config and seed mean a byte-identical report.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Maximum length of sampled two-generator templates.
    #[arg(long, default_value_t = 12)]
    max_pattern_len: usize,
    /// Maximum length of sampled substituted words.
    #[arg(long, default_value_t = 10)]
    max_word_len: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Copy, Clone, ValueEnum)]
enum LabCheck {
    /// The six junction-count identities on random block words.
    Identities,
    /// The no-complete-cancellation claim on random core pairs.
    Claim,
    /// Cancellation length formulas against direct expansion.
    CaseFormulas,
}

#[derive(Args)]
struct LabArgs {
    /// Which bookkeeping lab to run.
    #[arg(value_enum)]
    check: LabCheck,
    /// Valid instances to run (precondition-failing draws are skipped).
    #[arg(long, default_value_t = 1_000)]
    instances: u64,
    /// Lab seed; same config and seed mean a byte-identical report.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SampleAutArgs {
    /// Alphabet rank (number of generators, 2..=26).
    #[arg(long, default_value_t = 2)]
    rank: usize,
    /// How many automorphisms to sample.
    #[arg(long, default_value_t = 5)]
    count: u64,
    /// Number of elementary moves per automorphism.
    #[arg(long, default_value_t = 8)]
    depth: usize,
    /// Sampling seed; automorphism k is drawn from stream (seed, k).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ReduceRow {
    line: usize,
    input: String,
    reduced: String,
    len: usize,
    cyclic_len: usize,
    carrier: String,
    core: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ReduceReport {
    schema: u32,
    command: &'static str,
    rank: usize,
    words: Vec<ReduceRow>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SampledAutomorphism {
    index: u64,
    moves: Automorphism,
    images: Vec<String>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SampleAutReport {
    schema: u32,
    command: &'static str,
    rank: usize,
    count: u64,
    depth: usize,
    seed: u64,
    automorphisms: Vec<SampledAutomorphism>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Falsified) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Reduce(args) => cmd_reduce(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Lab(args) => cmd_lab(args),
        Command::SampleAut(args) => cmd_sample_aut(args),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|err| CliError::Config(format!("{}: {err}", path.display())))
}

fn emit<T: Serialize>(output: &OutputArgs, report: &T, text: String) -> Result<(), CliError> {
    let body = match output.format {
        Format::Json => {
            let mut json = serde_json::to_string_pretty(report).expect("reports always serialize");
            json.push('\n');
            json
        }
        Format::Text => text,
    };
    match &output.out {
        Some(path) => fs::write(path, body)
            .map_err(|err| CliError::Config(format!("{}: {err}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn cmd_reduce(args: ReduceArgs) -> Result<Outcome, CliError> {
    let alphabet = Alphabet::new(args.rank)?;
    let text = read_file(&args.file)?;
    let mut words = Vec::new();
    for (offset, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let number = offset + 1;
        let word = Word::parse(line, alphabet)
            .map_err(|err| CliError::Config(format!("{}:{number}: {err}", args.file.display())))?;
        let decomposition = word.cyclic_decomposition();
        words.push(ReduceRow {
            line: number,
            input: line.to_string(),
            reduced: word.to_string(),
            len: word.len(),
            cyclic_len: word.cyclic_length(),
            carrier: decomposition.carrier().to_string(),
            core: decomposition.core().to_string(),
        });
    }
    let report = ReduceReport {
        schema: SCHEMA_VERSION,
        command: "reduce",
        rank: args.rank,
        words,
    };
    let text = render::reduce_text(&report);
    emit(&args.output, &report, text)?;
    Ok(Outcome::Pass)
}

fn cmd_verify(args: VerifyArgs) -> Result<Outcome, CliError> {
    let config = CampaignConfig {
        rank: args.rank,
        instances: args.instances,
        trials: args.trials,
        depth: args.depth,
        seed: args.seed,
        max_pattern_len: args.max_pattern_len,
        max_word_len: args.max_word_len,
    };
    let report = match &args.pairs {
        None => match args.suite {
            12 => run_reversal_campaign(&config)?,
            13 => run_power_campaign(&config)?,
            _ => run_swap_campaign(&config)?,
        },
        Some(path) => pairs::run_from_file(args.suite, &config, path)?,
    };
    let text = render::verify_text(&report);
    emit(&args.output, &report, text)?;
    Ok(if report.pass {
        Outcome::Pass
    } else {
        Outcome::Falsified
    })
}

fn cmd_lab(args: LabArgs) -> Result<Outcome, CliError> {
    let config = LabConfig {
        instances: args.instances,
        seed: args.seed,
    };
    let report = match args.check {
        LabCheck::Identities => run_junction_identity_lab(&config),
        LabCheck::Claim => run_claim_lab(&config),
        LabCheck::CaseFormulas => run_case_formula_lab(&config),
    };
    let text = render::lab_text(&report);
    emit(&args.output, &report, text)?;
    Ok(if report.pass {
        Outcome::Pass
    } else {
        Outcome::Falsified
    })
}

fn cmd_sample_aut(args: SampleAutArgs) -> Result<Outcome, CliError> {
    let alphabet = Alphabet::new(args.rank)?;
    let automorphisms = (0..args.count)
        .map(|index| {
            let mut rng = rng_for(args.seed, index);
            let phi = Automorphism::sample_with(alphabet, args.depth, &mut rng);
            let images = phi.generator_images().iter().map(Word::to_string).collect();
            SampledAutomorphism {
                index,
                moves: phi,
                images,
            }
        })
        .collect();
    let report = SampleAutReport {
        schema: SCHEMA_VERSION,
        command: "sample-aut",
        rank: args.rank,
        count: args.count,
        depth: args.depth,
        seed: args.seed,
        automorphisms,
    };
    let text = render::sample_aut_text(&report);
    emit(&args.output, &report, text)?;
    Ok(Outcome::Pass)
}
