//! JSON pair-source files for `verify --pairs`: a rank plus a list of
//! tagged entries, each naming how its word pair is built.

use std::path::Path;

use rand::Rng;
use serde::Deserialize;

use fglab_core::{
    random_reduced_word, run_verify_campaign, substitute, Alphabet, CampaignConfig, PairSource,
    VerifyReport, Word,
};

use crate::{read_file, CliError};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairFile {
    rank: usize,
    pairs: Vec<PairEntry>,
}

/// One entry of a pair-source file. Words are compact-notation strings over
/// the file's alphabet; templates are always two-generator words.
#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum PairEntry {
    ReverseWord {
        template: String,
        g: String,
        h: String,
    },
    PowerPair {
        g: String,
        h: String,
        p: i64,
        q: i64,
        i: i64,
        j: i64,
    },
    Conjugate {
        g: String,
        conjugator: String,
    },
    InversePair {
        g: String,
    },
    User {
        g: String,
        h: String,
    },
}

impl PairEntry {
    fn to_source(&self, alphabet: Alphabet) -> Result<PairSource, fglab_core::Error> {
        let word = |text: &str| Word::parse(text, alphabet);
        Ok(match self {
            PairEntry::ReverseWord { template, g, h } => PairSource::ReverseWord {
                template: Word::parse(template, Alphabet::new(2)?)?,
                g: word(g)?,
                h: word(h)?,
            },
            PairEntry::PowerPair { g, h, p, q, i, j } => PairSource::PowerPair {
                g: word(g)?,
                h: word(h)?,
                p: *p,
                q: *q,
                i: *i,
                j: *j,
            },
            PairEntry::Conjugate { g, conjugator } => PairSource::Conjugate {
                g: word(g)?,
                conjugator: word(conjugator)?,
            },
            PairEntry::InversePair { g } => PairSource::InversePair { g: word(g)? },
            PairEntry::User { g, h } => PairSource::UserSupplied {
                g: word(g)?,
                h: word(h)?,
            },
        })
    }
}

/// Runs suite 13 or 14 over the pairs listed in `path`. Instance count and
/// rank come from the file; budget and seed come from `base`.
pub fn run_from_file(
    suite: u8,
    base: &CampaignConfig,
    path: &Path,
) -> Result<VerifyReport, CliError> {
    let located = |message: String| CliError::Config(format!("{}: {message}", path.display()));
    let text = read_file(path)?;
    let file: PairFile = serde_json::from_str(&text).map_err(|err| located(err.to_string()))?;
    let alphabet = Alphabet::new(file.rank)?;
    if file.pairs.is_empty() {
        return Err(located("no pairs listed".to_string()));
    }
    let mut sources = Vec::with_capacity(file.pairs.len());
    for (position, entry) in file.pairs.iter().enumerate() {
        let source = entry
            .to_source(alphabet)
            .map_err(|err| located(format!("pairs[{position}]: {err}")))?;
        sources.push(source);
    }
    let mut config = *base;
    config.rank = file.rank;
    config.instances = sources.len() as u64;
    match suite {
        13 => {
            let mut checked = Vec::with_capacity(sources.len());
            for (position, source) in sources.iter().enumerate() {
                if !matches!(source, PairSource::PowerPair { .. }) {
                    return Err(located(format!(
                        "pairs[{position}]: suite 13 takes power-pair entries only"
                    )));
                }
                let pair = source
                    .pair()
                    .map_err(|err| located(format!("pairs[{position}]: {err}")))?;
                checked.push((source.kind_name(), pair));
            }
            Ok(run_verify_campaign("power-pairs", &config, |index, _| {
                let (kind, (left, right)) = checked[index as usize].clone();
                Some((kind, left, right))
            }))
        }
        14 => {
            let mut bases = Vec::with_capacity(sources.len());
            for (position, source) in sources.iter().enumerate() {
                let pair = source
                    .pair()
                    .map_err(|err| located(format!("pairs[{position}]: {err}")))?;
                bases.push((source.kind_name(), pair));
            }
            let template_alphabet = Alphabet::new(2).expect("rank 2 is valid");
            let max_pattern_len = config.max_pattern_len;
            Ok(run_verify_campaign("swap-pairs", &config, |index, rng| {
                let (kind, (g, h)) = &bases[index as usize];
                let len = rng.random_range(1..=max_pattern_len);
                let template = random_reduced_word(template_alphabet, len, rng);
                let left = substitute(&template, g, h).expect("file words share one alphabet");
                let right = substitute(&template, h, g).expect("file words share one alphabet");
                Some((kind, left, right))
            }))
        }
        _ => Err(CliError::Config(
            "suite 12 generates its own instances; --pairs applies to suites 13 and 14".to_string(),
        )),
    }
}
