use serde::Serialize;

use crate::config::{DictionaryConfig, ScaleLimits, Window};
use crate::dictionary::StaticDictionary;
use crate::gen::{arbitrary_dictionary, case_rng, symbol, TextGenerator};
use crate::parsers::{brute_force_optimal, greedy_parse, optimal_parse};
use crate::token::Parsing;

const MAX_SEARCH_LEN: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchFamily {
    Lz77(Window),
    Lz78,
    /// Fresh random phrase sets (no closure guarantee) paired with each text.
    Static {
        max_phrases: usize,
        max_phrase_len: usize,
    },
}

#[derive(Debug, Clone, Copy)]
pub struct SearchParams {
    pub family: SearchFamily,
    pub alphabet: usize,
    pub max_len: usize,
    pub budget: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GapInstance {
    #[serde(serialize_with = "crate::serde_lossy::serialize")]
    pub text: Vec<u8>,
    #[serde(serialize_with = "crate::serde_lossy::serialize_list")]
    pub dictionary: Vec<Vec<u8>>,
    pub greedy_tokens: usize,
    pub optimal_tokens: usize,
    pub greedy: Parsing,
    pub optimal: Parsing,
    /// Zero-based index of the candidate in generation order.
    pub candidate: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub explored: u64,
    pub found: Option<GapInstance>,
}

/// Looks for a text on which greedy parsing uses more tokens than the
/// optimum.
///
/// Candidates come first from exhaustive enumeration in length order (while
/// that stays under half the budget), then from seeded random texts. A
/// candidate is reported only once the brute-force oracle confirms the gap.
pub fn search_greedy_gap(params: &SearchParams) -> SearchOutcome {
    let max_len = params.max_len.min(MAX_SEARCH_LEN);
    let alphabet = params.alphabet.clamp(1, 256);
    let confirm_limits = ScaleLimits {
        brute_text: MAX_SEARCH_LEN,
        graph_text: MAX_SEARCH_LEN,
        ..ScaleLimits::default()
    };
    let mut explored = 0u64;

    let check = |explored: &mut u64, text: Vec<u8>, dict_rng: Option<u64>| -> Option<GapInstance> {
        let candidate = *explored;
        *explored += 1;
        let config = match params.family {
            SearchFamily::Lz77(w) => DictionaryConfig::lz77(w),
            SearchFamily::Lz78 => DictionaryConfig::lz78(),
            SearchFamily::Static {
                max_phrases,
                max_phrase_len,
            } => {
                let mut rng = case_rng(params.seed ^ 0x5eed, dict_rng.unwrap_or(candidate));
                DictionaryConfig::static_dict(arbitrary_dictionary(
                    &mut rng,
                    max_phrases,
                    max_phrase_len,
                    alphabet,
                ))
            }
        };
        gap(&config, &text, &confirm_limits, candidate)
    };

    // exhaustive phase; static dictionaries vary per candidate, so that
    // family only uses the random phase
    if !matches!(params.family, SearchFamily::Static { .. }) {
        let exhaustive_budget = params.budget / 2;
        'lengths: for len in 1..=max_len {
            let count = (alphabet as u64).checked_pow(len as u32);
            if count.is_none_or(|c| explored + c > exhaustive_budget) {
                break 'lengths;
            }
            let mut digits = vec![0usize; len];
            loop {
                let text: Vec<u8> = digits.iter().map(|&d| symbol(d, alphabet)).collect();
                if let Some(found) = check(&mut explored, text, None) {
                    return SearchOutcome {
                        explored,
                        found: Some(found),
                    };
                }
                if !increment(&mut digits, alphabet) {
                    break;
                }
            }
        }
    }

    let mut case = 0u64;
    while explored < params.budget {
        let mut rng = case_rng(params.seed, case);
        let len = if max_len == 0 {
            0
        } else {
            rand::Rng::gen_range(&mut rng, 1..=max_len)
        };
        let generator = TextGenerator::ALL[(case % 2) as usize];
        let text = generator.generate(&mut rng, len, alphabet);
        if let Some(found) = check(&mut explored, text, Some(case)) {
            return SearchOutcome {
                explored,
                found: Some(found),
            };
        }
        case += 1;
    }
    SearchOutcome {
        explored,
        found: None,
    }
}

fn increment(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn gap(
    config: &DictionaryConfig,
    text: &[u8],
    limits: &ScaleLimits,
    candidate: u64,
) -> Option<GapInstance> {
    let greedy = greedy_parse(config, text);
    let optimal = optimal_parse(config, text, limits).ok()?;
    if greedy.len() <= optimal.len() {
        return None;
    }
    let oracle = brute_force_optimal(config, text, limits).ok()?;
    if oracle.min_tokens >= greedy.len() {
        return None;
    }
    let dictionary = config
        .static_dictionary()
        .map(StaticDictionary::phrases)
        .unwrap_or_default()
        .to_vec();
    Some(GapInstance {
        text: text.to_vec(),
        dictionary,
        greedy_tokens: greedy.len(),
        optimal_tokens: oracle.min_tokens,
        greedy,
        optimal: oracle.witness,
        candidate,
    })
}
