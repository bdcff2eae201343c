//! The property battery run per text by `lzpl verify`.

use serde::Serialize;

use crate::config::{DictionaryConfig, ScaleLimits};
use crate::dictionary::{check_dynamic_suffix_closed, Witness};
use crate::error::Error;
use crate::graph::{build_graph, check_suffix_edge_closure};
use crate::parsers::{brute_force_optimal, greedy_parse, optimal_parse};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    DynamicSuffixClosed,
    SuffixEdgeClosure,
    GreedyEqualsOptimal,
    GreedyEqualsBruteForce,
}

impl Check {
    pub const ALL: [Check; 4] = [
        Check::DynamicSuffixClosed,
        Check::SuffixEdgeClosure,
        Check::GreedyEqualsOptimal,
        Check::GreedyEqualsBruteForce,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::DynamicSuffixClosed => "dynamic_suffix_closed",
            Check::SuffixEdgeClosure => "suffix_edge_closure",
            Check::GreedyEqualsOptimal => "greedy_equals_optimal",
            Check::GreedyEqualsBruteForce => "greedy_equals_brute_force",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail {
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<Witness>,
        #[serde(skip_serializing_if = "Option::is_none")]
        greedy_tokens: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        optimal_tokens: Option<usize>,
    },
    /// Input beyond the check's scale limit.
    Skipped {
        reason: String,
    },
}

impl Outcome {
    pub fn failed(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: Check,
    #[serde(flatten)]
    pub outcome: Outcome,
}

fn skipped(e: Error) -> Outcome {
    Outcome::Skipped {
        reason: e.to_string(),
    }
}

fn counts(greedy: usize, optimal: usize) -> Outcome {
    if greedy == optimal {
        Outcome::Pass
    } else {
        Outcome::Fail {
            witness: None,
            greedy_tokens: Some(greedy),
            optimal_tokens: Some(optimal),
        }
    }
}

/// Runs every check on one text.
pub fn verify_case(
    config: &DictionaryConfig,
    text: &[u8],
    limits: &ScaleLimits,
) -> Vec<CheckResult> {
    let dynamic = match check_dynamic_suffix_closed(config, text, limits) {
        Ok(r) if r.holds => Outcome::Pass,
        Ok(r) => Outcome::Fail {
            witness: r.witness,
            greedy_tokens: None,
            optimal_tokens: None,
        },
        Err(e) => skipped(e),
    };
    let closure = match build_graph(config, text, limits) {
        Ok(g) => {
            let r = check_suffix_edge_closure(&g);
            if r.holds {
                Outcome::Pass
            } else {
                Outcome::Fail {
                    witness: r.witness,
                    greedy_tokens: None,
                    optimal_tokens: None,
                }
            }
        }
        Err(e) => skipped(e),
    };
    let greedy = greedy_parse(config, text).len();
    let optimal = match optimal_parse(config, text, limits) {
        Ok(p) => counts(greedy, p.len()),
        Err(e) => skipped(e),
    };
    let brute = match brute_force_optimal(config, text, limits) {
        Ok(b) => counts(greedy, b.min_tokens),
        Err(e) => skipped(e),
    };
    [dynamic, closure, optimal, brute]
        .into_iter()
        .zip(Check::ALL)
        .map(|(outcome, check)| CheckResult { check, outcome })
        .collect()
}
