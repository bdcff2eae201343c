//! Exhaustive property checkers. These materialize `D_t` as explicit phrase
//! sets, so they are bounded by [`ScaleLimits`].

use std::collections::HashSet;

use serde::Serialize;

use crate::config::{DictionaryConfig, Family, ScaleLimits};
use crate::dictionary::{lz78_trace, StaticDictionary};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `w[k..]` is missing from `D_i` itself.
    SuffixInCurrent,
    /// `w[k..]` is missing from `D_{i+k}`.
    SuffixInShifted,
    /// Static dictionary lacks a proper suffix.
    StaticSuffix,
    /// Static dictionary lacks a proper prefix.
    StaticPrefix,
    /// A phrase of `D_i` is gone from `D_{i+1}`.
    Shrinks,
    /// A dictionary edge `(i, j)` without the edge `(k, j)`.
    MissingSuffixEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Time `i` at which the phrase is in the dictionary (`None` for static
    /// checks). For edge closure, the source of the offending edge.
    pub time: Option<usize>,
    #[serde(serialize_with = "crate::serde_lossy::serialize")]
    pub phrase: Vec<u8>,
    /// Cut point `k`: the suffix `w[k..]` (or prefix `w[..k]`, or for edge
    /// closure the missing edge's source node).
    pub k: usize,
    /// Second time involved (`i + k`, `i + 1`, or the edge target `j`).
    pub other_time: Option<usize>,
    pub condition: Condition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    pub fn pass() -> Self {
        PropertyReport {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        PropertyReport {
            holds: false,
            witness: Some(witness),
        }
    }

    fn from_option(witness: Option<Witness>) -> Self {
        witness.map_or_else(Self::pass, Self::fail)
    }
}

/// `D_t` as an explicit set, listed shortest first, then lexicographically.
#[derive(Debug, Clone, Default)]
pub struct PhraseSet<'a> {
    ordered: Vec<&'a [u8]>,
    members: HashSet<&'a [u8]>,
}

impl<'a> PhraseSet<'a> {
    fn from_iter(iter: impl IntoIterator<Item = &'a [u8]>) -> Self {
        let members: HashSet<&[u8]> = iter.into_iter().collect();
        let mut ordered: Vec<&[u8]> = members.iter().copied().collect();
        ordered.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        PhraseSet { ordered, members }
    }

    pub fn contains(&self, w: &[u8]) -> bool {
        self.members.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &'a [u8]> + '_ {
        self.ordered.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.ordered.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordered.is_empty()
    }
}

/// `D_0 ..= D_{|T|}` as explicit phrase sets.
pub fn materialize<'a>(
    config: &'a DictionaryConfig,
    text: &'a [u8],
    limits: &ScaleLimits,
) -> Result<Vec<PhraseSet<'a>>> {
    let n = text.len();
    ScaleLimits::ensure("text length", n, limits.check_text)?;
    let cap = config.max_len.unwrap_or(usize::MAX);
    let sets = match &config.family {
        Family::Lz77 => {
            ScaleLimits::ensure("window", config.window.effective(n), limits.check_window)?;
            (0..=n)
                .map(|t| {
                    let lo = config.window.start(t);
                    PhraseSet::from_iter((lo..t).flat_map(|s| {
                        (s + 1..=t.min(s.saturating_add(cap))).map(move |e| &text[s..e])
                    }))
                })
                .collect()
        }
        Family::Lz78 => {
            let trace = lz78_trace(text);
            (0..=n)
                .map(|t| {
                    // a phrase inserted at time `t` ends at `t - 1`
                    PhraseSet::from_iter(
                        trace
                            .log()
                            .iter()
                            .filter(|ins| ins.time <= t && ins.phrase.len() <= cap)
                            .map(|ins| &text[ins.time - ins.phrase.len()..ins.time]),
                    )
                })
                .collect()
        }
        Family::Static(d) => {
            let set = PhraseSet::from_iter(
                d.phrases()
                    .iter()
                    .filter(|p| p.len() <= cap)
                    .map(Vec::as_slice),
            );
            vec![set; n + 1]
        }
    };
    Ok(sets)
}

fn by_length(d: &StaticDictionary) -> Vec<&[u8]> {
    let mut v: Vec<&[u8]> = d.phrases().iter().map(Vec::as_slice).collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    v
}

/// Every proper nonempty suffix of every phrase is a phrase.
pub fn is_suffix_closed_static(d: &StaticDictionary) -> PropertyReport {
    let witness = by_length(d).into_iter().find_map(|w| {
        (1..w.len())
            .find(|&k| !d.contains(&w[k..]))
            .map(|k| Witness {
                time: None,
                phrase: w.to_vec(),
                k,
                other_time: None,
                condition: Condition::StaticSuffix,
            })
    });
    PropertyReport::from_option(witness)
}

/// Every proper nonempty prefix of every phrase is a phrase.
pub fn is_prefix_closed_static(d: &StaticDictionary) -> PropertyReport {
    let witness = by_length(d).into_iter().find_map(|w| {
        (1..w.len())
            .find(|&k| !d.contains(&w[..k]))
            .map(|k| Witness {
                time: None,
                phrase: w.to_vec(),
                k,
                other_time: None,
                condition: Condition::StaticPrefix,
            })
    });
    PropertyReport::from_option(witness)
}

/// Dynamic suffix-closure: for every time `i`, every `w` in `D_i` and every
/// `0 <= k < |w|`, the suffix `w[k..]` is in `D_i` and in `D_{i+k}`.
///
/// `k = 0` is checked as written even though it only restates `w in D_i`.
/// Times past `|T|` are not defined, so the `D_{i+k}` condition is only
/// checked for `i + k <= |T|`.
pub fn check_dynamic_suffix_closed(
    config: &DictionaryConfig,
    text: &[u8],
    limits: &ScaleLimits,
) -> Result<PropertyReport> {
    let sets = materialize(config, text, limits)?;
    let last = sets.len() - 1;
    for (i, current) in sets.iter().enumerate() {
        for w in current.iter() {
            for k in 0..w.len() {
                let suffix = &w[k..];
                let failed = if !current.contains(suffix) {
                    Some((Condition::SuffixInCurrent, i))
                } else if i + k <= last && !sets[i + k].contains(suffix) {
                    Some((Condition::SuffixInShifted, i + k))
                } else {
                    None
                };
                if let Some((condition, other)) = failed {
                    return Ok(PropertyReport::fail(Witness {
                        time: Some(i),
                        phrase: w.to_vec(),
                        k,
                        other_time: Some(other),
                        condition,
                    }));
                }
            }
        }
    }
    Ok(PropertyReport::pass())
}

/// The weaker per-time notion: each `D_i` on its own is suffix-closed.
pub fn check_natural_suffix_closed(
    config: &DictionaryConfig,
    text: &[u8],
    limits: &ScaleLimits,
) -> Result<PropertyReport> {
    let sets = materialize(config, text, limits)?;
    for (i, current) in sets.iter().enumerate() {
        for w in current.iter() {
            if let Some(k) = (1..w.len()).find(|&k| !current.contains(&w[k..])) {
                return Ok(PropertyReport::fail(Witness {
                    time: Some(i),
                    phrase: w.to_vec(),
                    k,
                    other_time: Some(i),
                    condition: Condition::SuffixInCurrent,
                }));
            }
        }
    }
    Ok(PropertyReport::pass())
}

/// `D_i ⊆ D_j` for all `i <= j`, checked on consecutive times.
pub fn check_non_decreasing(
    config: &DictionaryConfig,
    text: &[u8],
    limits: &ScaleLimits,
) -> Result<PropertyReport> {
    let sets = materialize(config, text, limits)?;
    for (i, pair) in sets.windows(2).enumerate() {
        if let Some(w) = pair[0].iter().find(|w| !pair[1].contains(w)) {
            return Ok(PropertyReport::fail(Witness {
                time: Some(i),
                phrase: w.to_vec(),
                k: 0,
                other_time: Some(i + 1),
                condition: Condition::Shrinks,
            }));
        }
    }
    Ok(PropertyReport::pass())
}
