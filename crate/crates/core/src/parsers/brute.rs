//! Exhaustive minimum-token oracle.
//!
//! Deliberately shares no code with the dictionary or graph modules: phrase
//! membership is decided by direct substring scans and a separate replay of
//! the LZ78 construction, and parsings are enumerated depth first.

use crate::config::{DictionaryConfig, Family, ScaleLimits, Window};
use crate::error::Result;
use crate::token::{Parsing, Token};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForce {
    pub min_tokens: usize,
    pub witness: Parsing,
    /// Search-tree nodes visited.
    pub explored: u64,
}

struct Oracle<'a> {
    config: &'a DictionaryConfig,
    text: &'a [u8],
    /// LZ78 phrases with the first time each one may be used.
    lz78: Vec<(Vec<u8>, usize)>,
    memo: Vec<Option<bool>>,
}

impl<'a> Oracle<'a> {
    fn new(config: &'a DictionaryConfig, text: &'a [u8]) -> Self {
        let n = text.len();
        let lz78 = if matches!(config.family, Family::Lz78) {
            replay_lz78(text)
        } else {
            Vec::new()
        };
        Oracle {
            config,
            text,
            lz78,
            memo: vec![None; (n + 1) * (n + 1)],
        }
    }

    fn window_start(&self, i: usize) -> usize {
        match self.config.window {
            Window::Bounded(h) if i > h => i - h,
            _ => 0,
        }
    }

    fn member(&mut self, i: usize, len: usize) -> bool {
        let slot = i * (self.text.len() + 1) + len;
        if let Some(v) = self.memo[slot] {
            return v;
        }
        let v = self.decide(i, len);
        self.memo[slot] = Some(v);
        v
    }

    fn decide(&self, i: usize, len: usize) -> bool {
        if self.config.max_len.is_some_and(|m| len > m) {
            return false;
        }
        let w = &self.text[i..i + len];
        match &self.config.family {
            Family::Lz77 => self.lz77_source(i, len).is_some(),
            Family::Lz78 => self.lz78.iter().any(|(p, t)| *t <= i && p.as_slice() == w),
            Family::Static(d) => d.phrases().iter().any(|p| p.as_slice() == w),
        }
    }

    /// Nearest start `s` of an occurrence usable for `text[i..i+len)` at time `i`.
    fn lz77_source(&self, i: usize, len: usize) -> Option<usize> {
        let lo = self.window_start(i);
        let t = self.text;
        (lo..i).rev().find(|&s| {
            (self.config.allow_overlap || s + len <= i) && (0..len).all(|k| t[s + k] == t[i + k])
        })
    }

    fn token(&self, i: usize, len: usize, is_phrase: bool) -> Token {
        if !is_phrase {
            return Token::Literal(self.text[i]);
        }
        let w = &self.text[i..i + len];
        match &self.config.family {
            Family::Lz77 => Token::Pointer {
                offset: i - self.lz77_source(i, len).expect("member"),
                length: len,
            },
            Family::Lz78 => {
                let s = (0..i)
                    .rev()
                    .find(|&s| s + len <= i && &self.text[s..s + len] == w)
                    .expect("LZ78 phrases occur before they are usable");
                Token::Pointer {
                    offset: i - s,
                    length: len,
                }
            }
            Family::Static(d) => Token::Phrase {
                index: d
                    .phrases()
                    .iter()
                    .position(|p| p.as_slice() == w)
                    .expect("member"),
                length: len,
            },
        }
    }
}

/// The classic LZ78 construction, replayed with a flat phrase list.
fn replay_lz78(text: &[u8]) -> Vec<(Vec<u8>, usize)> {
    let mut phrases: Vec<(Vec<u8>, usize)> = Vec::new();
    let mut i = 0;
    while i < text.len() {
        let w = phrases
            .iter()
            .filter(|(p, _)| text[i..].starts_with(p))
            .map(|(p, _)| p.len())
            .max()
            .unwrap_or(0);
        if i + w == text.len() {
            break;
        }
        phrases.push((text[i..=i + w].to_vec(), i + w + 1));
        i += w + 1;
    }
    phrases
}

struct Search<'o, 'a> {
    oracle: &'o mut Oracle<'a>,
    n: usize,
    path: Vec<(usize, usize, bool)>,
    best: usize,
    best_path: Vec<(usize, usize, bool)>,
    explored: u64,
}

impl Search<'_, '_> {
    fn dfs(&mut self, pos: usize) {
        self.explored += 1;
        if pos == self.n {
            if self.path.len() < self.best {
                self.best = self.path.len();
                self.best_path = self.path.clone();
            }
            return;
        }
        if self.path.len() + 1 >= self.best {
            return;
        }
        for len in (1..=self.n - pos).rev() {
            let is_phrase = self.oracle.member(pos, len);
            if len > 1 && !is_phrase {
                continue;
            }
            self.path.push((pos, len, is_phrase));
            self.dfs(pos + len);
            self.path.pop();
        }
    }
}

/// Minimum token count over every valid parsing of `text`, plus one parsing
/// that attains it.
pub fn brute_force_optimal(
    config: &DictionaryConfig,
    text: &[u8],
    limits: &ScaleLimits,
) -> Result<BruteForce> {
    ScaleLimits::ensure("text length", text.len(), limits.brute_text)?;
    let mut oracle = Oracle::new(config, text);
    let n = text.len();
    let mut search = Search {
        oracle: &mut oracle,
        n,
        path: Vec::new(),
        best: n + 1,
        best_path: Vec::new(),
        explored: 0,
    };
    search.dfs(0);
    let (best, best_path, explored) = (search.best, search.best_path, search.explored);
    let min_tokens = if n == 0 { 0 } else { best };
    let tokens = best_path
        .into_iter()
        .map(|(i, len, is_phrase)| oracle.token(i, len, is_phrase))
        .collect();
    Ok(BruteForce {
        min_tokens,
        witness: Parsing::from_tokens(tokens),
        explored,
    })
}
