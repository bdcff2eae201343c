//! Dynamic dictionaries queried at a point in time.
//!
//! `D_i` is the dictionary after the first `i` symbols have been processed;
//! times run over `0..=|T|`.

mod lz78;
mod properties;
mod sliding;
mod static_dict;

pub use lz78::{lz78_trace, Insertion, Lz78Dictionary};
pub use properties::{
    check_dynamic_suffix_closed, check_natural_suffix_closed, check_non_decreasing,
    is_prefix_closed_static, is_suffix_closed_static, materialize, Condition, PropertyReport,
    Witness,
};
pub use sliding::SlidingWindowDictionary;
pub use static_dict::StaticDictionary;

pub(crate) use sliding::find_last;

use serde::Serialize;

use crate::config::{DictionaryConfig, Family};
use crate::token::Token;

/// Result of a longest-match query. `length == 0` means no match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Match {
    pub length: usize,
    /// Smallest backward offset of an occurrence; `None` for static phrases
    /// and for empty matches.
    pub offset: Option<usize>,
}

impl Match {
    pub const NONE: Match = Match {
        length: 0,
        offset: None,
    };
}

#[derive(Debug, Clone)]
enum Source<'a> {
    Sliding(SlidingWindowDictionary<'a>),
    Lz78(Lz78Dictionary),
    Static(&'a StaticDictionary),
}

/// A read-only, time-indexed view of one dictionary over one text.
#[derive(Debug, Clone)]
pub struct Dictionary<'a> {
    text: &'a [u8],
    cap: usize,
    source: Source<'a>,
}

impl<'a> Dictionary<'a> {
    pub fn new(config: &'a DictionaryConfig, text: &'a [u8]) -> Self {
        let source = match &config.family {
            Family::Lz77 => Source::Sliding(SlidingWindowDictionary::new(
                text,
                config.window,
                config.allow_overlap,
            )),
            Family::Lz78 => Source::Lz78(lz78_trace(text)),
            Family::Static(d) => Source::Static(d),
        };
        Dictionary {
            text,
            cap: config.max_len.unwrap_or(usize::MAX),
            source,
        }
    }

    pub fn text(&self) -> &'a [u8] {
        self.text
    }

    pub fn contains(&self, time: usize, w: &[u8]) -> bool {
        if w.is_empty() || w.len() > self.cap || time > self.text.len() {
            return false;
        }
        match &self.source {
            Source::Sliding(d) => d.contains(time, w),
            Source::Lz78(d) => d.contains(time, w),
            Source::Static(d) => d.contains(w),
        }
    }

    /// `{ l >= 1 : text[i..i+l) in D_i }`, ascending.
    pub fn match_lengths(&self, i: usize) -> Vec<usize> {
        if i >= self.text.len() {
            return Vec::new();
        }
        match &self.source {
            Source::Sliding(d) => d.match_lengths(i, self.cap),
            Source::Lz78(d) => d.match_lengths(self.text, i, self.cap),
            Source::Static(d) => d.match_lengths(self.text, i, self.cap),
        }
    }

    pub fn longest_match(&self, i: usize) -> Match {
        if i >= self.text.len() {
            return Match::NONE;
        }
        let length = match &self.source {
            Source::Sliding(d) => {
                let (length, offset) = d.longest_match(i, self.cap);
                return Match { length, offset };
            }
            Source::Lz78(d) => d.match_lengths(self.text, i, self.cap).last().copied(),
            Source::Static(d) => d.match_lengths(self.text, i, self.cap).last().copied(),
        };
        match length {
            Some(length) => Match {
                length,
                offset: self.offset_of(i, length),
            },
            None => Match::NONE,
        }
    }

    fn offset_of(&self, i: usize, len: usize) -> Option<usize> {
        match &self.source {
            Source::Sliding(d) => d.offset_of(i, len),
            Source::Lz78(_) => find_last(&self.text[..i], &self.text[i..i + len]).map(|s| i - s),
            Source::Static(_) => None,
        }
    }

    /// The token that spells the dictionary phrase `text[i..i+len)`.
    ///
    /// Returns `None` when the phrase is not in `D_i`.
    pub fn token_for(&self, i: usize, len: usize) -> Option<Token> {
        if len == 0 || i + len > self.text.len() || !self.match_lengths(i).contains(&len) {
            return None;
        }
        match &self.source {
            Source::Static(d) => d
                .index_of(&self.text[i..i + len])
                .map(|index| Token::Phrase { index, length: len }),
            _ => self.offset_of(i, len).map(|offset| Token::Pointer {
                offset,
                length: len,
            }),
        }
    }

    /// Token for the longest match at `i`, or a literal when there is none.
    pub fn greedy_token(&self, i: usize) -> Token {
        let m = self.longest_match(i);
        match (&self.source, m.offset) {
            (_, Some(offset)) if m.length > 0 => Token::Pointer {
                offset,
                length: m.length,
            },
            (Source::Static(d), _) if m.length > 0 => Token::Phrase {
                index: d
                    .index_of(&self.text[i..i + m.length])
                    .expect("matched phrase"),
                length: m.length,
            },
            _ => Token::Literal(self.text[i]),
        }
    }
}

pub fn contains(config: &DictionaryConfig, text: &[u8], time: usize, w: &[u8]) -> bool {
    Dictionary::new(config, text).contains(time, w)
}

pub fn longest_match(config: &DictionaryConfig, text: &[u8], i: usize) -> Match {
    Dictionary::new(config, text).longest_match(i)
}

pub fn match_lengths(config: &DictionaryConfig, text: &[u8], i: usize) -> Vec<usize> {
    Dictionary::new(config, text).match_lengths(i)
}
