//! Parsing units and their reconstruction.

use serde::{Deserialize, Serialize};

use crate::config::DictionaryConfig;
use crate::error::{Error, Result};

/// One parsing unit. Every token costs 1 under the uniform cost model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "TokenRepr", from = "TokenRepr")]
pub enum Token {
    Literal(u8),
    /// Copy `length` symbols starting `offset` positions back.
    Pointer {
        offset: usize,
        length: usize,
    },
    /// Reference into a static dictionary (index into its sorted phrase list).
    Phrase {
        index: usize,
        length: usize,
    },
}

#[derive(Clone, Copy, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum TokenRepr {
    Literal { symbol: u8 },
    Pointer { offset: usize, length: usize },
    Phrase { index: usize, length: usize },
}

impl From<Token> for TokenRepr {
    fn from(t: Token) -> Self {
        match t {
            Token::Literal(symbol) => TokenRepr::Literal { symbol },
            Token::Pointer { offset, length } => TokenRepr::Pointer { offset, length },
            Token::Phrase { index, length } => TokenRepr::Phrase { index, length },
        }
    }
}

impl From<TokenRepr> for Token {
    fn from(t: TokenRepr) -> Self {
        match t {
            TokenRepr::Literal { symbol } => Token::Literal(symbol),
            TokenRepr::Pointer { offset, length } => Token::Pointer { offset, length },
            TokenRepr::Phrase { index, length } => Token::Phrase { index, length },
        }
    }
}

impl Token {
    pub fn len(&self) -> usize {
        match *self {
            Token::Literal(_) => 1,
            Token::Pointer { length, .. } | Token::Phrase { length, .. } => length,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Token::Literal(_))
    }
}

/// Ordered token sequence with the text position where each token starts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parsing {
    tokens: Vec<Token>,
    starts: Vec<usize>,
}

impl Parsing {
    pub fn from_tokens(tokens: Vec<Token>) -> Self {
        let mut starts = Vec::with_capacity(tokens.len());
        let mut pos = 0;
        for t in &tokens {
            starts.push(pos);
            pos += t.len();
        }
        Parsing { tokens, starts }
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Number of text symbols covered.
    pub fn covered(&self) -> usize {
        self.tokens.iter().map(Token::len).sum()
    }

    /// `(start, end)` spans of every token, in order.
    pub fn spans(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.starts
            .iter()
            .zip(&self.tokens)
            .map(|(&s, t)| (s, s + t.len()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Token)> + '_ {
        self.starts.iter().copied().zip(&self.tokens)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseStats {
    pub token_count: usize,
    pub pointer_count: usize,
    pub literal_count: usize,
    /// Payload size in bits; zero until the codec fills it in.
    pub encoded_bits: u64,
}

pub fn stats(parsing: &Parsing) -> ParseStats {
    let literal_count = parsing.tokens.iter().filter(|t| t.is_literal()).count();
    ParseStats {
        token_count: parsing.len(),
        pointer_count: parsing.len() - literal_count,
        literal_count,
        encoded_bits: 0,
    }
}

/// Rebuilds the text a parsing denotes.
///
/// A pointer at reconstructed position `i` copies `length` symbols from
/// `i - offset`, one at a time, so overlapping copies (only accepted when
/// `config.allow_overlap` is set) replicate the period.
pub fn expand(parsing: &Parsing, config: &DictionaryConfig) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(parsing.covered());
    for token in &parsing.tokens {
        match *token {
            Token::Literal(b) => out.push(b),
            Token::Pointer { offset, length } => {
                let position = out.len();
                let bad = offset == 0
                    || length == 0
                    || offset > position
                    || (!config.allow_overlap && length > offset);
                if bad {
                    return Err(Error::PointerOutOfRange {
                        position,
                        offset,
                        length,
                    });
                }
                let from = position - offset;
                for t in 0..length {
                    let b = out[from + t];
                    out.push(b);
                }
            }
            Token::Phrase { index, length } => {
                let dict = config
                    .static_dictionary()
                    .ok_or(Error::FamilyMismatch { expected: "static" })?;
                let phrase = dict.phrase(index).ok_or(Error::PhraseOutOfRange {
                    index,
                    size: dict.len(),
                })?;
                if phrase.len() != length {
                    return Err(Error::PhraseOutOfRange {
                        index,
                        size: dict.len(),
                    });
                }
                out.extend_from_slice(phrase);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dictionary::StaticDictionary;

    fn ptr(offset: usize, length: usize) -> Token {
        Token::Pointer { offset, length }
    }

    #[test]
    fn expand_hand_replay() {
        let p = Parsing::from_tokens(vec![Token::Literal(b'a'), Token::Literal(b'b'), ptr(2, 2)]);
        let cfg = DictionaryConfig::lz77_unbounded();
        assert_eq!(expand(&p, &cfg).unwrap(), b"abab");
        assert_eq!(p.starts(), &[0, 1, 2]);
    }

    #[test]
    fn expand_empty() {
        let cfg = DictionaryConfig::lz77_unbounded();
        assert_eq!(expand(&Parsing::default(), &cfg).unwrap(), b"");
    }

    #[test]
    fn expand_rejects_pointer_without_history() {
        let cfg = DictionaryConfig::lz77_unbounded();
        let p = Parsing::from_tokens(vec![ptr(1, 1)]);
        assert!(matches!(
            expand(&p, &cfg),
            Err(Error::PointerOutOfRange { position: 0, .. })
        ));
    }

    #[test]
    fn overlap_only_when_enabled() {
        let p = Parsing::from_tokens(vec![Token::Literal(b'a'), ptr(1, 3)]);
        let cfg = DictionaryConfig::lz77_unbounded();
        assert!(expand(&p, &cfg).is_err());
        assert_eq!(expand(&p, &cfg.with_overlap(true)).unwrap(), b"aaaa");
    }

    #[test]
    fn phrase_tokens_resolve_against_static_dictionary() {
        let dict = StaticDictionary::new(["ab", "a", "abb"]).unwrap();
        let ab = dict.index_of(b"ab").unwrap();
        let cfg = DictionaryConfig::static_dict(dict);
        let p = Parsing::from_tokens(vec![
            Token::Phrase {
                index: ab,
                length: 2,
            },
            Token::Phrase {
                index: ab,
                length: 2,
            },
        ]);
        assert_eq!(expand(&p, &cfg).unwrap(), b"abab");
        let bad = Parsing::from_tokens(vec![Token::Phrase {
            index: 9,
            length: 1,
        }]);
        assert!(matches!(
            expand(&bad, &cfg),
            Err(Error::PhraseOutOfRange { .. })
        ));
        assert!(expand(&p, &DictionaryConfig::lz78()).is_err());
    }

    #[test]
    fn stats_counts() {
        let p = Parsing::from_tokens(vec![Token::Literal(b'a'), Token::Literal(b'b'), ptr(2, 2)]);
        let s = stats(&p);
        assert_eq!((s.token_count, s.pointer_count, s.literal_count), (3, 1, 2));
        let s = stats(&Parsing::default());
        assert_eq!((s.token_count, s.pointer_count, s.literal_count), (0, 0, 0));
        let s = stats(&Parsing::from_tokens(vec![ptr(2, 2), ptr(4, 4)]));
        assert_eq!((s.token_count, s.pointer_count, s.literal_count), (2, 2, 0));
        assert_eq!(s.encoded_bits, 0);
    }
}
