use crate::config::DictionaryConfig;
use crate::dictionary::Dictionary;
use crate::token::{Parsing, Token};

/// One-step-lookahead parsing.
///
/// At position `i` every first step is considered: each `l` in
/// `match_lengths(i)` and the literal step of length 1. The step maximizing
/// `l + reach(i + l)` wins, where `reach(p)` is the longest match at `p` (at
/// least 1, the literal) and 0 at the end of the text. Ties go to the larger
/// `l`, then to a pointer over a literal.
pub fn flexible_parse(config: &DictionaryConfig, text: &[u8]) -> Parsing {
    let dict = Dictionary::new(config, text);
    let n = text.len();
    let mut reach_cache: Vec<Option<usize>> = vec![None; n + 1];
    let mut reach = |p: usize| -> usize {
        if p >= n {
            return 0;
        }
        *reach_cache[p].get_or_insert_with(|| dict.longest_match(p).length.max(1))
    };

    let mut tokens = Vec::new();
    let mut i = 0;
    while i < n {
        // (score, length, is_pointer)
        let mut best = (1 + reach(i + 1), 1, false);
        for l in dict.match_lengths(i) {
            let cand = (l + reach(i + l), l, true);
            if cand > best {
                best = cand;
            }
        }
        let (_, l, is_pointer) = best;
        let token = if is_pointer {
            dict.token_for(i, l).expect("length from match_lengths")
        } else {
            Token::Literal(text[i])
        };
        tokens.push(token);
        i += l;
    }
    Parsing::from_tokens(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dictionary::StaticDictionary;
    use crate::parsers::greedy_parse;
    use crate::token::expand;

    #[test]
    fn examples() {
        let cfg = DictionaryConfig::lz77_unbounded();
        let p = flexible_parse(&cfg, b"abab");
        assert_eq!(p.len(), 3);
        assert_eq!(p.len(), greedy_parse(&cfg, b"abab").len());
        assert!(flexible_parse(&cfg, b"").is_empty());
    }

    #[test]
    fn lookahead_beats_greedy_on_prefix_closed_static() {
        // greedy: ab | c | d -> 3; lookahead: a | bcd -> 2
        let dict = StaticDictionary::new(["a", "ab", "b", "bc", "bcd"]).unwrap();
        let cfg = DictionaryConfig::static_dict(dict);
        assert_eq!(greedy_parse(&cfg, b"abcd").len(), 3);
        let p = flexible_parse(&cfg, b"abcd");
        assert_eq!(p.len(), 2);
        assert_eq!(expand(&p, &cfg).unwrap(), b"abcd");
    }
}
