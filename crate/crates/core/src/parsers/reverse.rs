use crate::dictionary::StaticDictionary;
use crate::token::{Parsing, Token};

/// Greedy parsing run right to left: repeatedly take the longest phrase that
/// ends where the unparsed prefix ends, or a literal. Tokens are returned in
/// text order.
pub fn reverse_greedy_parse(dict: &StaticDictionary, text: &[u8]) -> Parsing {
    let mut tokens = Vec::new();
    let mut end = text.len();
    while end > 0 {
        let token = match dict.longest_suffix_match(text, end, usize::MAX) {
            Some(l) => Token::Phrase {
                index: dict.index_of(&text[end - l..end]).expect("matched phrase"),
                length: l,
            },
            None => Token::Literal(text[end - 1]),
        };
        end -= token.len();
        tokens.push(token);
    }
    tokens.reverse();
    Parsing::from_tokens(tokens)
}
