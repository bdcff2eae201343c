use crate::config::DictionaryConfig;
use crate::dictionary::Dictionary;
use crate::token::{Parsing, Token};

/// Left to right, always taking the longest match in `D_i` (smallest offset
/// among equally long occurrences), or a literal when nothing matches.
pub fn greedy_parse(config: &DictionaryConfig, text: &[u8]) -> Parsing {
    greedy_with(&Dictionary::new(config, text))
}

pub(crate) fn greedy_with(dict: &Dictionary<'_>) -> Parsing {
    let n = dict.text().len();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < n {
        let t: Token = dict.greedy_token(i);
        i += t.len();
        tokens.push(t);
    }
    Parsing::from_tokens(tokens)
}
