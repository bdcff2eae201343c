use crate::config::{DictionaryConfig, ScaleLimits};
use crate::dictionary::Dictionary;
use crate::error::Result;
use crate::graph::{build_with, shortest_path, Edge, EdgeKind};
use crate::token::{Parsing, Token};

/// Minimum-token parsing: shortest path over the parse graph.
pub fn optimal_parse(
    config: &DictionaryConfig,
    text: &[u8],
    limits: &ScaleLimits,
) -> Result<Parsing> {
    ScaleLimits::ensure("text length", text.len(), limits.graph_text)?;
    let dict = Dictionary::new(config, text);
    let path = shortest_path(&build_with(&dict));
    Ok(path_to_parsing(&dict, &path))
}

/// Turns a `0 -> n` edge path into tokens: dictionary edges become pointers
/// (smallest offset) or phrase references, literal edges become literals.
pub fn path_to_parsing(dict: &Dictionary<'_>, path: &[Edge]) -> Parsing {
    let text = dict.text();
    let tokens = path
        .iter()
        .map(|e| match e.kind {
            EdgeKind::Literal => Token::Literal(text[e.from]),
            EdgeKind::Dictionary => dict
                .token_for(e.from, e.to - e.from)
                .expect("dictionary edge spells a phrase of D_i"),
        })
        .collect();
    Parsing::from_tokens(tokens)
}
