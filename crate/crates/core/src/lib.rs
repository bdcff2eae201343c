//! Dictionary parsing laboratory.
//!
//! Time-indexed LZ77 (sliding window), LZ78 and static dictionaries, the
//! dictionary property checkers, the parse graph with its shortest-path
//! parser, greedy / one-step-lookahead / right-to-left parsers, a brute-force
//! minimum-token oracle, and an LZSS-style bit-exact codec.

pub mod codec;
pub mod config;
pub mod dictionary;
mod error;
pub mod gen;
pub mod graph;
pub mod parsers;
mod serde_lossy;
mod token;
pub mod verify;

pub use codec::{decode, encode, encode_with_stats, CodecParams};
pub use config::{DictionaryConfig, Family, ScaleLimits, Window};
pub use dictionary::{Dictionary, Match, PropertyReport, StaticDictionary, Witness};
pub use error::{Error, Result};
pub use graph::{
    build_graph, check_suffix_edge_closure, export_dot, shortest_path, Edge, EdgeKind, ParseGraph,
};
pub use parsers::{
    brute_force_optimal, flexible_parse, greedy_parse, optimal_parse, parse_with,
    reverse_greedy_parse, Strategy,
};
pub use token::{expand, stats, ParseStats, Parsing, Token};
