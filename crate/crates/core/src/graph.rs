//! The parse graph: one node per text position, a unit-weight edge for every
//! way to take one token.

use std::fmt::Write as _;

use serde::Serialize;

use crate::config::{DictionaryConfig, ScaleLimits};
use crate::dictionary::{Condition, Dictionary, PropertyReport, Witness};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Literal,
    Dictionary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub kind: EdgeKind,
}

/// DAG over positions `0..=n`. Edge `(i, j)` of kind `Dictionary` exists iff
/// `text[i..j)` is in `D_i`; literal edges `(i, i+1)` always exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseGraph {
    n: usize,
    /// Outgoing edges per source, sorted by target then kind.
    out: Vec<Vec<(usize, EdgeKind)>>,
}

impl ParseGraph {
    /// Graph with only the literal edges over `n` symbols.
    pub fn literal_only(n: usize) -> Self {
        ParseGraph {
            n,
            out: (0..n).map(|i| vec![(i + 1, EdgeKind::Literal)]).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut out = vec![Vec::new(); n];
        for e in edges {
            assert!(e.from < e.to && e.to <= n, "edge {e:?} out of order");
            out[e.from].push((e.to, e.kind));
        }
        for v in &mut out {
            v.sort();
            v.dedup();
        }
        ParseGraph { n, out }
    }

    /// Text length; nodes are `0..=n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges_from(&self, i: usize) -> impl Iterator<Item = Edge> + '_ {
        self.out
            .get(i)
            .into_iter()
            .flatten()
            .map(move |&(to, kind)| Edge { from: i, to, kind })
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |i| self.edges_from(i))
    }

    pub fn has_edge(&self, from: usize, to: usize, kind: EdgeKind) -> bool {
        self.out
            .get(from)
            .is_some_and(|v| v.binary_search(&(to, kind)).is_ok())
    }

    pub fn dictionary_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges().filter(|e| e.kind == EdgeKind::Dictionary)
    }
}

pub fn build_graph(
    config: &DictionaryConfig,
    text: &[u8],
    limits: &ScaleLimits,
) -> Result<ParseGraph> {
    ScaleLimits::ensure("text length", text.len(), limits.graph_text)?;
    Ok(build_with(&Dictionary::new(config, text)))
}

pub(crate) fn build_with(dict: &Dictionary<'_>) -> ParseGraph {
    let n = dict.text().len();
    let out = (0..n)
        .map(|i| {
            let mut v = vec![(i + 1, EdgeKind::Literal)];
            v.extend(
                dict.match_lengths(i)
                    .into_iter()
                    .map(|l| (i + l, EdgeKind::Dictionary)),
            );
            v.sort();
            v
        })
        .collect();
    ParseGraph { n, out }
}

/// A `0 -> n` path with the fewest edges, by forward relaxation over the
/// topological order `0, 1, ..., n`.
///
/// Ties keep the smallest predecessor (the longest incoming edge); from the
/// same predecessor a dictionary edge beats a literal edge.
pub fn shortest_path(graph: &ParseGraph) -> Vec<Edge> {
    let n = graph.n;
    let mut dist = vec![usize::MAX; n + 1];
    let mut via: Vec<Option<Edge>> = vec![None; n + 1];
    dist[0] = 0;
    for i in 0..n {
        if dist[i] == usize::MAX {
            continue;
        }
        let d = dist[i] + 1;
        for e in graph.edges_from(i) {
            let better = match via[e.to] {
                _ if d < dist[e.to] => true,
                Some(prev) => {
                    d == dist[e.to]
                        && prev.from == i
                        && prev.kind == EdgeKind::Literal
                        && e.kind == EdgeKind::Dictionary
                }
                None => false,
            };
            if better {
                dist[e.to] = d;
                via[e.to] = Some(e);
            }
        }
    }
    let mut path = Vec::with_capacity(dist[n].min(n));
    let mut at = n;
    while at > 0 {
        let e = via[at].expect("literal edges connect every node");
        path.push(e);
        at = e.from;
    }
    path.reverse();
    path
}

/// For every dictionary edge `(i, j)`, all `(k, j)` with `i < k < j` are
/// dictionary edges too.
pub fn check_suffix_edge_closure(graph: &ParseGraph) -> PropertyReport {
    for e in graph.dictionary_edges() {
        if let Some(k) =
            (e.from + 1..e.to).find(|&k| !graph.has_edge(k, e.to, EdgeKind::Dictionary))
        {
            return PropertyReport::fail(Witness {
                time: Some(e.from),
                phrase: Vec::new(),
                k,
                other_time: Some(e.to),
                condition: Condition::MissingSuffixEdge,
            });
        }
    }
    PropertyReport::pass()
}

/// Deterministic Graphviz rendering. Literal edges are dashed, dictionary
/// edges solid, and edges on `highlight` bold.
pub fn export_dot(graph: &ParseGraph, highlight: Option<&[Edge]>) -> String {
    let on_path = |e: &Edge| highlight.is_some_and(|p| p.contains(e));
    let mut s = String::from("digraph parse {\n  rankdir=LR;\n  node [shape=circle];\n");
    for i in 0..=graph.n {
        let _ = writeln!(s, "  {i} [label=\"{i}\"];");
    }
    for e in graph.edges() {
        let style = match e.kind {
            EdgeKind::Literal => "dashed",
            EdgeKind::Dictionary => "solid",
        };
        let bold = if on_path(&e) { ", bold" } else { "" };
        let _ = writeln!(s, "  {} -> {} [style=\"{style}{bold}\"];", e.from, e.to);
    }
    s.push_str("}\n");
    s
}
