use std::collections::BTreeMap;

use serde::Serialize;

const NEVER: usize = usize::MAX;

#[derive(Debug, Clone)]
struct Node {
    children: BTreeMap<u8, usize>,
    available_from: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Insertion {
    /// First time at which the phrase belongs to the dictionary.
    pub time: usize,
    pub phrase: Vec<u8>,
}

/// LZ78 dictionary timeline for one text.
///
/// Starts empty and only grows. Each step takes the greedy phrase `w` at the
/// current boundary `i` (possibly empty) and inserts `w` extended by the next
/// symbol. The step covers `text[i..=j]` with `j = i + |w|`; the new phrase
/// joins the dictionary at time `j + 1`, never earlier.
#[derive(Debug, Clone)]
pub struct Lz78Dictionary {
    nodes: Vec<Node>,
    log: Vec<Insertion>,
}

impl Default for Lz78Dictionary {
    fn default() -> Self {
        Lz78Dictionary {
            nodes: vec![Node {
                children: BTreeMap::new(),
                available_from: NEVER,
            }],
            log: Vec::new(),
        }
    }
}

pub fn lz78_trace(text: &[u8]) -> Lz78Dictionary {
    let mut dict = Lz78Dictionary::default();
    let n = text.len();
    let mut i = 0;
    while i < n {
        // every inserted phrase is available at a step boundary
        let mut node = 0;
        let mut len = 0;
        while i + len < n {
            match dict.nodes[node].children.get(&text[i + len]) {
                Some(&child) => {
                    node = child;
                    len += 1;
                }
                None => break,
            }
        }
        if i + len == n {
            // last phrase has no extension symbol
            break;
        }
        let j = i + len;
        dict.insert(node, text[j], j + 1, text[i..=j].to_vec());
        i = j + 1;
    }
    dict
}

impl Lz78Dictionary {
    fn insert(&mut self, parent: usize, symbol: u8, time: usize, phrase: Vec<u8>) {
        let id = self.nodes.len();
        self.nodes.push(Node {
            children: BTreeMap::new(),
            available_from: time,
        });
        self.nodes[parent].children.insert(symbol, id);
        self.log.push(Insertion { time, phrase });
    }

    pub fn log(&self) -> &[Insertion] {
        &self.log
    }

    pub fn len(&self) -> usize {
        self.log.len()
    }

    pub fn is_empty(&self) -> bool {
        self.log.is_empty()
    }

    pub fn contains(&self, time: usize, w: &[u8]) -> bool {
        if w.is_empty() {
            return false;
        }
        let mut node = 0;
        for b in w {
            match self.nodes[node].children.get(b) {
                Some(&c) => node = c,
                None => return false,
            }
        }
        self.nodes[node].available_from <= time
    }

    /// Phrases in `D_time`, in insertion order.
    pub fn phrases_at(&self, time: usize) -> impl Iterator<Item = &[u8]> + '_ {
        self.log
            .iter()
            .filter(move |ins| ins.time <= time)
            .map(|ins| ins.phrase.as_slice())
    }

    /// Lengths `l <= cap` with `text[i..i+l)` in `D_i`, ascending.
    pub fn match_lengths(&self, text: &[u8], i: usize, cap: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut node = 0;
        let mut len = 0;
        while i + len < text.len() && len < cap {
            match self.nodes[node].children.get(&text[i + len]) {
                Some(&c) => {
                    node = c;
                    len += 1;
                    if self.nodes[node].available_from <= i {
                        out.push(len);
                    }
                }
                None => break,
            }
        }
        out
    }
}
