//! Seeded text and dictionary generators.
//!
//! Every case draws from its own ChaCha stream (`seed`, case index), so any
//! single case can be regenerated without replaying the ones before it.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dictionary::StaticDictionary;

pub fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

/// The `k`-th symbol of an alphabet of `size` symbols. Alphabets of up to 26
/// symbols use lowercase letters so texts stay readable.
pub fn symbol(k: usize, size: usize) -> u8 {
    if size <= 26 {
        b'a' + k as u8
    } else {
        k as u8
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TextGenerator {
    /// Independent uniform symbols.
    Iid,
    /// A random seed string repeated to length, with a few point mutations.
    Repetitive,
}

impl TextGenerator {
    pub const ALL: [TextGenerator; 2] = [TextGenerator::Iid, TextGenerator::Repetitive];

    pub fn generate<R: Rng>(self, rng: &mut R, len: usize, alphabet: usize) -> Vec<u8> {
        match self {
            TextGenerator::Iid => iid_text(rng, len, alphabet),
            TextGenerator::Repetitive => repetitive_text(rng, len, alphabet),
        }
    }
}

impl fmt::Display for TextGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TextGenerator::Iid => "iid",
            TextGenerator::Repetitive => "repetitive",
        })
    }
}

impl FromStr for TextGenerator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "iid" => Ok(TextGenerator::Iid),
            "repetitive" => Ok(TextGenerator::Repetitive),
            _ => Err(format!("unknown generator `{s}`")),
        }
    }
}

pub fn iid_text<R: Rng>(rng: &mut R, len: usize, alphabet: usize) -> Vec<u8> {
    let alphabet = alphabet.clamp(1, 256);
    (0..len)
        .map(|_| symbol(rng.gen_range(0..alphabet), alphabet))
        .collect()
}

pub fn repetitive_text<R: Rng>(rng: &mut R, len: usize, alphabet: usize) -> Vec<u8> {
    if len == 0 {
        return Vec::new();
    }
    let period = rng.gen_range(1..=(len / 4).max(1));
    let seed = iid_text(rng, period, alphabet);
    let mut text: Vec<u8> = seed.iter().copied().cycle().take(len).collect();
    let mutations = rng.gen_range(0..=len / 8);
    for _ in 0..mutations {
        let at = rng.gen_range(0..len);
        text[at] = symbol(rng.gen_range(0..alphabet.clamp(1, 256)), alphabet);
    }
    text
}

/// Random words closed under taking prefixes.
pub fn prefix_closed_dictionary<R: Rng>(
    rng: &mut R,
    words: usize,
    max_len: usize,
    alphabet: usize,
) -> StaticDictionary {
    let mut phrases = Vec::new();
    for _ in 0..words {
        let len = rng.gen_range(1..=max_len.max(1));
        let w = iid_text(rng, len, alphabet);
        phrases.extend((1..=w.len()).map(|k| w[..k].to_vec()));
    }
    StaticDictionary::new(phrases).expect("prefixes are nonempty")
}

/// Random small phrase set with no closure guarantee.
pub fn arbitrary_dictionary<R: Rng>(
    rng: &mut R,
    max_words: usize,
    max_len: usize,
    alphabet: usize,
) -> StaticDictionary {
    let words = rng.gen_range(1..=max_words.max(1));
    let mut phrases: Vec<Vec<u8>> = (0..words)
        .map(|_| {
            let len = rng.gen_range(1..=max_len.max(1));
            iid_text(rng, len, alphabet)
        })
        .collect();
    phrases.shuffle(rng);
    StaticDictionary::new(phrases).expect("generated phrases are nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dictionary::is_prefix_closed_static;

    #[test]
    fn reproducible_per_case() {
        let a = TextGenerator::Repetitive.generate(&mut case_rng(7, 3), 40, 2);
        let b = TextGenerator::Repetitive.generate(&mut case_rng(7, 3), 40, 2);
        let c = TextGenerator::Repetitive.generate(&mut case_rng(7, 4), 40, 2);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn texts_respect_alphabet_and_length() {
        let mut rng = case_rng(1, 0);
        for len in [0, 1, 17, 64] {
            for g in TextGenerator::ALL {
                let t = g.generate(&mut rng, len, 3);
                assert_eq!(t.len(), len);
                assert!(t.iter().all(|b| (b'a'..=b'c').contains(b)));
            }
        }
        let t = iid_text(&mut rng, 1000, 256);
        assert!(t.iter().any(|&b| b > b'z'));
    }

    #[test]
    fn prefix_closed_generator() {
        let mut rng = case_rng(5, 0);
        for _ in 0..50 {
            let d = prefix_closed_dictionary(&mut rng, 4, 5, 2);
            assert!(is_prefix_closed_static(&d).holds);
        }
    }
}
