use crate::error::{Error, Result};

/// A fixed phrase set, identical at every point in time.
///
/// Phrases are kept sorted and deduplicated; a phrase's index is its rank in
/// that order, which is what [`Token::Phrase`](crate::Token::Phrase) refers to.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct StaticDictionary {
    phrases: Vec<Vec<u8>>,
    max_len: usize,
}

impl StaticDictionary {
    pub fn new<I, P>(phrases: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: AsRef<[u8]>,
    {
        let mut phrases: Vec<Vec<u8>> = phrases.into_iter().map(|p| p.as_ref().to_vec()).collect();
        if phrases.iter().any(Vec::is_empty) {
            return Err(Error::EmptyPhrase);
        }
        phrases.sort();
        phrases.dedup();
        let max_len = phrases.iter().map(Vec::len).max().unwrap_or(0);
        Ok(StaticDictionary { phrases, max_len })
    }

    /// Reads a newline-delimited phrase list. Blank lines are skipped; every
    /// other byte is part of a phrase.
    pub fn from_lines(data: &[u8]) -> Self {
        let phrases = data.split(|&b| b == b'\n').filter(|l| !l.is_empty());
        // blank lines were filtered, so no empty phrase can remain
        Self::new(phrases).expect("non-empty phrases")
    }

    pub fn to_lines(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for p in &self.phrases {
            out.extend_from_slice(p);
            out.push(b'\n');
        }
        out
    }

    pub fn len(&self) -> usize {
        self.phrases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phrases.is_empty()
    }

    pub fn max_phrase_len(&self) -> usize {
        self.max_len
    }

    pub fn phrases(&self) -> &[Vec<u8>] {
        &self.phrases
    }

    pub fn phrase(&self, index: usize) -> Option<&[u8]> {
        self.phrases.get(index).map(Vec::as_slice)
    }

    pub fn index_of(&self, w: &[u8]) -> Option<usize> {
        self.phrases.binary_search_by(|p| p.as_slice().cmp(w)).ok()
    }

    pub fn contains(&self, w: &[u8]) -> bool {
        self.index_of(w).is_some()
    }

    /// Lengths `l` with `text[i..i+l)` in the dictionary, ascending.
    pub fn match_lengths(&self, text: &[u8], i: usize, cap: usize) -> Vec<usize> {
        let top = self.max_len.min(text.len().saturating_sub(i)).min(cap);
        (1..=top)
            .filter(|&l| self.contains(&text[i..i + l]))
            .collect()
    }

    /// Longest phrase that is a suffix of `text[..end]`.
    pub fn longest_suffix_match(&self, text: &[u8], end: usize, cap: usize) -> Option<usize> {
        let top = self.max_len.min(end).min(cap);
        (1..=top)
            .rev()
            .find(|&l| self.contains(&text[end - l..end]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_phrase() {
        assert_eq!(StaticDictionary::new(["a", ""]), Err(Error::EmptyPhrase));
    }

    #[test]
    fn sorted_and_deduplicated() {
        let d = StaticDictionary::new(["bba", "a", "ba", "aba", "a"]).unwrap();
        assert_eq!(d.len(), 4);
        assert_eq!(d.phrase(0), Some(&b"a"[..]));
        assert_eq!(d.index_of(b"bba"), Some(3));
        assert_eq!(d.max_phrase_len(), 3);
    }

    #[test]
    fn lines_round_trip() {
        let d = StaticDictionary::from_lines(b"ab\n\nb\nabab\n");
        assert_eq!(d.len(), 3);
        assert_eq!(StaticDictionary::from_lines(&d.to_lines()), d);
    }

    #[test]
    fn suffix_and_forward_matches() {
        let d = StaticDictionary::new(["a", "ba", "aba", "bba"]).unwrap();
        assert_eq!(d.match_lengths(b"bba", 0, usize::MAX), vec![3]);
        assert_eq!(d.longest_suffix_match(b"abba", 4, usize::MAX), Some(3));
        assert_eq!(d.longest_suffix_match(b"ab", 2, usize::MAX), None);
    }
}
