use crate::config::Window;

const NONE: usize = usize::MAX;

/// LZ77 dictionary: at time `i` the phrases are the nonempty factors of the
/// window `text[max(0, i-h) .. i)`.
///
/// This is the 1-based `T[i-h+1..i]` of the usual presentation shifted to
/// 0-based half-open indices: both name the last `h` processed symbols.
#[derive(Debug, Clone)]
pub struct SlidingWindowDictionary<'a> {
    text: &'a [u8],
    window: Window,
    allow_overlap: bool,
    /// `prev[p]` is the closest `q < p` with `text[q] == text[p]`.
    prev: Vec<usize>,
}

impl<'a> SlidingWindowDictionary<'a> {
    pub fn new(text: &'a [u8], window: Window, allow_overlap: bool) -> Self {
        let mut last = [NONE; 256];
        let mut prev = Vec::with_capacity(text.len());
        for (p, &b) in text.iter().enumerate() {
            prev.push(last[b as usize]);
            last[b as usize] = p;
        }
        SlidingWindowDictionary {
            text,
            window,
            allow_overlap,
            prev,
        }
    }

    pub fn text(&self) -> &'a [u8] {
        self.text
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// The window content at `time`.
    pub fn window_at(&self, time: usize) -> &'a [u8] {
        &self.text[self.window.start(time)..time]
    }

    /// `w` is a factor of the window at `time`.
    pub fn contains(&self, time: usize, w: &[u8]) -> bool {
        !w.is_empty() && find_last(self.window_at(time), w).is_some()
    }

    /// Longest `l <= cap` with `text[i..i+l)` in `D_i`, and the smallest
    /// backward offset among its occurrences. Candidates are visited from the
    /// nearest position outward and only a strictly longer match replaces the
    /// current best, so ties go to the smallest offset.
    pub fn longest_match(&self, i: usize, cap: usize) -> (usize, Option<usize>) {
        let n = self.text.len();
        if i >= n {
            return (0, None);
        }
        let lo = self.window.start(i);
        let mut bound = (n - i).min(cap);
        if !self.allow_overlap {
            bound = bound.min(i - lo);
        }
        let mut best = 0;
        let mut offset = None;
        let mut s = self.prev[i];
        while s != NONE && s >= lo && best < bound {
            let mut lim = (n - i).min(cap);
            if !self.allow_overlap {
                lim = lim.min(i - s);
            }
            if lim > best {
                let l = common_prefix(&self.text[s..], &self.text[i..], lim);
                if l > best {
                    best = l;
                    offset = Some(i - s);
                }
            }
            s = self.prev[s];
        }
        (best, offset)
    }

    /// Every `l <= cap` such that `text[i..i+l)` is in `D_i`, ascending.
    ///
    /// An occurrence of length `m` also witnesses every shorter prefix, so the
    /// set is always `1..=longest`.
    pub fn match_lengths(&self, i: usize, cap: usize) -> Vec<usize> {
        (1..=self.longest_match(i, cap).0).collect()
    }

    /// Smallest offset at which `text[i..i+len)` occurs in `D_i`.
    pub fn offset_of(&self, i: usize, len: usize) -> Option<usize> {
        let n = self.text.len();
        if len == 0 || i + len > n {
            return None;
        }
        let lo = self.window.start(i);
        let mut s = self.prev[i];
        while s != NONE && s >= lo {
            let fits = self.allow_overlap || s + len <= i;
            if fits && common_prefix(&self.text[s..], &self.text[i..], len) == len {
                return Some(i - s);
            }
            s = self.prev[s];
        }
        None
    }
}

fn common_prefix(a: &[u8], b: &[u8], limit: usize) -> usize {
    a.iter()
        .zip(b)
        .take(limit)
        .take_while(|(x, y)| x == y)
        .count()
}

/// Start of the rightmost occurrence of `needle` in `hay`.
pub(crate) fn find_last(hay: &[u8], needle: &[u8]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len())
        .rev()
        .find(|&s| &hay[s..s + needle.len()] == needle)
}
