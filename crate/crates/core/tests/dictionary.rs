use std::collections::BTreeSet;

use lzpl::dictionary::{
    self, check_dynamic_suffix_closed, check_natural_suffix_closed, check_non_decreasing,
    lz78_trace, Dictionary,
};
use lzpl::{DictionaryConfig, ScaleLimits, Window};
use proptest::prelude::*;

fn text(max: usize, alphabet: u8) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..alphabet, 0..=max)
        .prop_map(|v| v.into_iter().map(|b| b'a' + b).collect())
}

fn window() -> impl Strategy<Value = Window> {
    prop_oneof![
        (1usize..=12).prop_map(Window::Bounded),
        Just(Window::Unbounded),
    ]
}

/// All nonempty factors of `s`, by brute enumeration.
fn factors(s: &[u8]) -> BTreeSet<Vec<u8>> {
    let mut out = BTreeSet::new();
    for a in 0..s.len() {
        for b in a + 1..=s.len() {
            out.insert(s[a..b].to_vec());
        }
    }
    out
}

fn naive_start(i: usize, w: Window) -> usize {
    match w {
        Window::Bounded(h) => i.saturating_sub(h),
        Window::Unbounded => 0,
    }
}

fn naive_window(t: &[u8], i: usize, w: Window) -> &[u8] {
    &t[naive_start(i, w)..i]
}

proptest! {
    #[test]
    fn lz77_membership_is_window_factor(t in text(24, 3), w in window(), probe in text(4, 3)) {
        let cfg = DictionaryConfig::lz77(w);
        for i in 0..=t.len() {
            let f = factors(naive_window(&t, i, w));
            for phrase in f.iter().take(40) {
                prop_assert!(dictionary::contains(&cfg, &t, i, phrase));
            }
            if !probe.is_empty() {
                prop_assert_eq!(dictionary::contains(&cfg, &t, i, &probe), f.contains(&probe));
            }
        }
    }

    #[test]
    fn lz77_match_lengths_contiguous_and_consistent(t in text(32, 2), w in window()) {
        let cfg = DictionaryConfig::lz77(w);
        let d = Dictionary::new(&cfg, &t);
        for i in 0..t.len() {
            let lengths = d.match_lengths(i);
            let f = factors(naive_window(&t, i, w));
            let expected: Vec<usize> = (1..=t.len() - i).filter(|&l| f.contains(&t[i..i + l])).collect();
            prop_assert_eq!(&lengths, &expected);
            let top = lengths.last().copied().unwrap_or(0);
            prop_assert_eq!(lengths.clone(), (1..=top).collect::<Vec<_>>());
            let m = d.longest_match(i);
            prop_assert_eq!(m.length, top);
            if let Some(off) = m.offset {
                // smallest offset among non-overlapping occurrences
                let lo = naive_start(i, w);
                let nearest = (top..=i - lo).find(|&o| t[i - o..i - o + top] == t[i..i + top]);
                prop_assert_eq!(Some(off), nearest);
            } else {
                prop_assert_eq!(top, 0);
            }
        }
    }

    #[test]
    fn lz77_is_dynamically_suffix_closed(t in text(40, 3), h in 1usize..=16) {
        let limits = ScaleLimits::default();
        let cfg = DictionaryConfig::lz77(Window::Bounded(h));
        prop_assert!(check_dynamic_suffix_closed(&cfg, &t, &limits).unwrap().holds);
        let cfg = DictionaryConfig::lz77_unbounded();
        prop_assert!(check_dynamic_suffix_closed(&cfg, &t, &limits).unwrap().holds);
        prop_assert!(check_non_decreasing(&cfg, &t, &limits).unwrap().holds);
    }

    #[test]
    fn dynamic_closure_implies_natural(t in text(14, 2), family in 0u8..3, h in 1usize..=6) {
        let limits = ScaleLimits::default();
        let cfg = match family {
            0 => DictionaryConfig::lz77(Window::Bounded(h)),
            1 => DictionaryConfig::lz78(),
            _ => DictionaryConfig::static_dict(
                lzpl::StaticDictionary::new(factors(&t[..t.len().min(h)]).into_iter().chain([b"ab".to_vec()])).unwrap(),
            ),
        };
        if check_dynamic_suffix_closed(&cfg, &t, &limits).unwrap().holds {
            prop_assert!(check_natural_suffix_closed(&cfg, &t, &limits).unwrap().holds);
        }
    }

    #[test]
    fn lz78_trace_structure(t in text(40, 3)) {
        let d = lz78_trace(&t);
        let limits = ScaleLimits::default();
        prop_assert!(check_non_decreasing(&DictionaryConfig::lz78(), &t, &limits).unwrap().holds);
        let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
        let mut last_time = 0;
        for ins in d.log() {
            prop_assert!(ins.time > last_time);
            last_time = ins.time;
            // previous greedy phrase (or empty) extended by one symbol
            let (stem, _) = ins.phrase.split_at(ins.phrase.len() - 1);
            prop_assert!(stem.is_empty() || seen.contains(stem));
            prop_assert!(seen.insert(ins.phrase.clone()));
            // the phrase ends right before it becomes available
            prop_assert_eq!(&t[ins.time - ins.phrase.len()..ins.time], ins.phrase.as_slice());
            prop_assert!(d.contains(ins.time, &ins.phrase));
            prop_assert!(!d.contains(ins.time - 1, &ins.phrase));
        }
    }
}

#[test]
fn lz78_dictionary_is_prefix_closed_at_every_time() {
    let t = b"abaababbbaabaaab";
    let cfg = DictionaryConfig::lz78();
    let sets = dictionary::materialize(&cfg, t, &ScaleLimits::default()).unwrap();
    for set in &sets {
        for w in set.iter() {
            for k in 1..w.len() {
                assert!(set.contains(&w[..k]));
            }
        }
    }
}

#[test]
fn static_abba_dictionary_membership() {
    let d = lzpl::StaticDictionary::new(["a", "ba", "aba", "bba"]).unwrap();
    assert!(dictionary::is_suffix_closed_static(&d).holds);
    let cfg = DictionaryConfig::static_dict(d);
    for time in 0..5 {
        assert!(dictionary::contains(&cfg, b"whatever", time, b"aba"));
        assert!(!dictionary::contains(&cfg, b"whatever", time, b"b"));
    }
}
