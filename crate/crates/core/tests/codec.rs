use lzpl::codec::{write_stream, HEADER_LEN};
use lzpl::{
    decode, encode, encode_with_stats, greedy_parse, stats, CodecParams, ScaleLimits,
    Strategy as ParseStrategy,
};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = CodecParams> {
    (1u8..=14, 1u8..=8).prop_map(|(w, l)| CodecParams::new(w, l).unwrap())
}

fn bytes(max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop_oneof![
        prop::collection::vec(any::<u8>(), 0..=max),
        prop::collection::vec(0u8..3, 0..=max),
    ]
}

proptest! {
    #[test]
    fn round_trip(t in bytes(4096), p in params(), s in prop_oneof![Just(ParseStrategy::Greedy), Just(ParseStrategy::Flexible)]) {
        let (stream, st) = encode_with_stats(&t, p, s, &ScaleLimits::default()).unwrap();
        prop_assert_eq!(decode(&stream).unwrap(), t);
        prop_assert_eq!(st.encoded_bits, p.payload_bits(&st));
        prop_assert_eq!(stream.len() - HEADER_LEN, st.encoded_bits.div_ceil(8) as usize);
    }

    #[test]
    fn optimal_matches_greedy_token_count(t in bytes(600), p in params()) {
        let limits = ScaleLimits::default();
        let (g_stream, g) = encode_with_stats(&t, p, ParseStrategy::Greedy, &limits).unwrap();
        let (o_stream, o) = encode_with_stats(&t, p, ParseStrategy::Optimal, &limits).unwrap();
        prop_assert_eq!(g.token_count, o.token_count);
        prop_assert_eq!(decode(&g_stream).unwrap(), decode(&o_stream).unwrap());
    }
}

#[test]
fn hand_built_stream_decodes() {
    let p = CodecParams::new(3, 2).unwrap();
    let text = b"abcabcabca";
    let parsing = greedy_parse(&p.dictionary_config(), text);
    let stream = write_stream(text.len(), &parsing, p).unwrap();
    assert_eq!(decode(&stream).unwrap(), text);
    let s = stats(&parsing);
    assert_eq!(
        stream.len(),
        HEADER_LEN + p.payload_bits(&s).div_ceil(8) as usize
    );
}

#[test]
fn empty_and_single_byte() {
    let p = CodecParams::default();
    for t in [&b""[..], b"x"] {
        assert_eq!(
            decode(&encode(t, p, ParseStrategy::Greedy).unwrap()).unwrap(),
            t
        );
    }
}
