use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, ValueEnum};
use lzpl::{decode, encode_with_stats, CodecParams, Strategy};
use serde::Serialize;

use crate::common::{read_input, write_output, CliResult, ScaleArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CodecStrategy {
    Greedy,
    Optimal,
    Flexible,
}

impl From<CodecStrategy> for Strategy {
    fn from(s: CodecStrategy) -> Self {
        match s {
            CodecStrategy::Greedy => Strategy::Greedy,
            CodecStrategy::Optimal => Strategy::Optimal,
            CodecStrategy::Flexible => Strategy::Flexible,
        }
    }
}

#[derive(Debug, Args)]
pub struct CompressArgs {
    pub input: PathBuf,
    pub output: PathBuf,
    /// W: offset code width; the window is 2^W.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=24))]
    pub offset_bits: u8,
    /// L: length code width; pointers are at most 2^L long.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=16))]
    pub length_bits: u8,
    #[arg(long, value_enum, default_value_t = CodecStrategy::Greedy)]
    pub strategy: CodecStrategy,
}

#[derive(Debug, Args)]
pub struct DecompressArgs {
    pub input: PathBuf,
    pub output: PathBuf,
}

#[derive(Serialize)]
struct CompressReport {
    input_bytes: usize,
    output_bytes: usize,
    strategy: Strategy,
    offset_bits: u8,
    length_bits: u8,
    token_count: usize,
    pointer_count: usize,
    literal_count: usize,
    encoded_bits: u64,
}

pub fn compress(args: &CompressArgs, scale: &ScaleArgs) -> CliResult {
    let params = CodecParams::new(args.offset_bits, args.length_bits)?;
    let limits = scale.limits()?;
    let text = read_input(&args.input)?;
    let (stream, s) = encode_with_stats(&text, params, args.strategy.into(), &limits)?;
    write_output(&args.output, &stream)?;
    let report = CompressReport {
        input_bytes: text.len(),
        output_bytes: stream.len(),
        strategy: args.strategy.into(),
        offset_bits: args.offset_bits,
        length_bits: args.length_bits,
        token_count: s.token_count,
        pointer_count: s.pointer_count,
        literal_count: s.literal_count,
        encoded_bits: s.encoded_bits,
    };
    let json = serde_json::to_string_pretty(&report).expect("serializable");
    // keep stdout clean when the stream itself goes there
    if args.output.as_os_str() == "-" {
        eprintln!("{json}");
    } else {
        println!("{json}");
    }
    Ok(())
}

pub fn decompress(args: &DecompressArgs) -> CliResult {
    let stream = read_input(&args.input)?;
    let text = decode(&stream).with_context(|| format!("decoding {}", args.input.display()))?;
    write_output(&args.output, &text)
}
