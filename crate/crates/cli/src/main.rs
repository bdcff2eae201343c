//! `lzpl`: parse, verify, visualize and compress with dictionary parsers.

mod bench;
mod codec;
mod common;
mod graph;
mod parse;
mod search;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use common::{CliError, ScaleArgs};

#[derive(Debug, Parser)]
#[command(name = "lzpl", version, about = "Dictionary parsing laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    scale: ScaleArgs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a file with one or more strategies and report token counts.
    Parse(parse::ParseArgs),
    /// Run the dictionary and parsing property battery (exit 1 on violation).
    Verify(verify::VerifyArgs),
    /// Print the parse graph as Graphviz DOT.
    Graph(graph::GraphArgs),
    /// Encode a file as an LZSS-style stream.
    Compress(codec::CompressArgs),
    /// Decode a stream written by `compress`.
    Decompress(codec::DecompressArgs),
    /// Search for texts where greedy parsing is not optimal.
    Search(search::SearchArgs),
    /// Token counts and timings over a corpus directory, as CSV.
    Bench(bench::BenchArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Parse(a) => parse::run(a, &cli.scale),
        Command::Verify(a) => verify::run(a, &cli.scale),
        Command::Graph(a) => graph::run(a, &cli.scale),
        Command::Compress(a) => codec::compress(a, &cli.scale),
        Command::Decompress(a) => codec::decompress(a),
        Command::Search(a) => search::run(a),
        Command::Bench(a) => bench::run(a, &cli.scale),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Violation) => ExitCode::from(1),
        Err(CliError::Failure(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
