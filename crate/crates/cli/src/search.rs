use clap::{Args, ValueEnum};
use lzpl::parsers::{search_greedy_gap, SearchFamily, SearchParams};
use lzpl::Window;

use crate::common::{CliError, CliResult};
use crate::parse::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchFamilyArg {
    Lz77,
    Lz78,
    /// Random non-closed static dictionaries, one per candidate.
    Static,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum, default_value_t = SearchFamilyArg::Lz78)]
    pub family: SearchFamilyArg,
    /// LZ77 window (a count or `unbounded`).
    #[arg(long, default_value = "unbounded")]
    pub window: Window,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u16).range(1..=256))]
    pub alphabet: u16,
    #[arg(long, default_value_t = 24)]
    pub max_len: usize,
    /// Number of candidate texts to try.
    #[arg(long, default_value_t = 100_000)]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

pub fn run(args: &SearchArgs) -> CliResult {
    if args.max_len > 24 {
        return Err(CliError::Usage("--max-len is at most 24".into()));
    }
    let family = match args.family {
        SearchFamilyArg::Lz77 => SearchFamily::Lz77(args.window),
        SearchFamilyArg::Lz78 => SearchFamily::Lz78,
        SearchFamilyArg::Static => SearchFamily::Static {
            max_phrases: 5,
            max_phrase_len: 4,
        },
    };
    let outcome = search_greedy_gap(&SearchParams {
        family,
        alphabet: args.alphabet as usize,
        max_len: args.max_len,
        budget: args.budget,
        seed: args.seed,
    });
    match args.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&outcome).expect("serializable")
        ),
        Format::Csv => {
            println!("explored,found,text,greedy_tokens,optimal_tokens");
            match &outcome.found {
                Some(g) => println!(
                    "{},true,{},{},{}",
                    outcome.explored,
                    String::from_utf8_lossy(&g.text),
                    g.greedy_tokens,
                    g.optimal_tokens
                ),
                None => println!("{},false,,,", outcome.explored),
            }
        }
        Format::Text => match &outcome.found {
            None => println!("none found ({} explored)", outcome.explored),
            Some(g) => {
                println!("gap found after {} candidates", outcome.explored);
                println!("text: {}", String::from_utf8_lossy(&g.text));
                if !g.dictionary.is_empty() {
                    let d: Vec<_> = g
                        .dictionary
                        .iter()
                        .map(|p| String::from_utf8_lossy(p))
                        .collect();
                    println!("dictionary: {}", d.join(" "));
                }
                println!(
                    "greedy:  {} tokens {}",
                    g.greedy_tokens,
                    spans(&g.greedy, &g.text)
                );
                println!(
                    "optimal: {} tokens {}",
                    g.optimal_tokens,
                    spans(&g.optimal, &g.text)
                );
            }
        },
    }
    Ok(())
}

fn spans(p: &lzpl::Parsing, text: &[u8]) -> String {
    p.spans()
        .map(|(a, b)| String::from_utf8_lossy(&text[a..b]).into_owned())
        .collect::<Vec<_>>()
        .join("|")
}
