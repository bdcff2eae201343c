use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use lzpl::{parse_with, stats, Parsing, Strategy, Token};
use serde::Serialize;

use crate::common::{read_input, CliError, CliResult, DictArgs, FamilyArg, ScaleArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Greedy,
    Optimal,
    Flexible,
    Reverse,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct ParseArgs {
    /// Input file (`-` for standard input).
    pub input: PathBuf,
    #[command(flatten)]
    pub dict: DictArgs,
    #[arg(long, value_enum, default_value_t = StrategyArg::All)]
    pub strategy: StrategyArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Include the token list.
    #[arg(long)]
    pub tokens: bool,
}

#[derive(Debug, Serialize)]
struct StrategyReport {
    strategy: Strategy,
    token_count: usize,
    pointer_count: usize,
    literal_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    tokens: Option<Parsing>,
}

#[derive(Debug, Serialize)]
struct Report {
    input: String,
    length: usize,
    family: &'static str,
    window: String,
    results: Vec<StrategyReport>,
}

pub fn run(args: &ParseArgs, scale: &ScaleArgs) -> CliResult {
    let strategies: Vec<Strategy> = match args.strategy {
        StrategyArg::Greedy => vec![Strategy::Greedy],
        StrategyArg::Optimal => vec![Strategy::Optimal],
        StrategyArg::Flexible => vec![Strategy::Flexible],
        StrategyArg::Reverse => {
            if args.dict.family != FamilyArg::Static {
                return Err(CliError::Usage(
                    "--strategy reverse requires --family static".into(),
                ));
            }
            vec![Strategy::Reverse]
        }
        StrategyArg::All if args.dict.family == FamilyArg::Static => Strategy::ALL.to_vec(),
        StrategyArg::All => vec![Strategy::Greedy, Strategy::Optimal, Strategy::Flexible],
    };
    let config = args.dict.config()?;
    let limits = scale.limits()?;
    let text = read_input(&args.input)?;

    let mut results = Vec::new();
    for strategy in strategies {
        let parsing = parse_with(strategy, &config, &text, &limits)?;
        let s = stats(&parsing);
        results.push(StrategyReport {
            strategy,
            token_count: s.token_count,
            pointer_count: s.pointer_count,
            literal_count: s.literal_count,
            tokens: args.tokens.then_some(parsing),
        });
    }
    let report = Report {
        input: args.input.display().to_string(),
        length: text.len(),
        family: config.family.name(),
        window: args.dict.window_label(),
        results,
    };
    print!("{}", render(&report, args.format));
    Ok(())
}

fn render(report: &Report, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            out = serde_json::to_string_pretty(report).expect("serializable");
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("strategy,tokens,pointers,literals\n");
            for r in &report.results {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    r.strategy, r.token_count, r.pointer_count, r.literal_count
                );
            }
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "{} ({} bytes, family {}, window {})",
                report.input, report.length, report.family, report.window
            );
            for r in &report.results {
                let _ = writeln!(
                    out,
                    "{:>9}: token_count {} ({} pointers, {} literals)",
                    r.strategy.name(),
                    r.token_count,
                    r.pointer_count,
                    r.literal_count
                );
                if let Some(p) = &r.tokens {
                    let _ = writeln!(out, "           {}", token_line(p));
                }
            }
        }
    }
    out
}

fn token_line(p: &Parsing) -> String {
    p.tokens()
        .iter()
        .map(|t| match *t {
            Token::Literal(b) if b.is_ascii_graphic() => format!("'{}'", b as char),
            Token::Literal(b) => format!("0x{b:02x}"),
            Token::Pointer { offset, length } => format!("({offset},{length})"),
            Token::Phrase { index, length } => format!("#{index}:{length}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}
