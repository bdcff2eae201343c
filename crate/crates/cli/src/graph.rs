use std::path::PathBuf;

use clap::{Args, ValueEnum};
use lzpl::graph::{Edge, EdgeKind};
use lzpl::{build_graph, export_dot, greedy_parse, shortest_path};

use crate::common::{read_input, CliResult, DictArgs, ScaleArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Highlight {
    Greedy,
    Optimal,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Input file (`-` for standard input).
    pub input: PathBuf,
    #[command(flatten)]
    pub dict: DictArgs,
    /// Draw this parsing's path in bold.
    #[arg(long, value_enum)]
    pub highlight: Option<Highlight>,
}

pub fn run(args: &GraphArgs, scale: &ScaleArgs) -> CliResult {
    let config = args.dict.config()?;
    let limits = scale.limits()?;
    let text = read_input(&args.input)?;
    let graph = build_graph(&config, &text, &limits)?;
    let path: Option<Vec<Edge>> = args.highlight.map(|h| match h {
        Highlight::Optimal => shortest_path(&graph),
        Highlight::Greedy => greedy_parse(&config, &text)
            .iter()
            .map(|(start, t)| Edge {
                from: start,
                to: start + t.len(),
                kind: if t.is_literal() {
                    EdgeKind::Literal
                } else {
                    EdgeKind::Dictionary
                },
            })
            .collect(),
    });
    print!("{}", export_dot(&graph, path.as_deref()));
    Ok(())
}
