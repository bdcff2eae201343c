use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use lzpl::gen::{case_rng, TextGenerator};
use lzpl::verify::{verify_case, Check, CheckResult, Outcome};
use rand::Rng;
use serde::Serialize;

use crate::common::{read_input, CliError, CliResult, DictArgs, ScaleArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeneratorArg {
    Iid,
    Repetitive,
    /// Alternate iid and repetitive by case index.
    Mixed,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Text file to verify (`-` for standard input).
    #[arg(conflicts_with = "random", required_unless_present = "random")]
    pub input: Option<PathBuf>,
    /// Number of random texts to generate instead of reading a file.
    #[arg(long)]
    pub random: Option<u64>,
    /// Maximum random text length (lengths are uniform in 0..=len).
    #[arg(long, default_value_t = 64)]
    pub len: usize,
    /// Random texts use the first K symbols ('a', 'b', ...).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u16).range(1..=256))]
    pub alphabet: u16,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = GeneratorArg::Mixed)]
    pub generator: GeneratorArg,
    #[command(flatten)]
    pub dict: DictArgs,
    /// Failures listed in full in the report.
    #[arg(long, default_value_t = 20)]
    pub max_failures: usize,
}

#[derive(Debug, Default, Serialize)]
struct Tally {
    passed: u64,
    failed: u64,
    skipped: u64,
}

#[derive(Debug, Serialize)]
struct Failure {
    case: u64,
    text: String,
    #[serde(flatten)]
    result: CheckResult,
}

#[derive(Debug, Serialize)]
struct Report {
    family: &'static str,
    window: String,
    cases: u64,
    passed: bool,
    checks: BTreeMap<&'static str, Tally>,
    failures: Vec<Failure>,
}

pub fn run(args: &VerifyArgs, scale: &ScaleArgs) -> CliResult {
    let config = args.dict.config()?;
    let limits = scale.limits()?;
    let alphabet = args.alphabet as usize;

    let texts: Box<dyn Iterator<Item = Vec<u8>>> = match (&args.input, args.random) {
        (Some(path), None) => Box::new(std::iter::once(read_input(path)?)),
        (None, Some(count)) => {
            let (len, seed, generator) = (args.len, args.seed, args.generator);
            Box::new((0..count).map(move |case| {
                let mut rng = case_rng(seed, case);
                let n = rng.gen_range(0..=len);
                let g = match generator {
                    GeneratorArg::Iid => TextGenerator::Iid,
                    GeneratorArg::Repetitive => TextGenerator::Repetitive,
                    GeneratorArg::Mixed => TextGenerator::ALL[(case % 2) as usize],
                };
                g.generate(&mut rng, n, alphabet)
            }))
        }
        _ => return Err(CliError::Usage("give an input file or --random N".into())),
    };

    let mut checks: BTreeMap<&'static str, Tally> = Check::ALL
        .iter()
        .map(|c| (c.name(), Tally::default()))
        .collect();
    let mut failures = Vec::new();
    let mut cases = 0u64;
    let mut any_failed = false;
    for (case, text) in texts.enumerate() {
        cases += 1;
        for result in verify_case(&config, &text, &limits) {
            let tally = checks.get_mut(result.check.name()).expect("known check");
            match result.outcome {
                Outcome::Pass => tally.passed += 1,
                Outcome::Skipped { .. } => tally.skipped += 1,
                Outcome::Fail { .. } => {
                    tally.failed += 1;
                    any_failed = true;
                    if failures.len() < args.max_failures {
                        failures.push(Failure {
                            case: case as u64,
                            text: String::from_utf8_lossy(&text).into_owned(),
                            result,
                        });
                    }
                }
            }
        }
    }

    let report = Report {
        family: config.family.name(),
        window: args.dict.window_label(),
        cases,
        passed: !any_failed,
        checks,
        failures,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    if any_failed {
        Err(CliError::Violation)
    } else {
        Ok(())
    }
}
