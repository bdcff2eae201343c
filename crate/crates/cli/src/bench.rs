use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Args;
use lzpl::{parse_with, stats, DictionaryConfig, Family, ScaleLimits, Strategy, Window};

use crate::common::{code_bits, CliError, CliResult, DictArgs, FamilyArg, ScaleArgs};

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Directory of input files (not recursive).
    pub corpus: PathBuf,
    #[command(flatten)]
    pub dict: DictArgs,
    /// Comma-separated window list for lz77.
    #[arg(long, value_delimiter = ',', default_value = "16,256,4096,unbounded")]
    pub windows: Vec<Window>,
    /// Comma-separated strategy list.
    #[arg(long, value_delimiter = ',', default_value = "greedy,optimal")]
    pub strategies: Vec<Strategy>,
    /// L used for the payload estimate; pointers are capped at 2^L.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u8).range(1..=16))]
    pub length_bits: u8,
}

pub const HEADER: [&str; 8] = [
    "file",
    "family",
    "h",
    "strategy",
    "tokens",
    "payload_bits",
    "wall_time_us",
    "failure",
];

pub fn run(args: &BenchArgs, scale: &ScaleArgs) -> CliResult {
    if args.strategies.contains(&Strategy::Reverse) && args.dict.family != FamilyArg::Static {
        return Err(CliError::Usage(
            "strategy reverse requires --family static".into(),
        ));
    }
    let base = args.dict.config()?;
    let limits = scale.limits()?;
    let cap = 1usize << args.length_bits;

    let mut files: Vec<PathBuf> = fs::read_dir(&args.corpus)
        .map_err(|e| CliError::Failure(anyhow::anyhow!("{}: {e}", args.corpus.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| !p.is_dir())
        .collect();
    files.sort();

    let windows: Vec<Option<Window>> = match base.family {
        Family::Lz77 => args.windows.iter().copied().map(Some).collect(),
        _ => vec![None],
    };

    let mut out = csv::Writer::from_writer(std::io::stdout());
    out.write_record(HEADER).map_err(anyhow::Error::from)?;
    for path in &files {
        let name = file_label(path);
        let text = match fs::read(path) {
            Ok(t) => t,
            Err(e) => {
                let family = base.family.name();
                out.write_record([name.as_str(), family, "", "", "", "", "", &e.to_string()])
                    .map_err(anyhow::Error::from)?;
                continue;
            }
        };
        for window in &windows {
            let mut config = base.clone().with_max_len(cap);
            if let Some(w) = window {
                config.window = *w;
            }
            let h = window.map_or_else(|| "-".to_string(), |w| w.to_string());
            for &strategy in &args.strategies {
                let row = measure(&config, &text, strategy, &limits, args.length_bits);
                let record: Vec<String> = match row {
                    Ok((tokens, bits, micros)) => vec![
                        name.clone(),
                        config.family.name().into(),
                        h.clone(),
                        strategy.to_string(),
                        tokens.to_string(),
                        bits.to_string(),
                        micros.to_string(),
                        String::new(),
                    ],
                    Err(e) => vec![
                        name.clone(),
                        config.family.name().into(),
                        h.clone(),
                        strategy.to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        e.to_string(),
                    ],
                };
                out.write_record(&record).map_err(anyhow::Error::from)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn file_label(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Token count, payload estimate and wall time of one parse.
///
/// Pointers cost `W + L` bits with `W = ceil(log2 h)` for lz77 (`h = |T|`
/// when unbounded), `ceil(log2 |T|)` for lz78 and `ceil(log2 |D|)` for
/// static dictionaries.
fn measure(
    config: &DictionaryConfig,
    text: &[u8],
    strategy: Strategy,
    limits: &ScaleLimits,
    length_bits: u8,
) -> lzpl::Result<(usize, u64, u128)> {
    let start = Instant::now();
    let parsing = parse_with(strategy, config, text, limits)?;
    let micros = start.elapsed().as_micros();
    let s = stats(&parsing);
    let reference_bits = match &config.family {
        Family::Lz77 => code_bits(config.window.effective(text.len())),
        Family::Lz78 => code_bits(text.len()),
        Family::Static(d) => code_bits(d.len()),
    };
    let bits = s.token_count as u64
        + 8 * s.literal_count as u64
        + (reference_bits + length_bits as u64) * s.pointer_count as u64;
    Ok((s.token_count, bits, micros))
}
