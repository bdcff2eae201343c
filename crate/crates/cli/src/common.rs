use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use lzpl::{DictionaryConfig, ScaleLimits, StaticDictionary, Window};

/// Failure classes mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    /// Exit 1: a checked property does not hold (report already printed).
    Violation,
    /// Exit 1: I/O or data error.
    Failure(anyhow::Error),
    /// Exit 2: bad flag combination.
    Usage(String),
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Failure(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Failure(e.into())
    }
}

impl From<lzpl::Error> for CliError {
    fn from(e: lzpl::Error) -> Self {
        CliError::Failure(e.into())
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Lz77,
    Lz78,
    Static,
}

#[derive(Debug, Clone, Args)]
pub struct DictArgs {
    /// Dictionary family.
    #[arg(long, value_enum, default_value_t = FamilyArg::Lz77)]
    pub family: FamilyArg,
    /// Sliding window length for lz77 (a count or `unbounded`).
    #[arg(long, default_value = "unbounded")]
    pub window: Window,
    /// Newline-delimited phrase file for `--family static`.
    #[arg(long)]
    pub dict: Option<PathBuf>,
    /// Allow self-referential lz77 matches (not for verification runs).
    #[arg(long)]
    pub overlap: bool,
}

impl DictArgs {
    pub fn config(&self) -> CliResult<DictionaryConfig> {
        let cfg = match self.family {
            FamilyArg::Lz77 => DictionaryConfig::lz77(self.window),
            FamilyArg::Lz78 => DictionaryConfig::lz78(),
            FamilyArg::Static => {
                let path = self.dict.as_ref().ok_or_else(|| {
                    CliError::Usage("--family static requires --dict FILE".into())
                })?;
                let data = read_input(path)?;
                DictionaryConfig::static_dict(StaticDictionary::from_lines(&data))
            }
        };
        if self.dict.is_some() && self.family != FamilyArg::Static {
            return Err(CliError::Usage(
                "--dict only applies to --family static".into(),
            ));
        }
        Ok(cfg.with_overlap(self.overlap))
    }

    pub fn window_label(&self) -> String {
        match self.family {
            FamilyArg::Lz77 => self.window.to_string(),
            _ => "-".to_string(),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ScaleArgs {
    /// Longest text for the dictionary property checkers.
    #[arg(long, global = true)]
    pub check_text: Option<usize>,
    /// Largest window for the dictionary property checkers.
    #[arg(long, global = true)]
    pub check_window: Option<usize>,
    /// Longest text for parse-graph construction and optimal parsing.
    #[arg(long, global = true)]
    pub graph_text: Option<usize>,
    /// Longest text for the brute-force oracle.
    #[arg(long, global = true)]
    pub brute_text: Option<usize>,
}

impl ScaleArgs {
    /// Defaults, then `LZPL_SCALE_LIMITS`, then flags.
    pub fn limits(&self) -> CliResult<ScaleLimits> {
        let mut l = ScaleLimits::from_env().map_err(|e| CliError::Usage(e.to_string()))?;
        if let Some(v) = self.check_text {
            l.check_text = v;
        }
        if let Some(v) = self.check_window {
            l.check_window = v;
        }
        if let Some(v) = self.graph_text {
            l.graph_text = v;
        }
        if let Some(v) = self.brute_text {
            l.brute_text = v;
        }
        Ok(l)
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &Path) -> CliResult<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        return Ok(buf);
    }
    fs::read(path).map_err(|e| CliError::Failure(anyhow::anyhow!("{}: {e}", path.display())))
}

pub fn write_output(path: &Path, data: &[u8]) -> CliResult {
    if path.as_os_str() == "-" {
        io::stdout().write_all(data)?;
        return Ok(());
    }
    fs::write(path, data).map_err(|e| CliError::Failure(anyhow::anyhow!("{}: {e}", path.display())))
}

/// Bits needed to store values `0..count`, at least 1.
pub fn code_bits(count: usize) -> u64 {
    (usize::BITS - count.saturating_sub(1).leading_zeros()).max(1) as u64
}
