use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dictionary::StaticDictionary;

/// Bound on the sliding window. `Unbounded` behaves as `h >= |T|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Window {
    Bounded(usize),
    Unbounded,
}

impl Window {
    /// Effective window length for a text of `n` symbols.
    pub fn effective(self, n: usize) -> usize {
        match self {
            Window::Bounded(h) => h,
            Window::Unbounded => n,
        }
    }

    /// Start of the window at time `i`: `max(0, i - h)`.
    pub fn start(self, i: usize) -> usize {
        match self {
            Window::Bounded(h) => i.saturating_sub(h),
            Window::Unbounded => 0,
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Window::Bounded(h) => write!(f, "{h}"),
            Window::Unbounded => f.write_str("unbounded"),
        }
    }
}

impl FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "unbounded" | "inf" | "none" => Ok(Window::Unbounded),
            other => match other.parse::<usize>() {
                Ok(0) => Err("window must be at least 1".to_string()),
                Ok(h) => Ok(Window::Bounded(h)),
                Err(_) => Err(format!("invalid window `{other}`")),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Lz77,
    Lz78,
    Static(StaticDictionary),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Lz77 => "lz77",
            Family::Lz78 => "lz78",
            Family::Static(_) => "static",
        }
    }
}

/// Selects the dictionary family and its parameters.
///
/// `window` only matters for [`Family::Lz77`]. `allow_overlap` enables the
/// classical self-referential LZ77 copy and is never used for optimality
/// verification. `max_len` caps pointer lengths (the codec sets it to `2^L`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DictionaryConfig {
    pub family: Family,
    pub window: Window,
    pub allow_overlap: bool,
    pub max_len: Option<usize>,
}

impl DictionaryConfig {
    pub fn lz77(window: Window) -> Self {
        DictionaryConfig {
            family: Family::Lz77,
            window,
            allow_overlap: false,
            max_len: None,
        }
    }

    pub fn lz77_unbounded() -> Self {
        Self::lz77(Window::Unbounded)
    }

    pub fn lz78() -> Self {
        DictionaryConfig {
            family: Family::Lz78,
            window: Window::Unbounded,
            allow_overlap: false,
            max_len: None,
        }
    }

    pub fn static_dict(dict: StaticDictionary) -> Self {
        DictionaryConfig {
            family: Family::Static(dict),
            window: Window::Unbounded,
            allow_overlap: false,
            max_len: None,
        }
    }

    pub fn with_overlap(mut self, allow: bool) -> Self {
        self.allow_overlap = allow;
        self
    }

    pub fn with_max_len(mut self, max_len: usize) -> Self {
        self.max_len = Some(max_len);
        self
    }

    pub fn static_dictionary(&self) -> Option<&StaticDictionary> {
        match &self.family {
            Family::Static(d) => Some(d),
            _ => None,
        }
    }
}

/// Bounds that keep the exhaustive checkers and the oracle from hanging.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaleLimits {
    /// Longest text accepted by the dictionary property checkers.
    pub check_text: usize,
    /// Largest effective window accepted by the dictionary property checkers.
    pub check_window: usize,
    /// Longest text accepted by graph construction and `optimal_parse`.
    pub graph_text: usize,
    /// Longest text accepted by the brute-force oracle.
    pub brute_text: usize,
}

impl Default for ScaleLimits {
    fn default() -> Self {
        ScaleLimits {
            check_text: 256,
            check_window: 64,
            graph_text: 4096,
            brute_text: 20,
        }
    }
}

impl ScaleLimits {
    pub const ENV_VAR: &'static str = "LZPL_SCALE_LIMITS";

    /// Parses `key=value` pairs separated by commas, e.g.
    /// `check_text=512,graph_text=65536`. Unmentioned keys keep their
    /// defaults.
    pub fn parse(spec: &str) -> crate::Result<Self> {
        let mut limits = ScaleLimits::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| crate::Error::BadScaleSetting(item.to_string()))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| crate::Error::BadScaleSetting(item.to_string()))?;
            match key.trim() {
                "check_text" => limits.check_text = value,
                "check_window" => limits.check_window = value,
                "graph_text" => limits.graph_text = value,
                "brute_text" => limits.brute_text = value,
                _ => return Err(crate::Error::BadScaleSetting(item.to_string())),
            }
        }
        Ok(limits)
    }

    /// Defaults overridden by `LZPL_SCALE_LIMITS` when it is set.
    pub fn from_env() -> crate::Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(spec) => Self::parse(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    pub(crate) fn ensure(what: &'static str, actual: usize, limit: usize) -> crate::Result<()> {
        if actual > limit {
            Err(crate::Error::ScaleExceeded {
                what,
                actual,
                limit,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_start_is_half_open_zero_based() {
        assert_eq!(Window::Bounded(3).start(2), 0);
        assert_eq!(Window::Bounded(3).start(7), 4);
        assert_eq!(Window::Unbounded.start(100), 0);
    }

    #[test]
    fn window_parses() {
        assert_eq!("16".parse::<Window>().unwrap(), Window::Bounded(16));
        assert_eq!("unbounded".parse::<Window>().unwrap(), Window::Unbounded);
        assert!("0".parse::<Window>().is_err());
        assert!("x".parse::<Window>().is_err());
    }

    #[test]
    fn scale_limits_parse_overrides() {
        let l = ScaleLimits::parse("check_text=10, graph_text=99").unwrap();
        assert_eq!(l.check_text, 10);
        assert_eq!(l.graph_text, 99);
        assert_eq!(l.check_window, 64);
        assert!(ScaleLimits::parse("bogus=1").is_err());
        assert!(ScaleLimits::parse("check_text").is_err());
    }
}
