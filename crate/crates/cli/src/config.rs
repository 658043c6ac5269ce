//! Effective run configuration: flags layered over an optional key=value
//! file.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Markdown,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            "json" => Ok(OutputFormat::Json),
            other => bail!("unknown format `{other}` (expected csv, markdown or json)"),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Markdown => "markdown",
            OutputFormat::Json => "json",
        })
    }
}

/// Values shared by every subcommand. `None` means "not set anywhere";
/// subcommands pick their own defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub seq: Option<String>,
    pub nmax: Option<usize>,
    pub jmax: Option<usize>,
    pub kmax: Option<usize>,
    pub anchor: Option<String>,
    pub strict: Option<String>,
    pub cache: Option<PathBuf>,
    pub threads: Option<usize>,
    pub format: Option<String>,
    pub seed: Option<u64>,
}

const KEYS: [&str; 10] = [
    "seq", "nmax", "jmax", "kmax", "anchor", "strict", "cache", "threads", "format", "seed",
];

pub fn parse_config_text(text: &str, label: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .with_context(|| format!("{label}:{}: expected key=value", i + 1))?;
        let k = k.trim();
        if !KEYS.contains(&k) {
            bail!("{label}:{}: unknown key `{k}`", i + 1);
        }
        out.insert(k.to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| anyhow::anyhow!("config key `{key}`: invalid value `{v}`"))
}

impl RunConfig {
    /// Fills unset fields from the file; set fields are kept.
    pub fn merge_file(&mut self, path: &Path) -> Result<()> {
        let text = fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        let map = parse_config_text(&text, &path.display().to_string())?;
        self.merge_map(&map)
    }

    pub fn merge_map(&mut self, map: &BTreeMap<String, String>) -> Result<()> {
        for (k, v) in map {
            match k.as_str() {
                "seq" => fill(&mut self.seq, v.clone()),
                "nmax" => fill(&mut self.nmax, parse_num(k, v)?),
                "jmax" => fill(&mut self.jmax, parse_num(k, v)?),
                "kmax" => fill(&mut self.kmax, parse_num(k, v)?),
                "anchor" => fill(&mut self.anchor, v.clone()),
                "strict" => fill(&mut self.strict, v.clone()),
                "cache" => fill(&mut self.cache, PathBuf::from(v)),
                "threads" => fill(&mut self.threads, parse_num(k, v)?),
                "format" => fill(&mut self.format, v.clone()),
                "seed" => fill(&mut self.seed, parse_num(k, v)?),
                _ => unreachable!("keys are validated on parse"),
            }
        }
        Ok(())
    }

    pub fn format_or(&self, default: OutputFormat) -> Result<OutputFormat> {
        self.format.as_deref().map_or(Ok(default), OutputFormat::parse)
    }

    /// `Some(true)` for `gt`, `Some(false)` for `ge`.
    pub fn strictness(&self) -> Result<Option<bool>> {
        match self.strict.as_deref() {
            None => Ok(None),
            Some("gt") => Ok(Some(true)),
            Some("ge") => Ok(Some(false)),
            Some(other) => bail!("unknown strictness `{other}` (expected gt or ge)"),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }
}

fn fill<T>(slot: &mut Option<T>, value: T) {
    if slot.is_none() {
        *slot = Some(value);
    }
}

impl fmt::Display for RunConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn show<T: fmt::Display>(v: &Option<T>) -> String {
            v.as_ref().map_or("default".into(), |x| x.to_string())
        }
        write!(
            f,
            "seq={} nmax={} jmax={} kmax={} anchor={} strict={} cache={} threads={} format={} seed={}",
            show(&self.seq),
            show(&self.nmax),
            show(&self.jmax),
            show(&self.kmax),
            show(&self.anchor),
            show(&self.strict),
            self.cache.as_ref().map_or("none".into(), |p| p.display().to_string()),
            self.threads.map_or("auto".into(), |t| if t == 0 { "auto".into() } else { t.to_string() }),
            show(&self.format),
            self.seed(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_win_over_file() {
        let mut c = RunConfig {
            nmax: Some(10),
            ..Default::default()
        };
        let map = parse_config_text("# comment\nnmax = 99\nseed=7\nformat=json\n", "cfg").unwrap();
        c.merge_map(&map).unwrap();
        assert_eq!(c.nmax, Some(10));
        assert_eq!(c.seed, Some(7));
        assert_eq!(c.format_or(OutputFormat::Csv).unwrap(), OutputFormat::Json);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(parse_config_text("nmax\n", "cfg").is_err());
        assert!(parse_config_text("colour=red\n", "cfg").is_err());
        let mut c = RunConfig::default();
        let map = parse_config_text("threads=many\n", "cfg").unwrap();
        assert!(c.merge_map(&map).is_err());
    }

    #[test]
    fn strictness_values() {
        let mut c = RunConfig::default();
        assert_eq!(c.strictness().unwrap(), None);
        c.strict = Some("ge".into());
        assert_eq!(c.strictness().unwrap(), Some(false));
        c.strict = Some("gte".into());
        assert!(c.strictness().is_err());
    }

    #[test]
    fn display_lists_every_key() {
        let s = RunConfig::default().to_string();
        for k in KEYS {
            assert!(s.contains(&format!("{k}=")), "{k}");
        }
    }
}
