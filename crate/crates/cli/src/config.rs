//! Generator settings from a key=value file, overridden by flags.
//!
//! ```text
//! # comments and blank lines are ignored
//! key = 4
//! timestamps = 1..6
//! nonce = 2..21
//! seed = 4
//! mode = canonical
//! modulus = 35
//! ```

use std::path::Path;
use std::str::FromStr;

use eqstream::keystream::{GeneratorParams, DEFAULT_MODULUS, DEFAULT_SEED};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("cannot read config {path}: {reason}")]
    Read { path: String, reason: String },
    #[error("config line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("unknown config key {0:?}")]
    UnknownKey(String),
    #[error("invalid value for {key}: {reason}")]
    Value { key: String, reason: String },
    #[error("no key given: pass --key or set key= in the config file")]
    MissingKey,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModeName {
    #[default]
    Canonical,
    Literal,
}

impl FromStr for ModeName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "canonical" => Ok(ModeName::Canonical),
            "literal" => Ok(ModeName::Literal),
            other => Err(format!(
                "unknown mode {other:?} (expected canonical or literal)"
            )),
        }
    }
}

/// Parses `1,2,3`, `2..21` (inclusive) or a mix such as `1,4..6`.
pub fn parse_list(text: &str) -> Result<Vec<u32>, String> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(format!("empty element in list {text:?}"));
        }
        if let Some((lo, hi)) = part.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo: u32 = lo
                .trim()
                .parse()
                .map_err(|_| format!("bad range start in {part:?}"))?;
            let hi: u32 = hi
                .trim()
                .parse()
                .map_err(|_| format!("bad range end in {part:?}"))?;
            if lo > hi {
                return Err(format!("range {part:?} is descending"));
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| format!("bad number {part:?}"))?);
        }
    }
    Ok(out)
}

/// Every setting optional; `None` means "not given here".
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CliConfig {
    pub key: Option<u32>,
    pub timestamps: Option<Vec<u32>>,
    pub nonce: Option<Vec<u32>>,
    pub seed: Option<u32>,
    pub mode: Option<ModeName>,
    pub u: Option<i32>,
    pub u1: Option<i32>,
    pub modulus: Option<u32>,
}

fn value<T: FromStr>(key: &str, raw: &str) -> Result<T, ConfigError>
where
    T::Err: std::fmt::Display,
{
    raw.parse().map_err(|e: T::Err| ConfigError::Value {
        key: key.to_string(),
        reason: e.to_string(),
    })
}

impl CliConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = CliConfig::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, raw) = line.split_once('=').ok_or_else(|| ConfigError::Syntax {
                line: i + 1,
                reason: "expected key = value".into(),
            })?;
            let (key, raw) = (key.trim(), raw.trim());
            let list = |raw: &str| {
                parse_list(raw).map_err(|reason| ConfigError::Value {
                    key: key.to_string(),
                    reason,
                })
            };
            match key {
                "key" => cfg.key = Some(value(key, raw)?),
                "timestamps" => cfg.timestamps = Some(list(raw)?),
                "nonce" => cfg.nonce = Some(list(raw)?),
                "seed" => cfg.seed = Some(value(key, raw)?),
                "mode" => cfg.mode = Some(value(key, raw)?),
                "u" => cfg.u = Some(value(key, raw)?),
                "u1" => cfg.u1 = Some(value(key, raw)?),
                "modulus" => cfg.modulus = Some(value(key, raw)?),
                other => return Err(ConfigError::UnknownKey(other.to_string())),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Read {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Self::parse(&text)
    }

    /// Settings from `over` win where present.
    pub fn merge(self, over: CliConfig) -> CliConfig {
        CliConfig {
            key: over.key.or(self.key),
            timestamps: over.timestamps.or(self.timestamps),
            nonce: over.nonce.or(self.nonce),
            seed: over.seed.or(self.seed),
            mode: over.mode.or(self.mode),
            u: over.u.or(self.u),
            u1: over.u1.or(self.u1),
            modulus: over.modulus.or(self.modulus),
        }
    }

    /// Fills defaults (time stamps 1..6, nonce 2..21, seed 4, modulus 35,
    /// u = u1 = 1) and builds generator parameters. The key has no default.
    /// Validation is left to the generator.
    pub fn to_params(&self) -> Result<GeneratorParams, ConfigError> {
        let key = self.key.ok_or(ConfigError::MissingKey)?;
        let mut params = match self.mode.unwrap_or_default() {
            ModeName::Canonical => GeneratorParams::canonical(
                key,
                self.timestamps.clone().unwrap_or_else(|| (1..=6).collect()),
                self.nonce.clone().unwrap_or_else(|| (2..=21).collect()),
            ),
            ModeName::Literal => {
                GeneratorParams::literal(key, self.u.unwrap_or(1), self.u1.unwrap_or(1))
            }
        };
        params.seed = self.seed.unwrap_or(DEFAULT_SEED);
        params.modulus = self.modulus.unwrap_or(DEFAULT_MODULUS);
        Ok(params)
    }
}
