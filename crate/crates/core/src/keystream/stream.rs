use std::fmt;
use std::str::FromStr;

use super::KeystreamError;

/// Ordered sub-key values.
///
/// Canonical streams hold residues in `0..modulus`; literal streams carry the
/// C remainder and may contain negatives.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Keystream {
    values: Vec<i64>,
}

impl Keystream {
    pub fn new(values: Vec<i64>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, idx: usize) -> Option<i64> {
        self.values.get(idx).copied()
    }

    /// Truncates to `length`, repeating the stream from the start when
    /// `length` exceeds it. An empty stream can only produce an empty result.
    pub fn cycled(&self, length: usize) -> Keystream {
        if self.values.is_empty() {
            return Keystream::default();
        }
        Keystream::new(self.values.iter().copied().cycle().take(length).collect())
    }

    /// Whitespace-separated decimal rendering.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// One byte per value. Fails for values outside `0..=255`.
    pub fn to_bytes(&self) -> Result<Vec<u8>, KeystreamError> {
        self.values
            .iter()
            .map(|&v| u8::try_from(v).map_err(|_| KeystreamError::NotByteRepresentable(v)))
            .collect()
    }

    pub fn from_bytes(bytes: &[u8]) -> Self {
        Self::new(bytes.iter().map(|&b| i64::from(b)).collect())
    }
}

impl From<Vec<i64>> for Keystream {
    fn from(values: Vec<i64>) -> Self {
        Self::new(values)
    }
}

impl fmt::Display for Keystream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Keystream {
    type Err = KeystreamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| KeystreamError::Parse(format!("bad value {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Keystream::new)
    }
}
