//! The 36-symbol alphabet (`0`–`9` then `a`–`z`) and keystream addition mod 36.
//!
//! Input is case-insensitive; rendering is always lowercase.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::keystream::Keystream;

pub const ALPHABET_SIZE: u8 = 36;
const ALPHABET: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("symbol {0:?} is not in the 36-character alphabet")]
    UnsupportedSymbol(char),
    #[error("value {0} is outside 0..36")]
    ValueOutOfRange(i64),
    #[error("sub-key has {available} values but {needed} are required")]
    KeyTooShort { needed: usize, available: usize },
}

/// A symbol of the alphabet, `0..36`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlphaValue(u8);

impl AlphaValue {
    pub fn new(value: u8) -> Result<Self, CodecError> {
        if value < ALPHABET_SIZE {
            Ok(Self(value))
        } else {
            Err(CodecError::ValueOutOfRange(i64::from(value)))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// `(self + k) mod 36` for any integer `k`.
    pub fn shifted(self, k: i64) -> Self {
        Self((i64::from(self.0) + k).rem_euclid(i64::from(ALPHABET_SIZE)) as u8)
    }
}

impl TryFrom<i64> for AlphaValue {
    type Error = CodecError;

    fn try_from(v: i64) -> Result<Self, Self::Error> {
        u8::try_from(v)
            .ok()
            .filter(|&b| b < ALPHABET_SIZE)
            .map(Self)
            .ok_or(CodecError::ValueOutOfRange(v))
    }
}

pub fn char_to_value(c: char) -> Result<AlphaValue, CodecError> {
    match c {
        '0'..='9' => Ok(AlphaValue(c as u8 - b'0')),
        'a'..='z' => Ok(AlphaValue(c as u8 - b'a' + 10)),
        'A'..='Z' => Ok(AlphaValue(c as u8 - b'A' + 10)),
        other => Err(CodecError::UnsupportedSymbol(other)),
    }
}

pub fn value_to_char(v: AlphaValue) -> char {
    ALPHABET[usize::from(v.0)] as char
}

/// A string over the alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AlphaText {
    values: Vec<AlphaValue>,
}

impl AlphaText {
    pub fn new(values: Vec<AlphaValue>) -> Self {
        Self { values }
    }

    pub fn from_values(values: &[i64]) -> Result<Self, CodecError> {
        values
            .iter()
            .map(|&v| AlphaValue::try_from(v))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }

    pub fn values(&self) -> &[AlphaValue] {
        &self.values
    }

    pub fn to_values(&self) -> Vec<i64> {
        self.values.iter().map(|v| i64::from(v.0)).collect()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Whitespace-separated decimal values.
    pub fn values_text(&self) -> String {
        self.values
            .iter()
            .map(|v| v.0.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl FromStr for AlphaText {
    type Err = CodecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(char_to_value)
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

impl fmt::Display for AlphaText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.values
            .iter()
            .try_for_each(|&v| fmt::Write::write_char(f, value_to_char(v)))
    }
}

fn check_len(text: &AlphaText, subkey: &Keystream) -> Result<(), CodecError> {
    if subkey.len() < text.len() {
        return Err(CodecError::KeyTooShort {
            needed: text.len(),
            available: subkey.len(),
        });
    }
    Ok(())
}

/// `c[i] = (p[i] + k[i]) mod 36`
pub fn encrypt(plain: &AlphaText, subkey: &Keystream) -> Result<AlphaText, CodecError> {
    check_len(plain, subkey)?;
    Ok(AlphaText::new(
        plain
            .values
            .iter()
            .zip(subkey.values())
            .map(|(p, &k)| p.shifted(k))
            .collect(),
    ))
}

/// `p[i] = (c[i] − k[i]) mod 36`, i.e. add 36 first whenever `c[i] < k[i]`.
pub fn decrypt(cipher: &AlphaText, subkey: &Keystream) -> Result<AlphaText, CodecError> {
    check_len(cipher, subkey)?;
    Ok(AlphaText::new(
        cipher
            .values
            .iter()
            .zip(subkey.values())
            .map(|(c, &k)| c.shifted(-k))
            .collect(),
    ))
}
