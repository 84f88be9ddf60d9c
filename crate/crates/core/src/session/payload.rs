//! HELLO and ACK payload layouts.
//!
//! ```text
//! HELLO: seed (u8) | ts_count (u8) | ts_count × u16 BE | nonce section
//! ACK:   nonce section, byte-identical to the one received in HELLO
//! nonce section: nonce_len (u8, ≥ 1) | nonce_len × u16 BE
//! ```

use crate::keystream::GeneratorParams;

use super::FrameError;

fn malformed(msg: impl Into<String>) -> FrameError {
    FrameError::MalformedPayload(msg.into())
}

fn put_u16_list(out: &mut Vec<u8>, items: &[u16]) {
    out.push(items.len() as u8);
    for v in items {
        out.extend_from_slice(&v.to_be_bytes());
    }
}

/// Reads a count byte followed by that many big-endian u16 values.
fn take_u16_list<'a>(bytes: &'a [u8], what: &str) -> Result<(Vec<u16>, &'a [u8]), FrameError> {
    let (&count, rest) = bytes
        .split_first()
        .ok_or_else(|| malformed(format!("missing {what} count")))?;
    let need = usize::from(count) * 2;
    if rest.len() < need {
        return Err(malformed(format!(
            "{what} section declares {count} entries but has {} bytes",
            rest.len()
        )));
    }
    let (body, rest) = rest.split_at(need);
    let items = body
        .chunks_exact(2)
        .map(|c| u16::from_be_bytes([c[0], c[1]]))
        .collect();
    Ok((items, rest))
}

/// Encoded nonce section.
pub fn encode_nonce_section(nonce: &[u16]) -> Vec<u8> {
    let mut out = Vec::with_capacity(1 + 2 * nonce.len());
    put_u16_list(&mut out, nonce);
    out
}

fn check_list(items: &[u16], what: &str, allow_empty: bool) -> Result<(), FrameError> {
    if items.len() > usize::from(u8::MAX) {
        return Err(malformed(format!("{what} list longer than 255 entries")));
    }
    if !allow_empty && items.is_empty() {
        return Err(malformed(format!("{what} list is empty")));
    }
    Ok(())
}

/// Session parameters announced by the initiator. The key never travels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HelloPayload {
    seed: u8,
    timestamps: Vec<u16>,
    nonce: Vec<u16>,
}

impl HelloPayload {
    pub fn new(seed: u8, timestamps: Vec<u16>, nonce: Vec<u16>) -> Result<Self, FrameError> {
        check_list(&timestamps, "timestamp", true)?;
        check_list(&nonce, "nonce", false)?;
        Ok(Self {
            seed,
            timestamps,
            nonce,
        })
    }

    /// Narrows generator parameters to the wire widths.
    pub fn from_params(params: &GeneratorParams) -> Result<Self, FrameError> {
        let narrow = |v: &[u32], what: &str| {
            v.iter()
                .map(|&x| {
                    u16::try_from(x)
                        .map_err(|_| malformed(format!("{what} value {x} exceeds 16 bits")))
                })
                .collect::<Result<Vec<_>, _>>()
        };
        let seed = u8::try_from(params.seed)
            .map_err(|_| malformed(format!("seed {} exceeds 8 bits", params.seed)))?;
        Self::new(
            seed,
            narrow(&params.timestamps, "timestamp")?,
            narrow(&params.nonce, "nonce")?,
        )
    }

    /// Canonical generator parameters for this hello under `key`.
    pub fn to_params(&self, key: u32) -> GeneratorParams {
        GeneratorParams::canonical(
            key,
            self.timestamps.iter().map(|&v| u32::from(v)).collect(),
            self.nonce.iter().map(|&v| u32::from(v)).collect(),
        )
        .with_seed(u32::from(self.seed))
    }

    pub fn seed(&self) -> u8 {
        self.seed
    }

    pub fn timestamps(&self) -> &[u16] {
        &self.timestamps
    }

    pub fn nonce(&self) -> &[u16] {
        &self.nonce
    }

    pub fn nonce_section(&self) -> Vec<u8> {
        encode_nonce_section(&self.nonce)
    }

    pub fn encode(&self) -> Vec<u8> {
        let mut out = vec![self.seed];
        put_u16_list(&mut out, &self.timestamps);
        put_u16_list(&mut out, &self.nonce);
        out
    }

    pub fn decode(bytes: &[u8]) -> Result<Self, FrameError> {
        let (&seed, rest) = bytes
            .split_first()
            .ok_or_else(|| malformed("empty HELLO payload"))?;
        let (timestamps, rest) = take_u16_list(rest, "timestamp")?;
        let (nonce, rest) = take_u16_list(rest, "nonce")?;
        if !rest.is_empty() {
            return Err(malformed(format!(
                "{} unexpected bytes after HELLO",
                rest.len()
            )));
        }
        Self::new(seed, timestamps, nonce)
    }
}

/// Echo of the received nonce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AckPayload {
    nonce: Vec<u16>,
}

impl AckPayload {
    pub fn new(nonce: Vec<u16>) -> Result<Self, FrameError> {
        check_list(&nonce, "nonce", false)?;
        Ok(Self { nonce })
    }

    pub fn nonce(&self) -> &[u16] {
        &self.nonce
    }

    pub fn encode(&self) -> Vec<u8> {
        encode_nonce_section(&self.nonce)
    }

    pub fn decode(bytes: &[u8]) -> Result<Self, FrameError> {
        let (nonce, rest) = take_u16_list(bytes, "nonce")?;
        if !rest.is_empty() {
            return Err(malformed(format!(
                "{} unexpected bytes after ACK",
                rest.len()
            )));
        }
        Self::new(nonce)
    }
}
