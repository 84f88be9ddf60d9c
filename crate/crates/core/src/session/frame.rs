//! Wire frames.
//!
//! ```text
//! +------+------+---------+------+-------------+----------------+
//! | 0x54 | 0x46 | version | type | length (BE) | payload ...    |
//! +------+------+---------+------+-------------+----------------+
//!    1      1        1       1         2          length bytes
//! ```

use std::fmt;

use super::FrameError;

pub const MAGIC: [u8; 2] = [0x54, 0x46];
pub const VERSION: u8 = 0x01;
pub const HEADER_LEN: usize = 6;
pub const MAX_PAYLOAD: usize = u16::MAX as usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum FrameType {
    Hello = 0x01,
    Ack = 0x02,
    Data = 0x03,
    Err = 0x04,
}

impl FrameType {
    pub const ALL: [FrameType; 4] = [
        FrameType::Hello,
        FrameType::Ack,
        FrameType::Data,
        FrameType::Err,
    ];
}

impl TryFrom<u8> for FrameType {
    type Error = FrameError;

    fn try_from(b: u8) -> Result<Self, Self::Error> {
        match b {
            0x01 => Ok(FrameType::Hello),
            0x02 => Ok(FrameType::Ack),
            0x03 => Ok(FrameType::Data),
            0x04 => Ok(FrameType::Err),
            other => Err(FrameError::UnknownType(other)),
        }
    }
}

impl fmt::Display for FrameType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrameType::Hello => "HELLO",
            FrameType::Ack => "ACK",
            FrameType::Data => "DATA",
            FrameType::Err => "ERR",
        })
    }
}

/// A typed payload of at most [`MAX_PAYLOAD`] bytes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    frame_type: FrameType,
    payload: Vec<u8>,
}

/// Parsed header: frame type and declared payload length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Header {
    pub frame_type: FrameType,
    pub payload_len: usize,
}

impl Header {
    pub fn parse(bytes: &[u8; HEADER_LEN]) -> Result<Self, FrameError> {
        if bytes[..2] != MAGIC {
            return Err(FrameError::BadMagic([bytes[0], bytes[1]]));
        }
        if bytes[2] != VERSION {
            return Err(FrameError::BadVersion(bytes[2]));
        }
        Ok(Self {
            frame_type: FrameType::try_from(bytes[3])?,
            payload_len: usize::from(u16::from_be_bytes([bytes[4], bytes[5]])),
        })
    }
}

impl Frame {
    pub fn new(frame_type: FrameType, payload: Vec<u8>) -> Result<Self, FrameError> {
        if payload.len() > MAX_PAYLOAD {
            return Err(FrameError::PayloadTooLarge(payload.len()));
        }
        Ok(Self {
            frame_type,
            payload,
        })
    }

    /// An ERR frame carrying a reason, truncated to fit.
    pub fn error(reason: &str) -> Self {
        let mut payload = reason.as_bytes().to_vec();
        payload.truncate(MAX_PAYLOAD);
        Self {
            frame_type: FrameType::Err,
            payload,
        }
    }

    pub fn frame_type(&self) -> FrameType {
        self.frame_type
    }

    pub fn payload(&self) -> &[u8] {
        &self.payload
    }

    pub fn into_payload(self) -> Vec<u8> {
        self.payload
    }

    pub fn encoded_len(&self) -> usize {
        HEADER_LEN + self.payload.len()
    }

    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.encoded_len());
        out.extend_from_slice(&MAGIC);
        out.push(VERSION);
        out.push(self.frame_type as u8);
        out.extend_from_slice(&(self.payload.len() as u16).to_be_bytes());
        out.extend_from_slice(&self.payload);
        out
    }

    /// Decodes exactly one frame occupying all of `bytes`.
    pub fn decode(bytes: &[u8]) -> Result<Self, FrameError> {
        let (frame, used) = Self::decode_prefix(bytes)?;
        if used != bytes.len() {
            return Err(FrameError::TrailingBytes(bytes.len() - used));
        }
        Ok(frame)
    }

    /// Decodes the frame at the start of `bytes`, returning it with the
    /// number of bytes consumed.
    pub fn decode_prefix(bytes: &[u8]) -> Result<(Self, usize), FrameError> {
        let header: &[u8; HEADER_LEN] = bytes
            .get(..HEADER_LEN)
            .and_then(|h| h.try_into().ok())
            .ok_or(FrameError::TruncatedFrame {
                needed: HEADER_LEN,
                available: bytes.len(),
            })?;
        let header = Header::parse(header)?;
        let end = HEADER_LEN + header.payload_len;
        let payload = bytes
            .get(HEADER_LEN..end)
            .ok_or(FrameError::TruncatedFrame {
                needed: end,
                available: bytes.len(),
            })?;
        Ok((
            Self {
                frame_type: header.frame_type,
                payload: payload.to_vec(),
            },
            end,
        ))
    }

    /// Payload of an ERR frame as text.
    pub fn reason(&self) -> String {
        String::from_utf8_lossy(&self.payload).into_owned()
    }
}

pub fn encode_frame(frame: &Frame) -> Vec<u8> {
    frame.encode()
}

pub fn decode_frame(bytes: &[u8]) -> Result<Frame, FrameError> {
    Frame::decode(bytes)
}

/// Lowercase hex bytes separated by spaces, for transcripts.
pub fn hex(bytes: &[u8]) -> String {
    bytes
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect::<Vec<_>>()
        .join(" ")
}
