//! Two-party nonce exchange with acknowledgement.
//!
//! The initiator announces the seed, time stamps and nonce in a HELLO; the
//! responder echoes the nonce in an ACK. Both then derive the same canonical
//! keystream from the pre-shared key, which never crosses the wire, and
//! exchange DATA frames encrypted with the mod-36 codec. A mismatched echo,
//! an out-of-phase frame or an ERR from the peer closes the session.

mod channel;
mod driver;
mod frame;
mod payload;
mod state;

use std::io;

use thiserror::Error;

use crate::codec36::CodecError;
use crate::keystream::KeystreamError;

pub use channel::{memory_pair, read_frame, write_frame, MemoryStream};
pub use driver::{run_initiator, run_responder, ResponderOptions, Transcript};
pub use frame::{
    decode_frame, encode_frame, hex, Frame, FrameType, Header, HEADER_LEN, MAGIC, MAX_PAYLOAD,
    VERSION,
};
pub use payload::{encode_nonce_section, AckPayload, HelloPayload};
pub use state::{Event, Phase, ReusePolicy, Role, Session};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("bad magic bytes {0:02x?}")]
    BadMagic([u8; 2]),
    #[error("unsupported protocol version {0}")]
    BadVersion(u8),
    #[error("unknown frame type 0x{0:02x}")]
    UnknownType(u8),
    #[error("truncated frame: need {needed} bytes, have {available}")]
    TruncatedFrame { needed: usize, available: usize },
    #[error("{0} trailing bytes after frame")]
    TrailingBytes(usize),
    #[error("payload of {0} bytes exceeds the 16-bit length field")]
    PayloadTooLarge(usize),
    #[error("malformed payload: {0}")]
    MalformedPayload(String),
}

#[derive(Debug, Error)]
pub enum SessionError {
    #[error("decode error: {0}")]
    Frame(#[from] FrameError),
    #[error("acknowledged nonce does not match the nonce sent")]
    NonceMismatch,
    #[error("protocol violation: {role:?} in phase {phase} cannot handle {}", frame.map_or("a local send".to_string(), |f| f.to_string()))]
    ProtocolViolation {
        role: Role,
        phase: Phase,
        frame: Option<FrameType>,
    },
    #[error("peer reported error: {0}")]
    PeerError(String),
    #[error("keystream exhausted: need {needed} values, {available} unused")]
    KeystreamExhausted { needed: usize, available: usize },
    #[error(transparent)]
    Keystream(#[from] KeystreamError),
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error("channel closed by peer")]
    ChannelClosed,
    #[error("channel i/o: {0}")]
    Io(#[from] io::Error),
}

impl PartialEq for SessionError {
    fn eq(&self, other: &Self) -> bool {
        use SessionError::*;
        match (self, other) {
            (Frame(a), Frame(b)) => a == b,
            (NonceMismatch, NonceMismatch) | (ChannelClosed, ChannelClosed) => true,
            (
                ProtocolViolation {
                    role: r1,
                    phase: p1,
                    frame: f1,
                },
                ProtocolViolation {
                    role: r2,
                    phase: p2,
                    frame: f2,
                },
            ) => r1 == r2 && p1 == p2 && f1 == f2,
            (PeerError(a), PeerError(b)) => a == b,
            (
                KeystreamExhausted {
                    needed: n1,
                    available: a1,
                },
                KeystreamExhausted {
                    needed: n2,
                    available: a2,
                },
            ) => n1 == n2 && a1 == a2,
            (Keystream(a), Keystream(b)) => a == b,
            (Codec(a), Codec(b)) => a == b,
            (Io(a), Io(b)) => a.kind() == b.kind(),
            _ => false,
        }
    }
}

impl SessionError {
    /// ERR frame describing this error.
    pub fn to_frame(&self) -> Frame {
        Frame::error(&self.to_string())
    }

    /// False for errors that originate from, or cannot reach, the peer.
    pub fn should_notify_peer(&self) -> bool {
        !matches!(
            self,
            SessionError::PeerError(_) | SessionError::ChannelClosed | SessionError::Io(_)
        )
    }
}
