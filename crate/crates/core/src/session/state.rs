//! Per-connection handshake and message state.
//!
//! ```text
//! initiator: Idle --initiate--> HelloSent --ACK ok--> Established
//! responder: Idle --HELLO--> HelloReceived --keystream derived--> Established (ACK sent)
//! any phase: ERR received, nonce mismatch or illegal frame --> Closed
//! ```
//!
//! Both directions share the derived keystream. Initiator-to-responder
//! traffic reads it forwards from position 0; responder-to-initiator traffic
//! reads it backwards from the last position. The two only meet once the
//! combined traffic exceeds the stream length.

use std::fmt;

use crate::codec36::{decrypt, encrypt, AlphaText};
use crate::keystream::{generate, Keystream};

use super::frame::{Frame, FrameType};
use super::payload::{AckPayload, HelloPayload};
use super::SessionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Initiator,
    Responder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Idle,
    HelloSent,
    HelloReceived,
    Established,
    Closed,
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::Idle => "idle",
            Phase::HelloSent => "hello-sent",
            Phase::HelloReceived => "hello-received",
            Phase::Established => "established",
            Phase::Closed => "closed",
        })
    }
}

/// What to do when traffic outgrows the keystream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReusePolicy {
    /// Wrap around the stream and record a warning.
    #[default]
    Cycle,
    /// Fail with [`SessionError::KeystreamExhausted`].
    Refuse,
}

/// Result of handing an incoming frame to [`Session::receive`].
#[derive(Debug, Clone, PartialEq)]
pub enum Event {
    /// Responder accepted a HELLO; send this ACK.
    Reply(Frame),
    /// Initiator accepted the ACK.
    Established,
    /// Decrypted DATA.
    Message(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    Forward,
    Backward,
}

#[derive(Debug)]
pub struct Session {
    role: Role,
    phase: Phase,
    key: u32,
    policy: ReusePolicy,
    sent_nonce: Option<Vec<u8>>,
    pending: Option<Keystream>,
    keystream: Keystream,
    tx_used: usize,
    rx_used: usize,
    warnings: Vec<String>,
}

impl Session {
    pub fn new(role: Role, key: u32) -> Self {
        Self {
            role,
            phase: Phase::Idle,
            key,
            policy: ReusePolicy::default(),
            sent_nonce: None,
            pending: None,
            keystream: Keystream::default(),
            tx_used: 0,
            rx_used: 0,
            warnings: Vec::new(),
        }
    }

    pub fn initiator(key: u32) -> Self {
        Self::new(Role::Initiator, key)
    }

    pub fn responder(key: u32) -> Self {
        Self::new(Role::Responder, key)
    }

    pub fn with_policy(mut self, policy: ReusePolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    /// The agreed keystream; empty until established.
    pub fn keystream(&self) -> &Keystream {
        &self.keystream
    }

    /// Symbols sent and received so far.
    pub fn offsets(&self) -> (usize, usize) {
        (self.tx_used, self.rx_used)
    }

    /// Keystream reuse notices recorded under [`ReusePolicy::Cycle`].
    pub fn reuse_warnings(&self) -> &[String] {
        &self.warnings
    }

    fn violation(&mut self, frame: Option<FrameType>) -> SessionError {
        let err = SessionError::ProtocolViolation {
            role: self.role,
            phase: self.phase,
            frame,
        };
        self.phase = Phase::Closed;
        err
    }

    fn close_with(&mut self, err: SessionError) -> SessionError {
        self.phase = Phase::Closed;
        err
    }

    /// Starts the handshake: derives the keystream locally, then returns
    /// the HELLO to send.
    pub fn initiate(&mut self, hello: &HelloPayload) -> Result<Frame, SessionError> {
        if self.role != Role::Initiator || self.phase != Phase::Idle {
            return Err(self.violation(None));
        }
        let ks = generate(&hello.to_params(self.key)).map_err(|e| self.close_with(e.into()))?;
        self.pending = Some(ks);
        self.sent_nonce = Some(hello.nonce_section());
        self.phase = Phase::HelloSent;
        Ok(Frame::new(FrameType::Hello, hello.encode())?)
    }

    /// Responder side of the handshake; returns the ACK to send.
    pub fn respond(&mut self, hello: &Frame) -> Result<Frame, SessionError> {
        if hello.frame_type() != FrameType::Hello {
            return Err(self.violation(Some(hello.frame_type())));
        }
        match self.receive(hello)? {
            Event::Reply(ack) => Ok(ack),
            _ => unreachable!("HELLO only ever yields a reply"),
        }
    }

    /// Initiator side: checks the echoed nonce and establishes the session.
    pub fn on_ack(&mut self, ack: &Frame) -> Result<(), SessionError> {
        if ack.frame_type() != FrameType::Ack {
            return Err(self.violation(Some(ack.frame_type())));
        }
        self.receive(ack).map(|_| ())
    }

    /// Decrypts an incoming DATA frame.
    pub fn recv_message(&mut self, frame: &Frame) -> Result<String, SessionError> {
        if frame.frame_type() != FrameType::Data {
            return Err(self.violation(Some(frame.frame_type())));
        }
        match self.receive(frame)? {
            Event::Message(m) => Ok(m),
            _ => unreachable!("DATA only ever yields a message"),
        }
    }

    /// Dispatches any incoming frame according to role and phase.
    pub fn receive(&mut self, frame: &Frame) -> Result<Event, SessionError> {
        match (self.role, self.phase, frame.frame_type()) {
            (_, Phase::Closed, t) => Err(SessionError::ProtocolViolation {
                role: self.role,
                phase: Phase::Closed,
                frame: Some(t),
            }),
            (_, _, FrameType::Err) => Err(self.close_with(SessionError::PeerError(frame.reason()))),
            (Role::Responder, Phase::Idle, FrameType::Hello) => self.accept_hello(frame),
            (Role::Initiator, Phase::HelloSent, FrameType::Ack) => self.accept_ack(frame),
            (_, Phase::Established, FrameType::Data) => self.accept_data(frame).map(Event::Message),
            (_, _, t) => Err(self.violation(Some(t))),
        }
    }

    fn accept_hello(&mut self, frame: &Frame) -> Result<Event, SessionError> {
        let hello = HelloPayload::decode(frame.payload()).map_err(|e| self.close_with(e.into()))?;
        self.phase = Phase::HelloReceived;
        let ks = generate(&hello.to_params(self.key)).map_err(|e| self.close_with(e.into()))?;
        let ack = AckPayload::new(hello.nonce().to_vec()).map_err(|e| self.close_with(e.into()))?;
        self.keystream = ks;
        self.phase = Phase::Established;
        Ok(Event::Reply(Frame::new(FrameType::Ack, ack.encode())?))
    }

    fn accept_ack(&mut self, frame: &Frame) -> Result<Event, SessionError> {
        let expected = self.sent_nonce.as_deref().unwrap_or_default();
        if frame.payload() != expected {
            return Err(self.close_with(SessionError::NonceMismatch));
        }
        self.keystream = self.pending.take().unwrap_or_default();
        self.phase = Phase::Established;
        Ok(Event::Established)
    }

    fn outgoing(&self) -> Direction {
        match self.role {
            Role::Initiator => Direction::Forward,
            Role::Responder => Direction::Backward,
        }
    }

    fn incoming(&self) -> Direction {
        match self.role {
            Role::Initiator => Direction::Backward,
            Role::Responder => Direction::Forward,
        }
    }

    /// Reserves `n` keystream values for one direction, starting at that
    /// direction's offset.
    fn take_subkey(
        &mut self,
        direction: Direction,
        start: usize,
        n: usize,
    ) -> Result<Keystream, SessionError> {
        let len = self.keystream.len();
        let used = self.tx_used + self.rx_used;
        if n == 0 {
            return Ok(Keystream::default());
        }
        if len == 0 {
            return Err(SessionError::KeystreamExhausted {
                needed: n,
                available: 0,
            });
        }
        if used + n > len {
            match self.policy {
                ReusePolicy::Refuse => {
                    return Err(SessionError::KeystreamExhausted {
                        needed: n,
                        available: len.saturating_sub(used),
                    })
                }
                ReusePolicy::Cycle => self.warnings.push(format!(
                    "keystream reuse: {} symbols exchanged over a {len}-value stream",
                    used + n
                )),
            }
        }
        let ks = self.keystream.values();
        let values = (start..start + n)
            .map(|i| match direction {
                Direction::Forward => ks[i % len],
                Direction::Backward => ks[len - 1 - i % len],
            })
            .collect();
        Ok(Keystream::new(values))
    }

    /// Encrypts `plaintext` into a DATA frame.
    pub fn send_message(&mut self, plaintext: &str) -> Result<Frame, SessionError> {
        if self.phase != Phase::Established {
            return Err(self.violation(None));
        }
        let plain: AlphaText = plaintext.parse()?;
        let subkey = self.take_subkey(self.outgoing(), self.tx_used, plain.len())?;
        let cipher = encrypt(&plain, &subkey)?;
        let frame = Frame::new(FrameType::Data, cipher.to_string().into_bytes())?;
        self.tx_used += plain.len();
        Ok(frame)
    }

    fn accept_data(&mut self, frame: &Frame) -> Result<String, SessionError> {
        let text = std::str::from_utf8(frame.payload()).map_err(|_| {
            SessionError::Frame(super::FrameError::MalformedPayload(
                "DATA is not ASCII".into(),
            ))
        })?;
        let cipher: AlphaText = text.parse()?;
        let subkey = self.take_subkey(self.incoming(), self.rx_used, cipher.len())?;
        let plain = decrypt(&cipher, &subkey)?;
        self.rx_used += cipher.len();
        Ok(plain.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hello() -> HelloPayload {
        HelloPayload::new(4, (1..=6).collect(), (2..=21).collect()).unwrap()
    }

    fn established_pair() -> (Session, Session) {
        let mut a = Session::initiator(4);
        let mut b = Session::responder(4);
        let h = a.initiate(&hello()).unwrap();
        let ack = b.respond(&h).unwrap();
        a.on_ack(&ack).unwrap();
        (a, b)
    }

    /// Session whose keystream is set directly, bypassing the handshake.
    fn with_keystream(role: Role, values: Vec<i64>) -> Session {
        let mut s = Session::new(role, 4);
        s.keystream = Keystream::new(values);
        s.phase = Phase::Established;
        s
    }

    #[test]
    fn handshake_agrees() {
        let (a, b) = established_pair();
        assert_eq!(a.phase(), Phase::Established);
        assert_eq!(b.phase(), Phase::Established);
        assert_eq!(a.keystream(), b.keystream());
        assert_eq!(a.keystream().len(), 120);
    }

    #[test]
    fn table_two_over_the_wire() {
        let mut s = with_keystream(Role::Initiator, vec![7, 5, 9, 17]);
        let f = s.send_message("asks").unwrap();
        assert_eq!(f.payload(), b"hxt9");
        let mut r = with_keystream(Role::Responder, vec![7, 5, 9, 17]);
        assert_eq!(r.recv_message(&f).unwrap(), "asks");
    }

    #[test]
    fn empty_message_keeps_offset() {
        let (mut a, _) = established_pair();
        let f = a.send_message("").unwrap();
        assert!(f.payload().is_empty());
        assert_eq!(a.offsets(), (0, 0));
    }

    #[test]
    fn offsets_advance_without_reuse() {
        let (mut a, mut b) = established_pair();
        let f1 = a.send_message("abc").unwrap();
        let f2 = a.send_message("abc").unwrap();
        assert_ne!(f1, f2);
        assert_eq!(b.recv_message(&f1).unwrap(), "abc");
        assert_eq!(b.recv_message(&f2).unwrap(), "abc");
        let back = b.send_message("reply").unwrap();
        assert_eq!(a.recv_message(&back).unwrap(), "reply");
        assert_eq!(a.offsets(), (6, 5));
        assert_eq!(b.offsets(), (5, 6));
        assert!(a.reuse_warnings().is_empty());
    }

    #[test]
    fn exhaustion_policies() {
        let mut s = with_keystream(Role::Initiator, vec![1, 2, 3]).with_policy(ReusePolicy::Refuse);
        assert!(matches!(
            s.send_message("abcd"),
            Err(SessionError::KeystreamExhausted {
                needed: 4,
                available: 3
            })
        ));
        assert_eq!(s.offsets(), (0, 0));
        let mut s = with_keystream(Role::Initiator, vec![1, 2, 3]);
        let f = s.send_message("aaaa").unwrap();
        assert_eq!(f.payload(), b"bcdb");
        assert_eq!(s.reuse_warnings().len(), 1);
    }

    #[test]
    fn data_before_ack_is_violation() {
        let mut a = Session::initiator(4);
        a.initiate(&hello()).unwrap();
        let data = Frame::new(FrameType::Data, b"abc".to_vec()).unwrap();
        assert!(matches!(
            a.receive(&data),
            Err(SessionError::ProtocolViolation {
                phase: Phase::HelloSent,
                ..
            })
        ));
        assert_eq!(a.phase(), Phase::Closed);
        let mut fresh = Session::initiator(4);
        assert!(matches!(
            fresh.send_message("a"),
            Err(SessionError::ProtocolViolation { .. })
        ));
    }

    #[test]
    fn corrupted_ack_closes() {
        let mut a = Session::initiator(4);
        let mut b = Session::responder(4);
        let ack = b.respond(&a.initiate(&hello()).unwrap()).unwrap();
        let mut bytes = ack.into_payload();
        *bytes.last_mut().unwrap() ^= 1;
        let bad = Frame::new(FrameType::Ack, bytes).unwrap();
        assert_eq!(a.on_ack(&bad), Err(SessionError::NonceMismatch));
        assert_eq!(a.phase(), Phase::Closed);
        assert!(a.keystream().is_empty());
    }

    #[test]
    fn peer_error_closes() {
        let (mut a, _) = established_pair();
        assert_eq!(
            a.receive(&Frame::error("bye")),
            Err(SessionError::PeerError("bye".into()))
        );
        assert_eq!(a.phase(), Phase::Closed);
    }

    #[test]
    fn invalid_hello_params_close_responder() {
        let mut b = Session::responder(4);
        let h = HelloPayload::new(4, vec![1], vec![1]).unwrap();
        let f = Frame::new(FrameType::Hello, h.encode()).unwrap();
        assert!(matches!(b.respond(&f), Err(SessionError::Keystream(_))));
        assert_eq!(b.phase(), Phase::Closed);
    }

    #[test]
    fn unsupported_symbol_leaves_state() {
        let (mut a, _) = established_pair();
        assert!(matches!(a.send_message("a b"), Err(SessionError::Codec(_))));
        assert_eq!(a.phase(), Phase::Established);
        assert_eq!(a.offsets(), (0, 0));
    }
}
