//! Blocking drivers running one side of a session over a byte stream.

use std::io::{Read, Write};

use super::channel::{read_frame, write_frame};
use super::frame::{hex, Frame, FrameType};
use super::payload::HelloPayload;
use super::state::{Event, Session};
use super::SessionError;

/// Human-readable log of frames crossing the channel.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Transcript {
    lines: Vec<String>,
}

impl Transcript {
    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn frame(&mut self, who: &str, dir: &str, frame: &Frame) {
        self.lines.push(format!(
            "{who} {dir} {} [{}]",
            frame.frame_type(),
            hex(&frame.encode())
        ));
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ResponderOptions {
    /// Flip a bit of the echoed nonce before sending the ACK.
    pub corrupt_ack: bool,
    /// Send every received message back encrypted.
    pub echo: bool,
}

fn send<S: Write + ?Sized>(
    stream: &mut S,
    log: &mut Transcript,
    who: &str,
    frame: &Frame,
) -> Result<(), SessionError> {
    log.frame(who, "->", frame);
    write_frame(stream, frame)?;
    Ok(())
}

fn recv<S: Read + ?Sized>(
    stream: &mut S,
    log: &mut Transcript,
    who: &str,
) -> Result<Option<Frame>, SessionError> {
    let frame = read_frame(stream)?;
    if let Some(f) = &frame {
        log.frame(who, "<-", f);
    }
    Ok(frame)
}

/// Reports a local failure to the peer before handing it back. Errors the
/// peer already knows about are not echoed.
fn abort<S: Write + ?Sized>(
    stream: &mut S,
    log: &mut Transcript,
    who: &str,
    err: SessionError,
) -> SessionError {
    if err.should_notify_peer() {
        // The channel may already be gone; the original error matters more.
        let _ = send(stream, log, who, &err.to_frame());
    }
    log.note(format!("{who} closed: {err}"));
    err
}

/// Handshakes, then sends each message and, if the responder echoes,
/// collects the decrypted replies.
pub fn run_initiator<S: Read + Write + ?Sized>(
    stream: &mut S,
    session: &mut Session,
    hello: &HelloPayload,
    messages: &[&str],
    expect_echo: bool,
    log: &mut Transcript,
) -> Result<Vec<String>, SessionError> {
    const WHO: &str = "initiator";
    let hello_frame = session.initiate(hello)?;
    send(stream, log, WHO, &hello_frame)?;

    let ack = recv(stream, log, WHO)?.ok_or(SessionError::ChannelClosed)?;
    if let Err(e) = session.receive(&ack) {
        return Err(abort(stream, log, WHO, e));
    }
    log.note(format!(
        "{WHO} established ({} keystream values)",
        session.keystream().len()
    ));

    let mut replies = Vec::new();
    for msg in messages {
        let frame = match session.send_message(msg) {
            Ok(f) => f,
            Err(e) => return Err(abort(stream, log, WHO, e)),
        };
        send(stream, log, WHO, &frame)?;
        if expect_echo {
            let reply = recv(stream, log, WHO)?.ok_or(SessionError::ChannelClosed)?;
            match session.recv_message(&reply) {
                Ok(text) => replies.push(text),
                Err(e) => return Err(abort(stream, log, WHO, e)),
            }
        }
    }
    for w in session.reuse_warnings() {
        log.note(format!("{WHO} warning: {w}"));
    }
    Ok(replies)
}

/// Answers one HELLO, then decrypts DATA frames until the initiator closes
/// the stream.
pub fn run_responder<S: Read + Write + ?Sized>(
    stream: &mut S,
    session: &mut Session,
    opts: ResponderOptions,
    log: &mut Transcript,
) -> Result<Vec<String>, SessionError> {
    const WHO: &str = "responder";
    let hello = recv(stream, log, WHO)?.ok_or(SessionError::ChannelClosed)?;
    let ack = match session.respond(&hello) {
        Ok(a) => a,
        Err(e) => return Err(abort(stream, log, WHO, e)),
    };
    let ack = if opts.corrupt_ack {
        let mut payload = ack.into_payload();
        if let Some(last) = payload.last_mut() {
            *last ^= 0x01;
        }
        Frame::new(FrameType::Ack, payload)?
    } else {
        ack
    };
    send(stream, log, WHO, &ack)?;

    let mut received = Vec::new();
    while let Some(frame) = recv(stream, log, WHO)? {
        match session.receive(&frame) {
            Ok(Event::Message(text)) => {
                if opts.echo {
                    let reply = match session.send_message(&text) {
                        Ok(f) => f,
                        Err(e) => return Err(abort(stream, log, WHO, e)),
                    };
                    send(stream, log, WHO, &reply)?;
                }
                received.push(text);
            }
            Ok(_) => unreachable!("an established responder only yields messages"),
            Err(e) => return Err(abort(stream, log, WHO, e)),
        }
    }
    log.note(format!("{WHO} saw end of stream"));
    Ok(received)
}
