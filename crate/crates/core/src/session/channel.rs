//! Byte channels and frame I/O over them.
//!
//! Any `Read + Write` reliable ordered stream works: a `TcpStream` for the
//! loopback demo, or the in-memory pair below for tests.

use std::io::{self, Read, Write};
use std::sync::mpsc::{channel, Receiver, Sender};

use super::frame::{Frame, Header, HEADER_LEN};
use super::{FrameError, SessionError};

pub fn write_frame<W: Write + ?Sized>(w: &mut W, frame: &Frame) -> io::Result<()> {
    w.write_all(&frame.encode())?;
    w.flush()
}

/// Reads one frame. `Ok(None)` means the peer closed cleanly between frames.
pub fn read_frame<R: Read + ?Sized>(r: &mut R) -> Result<Option<Frame>, SessionError> {
    let mut header = [0u8; HEADER_LEN];
    let got = read_full(r, &mut header)?;
    if got == 0 {
        return Ok(None);
    }
    if got < HEADER_LEN {
        return Err(FrameError::TruncatedFrame {
            needed: HEADER_LEN,
            available: got,
        }
        .into());
    }
    let parsed = Header::parse(&header)?;
    let mut payload = vec![0u8; parsed.payload_len];
    let got = read_full(r, &mut payload)?;
    if got < payload.len() {
        return Err(FrameError::TruncatedFrame {
            needed: HEADER_LEN + payload.len(),
            available: HEADER_LEN + got,
        }
        .into());
    }
    Ok(Some(Frame::new(parsed.frame_type, payload)?))
}

/// Fills `buf` until full or end of stream; returns the bytes read.
fn read_full<R: Read + ?Sized>(r: &mut R, buf: &mut [u8]) -> io::Result<usize> {
    let mut filled = 0;
    while filled < buf.len() {
        match r.read(&mut buf[filled..]) {
            Ok(0) => break,
            Ok(n) => filled += n,
            Err(e) if e.kind() == io::ErrorKind::Interrupted => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(filled)
}

/// One end of an in-memory duplex byte stream. Dropping an end signals
/// end-of-stream to the other.
#[derive(Debug)]
pub struct MemoryStream {
    tx: Sender<Vec<u8>>,
    rx: Receiver<Vec<u8>>,
    buf: Vec<u8>,
    pos: usize,
}

/// Two connected in-memory stream ends.
pub fn memory_pair() -> (MemoryStream, MemoryStream) {
    let (tx_a, rx_b) = channel();
    let (tx_b, rx_a) = channel();
    (
        MemoryStream {
            tx: tx_a,
            rx: rx_a,
            buf: Vec::new(),
            pos: 0,
        },
        MemoryStream {
            tx: tx_b,
            rx: rx_b,
            buf: Vec::new(),
            pos: 0,
        },
    )
}

impl Read for MemoryStream {
    fn read(&mut self, out: &mut [u8]) -> io::Result<usize> {
        while self.pos == self.buf.len() {
            match self.rx.recv() {
                Ok(chunk) => {
                    self.buf = chunk;
                    self.pos = 0;
                }
                Err(_) => return Ok(0),
            }
        }
        let n = out.len().min(self.buf.len() - self.pos);
        out[..n].copy_from_slice(&self.buf[self.pos..self.pos + n]);
        self.pos += n;
        Ok(n)
    }
}

impl Write for MemoryStream {
    fn write(&mut self, data: &[u8]) -> io::Result<usize> {
        if data.is_empty() {
            return Ok(0);
        }
        self.tx
            .send(data.to_vec())
            .map_err(|_| io::Error::new(io::ErrorKind::BrokenPipe, "peer dropped"))?;
        Ok(data.len())
    }

    fn flush(&mut self) -> io::Result<()> {
        Ok(())
    }
}
