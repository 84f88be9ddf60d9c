//! Keystream generation from a nonlinear, time-stamped feedback recurrence,
//! a mod-36 stream cipher built on it, empirical analysis of the generated
//! streams, and a two-party handshake that agrees on a keystream.
//!
//! ```
//! use eqstream::codec36::{decrypt, encrypt, AlphaText};
//! use eqstream::keystream::{derive_subkey, GeneratorParams};
//!
//! let params = GeneratorParams::canonical(4, (1..=6).collect(), (2..=21).collect());
//! let plain: AlphaText = "asks".parse().unwrap();
//! let key = derive_subkey(&params, plain.len()).unwrap();
//! let cipher = encrypt(&plain, &key).unwrap();
//! assert_eq!(decrypt(&cipher, &key).unwrap(), plain);
//! ```

pub mod analysis;
pub mod calibration;
pub mod codec36;
pub mod keystream;
pub mod session;
