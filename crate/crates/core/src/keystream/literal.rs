//! Port of the original C routine with its exact numeric semantics.
//!
//! The routine declares `int t, u, u1, r` and `float t2, t3, a, b, c, x, y, z`.
//! Single-precision intermediates, integer division of `u / u1`, the `double`
//! promotion caused by `pow`, truncation on assignment to `t` and the C
//! remainder are all reproduced here. Its loops run `m = 1..=5` and
//! `g = 2..=23` regardless of the parameter lists, and it prints once more
//! after each inner loop, giving 23 values per time stamp.
//!
//! `t3` is read before it is ever assigned in the original; it starts at 0.0
//! here. A zero `t - t2` divisor or a value that does not fit an `int` is
//! reported as a fault instead of continuing with undefined behaviour.

use std::ops::RangeInclusive;

use super::params::{GeneratorParams, Mode, RatioKind, ThetaTerm, Variant};
use super::KeystreamError;

const TIMESTAMP_STEPS: RangeInclusive<i32> = 1..=5;
const SPACE_STEPS: RangeInclusive<i32> = 2..=23;

/// 5 time stamps × (22 inner values + 1 repeated value).
pub const OUTPUT_LEN: usize = 115;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiteralCoefficients {
    pub a: f32,
    pub b: f32,
    pub c: f32,
}

/// `x = (g-1)/2; y = m²; z = t3-1; a = 1+r·x·y·z; b = t3·r·(x·y); c = -r·x·y`
/// evaluated in `float`, left to right.
pub(crate) fn coefficients_f32(
    key: i32,
    gamma: i32,
    m: i32,
    t3: f32,
    variant: Variant,
) -> LiteralCoefficients {
    let mut x = (gamma - 1) as f32;
    if variant.halve_gamma {
        x /= 2.0;
    }
    let y = f64::from(m).powi(2) as f32;
    let z = match variant.theta_term {
        ThetaTerm::ThetaMinusOne => t3 - 1.0,
        ThetaTerm::OneMinusTheta => 1.0 - t3,
    };
    let r = key as f32;
    LiteralCoefficients {
        a: 1.0 + r * x * y * z,
        b: t3 * r * (x * y),
        c: (-key) as f32 * x * y,
    }
}

/// Values emitted before the routine stopped, and why it stopped early if it did.
#[derive(Debug, Clone, PartialEq)]
pub struct LiteralTranscript {
    pub values: Vec<i32>,
    pub fault: Option<String>,
}

impl LiteralTranscript {
    pub fn is_complete(&self) -> bool {
        self.fault.is_none()
    }
}

struct Machine {
    t: i32,
    t3: f32,
    key: i32,
    u: i32,
    u1: i32,
    variant: Variant,
}

impl Machine {
    fn advance(&mut self, gamma: i32, m: i32) -> Result<i32, String> {
        let t = self.t;
        let t_f = t as f32;
        let t2 = (0.6 * f64::from(t)) as f32;
        let denom = t_f - t2;
        if denom == 0.0 {
            return Err(format!(
                "division by zero in (t - t2) at t={t}, m={m}, g={gamma}"
            ));
        }
        self.t3 = (t_f - self.t3) / denom;

        let co = coefficients_f32(self.key, gamma, m, self.t3, self.variant);
        // b·k stays in float; pow() promotes the quadratic term to double.
        let (k_f, k_d) = match self.variant.ratio {
            RatioKind::Integer => {
                let k = self
                    .u
                    .checked_div(self.u1)
                    .ok_or_else(|| format!("integer overflow in {} / {}", self.u, self.u1))?;
                (k as f32, f64::from(k))
            }
            RatioKind::Real => {
                let k = self.u as f32 / self.u1 as f32;
                (k, f64::from(k))
            }
        };
        let value = f64::from(co.a + co.b * k_f) + f64::from(co.c) * (k_d * k_d);
        if !(value > f64::from(i32::MIN) - 1.0 && value < f64::from(i32::MAX) + 1.0) {
            return Err(format!(
                "value {value} does not fit an int at m={m}, g={gamma}"
            ));
        }
        self.t = value as i32;
        Ok(self.t)
    }
}

/// Runs the routine and keeps whatever it emitted, even if it faulted.
pub fn transcript(params: &GeneratorParams) -> Result<LiteralTranscript, KeystreamError> {
    params.validate()?;
    let Mode::Literal { u, u1 } = params.mode else {
        return Err(KeystreamError::InvalidParams(
            "literal transcript requested for canonical parameters".into(),
        ));
    };
    let modulus = params.modulus as i32;
    let start = f64::from(params.seed) / 0.3;
    if start >= f64::from(i32::MAX) + 1.0 {
        return Err(KeystreamError::InvalidParams(
            "seed t1 overflows int".into(),
        ));
    }
    let mut machine = Machine {
        t: start as i32,
        t3: 0.0,
        key: params.key as i32,
        u,
        u1,
        variant: params.variant,
    };

    let mut values = Vec::with_capacity(OUTPUT_LEN);
    for m in TIMESTAMP_STEPS {
        for g in SPACE_STEPS {
            match machine.advance(g, m) {
                Ok(t) => values.push(t % modulus),
                Err(reason) => {
                    return Ok(LiteralTranscript {
                        values,
                        fault: Some(reason),
                    })
                }
            }
        }
        values.push(machine.t % modulus);
    }
    Ok(LiteralTranscript {
        values,
        fault: None,
    })
}

pub(crate) fn run(params: &GeneratorParams) -> Result<Vec<i64>, KeystreamError> {
    let tr = transcript(params)?;
    match tr.fault {
        Some(reason) => Err(KeystreamError::NumericFault {
            position: tr.values.len(),
            reason,
        }),
        None => Ok(tr.values.into_iter().map(i64::from).collect()),
    }
}
