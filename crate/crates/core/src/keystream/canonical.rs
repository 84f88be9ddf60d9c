//! Canonical recurrence: every step re-resolves the bucket from the current
//! value, evaluates the equilibrium equation in double precision, floors and
//! reduces with a Euclidean modulus so the result can index the table again.

use super::coefficients::coefficients_for;
use super::params::{GeneratorParams, RatioKind};
use super::table::RelationshipTable;
use super::KeystreamError;

/// The seed is wrapped into `0..36`, the span of the default table.
const SEED_WRAP: i64 = 36;

/// `floor(seed / 0.3) mod 36`; 13 for the customary seed of 4.
pub fn initial_value(seed: u32) -> i64 {
    let raw = (f64::from(seed) / 0.3).floor() as i64;
    raw.rem_euclid(SEED_WRAP)
}

/// One step of the recurrence from value `t` under space step `gamma` and
/// time stamp `m`.
pub fn step_canonical(
    t: i64,
    params: &GeneratorParams,
    gamma: u32,
    m: u32,
    table: &RelationshipTable,
) -> Result<i64, KeystreamError> {
    let rule = table.lookup(t)?;
    let coeffs = coefficients_for(params.key, gamma, m, rule.theta(), params.variant);
    let ratio = match params.variant.ratio {
        RatioKind::Real => rule.u_ratio(),
        RatioKind::Integer => rule.u_ratio().trunc(),
    };
    let t_real = coeffs.evaluate(ratio);
    let floored = t_real.floor();
    // i64::MAX as f64 rounds up to 2^63, hence the strict bound.
    if !floored.is_finite() || floored < i64::MIN as f64 || floored >= i64::MAX as f64 {
        return Err(KeystreamError::NumericFault {
            position: 0,
            reason: format!("equation value {t_real} out of range (t={t}, gamma={gamma}, m={m})"),
        });
    }
    Ok((floored as i64).rem_euclid(i64::from(params.modulus)))
}

pub(crate) fn run(
    params: &GeneratorParams,
    table: &RelationshipTable,
) -> Result<Vec<i64>, KeystreamError> {
    let mut t = initial_value(params.seed);
    let mut out = Vec::with_capacity(params.output_len());
    for &m in &params.timestamps {
        for &gamma in &params.nonce {
            t = step_canonical(t, params, gamma, m, table).map_err(|e| match e {
                KeystreamError::NumericFault { reason, .. } => KeystreamError::NumericFault {
                    position: out.len(),
                    reason,
                },
                other => other,
            })?;
            out.push(t);
        }
    }
    Ok(out)
}
