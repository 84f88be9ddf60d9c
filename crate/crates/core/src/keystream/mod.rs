//! Sub-key generation from a key, time stamps and a nonce.
//!
//! Each step solves the equilibrium equation
//!
//! ```text
//! T = a + b·(u/uδ) + c·(u/uδ)²
//! a = 1 + F·(1 − θ),  b = F·θ,  c = −F,  F = r·(γ − 1)·m²
//! ```
//!
//! where `θ` and `u/uδ` come from the [`RelationshipTable`] bucket holding
//! the previous output (feedback), `r` is the key, `m` a time stamp and `γ` a
//! nonce element. See [`Mode`] for the two transcriptions on offer.

mod canonical;
mod coefficients;
pub mod literal;
mod params;
mod stream;
mod table;

use thiserror::Error;

pub use canonical::{initial_value, step_canonical};
pub use coefficients::{coefficients, coefficients_for, common_factor, Coefficients};
pub use literal::{LiteralTranscript, OUTPUT_LEN as LITERAL_OUTPUT_LEN};
pub use params::{
    GeneratorParams, Mode, RatioKind, ThetaTerm, Variant, DEFAULT_MODULUS, DEFAULT_SEED,
};
pub use stream::Keystream;
pub use table::{BucketRule, RelationshipTable};

/// Time step `delt = 1` of the underlying numerical model. No equation uses it.
pub const DELT: f64 = 1.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KeystreamError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("invalid relationship table: {0}")]
    InvalidTable(String),
    #[error("value {0} is not covered by the relationship table")]
    OutOfRange(i64),
    #[error("numeric fault after {position} values: {reason}")]
    NumericFault { position: usize, reason: String },
    #[error("keystream value {0} does not fit in a byte")]
    NotByteRepresentable(i64),
    #[error("malformed keystream text: {0}")]
    Parse(String),
}

/// Returns the bucket covering `t`.
pub fn lookup_bucket(table: &RelationshipTable, t: i64) -> Result<&BucketRule, KeystreamError> {
    table.lookup(t)
}

/// `θ` for a bucket, in ratio form.
pub fn theta(rule: &BucketRule) -> f64 {
    rule.theta()
}

/// Validated parameters paired with the table they run against.
#[derive(Debug, Clone)]
pub struct Generator {
    params: GeneratorParams,
    table: RelationshipTable,
}

impl Generator {
    pub fn new(params: GeneratorParams) -> Result<Self, KeystreamError> {
        Self::with_table(params, RelationshipTable::default())
    }

    /// Canonical mode needs every reachable value covered: the wrapped seed
    /// (`0..36`) and every residue of the modulus.
    pub fn with_table(
        params: GeneratorParams,
        table: RelationshipTable,
    ) -> Result<Self, KeystreamError> {
        params.validate()?;
        if params.mode == Mode::Canonical {
            let hi = i64::from(params.modulus.max(36)) - 1;
            if !table.covers(0, hi) {
                return Err(KeystreamError::InvalidParams(format!(
                    "relationship table does not cover every value in 0..={hi}"
                )));
            }
        }
        Ok(Self { params, table })
    }

    pub fn params(&self) -> &GeneratorParams {
        &self.params
    }

    pub fn table(&self) -> &RelationshipTable {
        &self.table
    }

    pub fn generate(&self) -> Result<Keystream, KeystreamError> {
        let values = match self.params.mode {
            Mode::Canonical => canonical::run(&self.params, &self.table)?,
            Mode::Literal { .. } => literal::run(&self.params)?,
        };
        Ok(Keystream::new(values))
    }

    pub fn derive_subkey(&self, length: usize) -> Result<Keystream, KeystreamError> {
        Ok(self.generate()?.cycled(length))
    }
}

/// Full keystream for `params` under the default table.
pub fn generate(params: &GeneratorParams) -> Result<Keystream, KeystreamError> {
    Generator::new(params.clone())?.generate()
}

/// First `length` values of the keystream, cycling when `length` exceeds it.
pub fn derive_subkey(params: &GeneratorParams, length: usize) -> Result<Keystream, KeystreamError> {
    Generator::new(params.clone())?.derive_subkey(length)
}
