use std::fmt;

use super::KeystreamError;

/// Which transcription of the recurrence to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Cleaned-up equations: bucket lookup on every step, Euclidean modulus,
    /// loops driven by the timestamp and nonce lists.
    Canonical,
    /// Bit-faithful port of the original C routine. `u` and `u1` are read
    /// once and divided with C integer division.
    Literal { u: i32, u1: i32 },
}

impl Mode {
    pub fn default_variant(&self) -> Variant {
        match self {
            Mode::Canonical => Variant::CANONICAL,
            Mode::Literal { .. } => Variant::LITERAL,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Mode::Canonical => "canonical",
            Mode::Literal { .. } => "literal",
        }
    }
}

/// Sign of the `θ` term inside the `a` coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaTerm {
    /// `a = 1 + F·(1 − θ)`
    OneMinusTheta,
    /// `a = 1 + F·(θ − 1)`, as the C routine computes `z = t3 - 1`.
    ThetaMinusOne,
}

/// How `u / uδ` (canonical) or `u / u1` (literal) is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RatioKind {
    Integer,
    Real,
}

/// Formula toggles where the prose equations and the C routine disagree.
/// Each mode has a default; the calibration sweep walks all combinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Variant {
    pub theta_term: ThetaTerm,
    /// Use `(γ − 1) / 2` instead of `(γ − 1)` in the common factor.
    pub halve_gamma: bool,
    pub ratio: RatioKind,
}

impl Variant {
    pub const CANONICAL: Variant = Variant {
        theta_term: ThetaTerm::OneMinusTheta,
        halve_gamma: false,
        ratio: RatioKind::Real,
    };

    pub const LITERAL: Variant = Variant {
        theta_term: ThetaTerm::ThetaMinusOne,
        halve_gamma: true,
        ratio: RatioKind::Integer,
    };

    /// All eight toggle combinations in a fixed order.
    pub fn all() -> Vec<Variant> {
        let mut out = Vec::with_capacity(8);
        for theta_term in [ThetaTerm::OneMinusTheta, ThetaTerm::ThetaMinusOne] {
            for halve_gamma in [false, true] {
                for ratio in [RatioKind::Real, RatioKind::Integer] {
                    out.push(Variant {
                        theta_term,
                        halve_gamma,
                        ratio,
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let theta = match self.theta_term {
            ThetaTerm::OneMinusTheta => "1-theta",
            ThetaTerm::ThetaMinusOne => "theta-1",
        };
        let gamma = if self.halve_gamma { "(g-1)/2" } else { "g-1" };
        let ratio = match self.ratio {
            RatioKind::Integer => "int",
            RatioKind::Real => "real",
        };
        write!(f, "{theta} {gamma} {ratio}")
    }
}

/// Seed used by the original routine (`t1 = 4`).
pub const DEFAULT_SEED: u32 = 4;
/// Keystream modulus used by the original routine (`t % 35`).
pub const DEFAULT_MODULUS: u32 = 35;

/// Complete input to keystream derivation.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorParams {
    pub key: u32,
    /// Time stamps `M[j]`; outer loop in canonical mode.
    pub timestamps: Vec<u32>,
    /// Space steps `γ[i]`, doubling as the session nonce; inner loop.
    pub nonce: Vec<u32>,
    pub seed: u32,
    pub modulus: u32,
    pub mode: Mode,
    pub variant: Variant,
}

impl GeneratorParams {
    pub fn canonical(key: u32, timestamps: Vec<u32>, nonce: Vec<u32>) -> Self {
        Self {
            key,
            timestamps,
            nonce,
            seed: DEFAULT_SEED,
            modulus: DEFAULT_MODULUS,
            mode: Mode::Canonical,
            variant: Variant::CANONICAL,
        }
    }

    /// Literal-mode parameters. The loop bounds of the original routine are
    /// fixed, so the timestamp and nonce lists are recorded but not iterated.
    pub fn literal(key: u32, u: i32, u1: i32) -> Self {
        Self {
            key,
            timestamps: (1..=5).collect(),
            nonce: (2..=23).collect(),
            seed: DEFAULT_SEED,
            modulus: DEFAULT_MODULUS,
            mode: Mode::Literal { u, u1 },
            variant: Variant::LITERAL,
        }
    }

    pub fn with_seed(mut self, seed: u32) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_modulus(mut self, modulus: u32) -> Self {
        self.modulus = modulus;
        self
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn validate(&self) -> Result<(), KeystreamError> {
        let invalid = |msg: &str| Err(KeystreamError::InvalidParams(msg.to_string()));
        if self.key == 0 {
            return invalid("key r must be positive");
        }
        if self.timestamps.is_empty() {
            return invalid("timestamp list is empty");
        }
        if self.nonce.is_empty() {
            return invalid("nonce list is empty");
        }
        if self.timestamps.contains(&0) {
            return invalid("timestamps must be positive");
        }
        if self.nonce.iter().any(|&g| g < 2) {
            return invalid("nonce entries must be at least 2");
        }
        if self.seed == 0 {
            return invalid("seed t1 must be positive");
        }
        if self.modulus < 2 {
            return invalid("modulus must be at least 2");
        }
        if let Mode::Literal { u1, .. } = self.mode {
            if u1 == 0 {
                return invalid("literal mode requires u1 != 0");
            }
            if i32::try_from(self.key).is_err()
                || i32::try_from(self.modulus).is_err()
                || i32::try_from(self.seed).is_err()
            {
                return invalid("literal mode requires key, seed and modulus to fit a C int");
            }
        }
        Ok(())
    }

    /// Number of values `generate` yields for these parameters.
    pub fn output_len(&self) -> usize {
        match self.mode {
            Mode::Canonical => self.timestamps.len() * self.nonce.len(),
            Mode::Literal { .. } => super::literal::OUTPUT_LEN,
        }
    }
}
