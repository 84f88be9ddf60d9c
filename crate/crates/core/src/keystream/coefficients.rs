use super::literal;
use super::params::{Mode, ThetaTerm, Variant};

/// Coefficients of the equilibrium equation `T = a + b·k + c·k²`, with `k = u / uδ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub theta: f64,
}

impl Coefficients {
    /// Evaluates `a + b·k + c·k²`.
    pub fn evaluate(&self, k: f64) -> f64 {
        self.a + self.b * k + self.c * (k * k)
    }
}

/// Common factor `F = r · (γ − 1) · m²`, or `r · (γ − 1)/2 · m²` when halved.
pub fn common_factor(key: u32, gamma: u32, m: u32, halve_gamma: bool) -> f64 {
    let mut g = f64::from(gamma) - 1.0;
    if halve_gamma {
        g /= 2.0;
    }
    let m = f64::from(m);
    f64::from(key) * g * (m * m)
}

/// Real-valued coefficients for an explicit formula variant.
///
/// With [`ThetaTerm::OneMinusTheta`] the three coefficients always sum to 1.
pub fn coefficients_for(
    key: u32,
    gamma: u32,
    m: u32,
    theta: f64,
    variant: Variant,
) -> Coefficients {
    let f = common_factor(key, gamma, m, variant.halve_gamma);
    let a = match variant.theta_term {
        ThetaTerm::OneMinusTheta => 1.0 + f * (1.0 - theta),
        ThetaTerm::ThetaMinusOne => 1.0 + f * (theta - 1.0),
    };
    Coefficients {
        a,
        b: f * theta,
        c: -f,
        theta,
    }
}

/// Coefficients as each mode computes them.
///
/// Literal mode evaluates in single precision, exactly as the C routine does,
/// and widens the result.
pub fn coefficients(key: u32, gamma: u32, m: u32, theta: f64, mode: Mode) -> Coefficients {
    match mode {
        Mode::Canonical => coefficients_for(key, gamma, m, theta, Variant::CANONICAL),
        Mode::Literal { .. } => {
            let c = literal::coefficients_f32(
                key as i32,
                gamma as i32,
                m as i32,
                theta as f32,
                Variant::LITERAL,
            );
            Coefficients {
                a: f64::from(c.a),
                b: f64::from(c.b),
                c: f64::from(c.c),
                theta,
            }
        }
    }
}
