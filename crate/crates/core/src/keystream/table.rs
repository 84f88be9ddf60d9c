//! Bucket rules relating the current data value `T` to the fractions that
//! drive the equilibrium equation.
//!
//! The default table is compiled in. Alternative tables can be loaded from a
//! whitespace-separated text file with one rule per line:
//!
//! ```text
//! # t_lo t_hi t_delta_frac t_w_frac u_value u_delta_frac
//! 0  5  0.3 0.6 3 0.3
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt;
use std::str::FromStr;

use super::KeystreamError;

/// One row of the relationship table: a closed range of `T` and the
/// fractions defining `Tδ`, `T_w` and `uδ` for values in that range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BucketRule {
    pub t_lo: i64,
    pub t_hi: i64,
    /// `Tδ = t_delta_frac · T`
    pub t_delta_frac: f64,
    /// `T_w = t_w_frac · T`
    pub t_w_frac: f64,
    /// The `U` column. Kept for fidelity; it cancels out of `u / uδ`.
    pub u_value: i64,
    /// `uδ = u_delta_frac · u`
    pub u_delta_frac: f64,
}

impl BucketRule {
    pub const fn new(
        t_lo: i64,
        t_hi: i64,
        t_delta_frac: f64,
        t_w_frac: f64,
        u_value: i64,
        u_delta_frac: f64,
    ) -> Self {
        Self {
            t_lo,
            t_hi,
            t_delta_frac,
            t_w_frac,
            u_value,
            u_delta_frac,
        }
    }

    pub fn contains(&self, t: i64) -> bool {
        self.t_lo <= t && t <= self.t_hi
    }

    /// `θ = (T − T_w) / (T − Tδ)` written in ratio form, `(1 − w) / (1 − d)`.
    ///
    /// Both `T_w` and `Tδ` are proportional to `T`, so `T` cancels for every
    /// non-zero `T`; the ratio form is also defined at `T = 0`.
    pub fn theta(&self) -> f64 {
        (1.0 - self.t_w_frac) / (1.0 - self.t_delta_frac)
    }

    /// `u / uδ`, which reduces to `1 / u_delta_frac`.
    pub fn u_ratio(&self) -> f64 {
        1.0 / self.u_delta_frac
    }

    fn validate(&self) -> Result<(), KeystreamError> {
        let frac_ok = |f: f64| f > 0.0 && f < 1.0;
        if self.t_lo > self.t_hi {
            return Err(KeystreamError::InvalidTable(format!(
                "rule {}..{}: lower bound exceeds upper bound",
                self.t_lo, self.t_hi
            )));
        }
        if !frac_ok(self.t_delta_frac) || !frac_ok(self.t_w_frac) || !frac_ok(self.u_delta_frac) {
            return Err(KeystreamError::InvalidTable(format!(
                "rule {}..{}: fractions must lie strictly between 0 and 1",
                self.t_lo, self.t_hi
            )));
        }
        if self.t_delta_frac > self.t_w_frac {
            return Err(KeystreamError::InvalidTable(format!(
                "rule {}..{}: t_delta_frac {} exceeds t_w_frac {}",
                self.t_lo, self.t_hi, self.t_delta_frac, self.t_w_frac
            )));
        }
        Ok(())
    }
}

impl fmt::Display for BucketRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {} {}",
            self.t_lo, self.t_hi, self.t_delta_frac, self.t_w_frac, self.u_value, self.u_delta_frac
        )
    }
}

const DEFAULT_RULES: [BucketRule; 7] = [
    BucketRule::new(0, 5, 0.3, 0.6, 3, 0.3),
    BucketRule::new(6, 10, 0.4, 0.6, 2, 0.4),
    BucketRule::new(11, 15, 0.5, 0.7, 5, 0.5),
    BucketRule::new(16, 20, 0.6, 0.7, 1, 0.6),
    BucketRule::new(21, 25, 0.7, 0.8, 7, 0.7),
    BucketRule::new(26, 30, 0.8, 0.8, 4, 0.8),
    BucketRule::new(31, 35, 0.9, 0.9, 6, 0.9),
];

/// Ordered, disjoint list of [`BucketRule`]s.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationshipTable {
    rules: Vec<BucketRule>,
}

impl Default for RelationshipTable {
    fn default() -> Self {
        Self {
            rules: DEFAULT_RULES.to_vec(),
        }
    }
}

impl RelationshipTable {
    /// Builds a table, checking every rule and that ranges ascend without
    /// overlapping. Gaps are allowed; values falling into one fail lookup.
    pub fn new(rules: Vec<BucketRule>) -> Result<Self, KeystreamError> {
        if rules.is_empty() {
            return Err(KeystreamError::InvalidTable("table has no rules".into()));
        }
        for rule in &rules {
            rule.validate()?;
        }
        for pair in rules.windows(2) {
            if pair[1].t_lo <= pair[0].t_hi {
                return Err(KeystreamError::InvalidTable(format!(
                    "rules {}..{} and {}..{} overlap or are out of order",
                    pair[0].t_lo, pair[0].t_hi, pair[1].t_lo, pair[1].t_hi
                )));
            }
        }
        Ok(Self { rules })
    }

    pub fn rules(&self) -> &[BucketRule] {
        &self.rules
    }

    pub fn lookup(&self, t: i64) -> Result<&BucketRule, KeystreamError> {
        let idx = self.rules.partition_point(|r| r.t_hi < t);
        match self.rules.get(idx) {
            Some(rule) if rule.contains(t) => Ok(rule),
            _ => Err(KeystreamError::OutOfRange(t)),
        }
    }

    /// True when every integer in `lo..=hi` falls in some rule.
    pub fn covers(&self, lo: i64, hi: i64) -> bool {
        let mut next = lo;
        for rule in &self.rules {
            if rule.t_hi < next {
                continue;
            }
            if rule.t_lo > next {
                return false;
            }
            next = rule.t_hi.saturating_add(1);
            if next > hi {
                return true;
            }
        }
        next > hi
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("# t_lo t_hi t_delta_frac t_w_frac u_value u_delta_frac\n");
        for rule in &self.rules {
            out.push_str(&rule.to_string());
            out.push('\n');
        }
        out
    }
}

impl FromStr for RelationshipTable {
    type Err = KeystreamError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut rules = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad =
                |what: &str| KeystreamError::InvalidTable(format!("line {}: {what}", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(bad("expected 6 fields"));
            }
            let int = |s: &str| {
                s.parse::<i64>()
                    .map_err(|_| bad(&format!("bad integer {s:?}")))
            };
            let real = |s: &str| {
                s.parse::<f64>()
                    .map_err(|_| bad(&format!("bad number {s:?}")))
            };
            rules.push(BucketRule {
                t_lo: int(fields[0])?,
                t_hi: int(fields[1])?,
                t_delta_frac: real(fields[2])?,
                t_w_frac: real(fields[3])?,
                u_value: int(fields[4])?,
                u_delta_frac: real(fields[5])?,
            });
        }
        Self::new(rules)
    }
}
