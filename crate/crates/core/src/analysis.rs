//! Empirical measurements of keystream quality: residue frequencies,
//! chi-square against uniform, lagged serial correlation, sensitivity to
//! single-element parameter changes, and how generation time scales with
//! the number of (time stamp, nonce) steps.
//!
//! Nothing here passes or fails a stream; the numbers are reported as-is.

use std::fmt::Write as _;
use std::time::Instant;

use thiserror::Error;

use crate::keystream::{generate, GeneratorParams, Keystream, KeystreamError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("value {value} outside 0..{modulus}")]
    ValueOutOfRange { value: i64, modulus: u32 },
    #[error("no observations")]
    EmptyInput,
    #[error("stream of length {len} too short for lag {lag}")]
    TooShort { len: usize, lag: usize },
    #[error("correlation undefined: zero variance")]
    ZeroVariance,
    #[error("streams differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error(transparent)]
    Keystream(#[from] KeystreamError),
}

pub fn frequency_histogram(ks: &Keystream, modulus: u32) -> Result<Vec<u64>, AnalysisError> {
    let mut counts = vec![0u64; modulus as usize];
    for &value in ks.values() {
        let slot = usize::try_from(value)
            .ok()
            .and_then(|i| counts.get_mut(i))
            .ok_or(AnalysisError::ValueOutOfRange { value, modulus })?;
        *slot += 1;
    }
    Ok(counts)
}

/// Pearson chi-square statistic of `counts` against a uniform expectation.
pub fn chi_square_uniform(counts: &[u64]) -> Result<f64, AnalysisError> {
    let total: u64 = counts.iter().sum();
    if total == 0 || counts.is_empty() {
        return Err(AnalysisError::EmptyInput);
    }
    let expected = total as f64 / counts.len() as f64;
    Ok(counts
        .iter()
        .map(|&o| {
            let d = o as f64 - expected;
            d * d / expected
        })
        .sum())
}

/// Pearson correlation between `ks[i]` and `ks[i + lag]`.
pub fn serial_correlation(ks: &Keystream, lag: usize) -> Result<f64, AnalysisError> {
    let v = ks.values();
    if lag == 0 || v.len() <= lag {
        return Err(AnalysisError::TooShort { len: v.len(), lag });
    }
    let xs = &v[..v.len() - lag];
    let ys = &v[lag..];
    let n = xs.len() as f64;
    let mean = |s: &[i64]| s.iter().map(|&x| x as f64).sum::<f64>() / n;
    let (mx, my) = (mean(xs), mean(ys));
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let dx = x as f64 - mx;
        let dy = y as f64 - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(AnalysisError::ZeroVariance);
    }
    Ok(sxy / (sxx.sqrt() * syy.sqrt()))
}

/// Fraction of positions at which two equal-length streams differ.
pub fn hamming_fraction(a: &Keystream, b: &Keystream) -> Result<f64, AnalysisError> {
    if a.len() != b.len() {
        return Err(AnalysisError::LengthMismatch(a.len(), b.len()));
    }
    if a.is_empty() {
        return Ok(0.0);
    }
    let differing = a
        .values()
        .iter()
        .zip(b.values())
        .filter(|(x, y)| x != y)
        .count();
    Ok(differing as f64 / a.len() as f64)
}

/// Share of keystream positions changed by switching from `base` to `perturbed`.
pub fn avalanche(
    base: &GeneratorParams,
    perturbed: &GeneratorParams,
) -> Result<f64, AnalysisError> {
    hamming_fraction(&generate(base)?, &generate(perturbed)?)
}

/// The three single-element perturbations reported by [`analyze`]:
/// key + 1, first time stamp + 1, first nonce element + 1.
pub fn standard_perturbations(base: &GeneratorParams) -> Vec<(&'static str, GeneratorParams)> {
    let mut key = base.clone();
    key.key = key.key.saturating_add(1);
    let mut stamp = base.clone();
    stamp.timestamps[0] = stamp.timestamps[0].saturating_add(1);
    let mut nonce = base.clone();
    nonce.nonce[0] = nonce.nonce[0].saturating_add(1);
    vec![("key", key), ("timestamp", stamp), ("nonce", nonce)]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimingSample {
    /// `|nonce| · |timestamps|`
    pub work: usize,
    /// Median wall-clock seconds per `generate` call.
    pub seconds: f64,
}

pub const MIN_TIMING_RUNS: usize = 5;

/// Times `generate` for each grid entry, taking the median of at least
/// [`MIN_TIMING_RUNS`] runs.
pub fn timing_scaling(
    grid: &[GeneratorParams],
    runs: usize,
) -> Result<Vec<TimingSample>, AnalysisError> {
    let runs = runs.max(MIN_TIMING_RUNS);
    let mut samples = Vec::with_capacity(grid.len());
    for params in grid {
        // warm-up, also surfaces invalid parameters before timing
        generate(params)?;
        let mut times = Vec::with_capacity(runs);
        for _ in 0..runs {
            let start = Instant::now();
            let ks = generate(params)?;
            times.push(start.elapsed().as_secs_f64());
            std::hint::black_box(ks);
        }
        times.sort_by(f64::total_cmp);
        samples.push(TimingSample {
            work: params.timestamps.len() * params.nonce.len(),
            seconds: times[times.len() / 2],
        });
    }
    Ok(samples)
}

/// Which list to stretch when building a timing grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaleAxis {
    Nonce,
    Timestamps,
}

/// Copies of `base` whose nonce (or time stamp) list is repeated `factor`
/// times, for each factor.
pub fn scaled_grid(
    base: &GeneratorParams,
    factors: &[usize],
    axis: ScaleAxis,
) -> Vec<GeneratorParams> {
    factors
        .iter()
        .map(|&f| {
            let mut p = base.clone();
            let list = match axis {
                ScaleAxis::Nonce => &mut p.nonce,
                ScaleAxis::Timestamps => &mut p.timestamps,
            };
            *list = list.iter().copied().cycle().take(list.len() * f).collect();
            p
        })
        .collect()
}

/// Time growth per doubling of work between consecutive samples:
/// `(t₂/t₁)^(1 / log₂(w₂/w₁))`. Linear scaling gives 2.
pub fn doubling_ratios(samples: &[TimingSample]) -> Vec<f64> {
    samples
        .windows(2)
        .map(|w| {
            let work = w[1].work as f64 / w[0].work as f64;
            let time = w[1].seconds / w[0].seconds;
            time.powf(1.0 / work.log2())
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub modulus: u32,
    pub length: usize,
    pub histogram: Vec<u64>,
    pub chi_square: f64,
    /// `None` where the correlation is undefined.
    pub serial_correlation: Vec<(usize, Option<f64>)>,
    pub avalanche: Vec<(String, f64)>,
    pub timing_samples: Vec<TimingSample>,
}

/// Runs every measurement on the canonical stream of `params`. Timing is
/// only measured when `timing_factors` is non-empty; the nonce list is
/// stretched by each factor.
pub fn analyze(
    params: &GeneratorParams,
    lags: &[usize],
    timing_factors: &[usize],
) -> Result<AnalysisReport, AnalysisError> {
    let ks = generate(params)?;
    let histogram = frequency_histogram(&ks, params.modulus)?;
    let chi_square = chi_square_uniform(&histogram)?;
    let serial = lags
        .iter()
        .map(|&lag| match serial_correlation(&ks, lag) {
            Ok(r) => Ok((lag, Some(r))),
            Err(AnalysisError::ZeroVariance) => Ok((lag, None)),
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let avalanche = standard_perturbations(params)
        .into_iter()
        .map(|(name, p)| Ok((name.to_string(), avalanche(params, &p)?)))
        .collect::<Result<Vec<_>, AnalysisError>>()?;
    let timing_samples = if timing_factors.is_empty() {
        Vec::new()
    } else {
        timing_scaling(
            &scaled_grid(params, timing_factors, ScaleAxis::Nonce),
            MIN_TIMING_RUNS,
        )?
    };
    Ok(AnalysisReport {
        modulus: params.modulus,
        length: ks.len(),
        histogram,
        chi_square,
        serial_correlation: serial,
        avalanche,
        timing_samples,
    })
}

fn fmt_corr(r: Option<f64>) -> String {
    r.map_or_else(|| "undefined".to_string(), |r| format!("{r:.6}"))
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "keystream length: {} (modulus {})",
            self.length, self.modulus
        );
        let _ = writeln!(out, "histogram:");
        for (v, c) in self.histogram.iter().enumerate() {
            let _ = writeln!(out, "  {v:>3}: {c}");
        }
        let _ = writeln!(
            out,
            "chi-square vs uniform: {:.6} ({} degrees of freedom)",
            self.chi_square,
            self.histogram.len().saturating_sub(1)
        );
        for (lag, r) in &self.serial_correlation {
            let _ = writeln!(out, "serial correlation, lag {lag}: {}", fmt_corr(*r));
        }
        for (name, f) in &self.avalanche {
            let _ = writeln!(out, "avalanche ({name} perturbed): {f:.6}");
        }
        for s in &self.timing_samples {
            let _ = writeln!(out, "timing: work {} -> {:.9} s", s.work, s.seconds);
        }
        for (i, r) in doubling_ratios(&self.timing_samples).iter().enumerate() {
            let _ = writeln!(out, "timing ratio per doubling [{}->{}]: {r:.3}", i, i + 1);
        }
        out
    }

    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "length={}", self.length);
        let _ = writeln!(out, "modulus={}", self.modulus);
        let hist: Vec<String> = self.histogram.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "histogram={}", hist.join(","));
        let _ = writeln!(out, "chi_square={:.6}", self.chi_square);
        for (lag, r) in &self.serial_correlation {
            let _ = writeln!(out, "serial_correlation.lag{lag}={}", fmt_corr(*r));
        }
        for (name, f) in &self.avalanche {
            let _ = writeln!(out, "avalanche.{name}={f:.6}");
        }
        for s in &self.timing_samples {
            let _ = writeln!(out, "timing.work{}={:.9}", s.work, s.seconds);
        }
        out
    }
}
