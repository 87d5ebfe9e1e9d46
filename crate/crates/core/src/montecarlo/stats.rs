//! Sample statistics for experiment summaries.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rng;

pub fn mean(xs: &[f64]) -> Option<f64> {
    if xs.is_empty() {
        None
    } else {
        Some(xs.iter().sum::<f64>() / xs.len() as f64)
    }
}

/// Sample standard deviation (Bessel-corrected); 0 for a single sample.
pub fn std_dev(xs: &[f64]) -> Option<f64> {
    let m = mean(xs)?;
    if xs.len() < 2 {
        return Some(0.0);
    }
    let ss: f64 = xs.iter().map(|x| (x - m) * (x - m)).sum();
    Some((ss / (xs.len() - 1) as f64).sqrt())
}

/// Empirical CDF of integer samples, stored at each distinct value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ecdf {
    /// `(x, F(x))` with `x` strictly increasing and `F` ending at 1.
    pub points: Vec<(u64, f64)>,
    pub samples: usize,
}

impl Ecdf {
    pub fn new(samples: &[u64]) -> Self {
        let mut sorted = samples.to_vec();
        sorted.sort_unstable();
        let total = sorted.len() as f64;
        let mut points: Vec<(u64, f64)> = Vec::new();
        for (i, &x) in sorted.iter().enumerate() {
            let f = (i + 1) as f64 / total;
            match points.last_mut() {
                Some(last) if last.0 == x => last.1 = f,
                _ => points.push((x, f)),
            }
        }
        Ecdf {
            points,
            samples: sorted.len(),
        }
    }

    /// Fraction of samples `<= x`.
    pub fn at(&self, x: u64) -> f64 {
        match self.points.partition_point(|&(v, _)| v <= x) {
            0 => 0.0,
            k => self.points[k - 1].1,
        }
    }

    /// Smallest sample value `q` with `F(q) >= p`.
    pub fn quantile(&self, p: f64) -> Option<u64> {
        self.points.iter().find(|&&(_, f)| f >= p).map(|&(x, _)| x)
    }
}

/// Percentile bootstrap confidence interval for the mean of paired
/// differences `a[i] - b[i]`.
pub fn bootstrap_mean_diff_ci<R: Rng + ?Sized>(
    a: &[f64],
    b: &[f64],
    resamples: usize,
    alpha: f64,
    rng: &mut R,
) -> Result<(f64, f64)> {
    if a.len() != b.len() {
        return Err(Error::InvalidConfig(
            "paired samples differ in length".into(),
        ));
    }
    if a.is_empty() || resamples == 0 {
        return Err(Error::EmptyInput);
    }
    let diffs: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    let k = diffs.len();
    let mut means: Vec<f64> = (0..resamples)
        .map(|_| (0..k).map(|_| diffs[rng::index(rng, k)]).sum::<f64>() / k as f64)
        .collect();
    means.sort_by(f64::total_cmp);
    let pick = |q: f64| {
        let idx = ((q * resamples as f64).floor() as usize).min(resamples - 1);
        means[idx]
    };
    Ok((pick(alpha / 2.0), pick(1.0 - alpha / 2.0)))
}

/// Formats like C's `%.6g`-style output: 6 significant digits, trailing
/// zeros dropped.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() {
            "0".into()
        } else {
            x.to_string()
        };
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if exp < -4 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

/// Rounds to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    format_sig(x, digits).parse().unwrap_or(x)
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
