// Copyright 2026 The qecw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Closed-form success probabilities, pseudothresholds, Monte Carlo
//! logical error rates and the concatenation scaling formula.

use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::noise::{build_table, classify_residual, sample_error, NoiseChannel, Outcome, SyndromeTable};
use crate::scalar::Real;
use crate::stabilizer::StabilizerCode;

pub const CSV_HEADER: &str = "code,channel,p,trials,failures,rate,std_error,seed";

pub const ANALYTIC_CODES: [&str; 4] = ["bit_flip", "phase_flip", "shor9", "steane7"];

const BISECTION_LOW: f64 = 1e-9;
const BISECTION_HIGH: f64 = 0.5;
const BISECTION_TOLERANCE: f64 = 1e-7;

fn analytic_length(code_name: &str) -> Result<i32> {
    match code_name {
        "bit_flip" | "phase_flip" => Ok(3),
        "shor9" => Ok(9),
        "steane7" => Ok(7),
        other => Err(Error::Domain(format!(
            "no closed-form success probability for '{other}' (supported: {})",
            ANALYTIC_CODES.join(", ")
        ))),
    }
}

fn check_probability<T: Real>(p: T) -> Result<()> {
    if p.is_nan() || p < T::zero() || p > T::one() {
        return Err(Error::Domain(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// Probability of at most one physical error on an `n`-qubit codeword:
/// `(1-p)^n + n p (1-p)^(n-1)`.
pub fn analytic_success<T: Real>(code_name: &str, p: T) -> Result<T> {
    let n = analytic_length(code_name)?;
    check_probability(p)?;
    let q = T::one() - p;
    Ok(q.powi(n) + T::c(n as f64) * p * q.powi(n - 1))
}

/// Root of `analytic_success(p) = 1 - p` on `(1e-9, 0.5)` by bisection.
pub fn pseudothreshold<T: Real>(code_name: &str) -> Result<T> {
    analytic_length(code_name)?;
    let f = |p: T| analytic_success(code_name, p).map(|s| s - (T::one() - p));
    let (mut lo, mut hi) = (T::c(BISECTION_LOW), T::c(BISECTION_HIGH));
    let (f_lo, f_hi) = (f(lo)?, f(hi)?);
    // The bit-flip curve touches zero exactly at the upper end of the bracket.
    if f_hi == T::zero() {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Domain(format!("no sign change for '{code_name}' on the bisection bracket")));
    }
    let lo_sign = f_lo.signum();
    while hi - lo > T::c(BISECTION_TOLERANCE) {
        let mid = (lo + hi) / T::c(2.0);
        let v = f(mid)?;
        if v == T::zero() {
            return Ok(mid);
        }
        if v.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / T::c(2.0))
}

/// `min(1, (C p)^(2^k) / C)`.
pub fn concat_failure<T: Real>(p: T, c: T, k: u32) -> Result<T> {
    check_probability(p)?;
    if c.is_nan() || c <= T::zero() {
        return Err(Error::Domain(format!("circuit constant {c} must be positive")));
    }
    if k >= 31 {
        return Err(Error::Domain(format!("concatenation level {k} too large")));
    }
    let cp = c * p;
    let scaled = if k == 0 { cp } else { cp.powi(1 << k) };
    Ok((scaled / c).min(T::one()))
}

/// `1 - e^(-pN)`, the uncorrected failure estimate for `N` locations.
pub fn unencoded_failure<T: Real>(p: T, locations: u64) -> Result<T> {
    check_probability(p)?;
    Ok(T::one() - (-p * T::c(locations as f64)).exp())
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialStats<T: Real> {
    pub code: String,
    pub channel: String,
    pub p: T,
    pub trials: u64,
    pub failures: u64,
    pub rate: T,
    pub std_error: T,
    pub seed: u64,
}

impl<T: Real> TrialStats<T> {
    fn new(code: String, channel: String, p: T, trials: u64, failures: u64, seed: u64) -> Self {
        let n = T::c(trials as f64);
        let rate = T::c(failures as f64) / n;
        let std_error = (rate * (T::one() - rate) / n).sqrt();
        Self { code, channel, p, trials, failures, rate, std_error, seed }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.code, self.channel, self.p, self.trials, self.failures, self.rate, self.std_error, self.seed
        )
    }
}

/// Generator for trial `index` of a run seeded with `seed`.
///
/// Every trial owns a separate ChaCha stream, so the total is independent of
/// how trials are scheduled across threads.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn code_label(code: &StabilizerCode) -> String {
    code.name().unwrap_or("custom").to_string()
}

pub fn run_monte_carlo<T: Real>(
    code: &StabilizerCode,
    channel: &NoiseChannel<T>,
    trials: u64,
    seed: u64,
) -> Result<TrialStats<T>> {
    let table = build_table(code, channel.kind())?;
    run_monte_carlo_with_table(code, &table, channel, trials, seed)
}

/// Monte Carlo with a prebuilt table. Each trial samples an error, decodes
/// its syndrome and classifies the residual; uncorrectable syndromes and
/// logical failures both count as failures.
pub fn run_monte_carlo_with_table<T: Real>(
    code: &StabilizerCode,
    table: &SyndromeTable,
    channel: &NoiseChannel<T>,
    trials: u64,
    seed: u64,
) -> Result<TrialStats<T>> {
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    if table.num_qubits() != code.n() || table.syndrome_len() != code.r() {
        return Err(Error::Validation("syndrome table does not belong to this code".into()));
    }
    let n = code.n();
    let failures = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<u64> {
            let mut rng = trial_rng(seed, t);
            let e = sample_error(channel, n, &mut rng);
            let decoded = table.decode(&code.syndrome_unchecked(&e))?;
            if decoded.uncorrectable {
                return Ok(1);
            }
            let residual = decoded.correction.mul_unchecked(&e);
            Ok((classify_residual(code, &residual)? != Outcome::Success) as u64)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(TrialStats::new(code_label(code), channel.kind().to_string(), channel.p(), trials, failures, seed))
}

/// One Monte Carlo run per probability, all sharing `seed`.
pub fn sweep<T: Real>(
    code: &StabilizerCode,
    kind: crate::noise::ChannelKind,
    ps: &[T],
    trials: u64,
    seed: u64,
) -> Result<Vec<TrialStats<T>>> {
    let table = build_table(code, kind)?;
    ps.iter().map(|&p| run_monte_carlo_with_table(code, &table, &NoiseChannel::new(kind, p)?, trials, seed)).collect()
}

pub fn write_csv<T: Real, W: Write>(out: &mut W, rows: &[TrialStats<T>]) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noise::ChannelKind;
    use crate::stabilizer::catalog;

    #[test]
    fn analytic_examples() {
        assert_eq!(analytic_success("bit_flip", 0.0f64).unwrap(), 1.0);
        assert!((analytic_success("bit_flip", 0.1f64).unwrap() - 0.972).abs() < 1e-12);
        assert!((1.0 - analytic_success("phase_flip", 0.1f64).unwrap() - 0.028).abs() < 1e-12);
        assert!(analytic_success("five_qubit", 0.1f64).is_err());
        assert!(analytic_success("bit_flip", 1.5f64).is_err());
    }

    #[test]
    fn thresholds() {
        assert!((pseudothreshold::<f64>("bit_flip").unwrap() - 0.5).abs() < 1e-6);
        assert!((pseudothreshold::<f64>("phase_flip").unwrap() - 0.5).abs() < 1e-6);
        let shor = pseudothreshold::<f64>("shor9").unwrap();
        let steane = pseudothreshold::<f64>("steane7").unwrap();
        assert!((shor - 0.03231023609879886).abs() < 1e-6, "{shor}");
        assert!((steane - 0.057850265713654994).abs() < 1e-6, "{steane}");
        for (name, p) in [("shor9", shor), ("steane7", steane)] {
            assert!((analytic_success(name, p).unwrap() - (1.0 - p)).abs() < 1e-6);
        }
        assert!(pseudothreshold::<f64>("five_qubit").is_err());
        let f32_steane = pseudothreshold::<f32>("steane7").unwrap();
        assert!((f32_steane as f64 - 0.0579).abs() < 5e-4);
    }

    #[test]
    fn concat_examples() {
        assert_eq!(concat_failure(0.003f64, 100.0, 0).unwrap(), 0.003);
        for k in 0..5 {
            assert!((concat_failure(0.01f64, 100.0, k).unwrap() - 0.01).abs() < 1e-15);
        }
        assert!((concat_failure(1e-3f64, 100.0, 2).unwrap() - 1e-6).abs() < 1e-18);
        assert_eq!(concat_failure(0.5f64, 100.0, 3).unwrap(), 1.0);
        assert!(concat_failure(0.1f64, 0.0, 1).is_err());
    }

    #[test]
    fn unencoded_estimate() {
        assert_eq!(unencoded_failure(0.0f64, 100).unwrap(), 0.0);
        assert!((unencoded_failure(1e-3f64, 1000).unwrap() - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
    }

    #[test]
    fn zero_noise_never_fails() {
        for name in crate::stabilizer::CATALOG_NAMES {
            let code = catalog(name).unwrap();
            for kind in ChannelKind::ALL {
                let stats = run_monte_carlo(&code, &NoiseChannel::new(kind, 0.0f64).unwrap(), 200, 1).unwrap();
                assert_eq!(stats.failures, 0);
            }
        }
    }

    #[test]
    fn determinism_and_csv() {
        let code = catalog("bit_flip").unwrap();
        let ch = NoiseChannel::new(ChannelKind::BitFlip, 0.1f64).unwrap();
        let a = run_monte_carlo(&code, &ch, 5000, 42).unwrap();
        let b = run_monte_carlo(&code, &ch, 5000, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.csv_row().starts_with("bit_flip,bit_flip,0.1,5000,"));
        let mut buf = Vec::new();
        write_csv(&mut buf, &[a]).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with(CSV_HEADER));
        assert!(run_monte_carlo(&code, &ch, 0, 42).is_err());
    }

    #[test]
    fn bit_flip_rate_matches_formula() {
        let code = catalog("bit_flip").unwrap();
        let ch = NoiseChannel::new(ChannelKind::BitFlip, 0.1f64).unwrap();
        let s = run_monte_carlo(&code, &ch, 100_000, 7).unwrap();
        assert!((s.rate - 0.028).abs() <= 3.0 * s.std_error, "{s:?}");
    }
}
