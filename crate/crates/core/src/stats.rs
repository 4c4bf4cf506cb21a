//! Statistical machinery: geometric tails, stochastic-dominance verdicts
//! via the one-sided DKW inequality, normal-approximation confidence
//! intervals, and empirical per-level drift estimation.

use rayon::prelude::*;
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::benchmarks::{optimum, BenchmarkKind, BenchmarkSpec};
use crate::bitstring::BitString;
use crate::heuristics::{
    step_one_comma_lambda, step_single_trajectory, AlgorithmKind, AlgorithmSpec, TrajectoryState,
};
use crate::noise::NoiseSpec;
use crate::rng::derive_stream;
use crate::{Error, Result};

/// Pr[X ≥ k] = (1−p)^{k−1} for X ~ Geom(p), k ≥ 1.
pub fn geom_tail(p: f64, k: u64) -> Result<f64> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParameter(format!("p = {p} not in (0,1]")));
    }
    if k < 1 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    Ok((1.0 - p).powf((k - 1) as f64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    /// No violation found, but censored runs leave the far tail
    /// unobserved; a pass cannot be certified.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct DominanceVerdict {
    pub passed: bool,
    pub verdict: Verdict,
    /// Sample value where the empirical survival function came closest to
    /// (or furthest beyond) the bound.
    pub worst_quantile: f64,
    pub confidence: f64,
    pub band_width: f64,
}

/// Checks that the empirical distribution of `times` is stochastically
/// dominated by m·Geom(p): for every observed t,
/// Pr̂[T ≥ t] ≤ (1−p)^{⌈t/m⌉−1} + band, with the one-sided DKW band at
/// the given confidence.
///
/// Censored entries enter at their recorded (budget) value, which is
/// exact for all thresholds up to the budget; since their true times are
/// unbounded above, a violation is still a certain failure, but a pass
/// with censored data is only "inconclusive".
pub fn check_dominated_by_scaled_geom(
    times: &[u64],
    censored: &[bool],
    m: u64,
    p: f64,
    confidence: f64,
) -> Result<DominanceVerdict> {
    let n = times.len();
    if n < 100 || censored.len() != n {
        return Err(Error::InsufficientSamples);
    }
    if m < 1 {
        return Err(Error::InvalidParameter("scale m must be >= 1".into()));
    }
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(Error::InvalidParameter("confidence not in (0,1)".into()));
    }
    geom_tail(p, 1)?; // validates p

    let band_width = ((2.0 / (1.0 - confidence)).ln() / (2.0 * n as f64)).sqrt();

    let mut sorted = times.to_vec();
    sorted.sort_unstable();
    let mut worst_margin = f64::NEG_INFINITY;
    let mut worst_quantile = 0.0;
    let mut violated = false;
    let mut i = 0;
    while i < sorted.len() {
        let t = sorted[i];
        let start = i;
        while i < sorted.len() && sorted[i] == t {
            i += 1;
        }
        // all samples from this group on are >= t
        let survival = (n - start) as f64 / n as f64;
        let k = t.div_ceil(m).max(1);
        let bound = geom_tail(p, k)?;
        let margin = survival - bound;
        if margin > worst_margin {
            worst_margin = margin;
            worst_quantile = t as f64;
        }
        if margin > band_width {
            violated = true;
        }
    }

    let verdict = if violated {
        Verdict::Fail
    } else if censored.iter().any(|&c| c) {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    Ok(DominanceVerdict {
        passed: verdict == Verdict::Pass,
        verdict,
        worst_quantile,
        confidence,
        band_width,
    })
}

/// Normal-approximation confidence interval: (mean, z·s/√N).
pub fn mean_ci(samples: &[f64], confidence: f64) -> Result<(f64, f64)> {
    if samples.len() < 2 {
        return Err(Error::InsufficientSamples);
    }
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(Error::InvalidParameter("confidence not in (0,1)".into()));
    }
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    let z = Normal::new(0.0, 1.0)
        .unwrap()
        .inverse_cdf(0.5 + confidence / 2.0);
    Ok((mean, z * (var / n).sqrt()))
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct LevelDrift {
    pub level: usize,
    /// Mean one-step decrease of the fitness distance; positive means
    /// progress toward the optimum.
    pub mean: f64,
    pub std_error: f64,
    pub samples: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DriftEstimate {
    pub per_level: Vec<LevelDrift>,
    /// Reference threshold 2e²n^ε/λ for the (1,λ) EA, when the drift
    /// exponent ε is supplied.
    pub d0: Option<f64>,
}

/// Empirical one-step drift of the fitness distance at the requested
/// OneMax levels. Parents are prepared directly at each level (any string
/// with the right ones-count; the dynamics are symmetric). Levels run in
/// parallel on independent streams.
pub fn estimate_drift(
    alg: &AlgorithmSpec,
    spec: &BenchmarkSpec,
    noise: &NoiseSpec,
    levels: &[usize],
    samples_per_level: usize,
    epsilon: Option<f64>,
    master_seed: u64,
) -> Result<DriftEstimate> {
    alg.validate()?;
    spec.validate()?;
    noise.validate()?;
    if !matches!(spec.kind, BenchmarkKind::OneMax) {
        return Err(Error::Unsupported(
            "drift estimation prepares states by ones-count and needs OneMax".into(),
        ));
    }
    if samples_per_level < 2 {
        return Err(Error::InsufficientSamples);
    }
    let n = spec.n;
    if let Some(&d) = levels.iter().find(|&&d| d > n) {
        return Err(Error::UnpreparableLevel(d));
    }
    let target = optimum(spec)?;

    let per_level: Vec<LevelDrift> = levels
        .par_iter()
        .enumerate()
        .map(|(idx, &d)| -> Result<LevelDrift> {
            let mut rng = derive_stream(master_seed, idx as u64);
            let mut parent = BitString::zeros(n);
            for i in 0..n - d {
                parent.set(i, true);
            }
            let mut changes = Vec::with_capacity(samples_per_level);
            for _ in 0..samples_per_level {
                let mut state = TrajectoryState {
                    current: parent.clone(),
                    iteration: 0,
                };
                match alg.kind {
                    AlgorithmKind::OneCommaLambdaEa { .. } => {
                        step_one_comma_lambda(alg, &mut state, spec, noise, &target, &mut rng)?;
                    }
                    AlgorithmKind::SimpleGa { .. } => {
                        return Err(Error::Unsupported(
                            "no single-trajectory drift for the simple GA".into(),
                        ))
                    }
                    _ => {
                        step_single_trajectory(alg, &mut state, spec, noise, &target, &mut rng)?;
                    }
                }
                let d_next = n - state.current.ones_count();
                changes.push(d as f64 - d_next as f64);
            }
            let (mean, _) = mean_ci(&changes, 0.95)?;
            let var = changes
                .iter()
                .map(|x| (x - mean) * (x - mean))
                .sum::<f64>()
                / (changes.len() - 1) as f64;
            Ok(LevelDrift {
                level: d,
                mean,
                std_error: (var / changes.len() as f64).sqrt(),
                samples: changes.len(),
            })
        })
        .collect::<Result<_>>()?;

    let d0 = match (alg.kind, epsilon) {
        (AlgorithmKind::OneCommaLambdaEa { lambda }, Some(eps)) => {
            Some(2.0 * std::f64::consts::E.powi(2) * (n as f64).powf(eps) / lambda as f64)
        }
        _ => None,
    };
    Ok(DriftEstimate { per_level, d0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::exact_level_drift;
    use rand::Rng;
    use crate::rng::RngStream;

    fn geom_sample(p: f64, rng: &mut RngStream) -> u64 {
        let u: f64 = rng.random();
        ((u.ln() / (1.0 - p).ln()).floor() as u64) + 1
    }

    #[test]
    fn geom_tail_values() {
        assert_eq!(geom_tail(0.3, 1).unwrap(), 1.0);
        assert_eq!(geom_tail(1.0, 2).unwrap(), 0.0);
        assert!((geom_tail(0.5, 3).unwrap() - 0.25).abs() < 1e-12);
        assert!(geom_tail(0.0, 1).is_err());
        assert!(geom_tail(0.5, 0).is_err());
    }

    #[test]
    fn geom_tail_monotone() {
        for k in 1..20u64 {
            assert!(geom_tail(0.3, k).unwrap() >= geom_tail(0.3, k + 1).unwrap());
        }
        for i in 1..10 {
            let p1 = i as f64 / 10.0;
            let p2 = (i + 1) as f64 / 10.0;
            assert!(geom_tail(p1, 5).unwrap() >= geom_tail(p2, 5).unwrap());
        }
    }

    #[test]
    fn dominance_self_passes() {
        let mut rng = derive_stream(11, 0);
        let m = 3u64;
        let p = 0.2;
        let times: Vec<u64> = (0..10_000).map(|_| m * geom_sample(p, &mut rng)).collect();
        let censored = vec![false; times.len()];
        let v = check_dominated_by_scaled_geom(&times, &censored, m, p, 0.99).unwrap();
        assert_eq!(v.verdict, Verdict::Pass);
        assert!(v.passed);
        let want = ((2.0f64 / 0.01).ln() / 20_000.0).sqrt();
        assert!((v.band_width - want).abs() < 1e-12);
    }

    #[test]
    fn dominance_detects_doubled_scale() {
        let mut rng = derive_stream(11, 1);
        let times: Vec<u64> = (0..10_000).map(|_| 2 * geom_sample(0.5, &mut rng)).collect();
        let censored = vec![false; times.len()];
        let v = check_dominated_by_scaled_geom(&times, &censored, 1, 0.5, 0.99).unwrap();
        assert_eq!(v.verdict, Verdict::Fail);
        assert!(!v.passed);
    }

    #[test]
    fn dominance_degenerate_zero_samples() {
        let times = vec![0u64; 200];
        let censored = vec![false; 200];
        let v = check_dominated_by_scaled_geom(&times, &censored, 5, 0.01, 0.99).unwrap();
        assert_eq!(v.verdict, Verdict::Pass);
    }

    #[test]
    fn dominance_censoring_is_inconclusive_not_pass() {
        let mut rng = derive_stream(11, 2);
        let mut times: Vec<u64> = (0..9_900).map(|_| geom_sample(0.5, &mut rng)).collect();
        let mut censored = vec![false; times.len()];
        times.extend(std::iter::repeat(50).take(100));
        censored.extend(std::iter::repeat(true).take(100));
        let v = check_dominated_by_scaled_geom(&times, &censored, 4, 0.5, 0.99).unwrap();
        assert_eq!(v.verdict, Verdict::Inconclusive);
        assert!(!v.passed);
    }

    #[test]
    fn dominance_violation_beats_censoring() {
        // An observed violation is a certain failure even with censoring.
        let mut times = vec![4u64; 5_000];
        times.extend(vec![1u64; 5_000]);
        let mut censored = vec![false; 10_000];
        censored[0] = true;
        let v = check_dominated_by_scaled_geom(&times, &censored, 1, 0.5, 0.99).unwrap();
        assert_eq!(v.verdict, Verdict::Fail);
    }

    #[test]
    fn dominance_rejects_bad_input() {
        let times = vec![1u64; 50];
        let censored = vec![false; 50];
        assert!(check_dominated_by_scaled_geom(&times, &censored, 1, 0.5, 0.99).is_err());
        let times = vec![1u64; 200];
        let censored = vec![false; 200];
        assert!(check_dominated_by_scaled_geom(&times, &censored, 1, 0.0, 0.99).is_err());
    }

    #[test]
    fn dkw_soundness_meta_trials() {
        // On true m·Geom(p) data the check must pass in at least the
        // confidence fraction of independent trials (DKW is conservative,
        // so in practice essentially always).
        let m = 2u64;
        let p = 0.3;
        let mut passes = 0;
        for trial in 0..100u64 {
            let mut rng = derive_stream(12, trial);
            let times: Vec<u64> = (0..500).map(|_| m * geom_sample(p, &mut rng)).collect();
            let censored = vec![false; times.len()];
            let v = check_dominated_by_scaled_geom(&times, &censored, m, p, 0.99).unwrap();
            if v.passed {
                passes += 1;
            }
        }
        assert!(passes >= 99, "only {passes}/100 meta-trials passed");
    }

    #[test]
    fn mean_ci_basics() {
        let (mean, hw) = mean_ci(&[3.0, 3.0, 3.0, 3.0], 0.95).unwrap();
        assert_eq!(mean, 3.0);
        assert_eq!(hw, 0.0);
        let (mean, _) = mean_ci(&[0.0, 2.0], 0.95).unwrap();
        assert_eq!(mean, 1.0);
        assert!(mean_ci(&[1.0], 0.95).is_err());
    }

    #[test]
    fn mean_ci_covers_geometric_mean() {
        // E[Geom(0.5)] = 2; with 10^5 draws the 99% CI should cover it.
        let mut rng = derive_stream(13, 0);
        let samples: Vec<f64> = (0..100_000)
            .map(|_| geom_sample(0.5, &mut rng) as f64)
            .collect();
        let (mean, hw) = mean_ci(&samples, 0.99).unwrap();
        assert!((mean - 2.0).abs() < hw, "mean {mean} ± {hw}");
    }

    #[test]
    fn drift_rls_matches_exact() {
        let alg = AlgorithmSpec::new(AlgorithmKind::Rls);
        let spec = BenchmarkSpec::one_max(10);
        let est = estimate_drift(&alg, &spec, &NoiseSpec::None, &[5], 20_000, None, 14).unwrap();
        let d5 = &est.per_level[0];
        assert!((d5.mean - 0.5).abs() < 3.0 * d5.std_error, "{:?}", d5);
        assert!(est.d0.is_none());
    }

    #[test]
    fn drift_agrees_with_oracle_at_all_levels() {
        let spec = BenchmarkSpec::one_max(10);
        let levels: Vec<usize> = (1..=10).collect();
        for alg in [
            AlgorithmSpec::new(AlgorithmKind::Rls),
            AlgorithmSpec::new(AlgorithmKind::OnePlusOneEa),
        ] {
            let est =
                estimate_drift(&alg, &spec, &NoiseSpec::None, &levels, 20_000, None, 15).unwrap();
            for ld in &est.per_level {
                let exact = exact_level_drift(&alg, &NoiseSpec::None, 10, ld.level).unwrap();
                assert!(
                    (ld.mean - exact).abs() < 3.0 * ld.std_error.max(1e-4),
                    "{:?} level {}: {} vs {exact}",
                    alg.kind,
                    ld.level,
                    ld.mean
                );
            }
        }
    }

    #[test]
    fn comma_drift_signs_and_d0() {
        let alg = AlgorithmSpec::new(AlgorithmKind::OneCommaLambdaEa { lambda: 5 });
        let spec = BenchmarkSpec::one_max(30);
        let est = estimate_drift(
            &alg,
            &spec,
            &NoiseSpec::None,
            &[1, 15],
            20_000,
            Some(0.5),
            16,
        )
        .unwrap();
        for ld in &est.per_level {
            let exact = exact_level_drift(&alg, &NoiseSpec::None, 30, ld.level).unwrap();
            assert!(
                (ld.mean - exact).abs() < 3.0 * ld.std_error,
                "level {}: {} vs {exact}",
                ld.level,
                ld.mean
            );
        }
        assert!(est.per_level[0].mean < 0.0);
        assert!(est.per_level[1].mean > 0.0);
        let want = 2.0 * std::f64::consts::E.powi(2) * 30f64.sqrt() / 5.0;
        assert!((est.d0.unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn drift_rejects_bad_requests() {
        let alg = AlgorithmSpec::new(AlgorithmKind::Rls);
        assert!(matches!(
            estimate_drift(
                &alg,
                &BenchmarkSpec::one_max(8),
                &NoiseSpec::None,
                &[9],
                100,
                None,
                0
            ),
            Err(Error::UnpreparableLevel(9))
        ));
        assert!(estimate_drift(
            &alg,
            &BenchmarkSpec::leading_ones(8),
            &NoiseSpec::None,
            &[2],
            100,
            None,
            0
        )
        .is_err());
    }
}
