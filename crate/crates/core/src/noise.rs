//! Noise models wrapping a benchmark function.
//!
//! Every call to [`noisy_eval`] uses fresh independent randomness; no
//! state is carried between evaluations. Whenever an algorithm compares
//! parent and offspring, both get a fresh noisy evaluation.

use rand::Rng;
use rand_distr::{Cauchy, Distribution, Normal, Uniform};
use serde::Serialize;

use crate::benchmarks::{eval_benchmark, BenchmarkSpec};
use crate::bitstring::BitString;
use crate::rng::RngStream;
use crate::{Error, Result};

/// Fitness surrogates the anti-improvement adversary returns. Half the
/// largest finite value keeps Metropolis' exponential finite.
pub const F_MAX_SURROGATE: f64 = f64::MAX / 2.0;
pub const F_MIN_SURROGATE: f64 = -f64::MAX / 2.0;

/// Whose evaluation this is within one iteration. Only the adversarial
/// model consults it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EvalRole {
    Parent,
    Offspring,
}

/// Additive posterior noise distribution.
#[derive(Clone, Copy, Debug, Serialize)]
pub enum AdditiveDist {
    Gaussian { mean: f64, stddev: f64 },
    Cauchy { location: f64, scale: f64 },
    Constant { value: f64 },
    Uniform { low: f64, high: f64 },
}

impl AdditiveDist {
    pub fn sample(&self, rng: &mut RngStream) -> f64 {
        match *self {
            AdditiveDist::Gaussian { mean, stddev } => {
                Normal::new(mean, stddev).unwrap().sample(rng)
            }
            AdditiveDist::Cauchy { location, scale } => {
                Cauchy::new(location, scale).unwrap().sample(rng)
            }
            AdditiveDist::Constant { value } => value,
            AdditiveDist::Uniform { low, high } => {
                Uniform::new(low, high).unwrap().sample(rng)
            }
        }
    }
}

/// Deterministic adversary policy. It sees only the evaluated point, its
/// true fitness, the evaluation role, and the iteration index — not the
/// full process history.
#[derive(Clone, Copy, Debug, Serialize)]
pub enum AdversaryPolicy {
    /// Always return the given value when triggered.
    Constant { value: f64 },
    /// Return the maximum surrogate for the parent and the minimum for
    /// the offspring, the worst case for elitist acceptance.
    AntiImprovement,
}

impl AdversaryPolicy {
    pub fn decide(&self, _x: &BitString, _true_fitness: f64, role: EvalRole, _iteration: u64) -> f64 {
        match *self {
            AdversaryPolicy::Constant { value } => value,
            AdversaryPolicy::AntiImprovement => match role {
                EvalRole::Parent => F_MAX_SURROGATE,
                EvalRole::Offspring => F_MIN_SURROGATE,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub enum NoiseSpec {
    None,
    /// With probability p the fitness of a random Hamming neighbor is
    /// returned.
    OneBit { p: f64 },
    /// Each bit of the evaluated point flipped independently with
    /// probability q before evaluation.
    BitWise { q: f64 },
    /// With probability p, bit-wise noise at rate q; otherwise exact.
    PQNoise { p: f64, q: f64 },
    /// True fitness plus an independent sample of the distribution.
    AdditivePosterior { dist: AdditiveDist },
    /// With probability p the adversary decides the returned value.
    Adversarial { p: f64, policy: AdversaryPolicy },
}

impl NoiseSpec {
    pub fn validate(&self) -> Result<()> {
        let check = |v: f64, name: &str| {
            if (0.0..=1.0).contains(&v) {
                Ok(())
            } else {
                Err(Error::InvalidNoise(format!("{name} = {v} not in [0,1]")))
            }
        };
        match *self {
            NoiseSpec::None | NoiseSpec::AdditivePosterior { .. } => Ok(()),
            NoiseSpec::OneBit { p } | NoiseSpec::Adversarial { p, .. } => check(p, "p"),
            NoiseSpec::BitWise { q } => check(q, "q"),
            NoiseSpec::PQNoise { p, q } => check(p, "p").and(check(q, "q")),
        }
    }

    /// The effective probability ε that an evaluation returns the true
    /// fitness. Not defined for additive posterior noise.
    pub fn no_noise_probability(&self, n: usize) -> Option<f64> {
        match *self {
            NoiseSpec::None => Some(1.0),
            NoiseSpec::OneBit { p } | NoiseSpec::Adversarial { p, .. } => Some(1.0 - p),
            NoiseSpec::BitWise { q } => Some((1.0 - q).powi(n as i32)),
            NoiseSpec::PQNoise { p, q } => Some(1.0 - p * (1.0 - (1.0 - q).powi(n as i32))),
            NoiseSpec::AdditivePosterior { .. } => None,
        }
    }
}

/// One fresh sample of the noisy fitness f̃(x).
pub fn noisy_eval(
    noise: &NoiseSpec,
    spec: &BenchmarkSpec,
    x: &BitString,
    role: EvalRole,
    iteration: u64,
    rng: &mut RngStream,
) -> Result<f64> {
    noise.validate()?;
    match *noise {
        NoiseSpec::None => eval_benchmark(spec, x),
        NoiseSpec::OneBit { p } => {
            if p > 0.0 && rng.random_bool(p) {
                let mut y = x.clone();
                y.flip(rng.random_range(0..x.len()));
                eval_benchmark(spec, &y)
            } else {
                eval_benchmark(spec, x)
            }
        }
        NoiseSpec::BitWise { q } => eval_benchmark(spec, &bitwise_disturb(x, q, rng)),
        NoiseSpec::PQNoise { p, q } => {
            if p > 0.0 && rng.random_bool(p) {
                eval_benchmark(spec, &bitwise_disturb(x, q, rng))
            } else {
                eval_benchmark(spec, x)
            }
        }
        NoiseSpec::AdditivePosterior { dist } => {
            Ok(eval_benchmark(spec, x)? + dist.sample(rng))
        }
        NoiseSpec::Adversarial { p, policy } => {
            let f = eval_benchmark(spec, x)?;
            if p > 0.0 && rng.random_bool(p) {
                Ok(policy.decide(x, f, role, iteration))
            } else {
                Ok(f)
            }
        }
    }
}

fn bitwise_disturb(x: &BitString, q: f64, rng: &mut RngStream) -> BitString {
    let mut y = x.clone();
    if q >= 1.0 {
        return y.complement();
    }
    if q <= 0.0 {
        return y;
    }
    for i in 0..x.len() {
        if rng.random_bool(q) {
            y.flip(i);
        }
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::derive_stream;

    #[test]
    fn disabled_noise_is_exact() {
        let spec = BenchmarkSpec::one_max(8);
        let mut rng = derive_stream(3, 0);
        for v in 0u64..256 {
            let x = BitString::from_index(8, v);
            let f = eval_benchmark(&spec, &x).unwrap();
            for noise in [
                NoiseSpec::OneBit { p: 0.0 },
                NoiseSpec::PQNoise { p: 0.0, q: 0.5 },
                NoiseSpec::AdditivePosterior {
                    dist: AdditiveDist::Constant { value: 0.0 },
                },
                NoiseSpec::Adversarial {
                    p: 0.0,
                    policy: AdversaryPolicy::AntiImprovement,
                },
            ] {
                assert_eq!(
                    noisy_eval(&noise, &spec, &x, EvalRole::Parent, 0, &mut rng).unwrap(),
                    f
                );
            }
        }
    }

    #[test]
    fn bitwise_q1_is_complement() {
        let spec = BenchmarkSpec::one_max(10);
        let noise = NoiseSpec::BitWise { q: 1.0 };
        let mut rng = derive_stream(3, 1);
        let x = BitString::parse("1110001010").unwrap();
        for _ in 0..100 {
            let f = noisy_eval(&noise, &spec, &x, EvalRole::Parent, 0, &mut rng).unwrap();
            assert_eq!(f, (10 - x.ones_count()) as f64);
        }
    }

    #[test]
    fn onebit_p1_on_n2_all_ones() {
        // Both Hamming neighbors of 11 have fitness 1.
        let spec = BenchmarkSpec::one_max(2);
        let noise = NoiseSpec::OneBit { p: 1.0 };
        let mut rng = derive_stream(3, 2);
        let x = BitString::ones(2);
        for _ in 0..200 {
            let f = noisy_eval(&noise, &spec, &x, EvalRole::Parent, 0, &mut rng).unwrap();
            assert_eq!(f, 1.0);
        }
    }

    #[test]
    fn adversary_roles() {
        let spec = BenchmarkSpec::one_max(4);
        let noise = NoiseSpec::Adversarial {
            p: 1.0,
            policy: AdversaryPolicy::AntiImprovement,
        };
        let mut rng = derive_stream(3, 3);
        let x = BitString::parse("1010").unwrap();
        assert_eq!(
            noisy_eval(&noise, &spec, &x, EvalRole::Parent, 5, &mut rng).unwrap(),
            F_MAX_SURROGATE
        );
        assert_eq!(
            noisy_eval(&noise, &spec, &x, EvalRole::Offspring, 5, &mut rng).unwrap(),
            F_MIN_SURROGATE
        );
    }

    #[test]
    fn bitwise_expectation_identity() {
        // E[f̃(x)] = (1-q)·|x| + q·(n-|x|) on OneMax.
        let n = 12usize;
        let q = 0.3;
        let spec = BenchmarkSpec::one_max(n);
        let noise = NoiseSpec::BitWise { q };
        let mut rng = derive_stream(3, 4);
        let x = BitString::parse("111111110000").unwrap();
        let om = x.ones_count() as f64;
        let samples = 100_000usize;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in 0..samples {
            let f = noisy_eval(&noise, &spec, &x, EvalRole::Parent, 0, &mut rng).unwrap();
            sum += f;
            sumsq += f * f;
        }
        let mean = sum / samples as f64;
        let var = sumsq / samples as f64 - mean * mean;
        let se = (var / samples as f64).sqrt();
        let expected = (1.0 - q) * om + q * (n as f64 - om);
        assert!((mean - expected).abs() < 3.0 * se, "mean {mean} vs {expected}");
    }

    #[test]
    fn no_noise_probability_values() {
        let n = 4;
        assert_eq!(NoiseSpec::None.no_noise_probability(n), Some(1.0));
        assert_eq!(NoiseSpec::OneBit { p: 0.3 }.no_noise_probability(n), Some(0.7));
        let eps = NoiseSpec::BitWise { q: 0.5 }.no_noise_probability(n).unwrap();
        assert!((eps - 0.0625).abs() < 1e-12);
        let eps = NoiseSpec::PQNoise { p: 0.5, q: 0.5 }
            .no_noise_probability(n)
            .unwrap();
        assert!((eps - (1.0 - 0.5 * (1.0 - 0.0625))).abs() < 1e-12);
    }

    #[test]
    fn invalid_probability_rejected() {
        let spec = BenchmarkSpec::one_max(4);
        let mut rng = derive_stream(3, 5);
        let x = BitString::zeros(4);
        assert!(noisy_eval(
            &NoiseSpec::OneBit { p: 1.5 },
            &spec,
            &x,
            EvalRole::Parent,
            0,
            &mut rng
        )
        .is_err());
    }
}
