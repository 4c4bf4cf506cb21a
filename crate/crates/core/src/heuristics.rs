//! The search algorithms: single-trajectory (1+1)-type heuristics, the
//! (1,λ) EA, and the mutation-based simple GA, each as a one-step
//! transition plus a shared run loop.
//!
//! Hitting is defined on *sampling*: the run loop records the first
//! iteration in which the target is generated as initial point, parent,
//! or any offspring / population member, even if selection rejects it.

use rand::Rng;
use serde::Serialize;

use crate::benchmarks::{optimum, BenchmarkSpec};
use crate::bitstring::BitString;
use crate::noise::{noisy_eval, EvalRole, NoiseSpec};
use crate::rng::RngStream;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Serialize)]
pub enum TemperatureSchedule {
    /// T(t) = t0 · ratio^t with 0 < ratio < 1.
    Geometric { t0: f64, ratio: f64 },
    /// T(t) = c / ln(t + 2).
    Logarithmic { c: f64 },
}

impl TemperatureSchedule {
    pub fn at(&self, t: u64) -> f64 {
        match *self {
            TemperatureSchedule::Geometric { t0, ratio } => t0 * ratio.powf(t as f64),
            TemperatureSchedule::Logarithmic { c } => c / ((t + 2) as f64).ln(),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub enum AlgorithmKind {
    Rls,
    Metropolis { temperature: f64 },
    SimulatedAnnealing { schedule: TemperatureSchedule },
    OnePlusOneEa,
    FastOnePlusOneEa { beta: f64 },
    FpOnePlusOneEa,
    OneCommaLambdaEa { lambda: usize },
    SimpleGa { mu: usize },
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct AlgorithmSpec {
    pub kind: AlgorithmKind,
    /// Standard-bit-mutation rate; defaults to 1/n when absent.
    pub mutation_rate: Option<f64>,
}

impl AlgorithmSpec {
    pub fn new(kind: AlgorithmKind) -> Self {
        AlgorithmSpec {
            kind,
            mutation_rate: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.kind {
            AlgorithmKind::Metropolis { temperature } => {
                if temperature <= 0.0 {
                    return Err(Error::InvalidAlgorithm("temperature must be > 0".into()));
                }
            }
            AlgorithmKind::SimulatedAnnealing { schedule } => match schedule {
                TemperatureSchedule::Geometric { t0, ratio } => {
                    if t0 <= 0.0 || !(0.0..1.0).contains(&ratio) || ratio <= 0.0 {
                        return Err(Error::InvalidAlgorithm(
                            "geometric schedule needs t0 > 0 and 0 < ratio < 1".into(),
                        ));
                    }
                }
                TemperatureSchedule::Logarithmic { c } => {
                    if c <= 0.0 {
                        return Err(Error::InvalidAlgorithm(
                            "logarithmic schedule needs c > 0".into(),
                        ));
                    }
                }
            },
            AlgorithmKind::FastOnePlusOneEa { beta } => {
                if beta <= 1.0 {
                    return Err(Error::InvalidAlgorithm("beta must be > 1".into()));
                }
            }
            AlgorithmKind::OneCommaLambdaEa { lambda } => {
                if lambda < 1 {
                    return Err(Error::InvalidAlgorithm("lambda must be >= 1".into()));
                }
            }
            AlgorithmKind::SimpleGa { mu } => {
                if mu < 1 {
                    return Err(Error::InvalidAlgorithm("mu must be >= 1".into()));
                }
            }
            AlgorithmKind::Rls | AlgorithmKind::OnePlusOneEa | AlgorithmKind::FpOnePlusOneEa => {}
        }
        if let Some(rate) = self.mutation_rate {
            if !(rate > 0.0 && rate <= 1.0) {
                return Err(Error::InvalidAlgorithm("mutation rate must be in (0,1]".into()));
            }
        }
        Ok(())
    }

    pub fn rate_for(&self, n: usize) -> f64 {
        self.mutation_rate.unwrap_or(1.0 / n as f64)
    }
}

#[derive(Clone, Debug)]
pub struct TrajectoryState {
    pub current: BitString,
    pub iteration: u64,
}

#[derive(Clone, Debug)]
pub struct PopulationState {
    pub members: Vec<BitString>,
    pub iteration: u64,
}

/// What one step produced: evaluation count and whether any generated
/// offspring equals `target`.
#[derive(Clone, Copy, Debug, Default)]
pub struct StepReport {
    pub evaluations: u64,
    pub target_sampled: bool,
}

/// Flip each bit independently with probability `rate`.
pub fn standard_bit_mutation(
    x: &BitString,
    rate: f64,
    rng: &mut RngStream,
) -> Result<BitString> {
    if !(rate > 0.0 && rate <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "mutation rate {rate} not in (0,1]"
        )));
    }
    let mut y = x.clone();
    if rate >= 1.0 {
        return Ok(y.complement());
    }
    for i in 0..x.len() {
        if rng.random_bool(rate) {
            y.flip(i);
        }
    }
    Ok(y)
}

/// Draw the fast-mutation strength α ∈ [1..max(1, ⌊n/2⌋)] from the
/// power law Pr[α = k] ∝ k^(-β).
pub fn sample_fast_mutation_strength(n: usize, beta: f64, rng: &mut RngStream) -> Result<usize> {
    if beta <= 1.0 {
        return Err(Error::InvalidParameter("beta must be > 1".into()));
    }
    if n < 1 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    let max_alpha = (n / 2).max(1);
    if max_alpha == 1 {
        return Ok(1);
    }
    let weights: Vec<f64> = (1..=max_alpha).map(|k| (k as f64).powf(-beta)).collect();
    let total: f64 = weights.iter().sum();
    let mut u = rng.random::<f64>() * total;
    for (k, w) in weights.iter().enumerate() {
        u -= w;
        if u <= 0.0 {
            return Ok(k + 1);
        }
    }
    Ok(max_alpha)
}

/// Fitness-proportionate index selection with uniform fallback when all
/// values are zero.
pub fn fp_select(values: &[f64], rng: &mut RngStream) -> Result<usize> {
    if values.is_empty() {
        return Err(Error::InvalidParameter("empty selection pool".into()));
    }
    if values.iter().any(|&v| v < 0.0) {
        return Err(Error::InvalidParameter(
            "negative fitness in fitness-proportionate selection".into(),
        ));
    }
    let total: f64 = values.iter().sum();
    if total == 0.0 {
        return Ok(rng.random_range(0..values.len()));
    }
    let mut u = rng.random::<f64>() * total;
    for (i, &v) in values.iter().enumerate() {
        u -= v;
        if u <= 0.0 {
            return Ok(i);
        }
    }
    Ok(values.len() - 1)
}

fn generate_offspring(
    alg: &AlgorithmSpec,
    parent: &BitString,
    rng: &mut RngStream,
) -> Result<BitString> {
    let n = parent.len();
    match alg.kind {
        AlgorithmKind::Rls
        | AlgorithmKind::Metropolis { .. }
        | AlgorithmKind::SimulatedAnnealing { .. } => {
            let mut y = parent.clone();
            y.flip(rng.random_range(0..n));
            Ok(y)
        }
        AlgorithmKind::OnePlusOneEa | AlgorithmKind::FpOnePlusOneEa => {
            standard_bit_mutation(parent, alg.rate_for(n), rng)
        }
        AlgorithmKind::FastOnePlusOneEa { beta } => {
            let alpha = sample_fast_mutation_strength(n, beta, rng)?;
            standard_bit_mutation(parent, alpha as f64 / n as f64, rng)
        }
        _ => Err(Error::InvalidAlgorithm(
            "not a (1+1)-type algorithm".into(),
        )),
    }
}

/// One iteration of a (1+1)-type algorithm. Parent and offspring each
/// get one fresh noisy evaluation; acceptance follows the kind's rule
/// applied to the noisy values.
pub fn step_single_trajectory(
    alg: &AlgorithmSpec,
    state: &mut TrajectoryState,
    spec: &BenchmarkSpec,
    noise: &NoiseSpec,
    target: &BitString,
    rng: &mut RngStream,
) -> Result<StepReport> {
    alg.validate()?;
    let t = state.iteration + 1;
    let offspring = generate_offspring(alg, &state.current, rng)?;
    let fx = noisy_eval(noise, spec, &state.current, EvalRole::Parent, t, rng)?;
    let fy = noisy_eval(noise, spec, &offspring, EvalRole::Offspring, t, rng)?;

    let accept = match alg.kind {
        AlgorithmKind::Rls | AlgorithmKind::OnePlusOneEa | AlgorithmKind::FastOnePlusOneEa { .. } => {
            fy >= fx
        }
        AlgorithmKind::Metropolis { temperature } => {
            fy >= fx || rng.random_bool((-(fx - fy) / temperature).exp().min(1.0))
        }
        AlgorithmKind::SimulatedAnnealing { schedule } => {
            let temperature = schedule.at(t);
            fy >= fx || rng.random_bool((-(fx - fy) / temperature).exp().min(1.0))
        }
        AlgorithmKind::FpOnePlusOneEa => {
            if fx < 0.0 || fy < 0.0 {
                return Err(Error::FpAcceptanceUndefined);
            }
            // fx = fy = 0 only matters when offspring = parent; either
            // outcome leaves the state unchanged.
            let total = fx + fy;
            total > 0.0 && rng.random_bool(fy / total)
        }
        _ => unreachable!(),
    };

    let report = StepReport {
        evaluations: 2,
        target_sampled: offspring == *target,
    };
    if accept {
        state.current = offspring;
    }
    state.iteration = t;
    Ok(report)
}

/// One iteration of the (1,λ) EA: λ offspring by standard bit mutation,
/// each evaluated once; a uniform choice among the offspring of maximal
/// noisy fitness becomes the new parent. The parent never survives.
pub fn step_one_comma_lambda(
    alg: &AlgorithmSpec,
    state: &mut TrajectoryState,
    spec: &BenchmarkSpec,
    noise: &NoiseSpec,
    target: &BitString,
    rng: &mut RngStream,
) -> Result<StepReport> {
    alg.validate()?;
    let lambda = match alg.kind {
        AlgorithmKind::OneCommaLambdaEa { lambda } => lambda,
        _ => return Err(Error::InvalidAlgorithm("expected (1,lambda) EA".into())),
    };
    let t = state.iteration + 1;
    let rate = alg.rate_for(state.current.len());
    let mut best: Option<(BitString, f64)> = None;
    let mut ties = 0u32;
    let mut sampled = false;
    for _ in 0..lambda {
        let y = standard_bit_mutation(&state.current, rate, rng)?;
        let fy = noisy_eval(noise, spec, &y, EvalRole::Offspring, t, rng)?;
        sampled |= y == *target;
        match &best {
            Some((_, fb)) if fy < *fb => {}
            Some((_, fb)) if fy == *fb => {
                // reservoir-style uniform tie break
                ties += 1;
                if rng.random_range(0..=ties) == 0 {
                    best = Some((y, fy));
                }
            }
            _ => {
                best = Some((y, fy));
                ties = 0;
            }
        }
    }
    state.current = best.expect("lambda >= 1").0;
    state.iteration = t;
    Ok(StepReport {
        evaluations: lambda as u64,
        target_sampled: sampled,
    })
}

/// One generation of the mutation-based simple GA: μ independent
/// (fitness-proportionate select, standard-bit-mutate) draws produce the
/// next population. Each member is evaluated once per generation and
/// those values drive all μ selections.
pub fn step_simple_ga(
    alg: &AlgorithmSpec,
    pop: &mut PopulationState,
    spec: &BenchmarkSpec,
    noise: &NoiseSpec,
    target: &BitString,
    rng: &mut RngStream,
) -> Result<StepReport> {
    alg.validate()?;
    let mu = match alg.kind {
        AlgorithmKind::SimpleGa { mu } => mu,
        _ => return Err(Error::InvalidAlgorithm("expected simple GA".into())),
    };
    debug_assert_eq!(pop.members.len(), mu);
    let t = pop.iteration + 1;
    let rate = alg.rate_for(spec.n);

    let mut fitness = Vec::with_capacity(mu);
    for m in &pop.members {
        let f = noisy_eval(noise, spec, m, EvalRole::Parent, t, rng)?;
        if f < 0.0 {
            return Err(Error::InvalidParameter(
                "simple GA requires non-negative fitness".into(),
            ));
        }
        fitness.push(f);
    }

    let mut next = Vec::with_capacity(mu);
    let mut sampled = false;
    for _ in 0..mu {
        let parent = fp_select(&fitness, rng)?;
        let child = standard_bit_mutation(&pop.members[parent], rate, rng)?;
        sampled |= child == *target;
        next.push(child);
    }
    pop.members = next;
    pop.iteration = t;
    Ok(StepReport {
        evaluations: mu as u64,
        target_sampled: sampled,
    })
}

/// Initial search point(s) for a run.
#[derive(Clone, Debug)]
pub enum InitPoint {
    Uniform,
    Fixed(BitString),
}

/// Outcome of one replicate: iterations until the target was sampled,
/// or the censoring budget.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RunOutcome {
    pub hitting_time: u64,
    pub censored: bool,
    pub budget: u64,
    pub evaluations: u64,
}

/// Run until the optimum of `spec` is sampled or `budget` iterations
/// elapse. T = 0 when the initial point (or any initial population
/// member) already is the optimum.
pub fn run_until_hit(
    alg: &AlgorithmSpec,
    spec: &BenchmarkSpec,
    noise: &NoiseSpec,
    init: &InitPoint,
    budget: u64,
    rng: &mut RngStream,
) -> Result<RunOutcome> {
    alg.validate()?;
    spec.validate()?;
    noise.validate()?;
    let target = optimum(spec)?;
    let n = spec.n;

    let draw_init = |rng: &mut RngStream| -> Result<BitString> {
        match init {
            InitPoint::Uniform => Ok(BitString::uniform(n, rng)),
            InitPoint::Fixed(x) => {
                if x.len() != n {
                    return Err(Error::DimensionMismatch);
                }
                Ok(x.clone())
            }
        }
    };

    let mut evaluations = 0u64;

    if let AlgorithmKind::SimpleGa { mu } = alg.kind {
        let members: Vec<BitString> = (0..mu)
            .map(|_| draw_init(rng))
            .collect::<Result<_>>()?;
        if members.iter().any(|m| *m == target) {
            return Ok(RunOutcome {
                hitting_time: 0,
                censored: false,
                budget,
                evaluations: 0,
            });
        }
        let mut pop = PopulationState {
            members,
            iteration: 0,
        };
        for t in 1..=budget {
            let report = step_simple_ga(alg, &mut pop, spec, noise, &target, rng)?;
            evaluations += report.evaluations;
            if report.target_sampled {
                return Ok(RunOutcome {
                    hitting_time: t,
                    censored: false,
                    budget,
                    evaluations,
                });
            }
        }
        return Ok(RunOutcome {
            hitting_time: budget,
            censored: true,
            budget,
            evaluations,
        });
    }

    let current = draw_init(rng)?;
    if current == target {
        return Ok(RunOutcome {
            hitting_time: 0,
            censored: false,
            budget,
            evaluations: 0,
        });
    }
    let mut state = TrajectoryState {
        current,
        iteration: 0,
    };
    let comma = matches!(alg.kind, AlgorithmKind::OneCommaLambdaEa { .. });
    for t in 1..=budget {
        let report = if comma {
            step_one_comma_lambda(alg, &mut state, spec, noise, &target, rng)?
        } else {
            step_single_trajectory(alg, &mut state, spec, noise, &target, rng)?
        };
        evaluations += report.evaluations;
        if report.target_sampled {
            return Ok(RunOutcome {
                hitting_time: t,
                censored: false,
                budget,
                evaluations,
            });
        }
    }
    Ok(RunOutcome {
        hitting_time: budget,
        censored: true,
        budget,
        evaluations,
    })
}
