//! Exact small-instance oracles: transition matrices, expected hitting
//! times via linear solves, path probabilities, and the additive drift
//! bound check.
//!
//! The chains make the target absorbing *on generation*: from any state,
//! the probability mass of producing the optimum as offspring goes
//! straight to the target state, regardless of whether selection would
//! accept it. Hitting times of these chains therefore measure the first
//! iteration in which the optimum is sampled, matching the run loop.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::benchmarks::{eval_benchmark, BenchmarkSpec};
use crate::bitstring::BitString;
use crate::heuristics::{AlgorithmKind, AlgorithmSpec};
use crate::noise::NoiseSpec;
use crate::{Error, Result};

/// How the states of a [`TransitionMatrix`] are labelled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StateSpace {
    /// Fitness-distance levels d ∈ [0..n]; state index = d.
    Levels { n: usize },
    /// All 2^n bit strings; state index = the bit pattern as an integer.
    Full { n: usize },
}

#[derive(Clone, Debug)]
pub struct TransitionMatrix {
    pub states: StateSpace,
    pub probs: DMatrix<f64>,
    pub target: usize,
}

impl TransitionMatrix {
    pub fn num_states(&self) -> usize {
        self.probs.nrows()
    }

    /// Row-stochasticity check: every row sums to 1 within `tol` and all
    /// entries are non-negative.
    pub fn is_row_stochastic(&self, tol: f64) -> bool {
        for r in 0..self.probs.nrows() {
            let mut sum = 0.0;
            for c in 0..self.probs.ncols() {
                let v = self.probs[(r, c)];
                if v < 0.0 {
                    return false;
                }
                sum += v;
            }
            if (sum - 1.0).abs() > tol {
                return false;
            }
        }
        true
    }
}

/// Starting point for hitting-time queries.
#[derive(Clone, Debug)]
pub enum Start {
    State(usize),
    Distribution(Vec<f64>),
}

#[derive(Clone, Debug, Serialize)]
pub struct PathProbabilityResult {
    pub exact_prob: f64,
    pub lower_bound: f64,
    pub horizon: u64,
    pub c: f64,
}

/// A discrete fitness-value distribution, values ascending.
type ValueDist = Vec<(f64, f64)>;

fn merge_atoms(mut atoms: Vec<(f64, f64)>) -> ValueDist {
    atoms.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut out: ValueDist = Vec::with_capacity(atoms.len());
    for (v, p) in atoms {
        if p == 0.0 {
            continue;
        }
        match out.last_mut() {
            Some((lv, lp)) if *lv == v => *lp += p,
            _ => out.push((v, p)),
        }
    }
    out
}

/// Exact distribution of the noisy fitness of `x`, by enumerating all
/// noise outcomes. Supports the finite prior-noise models.
fn noisy_value_dist(
    spec: &BenchmarkSpec,
    noise: &NoiseSpec,
    x: &BitString,
) -> Result<ValueDist> {
    let n = spec.n;
    match *noise {
        NoiseSpec::None => Ok(vec![(eval_benchmark(spec, x)?, 1.0)]),
        NoiseSpec::OneBit { p } => {
            let mut atoms = vec![(eval_benchmark(spec, x)?, 1.0 - p)];
            for i in 0..n {
                let mut y = x.clone();
                y.flip(i);
                atoms.push((eval_benchmark(spec, &y)?, p / n as f64));
            }
            Ok(merge_atoms(atoms))
        }
        NoiseSpec::BitWise { q } => bitwise_dist(spec, x, q, 1.0),
        NoiseSpec::PQNoise { p, q } => {
            let mut atoms = vec![(eval_benchmark(spec, x)?, 1.0 - p)];
            atoms.extend(bitwise_dist(spec, x, q, p)?);
            Ok(merge_atoms(atoms))
        }
        NoiseSpec::AdditivePosterior { .. } | NoiseSpec::Adversarial { .. } => Err(
            Error::Unsupported("exact chains support only finite prior-noise models".into()),
        ),
    }
}

fn bitwise_dist(spec: &BenchmarkSpec, x: &BitString, q: f64, weight: f64) -> Result<ValueDist> {
    let n = spec.n;
    if n > 20 {
        return Err(Error::StateSpaceTooLarge(n));
    }
    let mut atoms = Vec::with_capacity(1 << n);
    for mask in 0u64..(1 << n) {
        let flips = mask.count_ones() as i32;
        let prob = weight * q.powi(flips) * (1.0 - q).powi(n as i32 - flips);
        if prob == 0.0 {
            continue;
        }
        let y = x.xor(&BitString::from_index(n, mask))?;
        atoms.push((eval_benchmark(spec, &y)?, prob));
    }
    Ok(merge_atoms(atoms))
}

/// Noisy fitness distribution of a OneMax distance level under None or
/// OneBit noise (by OneMax level symmetry this is exact).
fn level_value_dist(n: usize, d: usize, noise: &NoiseSpec) -> Result<ValueDist> {
    let f = (n - d) as f64;
    match *noise {
        NoiseSpec::None => Ok(vec![(f, 1.0)]),
        NoiseSpec::OneBit { p } => Ok(merge_atoms(vec![
            (f, 1.0 - p),
            (f - 1.0, p * (n - d) as f64 / n as f64),
            (f + 1.0, p * d as f64 / n as f64),
        ])),
        _ => Err(Error::LumpingInvalid(
            "lumped chains support only None or OneBit noise".into(),
        )),
    }
}

/// Acceptance rule of the (1+1)-type kinds, applied to two exact noisy
/// value distributions.
fn acceptance_probability(
    kind: &AlgorithmKind,
    dx: &ValueDist,
    dy: &ValueDist,
) -> Result<f64> {
    let mut acc = 0.0;
    for &(vx, px) in dx {
        for &(vy, py) in dy {
            let a = match *kind {
                AlgorithmKind::Rls
                | AlgorithmKind::OnePlusOneEa
                | AlgorithmKind::FastOnePlusOneEa { .. }
                | AlgorithmKind::OneCommaLambdaEa { .. } => {
                    if vy >= vx {
                        1.0
                    } else {
                        0.0
                    }
                }
                AlgorithmKind::Metropolis { temperature } => {
                    if vy >= vx {
                        1.0
                    } else {
                        (-(vx - vy) / temperature).exp()
                    }
                }
                AlgorithmKind::FpOnePlusOneEa => {
                    if vx < 0.0 || vy < 0.0 {
                        return Err(Error::FpAcceptanceUndefined);
                    }
                    let total = vx + vy;
                    if total == 0.0 {
                        // only occurs with offspring = parent; either way
                        // the next state is unchanged
                        0.5
                    } else {
                        vy / total
                    }
                }
                AlgorithmKind::SimulatedAnnealing { .. } => {
                    return Err(Error::Unsupported(
                        "time-dependent temperature has no homogeneous chain".into(),
                    ))
                }
                AlgorithmKind::SimpleGa { .. } => {
                    return Err(Error::Unsupported(
                        "no exact chain for the simple GA".into(),
                    ))
                }
            };
            acc += px * py * a;
        }
    }
    Ok(acc)
}

/// Binomial pmf row B(m, ·, r), computed iteratively.
fn binomial_pmf(m: usize, r: f64) -> Vec<f64> {
    let mut pmf = vec![0.0; m + 1];
    pmf[0] = (1.0 - r).powi(m as i32);
    for k in 1..=m {
        pmf[k] = pmf[k - 1] * ((m - k + 1) as f64 / k as f64) * (r / (1.0 - r));
    }
    pmf
}

/// Exact one-offspring level kernel of standard bit mutation on OneMax:
/// from distance d, probability of each offspring distance, by the
/// (zeros-flipped, ones-flipped) binomial product.
pub fn mutation_level_kernel(n: usize, d: usize, rate: f64) -> Vec<f64> {
    let mut kernel = vec![0.0; n + 1];
    if rate >= 1.0 {
        kernel[n - d] = 1.0;
        return kernel;
    }
    let flips_zero = binomial_pmf(d, rate);
    let flips_one = binomial_pmf(n - d, rate);
    for (i, pz) in flips_zero.iter().enumerate() {
        for (j, po) in flips_one.iter().enumerate() {
            kernel[d - i + j] += pz * po;
        }
    }
    kernel
}

/// Single-bit-flip level kernel (RLS-style proposal) on OneMax.
fn rls_level_kernel(n: usize, d: usize) -> Vec<f64> {
    let mut kernel = vec![0.0; n + 1];
    if d > 0 {
        kernel[d - 1] += d as f64 / n as f64;
    }
    if d < n {
        kernel[d + 1] += (n - d) as f64 / n as f64;
    }
    kernel
}

/// Level distribution of the parent selected by the (1,λ) EA from iid
/// offspring with per-level probability `kernel` and noisy fitness
/// distribution `dists[level]`; a uniform choice among the offspring of
/// maximal noisy value.
pub fn comma_selected_level_distribution(
    kernel: &[f64],
    dists: &[ValueDist],
    lambda: usize,
) -> Vec<f64> {
    let levels = kernel.len();
    // atoms: (value, level) -> probability that one offspring lands there
    let mut atoms: Vec<(f64, usize, f64)> = Vec::new();
    for (lvl, &kp) in kernel.iter().enumerate() {
        if kp == 0.0 {
            continue;
        }
        for &(v, p) in &dists[lvl] {
            atoms.push((v, lvl, kp * p));
        }
    }
    atoms.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    let mut selected = vec![0.0; levels];
    let mut below = 0.0; // P[value < v]
    let mut i = 0;
    while i < atoms.len() {
        let v = atoms[i].0;
        let mut s = 0.0; // P[value = v]
        let mut per_level: Vec<(usize, f64)> = Vec::new();
        while i < atoms.len() && atoms[i].0 == v {
            s += atoms[i].2;
            per_level.push((atoms[i].1, atoms[i].2));
            i += 1;
        }
        // P[max of lambda iid values equals v]
        let p_max = (below + s).powi(lambda as i32) - below.powi(lambda as i32);
        // Given the max is v, the selected offspring's level is
        // distributed as the conditional level at value v.
        for (lvl, p) in per_level {
            selected[lvl] += p_max * p / s;
        }
        below += s;
    }
    selected
}

/// Exact lumped transition matrix on OneMax fitness-distance levels.
/// Supports RLS, the (1+1) EA, and the (1,λ) EA under no noise or
/// one-bit noise.
pub fn lumped_chain(
    alg: &AlgorithmSpec,
    noise: &NoiseSpec,
    n: usize,
) -> Result<TransitionMatrix> {
    alg.validate()?;
    if n < 1 || n > 64 {
        return Err(Error::StateSpaceTooLarge(n));
    }
    match *noise {
        NoiseSpec::None | NoiseSpec::OneBit { .. } => {}
        _ => {
            return Err(Error::LumpingInvalid(
                "lumped chains support only None or OneBit noise".into(),
            ))
        }
    }
    let rate = alg.rate_for(n);
    let dists: Vec<ValueDist> = (0..=n)
        .map(|d| level_value_dist(n, d, noise))
        .collect::<Result<_>>()?;

    let mut probs = DMatrix::zeros(n + 1, n + 1);
    probs[(0, 0)] = 1.0;
    for d in 1..=n {
        match alg.kind {
            AlgorithmKind::Rls | AlgorithmKind::OnePlusOneEa => {
                let kernel = match alg.kind {
                    AlgorithmKind::Rls => rls_level_kernel(n, d),
                    _ => mutation_level_kernel(n, d, rate),
                };
                let mut stay = kernel[d]; // offspring at the parent's own level
                probs[(d, 0)] = kernel[0];
                for (dp, &kp) in kernel.iter().enumerate() {
                    if dp == 0 || dp == d || kp == 0.0 {
                        continue;
                    }
                    let a = acceptance_probability(&alg.kind, &dists[d], &dists[dp])?;
                    probs[(d, dp)] = kp * a;
                    stay += kp * (1.0 - a);
                }
                probs[(d, d)] += stay;
            }
            AlgorithmKind::OneCommaLambdaEa { lambda } => {
                let kernel = mutation_level_kernel(n, d, rate);
                let p_hit = 1.0 - (1.0 - kernel[0]).powi(lambda as i32);
                probs[(d, 0)] = p_hit;
                if p_hit < 1.0 {
                    // offspring conditioned on not being the optimum
                    let mut cond = kernel.clone();
                    cond[0] = 0.0;
                    let norm: f64 = cond.iter().sum();
                    for c in &mut cond {
                        *c /= norm;
                    }
                    let sel = comma_selected_level_distribution(&cond, &dists, lambda);
                    for (dp, &sp) in sel.iter().enumerate() {
                        probs[(d, dp)] += (1.0 - p_hit) * sp;
                    }
                }
            }
            _ => {
                return Err(Error::LumpingInvalid(format!(
                    "no lumped chain for {:?}",
                    alg.kind
                )))
            }
        }
    }
    Ok(TransitionMatrix {
        states: StateSpace::Levels { n },
        probs,
        target: 0,
    })
}

/// Exact distribution of the next parent's fitness-distance level after
/// one step from level d on OneMax, under selection semantics (the state
/// actually kept, with no generation absorption). Usable at large n since
/// no matrix is built.
pub fn exact_level_step_distribution(
    alg: &AlgorithmSpec,
    noise: &NoiseSpec,
    n: usize,
    d: usize,
) -> Result<Vec<f64>> {
    alg.validate()?;
    if d > n || n == 0 {
        return Err(Error::UnpreparableLevel(d));
    }
    let dists: Vec<ValueDist> = (0..=n)
        .map(|lvl| level_value_dist(n, lvl, noise))
        .collect::<Result<_>>()?;
    let rate = alg.rate_for(n);
    match alg.kind {
        AlgorithmKind::OneCommaLambdaEa { lambda } => {
            let kernel = mutation_level_kernel(n, d, rate);
            Ok(comma_selected_level_distribution(&kernel, &dists, lambda))
        }
        AlgorithmKind::Rls
        | AlgorithmKind::OnePlusOneEa
        | AlgorithmKind::FastOnePlusOneEa { .. }
        | AlgorithmKind::Metropolis { .. }
        | AlgorithmKind::FpOnePlusOneEa => {
            let kernel = match alg.kind {
                AlgorithmKind::Rls | AlgorithmKind::Metropolis { .. } => rls_level_kernel(n, d),
                AlgorithmKind::FastOnePlusOneEa { beta } => {
                    let max_alpha = (n / 2).max(1);
                    let weights: Vec<f64> =
                        (1..=max_alpha).map(|k| (k as f64).powf(-beta)).collect();
                    let total: f64 = weights.iter().sum();
                    let mut kernel = vec![0.0; n + 1];
                    for (idx, w) in weights.iter().enumerate() {
                        let sub = mutation_level_kernel(n, d, (idx + 1) as f64 / n as f64);
                        for (dp, &v) in sub.iter().enumerate() {
                            kernel[dp] += (w / total) * v;
                        }
                    }
                    kernel
                }
                _ => mutation_level_kernel(n, d, rate),
            };
            let mut row = vec![0.0; n + 1];
            for (dp, &kp) in kernel.iter().enumerate() {
                if kp == 0.0 {
                    continue;
                }
                if dp == d {
                    row[d] += kp;
                    continue;
                }
                let a = acceptance_probability(&alg.kind, &dists[d], &dists[dp])?;
                row[dp] += kp * a;
                row[d] += kp * (1.0 - a);
            }
            Ok(row)
        }
        _ => Err(Error::LumpingInvalid(format!(
            "no level step oracle for {:?}",
            alg.kind
        ))),
    }
}

/// Exact one-step drift E[X_t − X_{t+1} | X_t = d] of the fitness
/// distance, from [`exact_level_step_distribution`].
pub fn exact_level_drift(
    alg: &AlgorithmSpec,
    noise: &NoiseSpec,
    n: usize,
    d: usize,
) -> Result<f64> {
    let row = exact_level_step_distribution(alg, noise, n, d)?;
    Ok(row
        .iter()
        .enumerate()
        .map(|(dp, &p)| p * (d as f64 - dp as f64))
        .sum())
}

fn full_chain_limit(noise: &NoiseSpec) -> usize {
    match noise {
        NoiseSpec::None => 10,
        NoiseSpec::OneBit { .. } => 8,
        _ => 6,
    }
}

/// Offspring kernel of a (1+1)-type mutation on the full state space.
fn full_mutation_kernel(alg: &AlgorithmSpec, n: usize, x: u64) -> Result<Vec<f64>> {
    let size = 1usize << n;
    let mut kernel = vec![0.0; size];
    match alg.kind {
        AlgorithmKind::Rls
        | AlgorithmKind::Metropolis { .. }
        | AlgorithmKind::SimulatedAnnealing { .. } => {
            for i in 0..n {
                kernel[(x ^ (1 << i)) as usize] += 1.0 / n as f64;
            }
        }
        AlgorithmKind::OnePlusOneEa | AlgorithmKind::FpOnePlusOneEa => {
            let r = alg.rate_for(n);
            for y in 0..size as u64 {
                let h = (x ^ y).count_ones() as i32;
                kernel[y as usize] = r.powi(h) * (1.0 - r).powi(n as i32 - h);
            }
        }
        AlgorithmKind::FastOnePlusOneEa { beta } => {
            let max_alpha = (n / 2).max(1);
            let weights: Vec<f64> = (1..=max_alpha).map(|k| (k as f64).powf(-beta)).collect();
            let total: f64 = weights.iter().sum();
            for (idx, w) in weights.iter().enumerate() {
                let r = (idx + 1) as f64 / n as f64;
                let p_alpha = w / total;
                for y in 0..size as u64 {
                    let h = (x ^ y).count_ones() as i32;
                    kernel[y as usize] += p_alpha * r.powi(h) * (1.0 - r).powi(n as i32 - h);
                }
            }
        }
        AlgorithmKind::OneCommaLambdaEa { .. } => {
            // base kernel of a single offspring
            let r = alg.rate_for(n);
            for y in 0..size as u64 {
                let h = (x ^ y).count_ones() as i32;
                kernel[y as usize] = r.powi(h) * (1.0 - r).powi(n as i32 - h);
            }
        }
        AlgorithmKind::SimpleGa { .. } => {
            return Err(Error::Unsupported(
                "no exact chain for the simple GA".into(),
            ))
        }
    }
    Ok(kernel)
}

/// Exact ground-truth chain over all 2^n bit strings, including exact
/// noisy-acceptance enumeration.
pub fn full_chain(
    alg: &AlgorithmSpec,
    spec: &BenchmarkSpec,
    noise: &NoiseSpec,
) -> Result<TransitionMatrix> {
    alg.validate()?;
    spec.validate()?;
    noise.validate()?;
    let n = spec.n;
    if n > full_chain_limit(noise) {
        return Err(Error::StateSpaceTooLarge(n));
    }
    let size = 1usize << n;
    let target = size - 1; // all-ones pattern
    let dists: Vec<ValueDist> = (0..size as u64)
        .map(|v| noisy_value_dist(spec, noise, &BitString::from_index(n, v)))
        .collect::<Result<_>>()?;

    let mut probs = DMatrix::zeros(size, size);
    probs[(target, target)] = 1.0;
    for x in 0..size {
        if x == target {
            continue;
        }
        let kernel = full_mutation_kernel(alg, n, x as u64)?;
        if let AlgorithmKind::OneCommaLambdaEa { lambda } = alg.kind {
            let p_hit = 1.0 - (1.0 - kernel[target]).powi(lambda as i32);
            probs[(x, target)] = p_hit;
            if p_hit < 1.0 {
                let mut cond = kernel;
                cond[target] = 0.0;
                let norm: f64 = cond.iter().sum();
                for c in &mut cond {
                    *c /= norm;
                }
                // treat each bit string as its own "level"
                let sel = comma_selected_level_distribution(&cond, &dists, lambda);
                for (y, &sp) in sel.iter().enumerate() {
                    probs[(x, y)] += (1.0 - p_hit) * sp;
                }
            }
            continue;
        }
        // generation of the optimum absorbs regardless of acceptance
        probs[(x, target)] = kernel[target];
        let mut stay = kernel[x];
        for (y, &kp) in kernel.iter().enumerate() {
            if y == target || y == x || kp == 0.0 {
                continue;
            }
            let a = acceptance_probability(&alg.kind, &dists[x], &dists[y])?;
            probs[(x, y)] = kp * a;
            stay += kp * (1.0 - a);
        }
        probs[(x, x)] += stay;
    }
    Ok(TransitionMatrix {
        states: StateSpace::Full { n },
        probs,
        target,
    })
}

/// Project a full chain on OneMax down to fitness-distance levels by
/// summing transition masses per level. The projection is exact when the
/// full chain is level-symmetric.
pub fn lump_full_chain(m: &TransitionMatrix) -> Result<TransitionMatrix> {
    let n = match m.states {
        StateSpace::Full { n } => n,
        _ => return Err(Error::LumpingInvalid("already lumped".into())),
    };
    let size = 1usize << n;
    let level = |x: usize| n - (x as u64).count_ones() as usize;
    let mut probs = DMatrix::zeros(n + 1, n + 1);
    let mut counted = vec![false; n + 1];
    for x in 0..size {
        let d = level(x);
        if counted[d] {
            continue; // one representative per level suffices
        }
        counted[d] = true;
        for y in 0..size {
            probs[(d, level(y))] += m.probs[(x, y)];
        }
    }
    Ok(TransitionMatrix {
        states: StateSpace::Levels { n },
        probs,
        target: 0,
    })
}

/// Exact expected hitting time of the target from `start`, by a dense
/// linear solve of the first-step system. Returns +infinity when the
/// target is not reached with probability one.
pub fn expected_hitting_time(m: &TransitionMatrix, start: &Start) -> Result<f64> {
    let size = m.num_states();
    let start_dist: Vec<(usize, f64)> = match start {
        Start::State(s) => {
            if *s >= size {
                return Err(Error::InvalidParameter("start state out of range".into()));
            }
            vec![(*s, 1.0)]
        }
        Start::Distribution(d) => {
            if d.len() != size || (d.iter().sum::<f64>() - 1.0).abs() > 1e-9 {
                return Err(Error::InvalidParameter(
                    "start distribution must sum to 1 over all states".into(),
                ));
            }
            d.iter().cloned().enumerate().filter(|&(_, p)| p > 0.0).collect()
        }
    };

    // States from which the target is reachable (reverse BFS).
    let mut reaches = vec![false; size];
    reaches[m.target] = true;
    let mut stack = vec![m.target];
    while let Some(z) = stack.pop() {
        for x in 0..size {
            if !reaches[x] && m.probs[(x, z)] > 0.0 {
                reaches[x] = true;
                stack.push(x);
            }
        }
    }

    // States reachable from the start before absorption (forward BFS).
    let mut forward = vec![false; size];
    let mut stack: Vec<usize> = start_dist.iter().map(|&(s, _)| s).collect();
    for &s in &stack {
        forward[s] = true;
    }
    while let Some(x) = stack.pop() {
        if x == m.target {
            continue;
        }
        for y in 0..size {
            if !forward[y] && m.probs[(x, y)] > 0.0 {
                forward[y] = true;
                stack.push(y);
            }
        }
    }

    // A reachable state that cannot reach the target means the process
    // escapes with positive probability: E[T] is infinite.
    if (0..size).any(|x| forward[x] && !reaches[x]) {
        return Ok(f64::INFINITY);
    }

    // Solve (I - Q) t = 1 on the transient reachable states.
    let transient: Vec<usize> = (0..size)
        .filter(|&x| forward[x] && x != m.target)
        .collect();
    if transient.is_empty() {
        return Ok(0.0);
    }
    let index_of: std::collections::HashMap<usize, usize> = transient
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i))
        .collect();
    let k = transient.len();
    let mut a = DMatrix::zeros(k, k);
    for (i, &x) in transient.iter().enumerate() {
        for (j, &y) in transient.iter().enumerate() {
            a[(i, j)] = if i == j { 1.0 } else { 0.0 } - m.probs[(x, y)];
        }
    }
    let b = DVector::from_element(k, 1.0);
    let t = a
        .lu()
        .solve(&b)
        .ok_or_else(|| Error::InvalidParameter("singular hitting-time system".into()))?;

    let mut expected = 0.0;
    for &(s, p) in &start_dist {
        if s != m.target {
            expected += p * t[index_of[&s]];
        }
    }
    Ok(expected)
}

/// The condition-(Acc) constant c = c_A · c_N for a configuration, with
/// c_A per algorithm and c_N per noise model (1 for none, 1/2 for
/// additive posterior, ε² for the prior models). The FP variant carries
/// an extra 1/2 for its acceptance of a strictly better neighbor.
pub fn acceptance_constant(alg: &AlgorithmSpec, noise: &NoiseSpec, n: usize) -> f64 {
    let one_minus = (1.0 - 1.0 / n as f64).powi(n as i32 - 1);
    let c_a = match alg.kind {
        AlgorithmKind::Rls
        | AlgorithmKind::Metropolis { .. }
        | AlgorithmKind::SimulatedAnnealing { .. } => 1.0,
        AlgorithmKind::OnePlusOneEa | AlgorithmKind::OneCommaLambdaEa { .. } => one_minus,
        AlgorithmKind::FpOnePlusOneEa => one_minus * 0.5,
        AlgorithmKind::FastOnePlusOneEa { beta } => {
            let max_alpha = (n / 2).max(1);
            let total: f64 = (1..=max_alpha).map(|k| (k as f64).powf(-beta)).sum();
            (1.0 / total) * one_minus
        }
        AlgorithmKind::SimpleGa { .. } => one_minus,
    };
    let c_n = match noise {
        NoiseSpec::None => 1.0,
        NoiseSpec::AdditivePosterior { .. } => 0.5,
        _ => {
            let eps = noise.no_noise_probability(n).unwrap_or(0.0);
            (eps * eps).min(0.5)
        }
    };
    c_a * c_n
}

/// Exact probability that the optimum is sampled within `horizon` steps
/// from `start`, by matrix powering of the full chain, together with the
/// (c/e)^n lower bound of the path argument.
pub fn path_probability(
    alg: &AlgorithmSpec,
    spec: &BenchmarkSpec,
    noise: &NoiseSpec,
    start: &BitString,
    horizon: u64,
) -> Result<PathProbabilityResult> {
    if start.len() != spec.n {
        return Err(Error::DimensionMismatch);
    }
    let m = full_chain(alg, spec, noise)?;
    let size = m.num_states();
    let mut v = DVector::zeros(size);
    v[start.to_index() as usize] = 1.0;
    let pt = m.probs.transpose();
    for _ in 0..horizon {
        v = &pt * v;
    }
    let c = acceptance_constant(alg, noise, spec.n);
    Ok(PathProbabilityResult {
        exact_prob: v[m.target],
        lower_bound: (c / std::f64::consts::E).powi(spec.n as i32),
        horizon,
        c,
    })
}

/// Additive-drift verification: checks from the matrix that every
/// non-target state has one-step drift at least `delta`, then compares
/// the exact E[T] against potential(start)/delta.
pub fn verify_drift_bound(
    m: &TransitionMatrix,
    potential: &[f64],
    delta: f64,
    start: &Start,
) -> Result<bool> {
    let size = m.num_states();
    if potential.len() != size {
        return Err(Error::InvalidParameter(
            "potential must cover all states".into(),
        ));
    }
    if potential[m.target] != 0.0 {
        return Err(Error::InvalidParameter(
            "potential must be zero at the target".into(),
        ));
    }
    for s in 0..size {
        if s == m.target {
            continue;
        }
        let next: f64 = (0..size).map(|z| m.probs[(s, z)] * potential[z]).sum();
        let drift = potential[s] - next;
        if drift < delta - 1e-12 {
            return Err(Error::DriftViolated {
                state: s,
                drift,
                delta,
            });
        }
    }
    let expected = expected_hitting_time(m, start)?;
    let start_potential = match start {
        Start::State(s) => potential[*s],
        Start::Distribution(d) => d
            .iter()
            .zip(potential)
            .map(|(p, x)| p * x)
            .sum(),
    };
    Ok(expected <= start_potential / delta + 1e-9)
}
