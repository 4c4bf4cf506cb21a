//! Experiment execution: schedules replicates on a work pool, keeps
//! results in replicate order, and serializes them as CSV (per-replicate
//! data) or JSON (summaries).
//!
//! Replicate i always draws from `derive_stream(master_seed, i)`, so the
//! output is byte-identical whether replicates run serially or in
//! parallel. The env var `HEURISTICS_LAB_THREADS` caps the pool.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::benchmarks::BenchmarkKind;
use crate::config::ExperimentConfig;
use crate::heuristics::{run_until_hit, AlgorithmKind, InitPoint, TemperatureSchedule};
use crate::noise::{AdditiveDist, AdversaryPolicy, NoiseSpec};
use crate::rng::derive_stream;
use crate::stats::mean_ci;
use crate::Result;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct HittingRecord {
    pub replicate_index: u64,
    pub hitting_time: u64,
    pub censored: bool,
    pub evaluations: u64,
    /// Master seed; together with replicate_index this names the exact
    /// random stream of the run.
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub mean: f64,
    pub ci_half_width: f64,
    pub confidence: f64,
    pub censoring_rate: f64,
    pub min: u64,
    pub max: u64,
    pub budget: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResultSet {
    pub records: Vec<HittingRecord>,
    /// The full resolved configuration, re-serialized canonically.
    pub config_echo: String,
    pub summary: Summary,
}

/// Canonical key=value form of a config; parsing it back yields the same
/// experiment.
pub fn echo_config(config: &ExperimentConfig) -> String {
    let mut out = String::new();
    let kv = |out: &mut String, k: &str, v: String| writeln!(out, "{k}={v}").unwrap();
    match config.algorithm.kind {
        AlgorithmKind::Rls => kv(&mut out, "alg.kind", "rls".into()),
        AlgorithmKind::Metropolis { temperature } => {
            kv(&mut out, "alg.kind", "metropolis".into());
            kv(&mut out, "alg.T", temperature.to_string());
        }
        AlgorithmKind::SimulatedAnnealing { schedule } => {
            kv(&mut out, "alg.kind", "sa".into());
            match schedule {
                TemperatureSchedule::Geometric { t0, ratio } => {
                    kv(&mut out, "alg.schedule", "geometric".into());
                    kv(&mut out, "alg.t0", t0.to_string());
                    kv(&mut out, "alg.ratio", ratio.to_string());
                }
                TemperatureSchedule::Logarithmic { c } => {
                    kv(&mut out, "alg.schedule", "logarithmic".into());
                    kv(&mut out, "alg.c", c.to_string());
                }
            }
        }
        AlgorithmKind::OnePlusOneEa => kv(&mut out, "alg.kind", "one_plus_one".into()),
        AlgorithmKind::FastOnePlusOneEa { beta } => {
            kv(&mut out, "alg.kind", "fast".into());
            kv(&mut out, "alg.beta", beta.to_string());
        }
        AlgorithmKind::FpOnePlusOneEa => kv(&mut out, "alg.kind", "fp".into()),
        AlgorithmKind::OneCommaLambdaEa { lambda } => {
            kv(&mut out, "alg.kind", "one_comma_lambda".into());
            kv(&mut out, "alg.lambda", lambda.to_string());
        }
        AlgorithmKind::SimpleGa { mu } => {
            kv(&mut out, "alg.kind", "simple_ga".into());
            kv(&mut out, "alg.mu", mu.to_string());
        }
    }
    if let Some(rate) = config.algorithm.mutation_rate {
        kv(&mut out, "alg.rate", rate.to_string());
    }
    match &config.benchmark.kind {
        BenchmarkKind::OneMax => {
            kv(&mut out, "bench.kind", "onemax".into());
            kv(&mut out, "bench.n", config.benchmark.n.to_string());
        }
        BenchmarkKind::LeadingOnes => {
            kv(&mut out, "bench.kind", "leadingones".into());
            kv(&mut out, "bench.n", config.benchmark.n.to_string());
        }
        BenchmarkKind::Jump { k } => {
            kv(&mut out, "bench.kind", "jump".into());
            kv(&mut out, "bench.n", config.benchmark.n.to_string());
            kv(&mut out, "bench.k", k.to_string());
        }
        BenchmarkKind::Plateau { k } => {
            kv(&mut out, "bench.kind", "plateau".into());
            kv(&mut out, "bench.n", config.benchmark.n.to_string());
            kv(&mut out, "bench.k", k.to_string());
        }
        BenchmarkKind::Linear { weights } => {
            kv(&mut out, "bench.kind", "linear".into());
            let ws: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
            kv(&mut out, "bench.weights", ws.join(","));
        }
        BenchmarkKind::MonotonePolynomial { monomials } => {
            kv(&mut out, "bench.kind", "poly".into());
            kv(&mut out, "bench.n", config.benchmark.n.to_string());
            let terms: Vec<String> = monomials
                .iter()
                .map(|m| {
                    let idx: Vec<String> = m.indices.iter().map(|i| i.to_string()).collect();
                    format!("{}:{}", m.coefficient, idx.join(","))
                })
                .collect();
            kv(&mut out, "bench.monomials", terms.join(";"));
        }
    }
    match config.noise {
        NoiseSpec::None => kv(&mut out, "noise.kind", "none".into()),
        NoiseSpec::OneBit { p } => {
            kv(&mut out, "noise.kind", "onebit".into());
            kv(&mut out, "noise.p", p.to_string());
        }
        NoiseSpec::BitWise { q } => {
            kv(&mut out, "noise.kind", "bitwise".into());
            kv(&mut out, "noise.q", q.to_string());
        }
        NoiseSpec::PQNoise { p, q } => {
            kv(&mut out, "noise.kind", "pq".into());
            kv(&mut out, "noise.p", p.to_string());
            kv(&mut out, "noise.q", q.to_string());
        }
        NoiseSpec::AdditivePosterior { dist } => {
            kv(&mut out, "noise.kind", "additive".into());
            match dist {
                AdditiveDist::Gaussian { mean, stddev } => {
                    kv(&mut out, "noise.dist", "gaussian".into());
                    kv(&mut out, "noise.mean", mean.to_string());
                    kv(&mut out, "noise.stddev", stddev.to_string());
                }
                AdditiveDist::Cauchy { location, scale } => {
                    kv(&mut out, "noise.dist", "cauchy".into());
                    kv(&mut out, "noise.location", location.to_string());
                    kv(&mut out, "noise.scale", scale.to_string());
                }
                AdditiveDist::Constant { value } => {
                    kv(&mut out, "noise.dist", "constant".into());
                    kv(&mut out, "noise.value", value.to_string());
                }
                AdditiveDist::Uniform { low, high } => {
                    kv(&mut out, "noise.dist", "uniform".into());
                    kv(&mut out, "noise.low", low.to_string());
                    kv(&mut out, "noise.high", high.to_string());
                }
            }
        }
        NoiseSpec::Adversarial { p, policy } => {
            kv(&mut out, "noise.kind", "adversarial".into());
            kv(&mut out, "noise.p", p.to_string());
            match policy {
                AdversaryPolicy::AntiImprovement => {
                    kv(&mut out, "noise.adversary", "anti".into())
                }
                AdversaryPolicy::Constant { value } => {
                    kv(&mut out, "noise.adversary", "constant".into());
                    kv(&mut out, "noise.adversary_value", value.to_string());
                }
            }
        }
    }
    kv(&mut out, "run.replicates", config.replicates.to_string());
    kv(&mut out, "run.budget", config.budget.to_string());
    match &config.init {
        InitPoint::Uniform => kv(&mut out, "run.init", "uniform".into()),
        InitPoint::Fixed(x) => kv(&mut out, "run.init", x.to_string()),
    }
    kv(&mut out, "master_seed", config.master_seed.to_string());
    if let Some(path) = &config.output {
        kv(&mut out, "output", path.display().to_string());
    }
    out
}

fn pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("HEURISTICS_LAB_THREADS") {
        let threads: usize = v
            .parse()
            .map_err(|_| crate::Error::InvalidConfig(format!("HEURISTICS_LAB_THREADS = '{v}'")))?;
        builder = builder.num_threads(threads.max(1));
    }
    builder
        .build()
        .map_err(|e| crate::Error::InvalidConfig(e.to_string()))
}

/// Run all replicates of an experiment. Records come back ordered by
/// replicate index; an identical config yields identical records.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ResultSet> {
    config.validate()?;
    let outcomes: Vec<_> = pool()?.install(|| {
        (0..config.replicates as u64)
            .into_par_iter()
            .map(|i| {
                let mut rng = derive_stream(config.master_seed, i);
                run_until_hit(
                    &config.algorithm,
                    &config.benchmark,
                    &config.noise,
                    &config.init,
                    config.budget,
                    &mut rng,
                )
                .map(|o| (i, o))
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let records: Vec<HittingRecord> = outcomes
        .into_iter()
        .map(|(i, o)| HittingRecord {
            replicate_index: i,
            hitting_time: o.hitting_time,
            censored: o.censored,
            evaluations: o.evaluations,
            seed: config.master_seed,
        })
        .collect();

    let times: Vec<f64> = records.iter().map(|r| r.hitting_time as f64).collect();
    let (mean, ci_half_width) = if times.len() >= 2 {
        mean_ci(&times, 0.95)?
    } else {
        (times[0], 0.0)
    };
    let summary = Summary {
        mean,
        ci_half_width,
        confidence: 0.95,
        censoring_rate: records.iter().filter(|r| r.censored).count() as f64
            / records.len() as f64,
        min: records.iter().map(|r| r.hitting_time).min().unwrap(),
        max: records.iter().map(|r| r.hitting_time).max().unwrap(),
        budget: config.budget,
    };
    Ok(ResultSet {
        records,
        config_echo: echo_config(config),
        summary,
    })
}

/// RFC-4180-style CSV with a fixed header row.
pub fn to_csv(records: &[HittingRecord]) -> String {
    let mut out = String::from("replicate_index,hitting_time,censored,evaluations,seed\r\n");
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{}\r",
            r.replicate_index, r.hitting_time, r.censored, r.evaluations, r.seed
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitstring::BitString;

    fn base_config(extra: &str) -> ExperimentConfig {
        let text = format!(
            "alg.kind=rls\nbench.kind=onemax\nbench.n=6\nrun.replicates=20\nmaster_seed=7\n{extra}"
        );
        ExperimentConfig::from_text(&text, &[]).unwrap()
    }

    #[test]
    fn init_at_optimum_hits_immediately() {
        let cfg = base_config("run.init=111111\nrun.replicates=3\n");
        let rs = run_experiment(&cfg).unwrap();
        assert_eq!(rs.records.len(), 3);
        assert!(rs.records.iter().all(|r| r.hitting_time == 0 && !r.censored));
        assert_eq!(rs.summary.max, 0);
    }

    #[test]
    fn records_ordered_and_csv_schema() {
        let cfg = base_config("");
        let rs = run_experiment(&cfg).unwrap();
        for (i, r) in rs.records.iter().enumerate() {
            assert_eq!(r.replicate_index, i as u64);
            assert_eq!(r.seed, 7);
        }
        let csv = to_csv(&rs.records);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "replicate_index,hitting_time,censored,evaluations,seed"
        );
        assert_eq!(lines.count(), 20);
    }

    #[test]
    fn identical_config_identical_bytes() {
        let cfg = base_config("");
        let a = to_csv(&run_experiment(&cfg).unwrap().records);
        let b = to_csv(&run_experiment(&cfg).unwrap().records);
        assert_eq!(a, b);
    }

    #[test]
    fn serial_and_parallel_agree() {
        let cfg = base_config("run.replicates=50\n");
        std::env::set_var("HEURISTICS_LAB_THREADS", "1");
        let serial = to_csv(&run_experiment(&cfg).unwrap().records);
        std::env::set_var("HEURISTICS_LAB_THREADS", "4");
        let parallel = to_csv(&run_experiment(&cfg).unwrap().records);
        std::env::remove_var("HEURISTICS_LAB_THREADS");
        assert_eq!(serial, parallel);
    }

    #[test]
    fn summary_matches_oracle_mean() {
        // RLS on OneMax n=3 from 000: exact mean 5.5.
        let text = "alg.kind=rls\nbench.kind=onemax\nbench.n=3\nrun.init=000\n\
                    run.replicates=100000\nmaster_seed=3\n";
        let cfg = ExperimentConfig::from_text(text, &[]).unwrap();
        let rs = run_experiment(&cfg).unwrap();
        let times: Vec<f64> = rs.records.iter().map(|r| r.hitting_time as f64).collect();
        let (mean, _) = mean_ci(&times, 0.95).unwrap();
        let var = times.iter().map(|t| (t - mean) * (t - mean)).sum::<f64>()
            / (times.len() - 1) as f64;
        let se = (var / times.len() as f64).sqrt();
        assert!((mean - 5.5).abs() < 3.0 * se, "mean {mean}");
        assert_eq!(rs.summary.censoring_rate, 0.0);
    }

    #[test]
    fn censoring_recorded_at_budget() {
        // RLS cannot cross the Jump gap from below without luck; with a
        // tiny budget most replicates censor at the budget value.
        let text = "alg.kind=rls\nbench.kind=jump\nbench.n=10\nbench.k=3\n\
                    run.replicates=10\nrun.budget=5\nmaster_seed=1\n";
        let cfg = ExperimentConfig::from_text(text, &[]).unwrap();
        let rs = run_experiment(&cfg).unwrap();
        assert!(rs
            .records
            .iter()
            .all(|r| !r.censored || r.hitting_time == 5));
        assert!(rs.summary.censoring_rate > 0.0);
    }

    #[test]
    fn config_echo_roundtrips() {
        let cfg = base_config("noise.kind=pq\nnoise.p=0.4\nnoise.q=0.1\nrun.init=110011\n");
        let echo = echo_config(&cfg);
        let re = ExperimentConfig::from_text(&echo, &[]).unwrap();
        assert_eq!(echo_config(&re), echo);
        match re.init {
            InitPoint::Fixed(x) => assert_eq!(x, BitString::parse("110011").unwrap()),
            _ => panic!(),
        }
    }
}
