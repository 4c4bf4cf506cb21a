//! Command-line interface: experiment runs, exact-oracle queries, the
//! acceptance suite, runtime-distribution export, and drift estimation.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage/config errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use heuristics_lab::benchmarks::BenchmarkSpec;
use heuristics_lab::bitstring::BitString;
use heuristics_lab::config::ExperimentConfig;
use heuristics_lab::harness::{run_experiment, to_csv};
use heuristics_lab::heuristics::{AlgorithmKind, AlgorithmSpec};
use heuristics_lab::noise::NoiseSpec;
use heuristics_lab::oracle::{
    acceptance_constant, expected_hitting_time, full_chain, path_probability, Start,
};
use heuristics_lab::stats::{check_dominated_by_scaled_geom, estimate_drift};
use heuristics_lab::Result;

#[derive(Parser)]
#[command(name = "heuristics-lab", version, about = "Simulation and verification laboratory for randomized search heuristics under noise")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute an experiment described by a config file.
    Run(RunArgs),
    /// Exact chain computations: hitting times, path probabilities, bounds.
    Oracle(OracleArgs),
    /// Run the full acceptance suite; nonzero exit on any failure.
    Verify(VerifyArgs),
    /// Runtime-distribution export with a dominance verdict.
    Dist(DistArgs),
    /// Per-level drift estimation.
    Drift(DriftArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Path to a key=value config file.
    #[arg(long)]
    config: PathBuf,
    /// Overrides of config keys, e.g. --set run.replicates=100.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    sets: Vec<String>,
    /// CSV output path (overrides the config's `output`; default stdout).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    /// Algorithm: rls | one_plus_one | fast | fp | metropolis | one_comma_lambda.
    #[arg(long)]
    alg: String,
    /// Benchmark: onemax | leadingones | jump | plateau | needle.
    #[arg(long)]
    bench: String,
    #[arg(long)]
    n: usize,
    /// Jump/Plateau parameter.
    #[arg(long)]
    k: Option<usize>,
    /// Start point as a bit string, e.g. 000.
    #[arg(long)]
    start: String,
    /// Noise: none | onebit | bitwise | pq.
    #[arg(long, default_value = "none")]
    noise: String,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    q: Option<f64>,
    #[arg(long)]
    temperature: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    lambda: Option<usize>,
    /// Mutation rate override (default 1/n).
    #[arg(long)]
    rate: Option<f64>,
    /// Also compute the exact path probability within this horizon.
    #[arg(long)]
    horizon: Option<u64>,
    /// Include the full transition matrix in the output.
    #[arg(long)]
    emit_matrix: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Emit the per-check report as JSON instead of text lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DistArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long = "set", value_name = "KEY=VALUE")]
    sets: Vec<String>,
    #[arg(long, default_value_t = 0.99)]
    confidence: f64,
}

#[derive(Args)]
struct DriftArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long = "set", value_name = "KEY=VALUE")]
    sets: Vec<String>,
    /// Comma-separated distance levels, e.g. 1,2,5,25.
    #[arg(long)]
    levels: String,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    /// Drift exponent for the d0 annotation (applies to the (1,λ) EA).
    #[arg(long)]
    epsilon: Option<f64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Verify(args) => return cmd_verify(args),
        Command::Dist(args) => cmd_dist(args),
        Command::Drift(args) => cmd_drift(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cmd_run(args: RunArgs) -> Result<()> {
    let config = ExperimentConfig::load(&args.config, &args.sets)?;
    let result = run_experiment(&config)?;
    let csv = to_csv(&result.records);
    let path = args.output.or_else(|| config.output.clone());
    match path {
        Some(p) => std::fs::write(p, csv)?,
        None => print!("{csv}"),
    }
    eprintln!("{}", serde_json::to_string_pretty(&result.summary).unwrap());
    Ok(())
}

fn parse_oracle_alg(args: &OracleArgs) -> Result<AlgorithmSpec> {
    use heuristics_lab::Error;
    let missing = |k: &str| Error::InvalidConfig(format!("--alg {} requires --{k}", args.alg));
    let kind = match args.alg.as_str() {
        "rls" => AlgorithmKind::Rls,
        "one_plus_one" => AlgorithmKind::OnePlusOneEa,
        "fp" => AlgorithmKind::FpOnePlusOneEa,
        "fast" => AlgorithmKind::FastOnePlusOneEa {
            beta: args.beta.ok_or_else(|| missing("beta"))?,
        },
        "metropolis" => AlgorithmKind::Metropolis {
            temperature: args.temperature.ok_or_else(|| missing("temperature"))?,
        },
        "one_comma_lambda" => AlgorithmKind::OneCommaLambdaEa {
            lambda: args.lambda.ok_or_else(|| missing("lambda"))?,
        },
        other => return Err(Error::InvalidConfig(format!("unknown --alg {other}"))),
    };
    Ok(AlgorithmSpec {
        kind,
        mutation_rate: args.rate,
    })
}

fn parse_oracle_bench(args: &OracleArgs) -> Result<BenchmarkSpec> {
    use heuristics_lab::Error;
    let k = || {
        args.k
            .ok_or_else(|| Error::InvalidConfig(format!("--bench {} requires --k", args.bench)))
    };
    Ok(match args.bench.as_str() {
        "onemax" => BenchmarkSpec::one_max(args.n),
        "leadingones" => BenchmarkSpec::leading_ones(args.n),
        "jump" => BenchmarkSpec::jump(args.n, k()?),
        "plateau" => BenchmarkSpec::plateau(args.n, k()?),
        "needle" => BenchmarkSpec::needle(args.n),
        other => return Err(Error::InvalidConfig(format!("unknown --bench {other}"))),
    })
}

fn parse_oracle_noise(args: &OracleArgs) -> Result<NoiseSpec> {
    use heuristics_lab::Error;
    let p = || args.p.ok_or_else(|| Error::InvalidConfig("missing --p".into()));
    let q = || args.q.ok_or_else(|| Error::InvalidConfig("missing --q".into()));
    Ok(match args.noise.as_str() {
        "none" => NoiseSpec::None,
        "onebit" => NoiseSpec::OneBit { p: p()? },
        "bitwise" => NoiseSpec::BitWise { q: q()? },
        "pq" => NoiseSpec::PQNoise { p: p()?, q: q()? },
        other => return Err(Error::InvalidConfig(format!("unknown --noise {other}"))),
    })
}

fn cmd_oracle(args: OracleArgs) -> Result<()> {
    let alg = parse_oracle_alg(&args)?;
    let bench = parse_oracle_bench(&args)?;
    let noise = parse_oracle_noise(&args)?;
    let start = BitString::parse(&args.start)?;

    let chain = full_chain(&alg, &bench, &noise)?;
    let et = expected_hitting_time(&chain, &Start::State(start.to_index() as usize))?;
    let c = acceptance_constant(&alg, &noise, args.n);
    let runtime_bound = args.n as f64 * (std::f64::consts::E / c).powi(args.n as i32);

    let mut out = json!({
        "alg": args.alg,
        "bench": args.bench,
        "n": args.n,
        "noise": args.noise,
        "start": args.start,
        "expected_hitting_time": if et.is_finite() { json!(et) } else { json!(null) },
        "infinite": !et.is_finite(),
        "c": c,
        "runtime_bound": runtime_bound,
        "bound_holds": et <= runtime_bound,
    });
    if let Some(h) = args.horizon {
        let pp = path_probability(&alg, &bench, &noise, &start, h)?;
        out["path_probability"] = serde_json::to_value(&pp).unwrap();
    }
    if args.emit_matrix {
        let rows: Vec<Vec<f64>> = (0..chain.num_states())
            .map(|r| (0..chain.num_states()).map(|c| chain.probs[(r, c)]).collect())
            .collect();
        out["matrix"] = json!({ "target": chain.target, "rows": rows });
    }
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let results = heuristics_lab::acceptance::run_all();
    let failed = results.iter().filter(|r| !r.passed).count();
    if args.json {
        println!("{}", serde_json::to_string_pretty(&results).unwrap());
    } else {
        for r in &results {
            println!(
                "{} [{:2}] {} — {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.id,
                r.name,
                r.detail
            );
        }
        println!(
            "{}/{} checks passed",
            results.len() - failed,
            results.len()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_dist(args: DistArgs) -> Result<()> {
    let config = ExperimentConfig::load(&args.config, &args.sets)?;
    let result = run_experiment(&config)?;
    let mut times: Vec<u64> = result.records.iter().map(|r| r.hitting_time).collect();
    let censored: Vec<bool> = result.records.iter().map(|r| r.censored).collect();

    let n = config.benchmark.n;
    let c = acceptance_constant(&config.algorithm, &config.noise, n);
    let p_geom = (c / std::f64::consts::E).powi(n as i32);
    let verdict =
        check_dominated_by_scaled_geom(&times, &censored, n as u64, p_geom, args.confidence)?;

    times.sort_unstable();
    let quantiles: Vec<serde_json::Value> = [0.0, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99, 1.0]
        .iter()
        .map(|&q| {
            let idx = ((times.len() - 1) as f64 * q).round() as usize;
            json!({ "q": q, "hitting_time": times[idx] })
        })
        .collect();

    let out = json!({
        "config_echo": result.config_echo,
        "summary": result.summary,
        "geom_scale_m": n,
        "geom_p": p_geom,
        "dominance": verdict,
        "quantiles": quantiles,
    });
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    Ok(())
}

fn cmd_drift(args: DriftArgs) -> Result<()> {
    let config = ExperimentConfig::load(&args.config, &args.sets)?;
    let levels: Vec<usize> = args
        .levels
        .split(',')
        .map(|s| {
            s.trim().parse().map_err(|_| {
                heuristics_lab::Error::InvalidConfig(format!("--levels entry '{s}'"))
            })
        })
        .collect::<Result<_>>()?;
    let estimate = estimate_drift(
        &config.algorithm,
        &config.benchmark,
        &config.noise,
        &levels,
        args.samples,
        args.epsilon,
        config.master_seed,
    )?;
    println!("{}", serde_json::to_string_pretty(&estimate).unwrap());
    Ok(())
}
