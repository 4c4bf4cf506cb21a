//! Experiment configuration: a flat key=value text format with dotted
//! keys (`alg.kind=rls`), overridable by command-line flags of the same
//! names. Lines starting with `#` and blank lines are ignored.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::benchmarks::{BenchmarkSpec, Monomial};
use crate::bitstring::BitString;
use crate::heuristics::{AlgorithmKind, AlgorithmSpec, InitPoint, TemperatureSchedule};
use crate::noise::{AdditiveDist, AdversaryPolicy, NoiseSpec};
use crate::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub algorithm: AlgorithmSpec,
    pub benchmark: BenchmarkSpec,
    pub noise: NoiseSpec,
    pub replicates: usize,
    pub budget: u64,
    pub master_seed: u64,
    pub init: InitPoint,
    pub output: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        self.algorithm.validate()?;
        self.benchmark.validate()?;
        self.noise.validate()?;
        if self.replicates < 1 {
            return Err(Error::InvalidConfig("replicates must be >= 1".into()));
        }
        if self.budget < 1 {
            return Err(Error::InvalidConfig("budget must be >= 1".into()));
        }
        if let InitPoint::Fixed(x) = &self.init {
            if x.len() != self.benchmark.n {
                return Err(Error::InvalidConfig(
                    "init length does not match bench.n".into(),
                ));
            }
        }
        Ok(())
    }

    /// Parse a config file, then apply `key=value` overrides in order.
    pub fn load(path: &Path, overrides: &[String]) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_text(&text, overrides)
    }

    pub fn from_text(text: &str, overrides: &[String]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = split_pair(line)
                .ok_or_else(|| Error::InvalidConfig(format!("line {}: expected key=value", lineno + 1)))?;
            map.insert(k, v);
        }
        for o in overrides {
            let (k, v) = split_pair(o)
                .ok_or_else(|| Error::InvalidConfig(format!("override '{o}': expected key=value")))?;
            map.insert(k, v);
        }
        Self::from_map(&map)
    }

    pub fn from_map(map: &BTreeMap<String, String>) -> Result<Self> {
        let benchmark = parse_benchmark(map)?;
        let config = ExperimentConfig {
            algorithm: parse_algorithm(map)?,
            noise: parse_noise(map)?,
            replicates: get_parsed(map, "run.replicates")?.unwrap_or(1),
            budget: get_parsed(map, "run.budget")?.unwrap_or(DEFAULT_BUDGET),
            master_seed: get_parsed(map, "master_seed")?.unwrap_or(0),
            init: match map.get("run.init").map(String::as_str) {
                None | Some("uniform") => InitPoint::Uniform,
                Some(bits) => InitPoint::Fixed(
                    BitString::parse(bits)
                        .map_err(|_| Error::InvalidConfig(format!("run.init = '{bits}'")))?,
                ),
            },
            output: map.get("output").map(PathBuf::from),
            benchmark,
        };
        config.validate()?;
        Ok(config)
    }
}

fn split_pair(s: &str) -> Option<(String, String)> {
    let (k, v) = s.split_once('=')?;
    let k = k.trim();
    if k.is_empty() {
        return None;
    }
    Some((k.to_string(), v.trim().to_string()))
}

fn get_parsed<T: std::str::FromStr>(map: &BTreeMap<String, String>, key: &str) -> Result<Option<T>> {
    match map.get(key) {
        None => Ok(None),
        Some(v) => v
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidConfig(format!("{key} = '{v}'"))),
    }
}

fn require<T: std::str::FromStr>(map: &BTreeMap<String, String>, key: &str) -> Result<T> {
    get_parsed(map, key)?.ok_or_else(|| Error::InvalidConfig(format!("missing key {key}")))
}

fn parse_algorithm(map: &BTreeMap<String, String>) -> Result<AlgorithmSpec> {
    let kind = map
        .get("alg.kind")
        .ok_or_else(|| Error::InvalidConfig("missing key alg.kind".into()))?;
    let kind = match kind.as_str() {
        "rls" => AlgorithmKind::Rls,
        "metropolis" => AlgorithmKind::Metropolis {
            temperature: require(map, "alg.T")?,
        },
        "sa" => {
            let schedule = match map.get("alg.schedule").map(String::as_str) {
                Some("geometric") | None => TemperatureSchedule::Geometric {
                    t0: require(map, "alg.t0")?,
                    ratio: require(map, "alg.ratio")?,
                },
                Some("logarithmic") => TemperatureSchedule::Logarithmic {
                    c: require(map, "alg.c")?,
                },
                Some(other) => {
                    return Err(Error::InvalidConfig(format!("alg.schedule = '{other}'")))
                }
            };
            AlgorithmKind::SimulatedAnnealing { schedule }
        }
        "one_plus_one" => AlgorithmKind::OnePlusOneEa,
        "fast" => AlgorithmKind::FastOnePlusOneEa {
            beta: require(map, "alg.beta")?,
        },
        "fp" => AlgorithmKind::FpOnePlusOneEa,
        "one_comma_lambda" => AlgorithmKind::OneCommaLambdaEa {
            lambda: require(map, "alg.lambda")?,
        },
        "simple_ga" => AlgorithmKind::SimpleGa {
            mu: require(map, "alg.mu")?,
        },
        other => return Err(Error::InvalidConfig(format!("alg.kind = '{other}'"))),
    };
    Ok(AlgorithmSpec {
        kind,
        mutation_rate: get_parsed(map, "alg.rate")?,
    })
}

fn parse_benchmark(map: &BTreeMap<String, String>) -> Result<BenchmarkSpec> {
    let kind = map
        .get("bench.kind")
        .ok_or_else(|| Error::InvalidConfig("missing key bench.kind".into()))?;
    let spec = match kind.as_str() {
        "onemax" => BenchmarkSpec::one_max(require(map, "bench.n")?),
        "leadingones" => BenchmarkSpec::leading_ones(require(map, "bench.n")?),
        "jump" => BenchmarkSpec::jump(require(map, "bench.n")?, require(map, "bench.k")?),
        "plateau" => BenchmarkSpec::plateau(require(map, "bench.n")?, require(map, "bench.k")?),
        "needle" => BenchmarkSpec::needle(require(map, "bench.n")?),
        "linear" => {
            let weights: Vec<f64> = map
                .get("bench.weights")
                .ok_or_else(|| Error::InvalidConfig("missing key bench.weights".into()))?
                .split(',')
                .map(|w| {
                    w.trim()
                        .parse()
                        .map_err(|_| Error::InvalidConfig(format!("bench.weights entry '{w}'")))
                })
                .collect::<Result<_>>()?;
            BenchmarkSpec::linear(weights)
        }
        "poly" => {
            // bench.monomials = "2:0,2;1:1" — coefficient:indices pairs
            let monomials = map
                .get("bench.monomials")
                .map(|s| parse_monomials(s))
                .transpose()?
                .unwrap_or_default();
            BenchmarkSpec::monotone_polynomial(require(map, "bench.n")?, monomials)
        }
        other => return Err(Error::InvalidConfig(format!("bench.kind = '{other}'"))),
    };
    Ok(spec)
}

fn parse_monomials(s: &str) -> Result<Vec<Monomial>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|term| {
            let (c, idx) = term
                .split_once(':')
                .ok_or_else(|| Error::InvalidConfig(format!("monomial '{term}'")))?;
            let coefficient = c
                .trim()
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("monomial coefficient '{c}'")))?;
            let indices = idx
                .split(',')
                .map(|i| {
                    i.trim()
                        .parse()
                        .map_err(|_| Error::InvalidConfig(format!("monomial index '{i}'")))
                })
                .collect::<Result<_>>()?;
            Ok(Monomial {
                coefficient,
                indices,
            })
        })
        .collect()
}

fn parse_noise(map: &BTreeMap<String, String>) -> Result<NoiseSpec> {
    let kind = map.get("noise.kind").map(String::as_str).unwrap_or("none");
    let noise = match kind {
        "none" => NoiseSpec::None,
        "onebit" => NoiseSpec::OneBit {
            p: require(map, "noise.p")?,
        },
        "bitwise" => NoiseSpec::BitWise {
            q: require(map, "noise.q")?,
        },
        "pq" => NoiseSpec::PQNoise {
            p: require(map, "noise.p")?,
            q: require(map, "noise.q")?,
        },
        "additive" => {
            let dist = match map.get("noise.dist").map(String::as_str) {
                Some("gaussian") | None => AdditiveDist::Gaussian {
                    mean: get_parsed(map, "noise.mean")?.unwrap_or(0.0),
                    stddev: require(map, "noise.stddev")?,
                },
                Some("cauchy") => AdditiveDist::Cauchy {
                    location: get_parsed(map, "noise.location")?.unwrap_or(0.0),
                    scale: require(map, "noise.scale")?,
                },
                Some("constant") => AdditiveDist::Constant {
                    value: require(map, "noise.value")?,
                },
                Some("uniform") => AdditiveDist::Uniform {
                    low: require(map, "noise.low")?,
                    high: require(map, "noise.high")?,
                },
                Some(other) => return Err(Error::InvalidConfig(format!("noise.dist = '{other}'"))),
            };
            NoiseSpec::AdditivePosterior { dist }
        }
        "adversarial" => {
            let policy = match map.get("noise.adversary").map(String::as_str) {
                Some("anti") | None => AdversaryPolicy::AntiImprovement,
                Some("constant") => AdversaryPolicy::Constant {
                    value: require(map, "noise.adversary_value")?,
                },
                Some(other) => {
                    return Err(Error::InvalidConfig(format!("noise.adversary = '{other}'")))
                }
            };
            NoiseSpec::Adversarial {
                p: require(map, "noise.p")?,
                policy,
            }
        }
        other => return Err(Error::InvalidConfig(format!("noise.kind = '{other}'"))),
    };
    Ok(noise)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks::BenchmarkKind;

    #[test]
    fn minimal_config_with_defaults() {
        let cfg = ExperimentConfig::from_text(
            "alg.kind=rls\nbench.kind=onemax\nbench.n=5\n",
            &[],
        )
        .unwrap();
        assert!(matches!(cfg.algorithm.kind, AlgorithmKind::Rls));
        assert!(matches!(cfg.benchmark.kind, BenchmarkKind::OneMax));
        assert_eq!(cfg.budget, DEFAULT_BUDGET);
        assert_eq!(cfg.replicates, 1);
        assert!(matches!(cfg.init, InitPoint::Uniform));
        assert!(matches!(cfg.noise, NoiseSpec::None));
    }

    #[test]
    fn comments_whitespace_and_overrides() {
        let text = "# experiment\n\nalg.kind = one_comma_lambda\nalg.lambda = 4\n\
                    bench.kind = onemax\nbench.n = 10\nnoise.kind = onebit\nnoise.p = 0.3\n\
                    run.replicates = 7\nmaster_seed = 42\n";
        let cfg = ExperimentConfig::from_text(text, &["run.replicates=9".into()]).unwrap();
        assert!(matches!(
            cfg.algorithm.kind,
            AlgorithmKind::OneCommaLambdaEa { lambda: 4 }
        ));
        assert!(matches!(cfg.noise, NoiseSpec::OneBit { p } if p == 0.3));
        assert_eq!(cfg.replicates, 9); // override wins
        assert_eq!(cfg.master_seed, 42);
    }

    #[test]
    fn fixed_init_and_dimension_check() {
        let base = "alg.kind=rls\nbench.kind=onemax\nbench.n=4\n";
        let cfg =
            ExperimentConfig::from_text(&format!("{base}run.init=0101\n"), &[]).unwrap();
        assert!(matches!(cfg.init, InitPoint::Fixed(_)));
        assert!(ExperimentConfig::from_text(&format!("{base}run.init=010\n"), &[]).is_err());
    }

    #[test]
    fn all_algorithm_kinds_parse() {
        let cases = [
            ("alg.kind=metropolis\nalg.T=1.5\n", "metropolis"),
            ("alg.kind=sa\nalg.t0=2.0\nalg.ratio=0.99\n", "sa"),
            ("alg.kind=sa\nalg.schedule=logarithmic\nalg.c=1.0\n", "log"),
            ("alg.kind=one_plus_one\n", "opo"),
            ("alg.kind=fast\nalg.beta=1.5\n", "fast"),
            ("alg.kind=fp\n", "fp"),
            ("alg.kind=simple_ga\nalg.mu=8\n", "ga"),
        ];
        for (alg, label) in cases {
            let text = format!("{alg}bench.kind=onemax\nbench.n=6\n");
            assert!(ExperimentConfig::from_text(&text, &[]).is_ok(), "{label}");
        }
    }

    #[test]
    fn benchmark_and_noise_variants() {
        let text = "alg.kind=rls\nbench.kind=jump\nbench.n=8\nbench.k=3\n\
                    noise.kind=additive\nnoise.dist=cauchy\nnoise.scale=10\n";
        let cfg = ExperimentConfig::from_text(text, &[]).unwrap();
        assert!(matches!(cfg.benchmark.kind, BenchmarkKind::Jump { k: 3 }));
        assert!(matches!(
            cfg.noise,
            NoiseSpec::AdditivePosterior {
                dist: AdditiveDist::Cauchy { .. }
            }
        ));

        let text = "alg.kind=rls\nbench.kind=linear\nbench.weights=1.0, 2.0, 3.0\n";
        let cfg = ExperimentConfig::from_text(text, &[]).unwrap();
        assert_eq!(cfg.benchmark.n, 3);

        let text = "alg.kind=rls\nbench.kind=poly\nbench.n=3\nbench.monomials=2:0,2;1:1\n";
        let cfg = ExperimentConfig::from_text(text, &[]).unwrap();
        match &cfg.benchmark.kind {
            BenchmarkKind::MonotonePolynomial { monomials } => {
                assert_eq!(monomials.len(), 2);
                assert_eq!(monomials[0].indices, vec![0, 2]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn malformed_inputs_rejected() {
        assert!(ExperimentConfig::from_text("alg.kind=rls\n", &[]).is_err()); // no benchmark
        assert!(ExperimentConfig::from_text("nonsense line\n", &[]).is_err());
        assert!(ExperimentConfig::from_text(
            "alg.kind=warp\nbench.kind=onemax\nbench.n=4\n",
            &[]
        )
        .is_err());
        assert!(ExperimentConfig::from_text(
            "alg.kind=rls\nbench.kind=onemax\nbench.n=4\nrun.replicates=0\n",
            &[]
        )
        .is_err());
        assert!(ExperimentConfig::from_text(
            "alg.kind=rls\nbench.kind=onemax\nbench.n=4\nnoise.kind=onebit\nnoise.p=1.5\n",
            &[]
        )
        .is_err());
    }
}
