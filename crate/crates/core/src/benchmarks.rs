//! Benchmark fitness functions on {0,1}^n.
//!
//! All benchmarks are maximized and (where well defined) have the
//! all-ones string as optimum. Fitness values are `f64` throughout so
//! that noisy and additive-noise values share one interface.

use serde::Serialize;

use crate::bitstring::BitString;
use crate::{Error, Result};

/// One monomial of a monotone polynomial: coefficient times the product
/// of the selected bits (0-based positions).
#[derive(Clone, Debug, Serialize)]
pub struct Monomial {
    pub coefficient: f64,
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub enum BenchmarkKind {
    OneMax,
    Linear { weights: Vec<f64> },
    LeadingOnes,
    Jump { k: usize },
    Plateau { k: usize },
    MonotonePolynomial { monomials: Vec<Monomial> },
}

/// A benchmark function together with its dimension.
#[derive(Clone, Debug, Serialize)]
pub struct BenchmarkSpec {
    pub n: usize,
    pub kind: BenchmarkKind,
}

impl BenchmarkSpec {
    pub fn one_max(n: usize) -> Self {
        BenchmarkSpec {
            n,
            kind: BenchmarkKind::OneMax,
        }
    }

    pub fn leading_ones(n: usize) -> Self {
        BenchmarkSpec {
            n,
            kind: BenchmarkKind::LeadingOnes,
        }
    }

    pub fn linear(weights: Vec<f64>) -> Self {
        BenchmarkSpec {
            n: weights.len(),
            kind: BenchmarkKind::Linear { weights },
        }
    }

    pub fn jump(n: usize, k: usize) -> Self {
        BenchmarkSpec {
            n,
            kind: BenchmarkKind::Jump { k },
        }
    }

    pub fn plateau(n: usize, k: usize) -> Self {
        BenchmarkSpec {
            n,
            kind: BenchmarkKind::Plateau { k },
        }
    }

    /// Needle-in-the-haystack: the special case Plateau with k = n.
    pub fn needle(n: usize) -> Self {
        Self::plateau(n, n)
    }

    pub fn monotone_polynomial(n: usize, monomials: Vec<Monomial>) -> Self {
        BenchmarkSpec {
            n,
            kind: BenchmarkKind::MonotonePolynomial { monomials },
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidBenchmark("n must be at least 1".into()));
        }
        match &self.kind {
            BenchmarkKind::Jump { k } | BenchmarkKind::Plateau { k } => {
                if *k < 1 || *k > self.n {
                    return Err(Error::InvalidBenchmark(format!(
                        "k = {k} out of range [1..{}]",
                        self.n
                    )));
                }
            }
            BenchmarkKind::Linear { weights } => {
                if weights.len() != self.n {
                    return Err(Error::InvalidBenchmark(
                        "weights length must equal n".into(),
                    ));
                }
            }
            BenchmarkKind::MonotonePolynomial { monomials } => {
                for m in monomials {
                    if m.coefficient < 0.0 {
                        return Err(Error::InvalidBenchmark(
                            "negative monomial coefficient".into(),
                        ));
                    }
                    if m.indices.iter().any(|&i| i >= self.n) {
                        return Err(Error::InvalidBenchmark(
                            "monomial index out of range".into(),
                        ));
                    }
                }
            }
            BenchmarkKind::OneMax | BenchmarkKind::LeadingOnes => {}
        }
        Ok(())
    }
}

/// Evaluate a benchmark exactly.
pub fn eval_benchmark(spec: &BenchmarkSpec, x: &BitString) -> Result<f64> {
    if x.len() != spec.n {
        return Err(Error::DimensionMismatch);
    }
    spec.validate()?;
    let n = spec.n;
    Ok(match &spec.kind {
        BenchmarkKind::OneMax => x.ones_count() as f64,
        BenchmarkKind::Linear { weights } => (0..n)
            .filter(|&i| x.get(i))
            .map(|i| weights[i])
            .sum(),
        BenchmarkKind::LeadingOnes => {
            let mut lo = 0usize;
            while lo < n && x.get(lo) {
                lo += 1;
            }
            lo as f64
        }
        BenchmarkKind::Jump { k } => {
            let om = x.ones_count();
            if om <= n - k || om == n {
                (om + k) as f64
            } else {
                (n - om) as f64
            }
        }
        BenchmarkKind::Plateau { k } => {
            let om = x.ones_count();
            if om == n {
                (n + k) as f64
            } else if om + k <= n {
                (om + k) as f64
            } else {
                n as f64
            }
        }
        BenchmarkKind::MonotonePolynomial { monomials } => monomials
            .iter()
            .filter(|m| m.indices.iter().all(|&i| x.get(i)))
            .map(|m| m.coefficient)
            .sum(),
    })
}

/// The all-ones optimum. Errors for a linear function with a non-positive
/// weight, where the all-ones string need not be the unique maximum.
pub fn optimum(spec: &BenchmarkSpec) -> Result<BitString> {
    spec.validate()?;
    if let BenchmarkKind::Linear { weights } = &spec.kind {
        if weights.iter().any(|&w| w <= 0.0) {
            return Err(Error::OptimumNotAllOnes);
        }
    }
    Ok(BitString::ones(spec.n))
}

/// Exhaustive weak-monotonicity check: flipping any single 0-bit to 1
/// never decreases fitness. Sufficient by transitivity along chains.
pub fn is_weakly_monotonic(spec: &BenchmarkSpec) -> Result<bool> {
    spec.validate()?;
    if spec.n > 16 {
        return Err(Error::ExhaustiveCheckInfeasible(spec.n));
    }
    let n = spec.n;
    for v in 0u64..(1 << n) {
        let x = BitString::from_index(n, v);
        let fx = eval_benchmark(spec, &x)?;
        for i in 0..n {
            if !x.get(i) {
                let mut y = x.clone();
                y.flip(i);
                if eval_benchmark(spec, &y)? < fx {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(spec: &BenchmarkSpec, s: &str) -> f64 {
        eval_benchmark(spec, &BitString::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn onemax_and_leadingones() {
        assert_eq!(eval(&BenchmarkSpec::one_max(5), "10110"), 3.0);
        assert_eq!(eval(&BenchmarkSpec::leading_ones(4), "1101"), 2.0);
        assert_eq!(eval(&BenchmarkSpec::leading_ones(4), "0111"), 0.0);
        assert_eq!(eval(&BenchmarkSpec::leading_ones(4), "1111"), 4.0);
    }

    #[test]
    fn jump_values() {
        let spec = BenchmarkSpec::jump(6, 2);
        assert_eq!(eval(&spec, "111101"), 1.0); // gap level
        assert_eq!(eval(&spec, "111111"), 8.0);
        assert_eq!(eval(&spec, "111100"), 6.0); // local optimum level n-k
        assert_eq!(eval(&spec, "000000"), 2.0);
    }

    #[test]
    fn plateau_and_needle_values() {
        let spec = BenchmarkSpec::plateau(5, 2);
        assert_eq!(eval(&spec, "11101"), 5.0); // gap has fitness n
        assert_eq!(eval(&spec, "11100"), 5.0); // level n-k also n
        assert_eq!(eval(&spec, "11111"), 7.0);
        assert_eq!(eval(&spec, "00000"), 2.0);

        let needle = BenchmarkSpec::needle(4);
        assert_eq!(eval(&needle, "0110"), 4.0);
        assert_eq!(eval(&needle, "0000"), 4.0);
        assert_eq!(eval(&needle, "1111"), 8.0);
    }

    #[test]
    fn plateau_levels_share_fitness() {
        // All points with n-k <= |x| <= n-1 share fitness n.
        for n in 2..=10usize {
            for k in 2..=n {
                let spec = BenchmarkSpec::plateau(n, k);
                for v in 0u64..(1 << n) {
                    let x = BitString::from_index(n, v);
                    let om = x.ones_count();
                    let f = eval_benchmark(&spec, &x).unwrap();
                    if om >= n - k && om <= n - 1 {
                        assert_eq!(f, n as f64);
                    }
                }
                assert_eq!(
                    eval_benchmark(&spec, &BitString::ones(n)).unwrap(),
                    (n + k) as f64
                );
            }
        }
    }

    #[test]
    fn linear_and_monotone_polynomial() {
        let spec = BenchmarkSpec::linear(vec![1.0, 2.0, 3.0]);
        assert_eq!(eval(&spec, "101"), 4.0);
        assert_eq!(optimum(&spec).unwrap(), BitString::ones(3));

        let spec = BenchmarkSpec::linear(vec![1.0, -2.0, 3.0]);
        assert!(matches!(optimum(&spec), Err(Error::OptimumNotAllOnes)));

        let poly = BenchmarkSpec::monotone_polynomial(
            3,
            vec![
                Monomial {
                    coefficient: 2.0,
                    indices: vec![0, 2],
                },
                Monomial {
                    coefficient: 1.0,
                    indices: vec![1],
                },
            ],
        );
        assert_eq!(eval(&poly, "101"), 2.0);
        assert_eq!(eval(&poly, "111"), 3.0);
        assert_eq!(eval(&poly, "010"), 1.0);
    }

    #[test]
    fn malformed_specs_rejected() {
        assert!(eval_benchmark(
            &BenchmarkSpec::jump(5, 6),
            &BitString::zeros(5)
        )
        .is_err());
        assert!(eval_benchmark(
            &BenchmarkSpec::jump(5, 0),
            &BitString::zeros(5)
        )
        .is_err());
        let bad_poly = BenchmarkSpec::monotone_polynomial(
            3,
            vec![Monomial {
                coefficient: -1.0,
                indices: vec![0],
            }],
        );
        assert!(eval_benchmark(&bad_poly, &BitString::zeros(3)).is_err());
        assert!(eval_benchmark(&BenchmarkSpec::one_max(4), &BitString::zeros(5)).is_err());
    }

    #[test]
    fn optimum_is_maximal_exhaustive() {
        let specs = vec![
            BenchmarkSpec::one_max(8),
            BenchmarkSpec::leading_ones(8),
            BenchmarkSpec::jump(8, 3),
            BenchmarkSpec::plateau(8, 3),
            BenchmarkSpec::needle(8),
            BenchmarkSpec::linear(vec![1.0, 2.0, 3.0, 0.5, 1.5, 2.5, 3.5, 0.25]),
        ];
        for spec in specs {
            let opt = optimum(&spec).unwrap();
            let fopt = eval_benchmark(&spec, &opt).unwrap();
            for v in 0u64..(1 << spec.n) {
                let x = BitString::from_index(spec.n, v);
                assert!(eval_benchmark(&spec, &x).unwrap() <= fopt);
            }
        }
    }

    #[test]
    fn jump_k1_is_shifted_onemax() {
        for n in 1..=12usize {
            let spec = BenchmarkSpec::jump(n, 1);
            for v in 0u64..(1 << n) {
                let x = BitString::from_index(n, v);
                assert_eq!(
                    eval_benchmark(&spec, &x).unwrap(),
                    x.ones_count() as f64 + 1.0
                );
            }
        }
    }

    #[test]
    fn weak_monotonicity_verdicts() {
        assert!(is_weakly_monotonic(&BenchmarkSpec::one_max(8)).unwrap());
        assert!(is_weakly_monotonic(&BenchmarkSpec::leading_ones(8)).unwrap());
        assert!(is_weakly_monotonic(&BenchmarkSpec::plateau(8, 3)).unwrap());
        assert!(is_weakly_monotonic(&BenchmarkSpec::needle(8)).unwrap());
        assert!(!is_weakly_monotonic(&BenchmarkSpec::jump(8, 3)).unwrap());
        assert!(is_weakly_monotonic(&BenchmarkSpec::jump(8, 1)).unwrap());
        assert!(matches!(
            is_weakly_monotonic(&BenchmarkSpec::one_max(17)),
            Err(Error::ExhaustiveCheckInfeasible(17))
        ));
    }
}
