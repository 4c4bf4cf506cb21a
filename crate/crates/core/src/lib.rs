//! Simulation and verification lab for randomized search heuristics on
//! pseudo-Boolean functions under noise.
//!
//! The crate provides the classic single-trajectory heuristics (RLS,
//! Metropolis, simulated annealing, (1+1) EA variants, (1,λ) EA) and the
//! mutation-based simple GA, the standard prior/posterior noise models,
//! the usual benchmark functions (OneMax, LeadingOnes, Jump, Plateau,
//! Needle, linear functions, monotone polynomials), exact small-instance
//! Markov-chain oracles, and the statistical machinery to compare
//! simulated runtime distributions against analytic bounds.

pub mod acceptance;
pub mod benchmarks;
pub mod bitstring;
pub mod config;
pub mod harness;
pub mod heuristics;
pub mod noise;
pub mod oracle;
pub mod rng;
pub mod stats;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
