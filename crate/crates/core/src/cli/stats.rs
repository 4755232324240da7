use std::fmt;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bijection;
use crate::error::{Error, Result};
use crate::graph;
use crate::oracles;
use crate::permutation::Permutation;

/// Uniform permutation of `{1, ..., n}` from a ChaCha8 stream keyed by
/// `(seed, index)`.
pub fn random_permutation(n: usize, seed: u64, index: u64) -> Result<Permutation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut values: Vec<usize> = (1..=n).collect();
    values.shuffle(&mut rng);
    Permutation::new(values)
}

#[derive(Debug, Clone, PartialEq)]
pub struct StatsReport {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub lis_mean: f64,
    /// Sample standard deviation (zero for a single sample).
    pub lis_stddev: f64,
    /// Samples whose graph was built and whose nesting degree matched the LIS.
    pub nesting_checked: usize,
    /// Samples whose graph was built and did not match.
    pub nesting_mismatches: usize,
    /// Samples skipped because their graph exceeds the vertex budget.
    pub budget_skipped: usize,
}

impl fmt::Display for StatsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "samples: {}", self.samples)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "lis_mean: {}", self.lis_mean)?;
        writeln!(f, "lis_stddev: {}", self.lis_stddev)?;
        writeln!(f, "nesting_checked: {}", self.nesting_checked)?;
        writeln!(f, "nesting_mismatches: {}", self.nesting_mismatches)?;
        write!(f, "budget_skipped: {}", self.budget_skipped)
    }
}

struct Sample {
    lis: usize,
    // None when the graph is over budget
    nesting_matches: Option<bool>,
}

fn sample(n: usize, seed: u64, index: u64, max_vertices: usize) -> Result<Sample> {
    let rho = random_permutation(n, seed, index)?;
    let lis = oracles::lis_patience(&rho);
    if oracles::count_increasing(&rho) > BigUint::from(max_vertices) {
        return Ok(Sample {
            lis,
            nesting_matches: None,
        });
    }
    let g = graph::build_bfs(&rho, max_vertices)?;
    let nesting = bijection::nesting_of_graph(&g)?;
    Ok(Sample {
        lis,
        nesting_matches: Some(nesting == lis),
    })
}

/// LIS statistics over `samples` random permutations, confirming
/// `N(G) = LIS` on every sample whose graph fits in `max_vertices`.
pub fn cmd_stats(n: usize, samples: usize, seed: u64, max_vertices: usize) -> Result<StatsReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let results = (0..samples as u64)
        .into_par_iter()
        .map(|i| sample(n, seed, i, max_vertices))
        .collect::<Result<Vec<_>>>()?;

    let count = results.len() as f64;
    let lis_mean = results.iter().map(|s| s.lis as f64).sum::<f64>() / count;
    let lis_stddev = if results.len() > 1 {
        let ss: f64 = results
            .iter()
            .map(|s| (s.lis as f64 - lis_mean).powi(2))
            .sum();
        (ss / (count - 1.0)).sqrt()
    } else {
        0.0
    };
    Ok(StatsReport {
        n,
        samples,
        seed,
        lis_mean,
        lis_stddev,
        nesting_checked: results
            .iter()
            .filter(|s| s.nesting_matches == Some(true))
            .count(),
        nesting_mismatches: results
            .iter()
            .filter(|s| s.nesting_matches == Some(false))
            .count(),
        budget_skipped: results
            .iter()
            .filter(|s| s.nesting_matches.is_none())
            .count(),
    })
}
