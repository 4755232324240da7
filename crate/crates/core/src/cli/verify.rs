use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bijection::{self, PhiTable, ShortestPaths};
use crate::error::{Error, Result};
use crate::graph::{self, PreisachGraph};
use crate::oracles;
use crate::permutation::Permutation;

pub const VERIFY_ALL_MAX_N: usize = 8;

/// Outcome of every structural check on one permutation.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub perm: Permutation,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Breadth-first and forward builders give the same labelled graph, whose
    /// edges are the transitions `U` and `D`.
    pub builders_agree: bool,
    /// `|V|` equals the number of increasing subsequences.
    pub cardinality_ok: bool,
    /// `Phi` is injective onto the enumerated increasing subsequences, its
    /// length equals the block count of every shortest path, and both inverses
    /// return the original vertex.
    pub bijection_ok: bool,
    /// Block counts agree with the independent alternation search.
    pub nesting_oracle_ok: bool,
    /// Maximum nesting degree equals the longest increasing subsequence.
    pub nesting_ok: bool,
    /// The cycle `(alpha, omega)` has loop return-point memory.
    pub lrpm_ok: bool,
    pub merge_identities_ok: bool,
    pub nesting_of_graph: usize,
    pub lis: usize,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.builders_agree
            && self.cardinality_ok
            && self.bijection_ok
            && self.nesting_oracle_ok
            && self.nesting_ok
            && self.lrpm_ok
            && self.merge_identities_ok
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "ok" } else { "FAILED" };
        writeln!(f, "perm: {}", self.perm)?;
        writeln!(f, "vertices: {}", self.vertex_count)?;
        writeln!(f, "edges: {}", self.edge_count)?;
        writeln!(f, "builders_agree: {}", mark(self.builders_agree))?;
        writeln!(f, "cardinality: {}", mark(self.cardinality_ok))?;
        writeln!(f, "bijection: {}", mark(self.bijection_ok))?;
        writeln!(f, "nesting_oracle: {}", mark(self.nesting_oracle_ok))?;
        writeln!(
            f,
            "nesting: {} (N(G) = {}, LIS = {})",
            mark(self.nesting_ok),
            self.nesting_of_graph,
            self.lis
        )?;
        writeln!(f, "lrpm: {}", mark(self.lrpm_ok))?;
        writeln!(f, "merge_identities: {}", mark(self.merge_identities_ok))?;
        writeln!(f, "elapsed_ms: {:.3}", self.elapsed.as_secs_f64() * 1e3)?;
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

struct BijectionChecks {
    bijection_ok: bool,
    nesting_oracle_ok: bool,
    nesting_of_graph: usize,
}

fn check_bijection(g: &PreisachGraph, max_vertices: usize) -> Result<BijectionChecks> {
    let rho = g.perm();
    let failed = BijectionChecks {
        bijection_ok: false,
        nesting_oracle_ok: false,
        nesting_of_graph: 0,
    };
    let paths = match ShortestPaths::new(g) {
        Ok(p) => p,
        Err(Error::UniquenessViolated(_)) | Err(Error::Unreachable(_)) => return Ok(failed),
        Err(e) => return Err(e),
    };
    let table = PhiTable::from_paths(&paths)?;
    let enumerated = oracles::enumerate_increasing(rho, max_vertices.max(1))?;
    let image: BTreeSet<_> = table.images().iter().cloned().collect();
    let oracle = bijection::nesting_degrees_oracle(rho, 2 * max_vertices + 2)?;

    let mut bijection_ok = table.is_injective() && image == enumerated;
    let mut nesting_oracle_ok = oracle.len() == g.vertex_count();
    let mut nesting_of_graph = 0;
    for (v, s) in g.vertices().iter().zip(table.images()) {
        let degree = paths.nesting_degree(v)?;
        nesting_of_graph = nesting_of_graph.max(degree);
        bijection_ok &= s.check_against(rho).is_ok()
            && s.len() == degree
            && table.invert(s).as_ref() == Ok(v)
            && bijection::phi_inverse_constructive(rho, s).as_ref() == Ok(v);
        nesting_oracle_ok &= oracle.get(v) == Some(&degree);
    }
    Ok(BijectionChecks {
        bijection_ok,
        nesting_oracle_ok,
        nesting_of_graph,
    })
}

/// Builds the graph both ways and checks every structural identity. A vertex
/// budget overrun is returned as an error; every other problem is a failed
/// flag in the report.
pub fn cmd_verify(rho: &Permutation, max_vertices: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    let bfs = graph::build_bfs(rho, max_vertices)?;
    let forward = graph::build_forward(rho, max_vertices);
    let builders_agree = matches!(&forward, Ok(f) if *f == bfs) && bfs.edges_follow_transitions();

    let cardinality_ok = oracles::count_increasing(rho) == BigUint::from(bfs.vertex_count());
    let checks = check_bijection(&bfs, max_vertices)?;
    let lis = oracles::lis_patience(rho);

    let alpha = bfs.alpha();
    let omega = bfs.omega();
    let lrpm_ok = graph::cycle_of(rho, &alpha, &omega).is_ok_and(|c| graph::check_lrpm(rho, &c));
    let merge_identities_ok = graph::merge_identity_up(rho)? && graph::merge_identity_down(rho)?;

    Ok(VerifyReport {
        perm: rho.clone(),
        vertex_count: bfs.vertex_count(),
        edge_count: bfs.edge_count(),
        builders_agree,
        cardinality_ok,
        bijection_ok: checks.bijection_ok,
        nesting_oracle_ok: checks.nesting_oracle_ok,
        nesting_ok: checks.nesting_of_graph == lis,
        lrpm_ok,
        merge_identities_ok,
        nesting_of_graph: checks.nesting_of_graph,
        lis,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone)]
pub struct VerifyAllSummary {
    pub n: usize,
    pub permutations: usize,
    pub total_vertices: usize,
    /// Failing permutations in lexicographic order.
    pub failures: Vec<Permutation>,
}

impl fmt::Display for VerifyAllSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "permutations: {}", self.permutations)?;
        writeln!(f, "total_vertices: {}", self.total_vertices)?;
        writeln!(f, "failures: {}", self.failures.len())?;
        for p in &self.failures {
            writeln!(f, "  {p}")?;
        }
        write!(
            f,
            "result: {}",
            if self.failures.is_empty() {
                "PASS"
            } else {
                "FAIL"
            }
        )
    }
}

/// Runs [`cmd_verify`] on every permutation of `{1, ..., n}`.
pub fn cmd_verify_all(n: usize, max_vertices: usize) -> Result<VerifyAllSummary> {
    if n > VERIFY_ALL_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: VERIFY_ALL_MAX_N,
        });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let reports = perms
        .par_iter()
        .map(|p| cmd_verify(p, max_vertices))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyAllSummary {
        n,
        permutations: reports.len(),
        total_vertices: reports.iter().map(|r| r.vertex_count).sum(),
        failures: reports
            .into_iter()
            .filter(|r| !r.passed())
            .map(|r| r.perm)
            .collect(),
    })
}
