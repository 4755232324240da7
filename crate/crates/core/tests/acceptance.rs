//! Acceptance suite. Prints one PASS/FAIL line per criterion and fails if
//! any criterion fails. All checks are exact; runtime limits are enforced.
//!
//! Run with `cargo test --release --test acceptance -- --nocapture` to see
//! the report.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use preisach::cli::{
    cmd_stats, cmd_verify, export_dot, export_json, random_permutation, VerifyReport,
};
use preisach::spin::{apply_d_n, apply_u_n};
use preisach::*;

const BUDGET: usize = 1 << 20;
const RANDOM_SIZES: [usize; 3] = [10, 13, 16];
const RANDOM_PER_SIZE: u64 = 500;
const RANDOM_SEED: u64 = 20_240_601;

struct Criterion {
    id: u32,
    name: &'static str,
    passed: bool,
    detail: String,
}

struct Suites {
    exhaustive: Vec<VerifyReport>,
    exhaustive_elapsed: Duration,
    random: Vec<VerifyReport>,
    random_elapsed: Duration,
}

fn run_suites() -> Suites {
    let start = Instant::now();
    let exhaustive: Vec<VerifyReport> = (1..=7)
        .flat_map(Permutation::all)
        .map(|p| cmd_verify(&p, BUDGET).expect("exhaustive graphs fit the budget"))
        .collect();
    let exhaustive_elapsed = start.elapsed();

    let start = Instant::now();
    let random: Vec<VerifyReport> = RANDOM_SIZES
        .iter()
        .flat_map(|&n| {
            (0..RANDOM_PER_SIZE).map(move |i| random_permutation(n, RANDOM_SEED, i).unwrap())
        })
        .map(|p| cmd_verify(&p, BUDGET).expect("random graphs fit the budget"))
        .collect();
    let random_elapsed = start.elapsed();

    Suites {
        exhaustive,
        exhaustive_elapsed,
        random,
        random_elapsed,
    }
}

fn failing(reports: &[VerifyReport], check: impl Fn(&VerifyReport) -> bool) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !check(r))
        .map(|r| r.perm.to_string())
        .take(5)
        .collect()
}

fn criterion_1(s: &Suites) -> Criterion {
    let bad = failing(&s.exhaustive, VerifyReport::passed);
    let count = s.exhaustive.len();
    let in_time = s.exhaustive_elapsed < Duration::from_secs(120);
    Criterion {
        id: 1,
        name: "exhaustive verification, N = 1..7",
        passed: count == 5913 && bad.is_empty() && in_time,
        detail: format!(
            "{count} permutations, failures {bad:?}, {:.1}s (limit 120s)",
            s.exhaustive_elapsed.as_secs_f64()
        ),
    }
}

fn criterion_2(s: &Suites) -> Criterion {
    let bad = failing(&s.random, VerifyReport::passed);
    let count = s.random.len();
    let in_time = s.random_elapsed < Duration::from_secs(300);
    let largest = s.random.iter().map(|r| r.vertex_count).max().unwrap_or(0);
    Criterion {
        id: 2,
        name: "randomized suite, 500 permutations at N = 10, 13, 16",
        passed: count == 1500 && bad.is_empty() && in_time,
        detail: format!(
            "{count} permutations, failures {bad:?}, largest graph {largest} vertices, {:.1}s (limit 300s)",
            s.random_elapsed.as_secs_f64()
        ),
    }
}

fn criterion_3() -> Criterion {
    let rho = make_permutation(&[2, 3, 1]).unwrap();
    let small_count = build_bfs(&rho, BUDGET).unwrap().vertex_count() == 5;

    let rho = make_permutation(&[2, 4, 3, 1]).unwrap();
    let builders_agree = build_bfs(&rho, BUDGET).unwrap() == build_forward(&rho, BUDGET).unwrap();

    let rho = make_permutation(&[2, 4, 3, 5, 1]).unwrap();
    let g = build_bfs(&rho, BUDGET).unwrap();
    let vertex = apply_u_n(
        &apply_d_n(&apply_u_n(&g.alpha(), &rho, 5).unwrap(), &rho, 2).unwrap(),
        &rho,
        1,
    )
    .unwrap();
    let image = phi(&g, &vertex).unwrap();
    let path_image = image.values() == [2, 4, 5];

    Criterion {
        id: 3,
        name: "worked example fixtures",
        passed: small_count && builders_agree && path_image,
        detail: format!(
            "|V(2,3,1)| = 5: {small_count}; builders agree on (2,4,3,1): {builders_agree}; Phi({vertex}) = {image}"
        ),
    }
}

fn criterion_4(s: &Suites) -> Criterion {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let mut lis_pair = |rho: &Permutation| {
        checked += 1;
        if lis_patience(rho) != lis_bruteforce(rho).unwrap() {
            mismatches.push(rho.to_string());
        }
    };
    for n in 1..=7 {
        Permutation::all(n).for_each(|p| lis_pair(&p));
    }
    for n in 8..=12 {
        for i in 0..200 {
            lis_pair(&random_permutation(n, RANDOM_SEED + 1, i).unwrap());
        }
    }

    let mut counted = 0;
    let mut count_mismatches = Vec::new();
    for r in s.exhaustive.iter().chain(&s.random) {
        let enumerated = enumerate_increasing(&r.perm, BUDGET).unwrap();
        counted += 1;
        if BigUint::from(enumerated.len()) != count_increasing(&r.perm) {
            count_mismatches.push(r.perm.to_string());
        }
    }
    Criterion {
        id: 4,
        name: "oracle cross-validation",
        passed: mismatches.is_empty() && count_mismatches.is_empty(),
        detail: format!(
            "LIS patience = brute force on {checked} permutations (mismatches {mismatches:?}); \
             |enumerate| = count on {counted} (mismatches {count_mismatches:?})"
        ),
    }
}

fn criterion_5(s: &Suites) -> Criterion {
    let all: Vec<_> = s.exhaustive.iter().chain(&s.random).cloned().collect();
    let bad = failing(&all, |r| r.nesting_oracle_ok);
    let vertices: usize = all.iter().map(|r| r.vertex_count).sum();
    Criterion {
        id: 5,
        name: "nesting degree = alternation-search oracle",
        passed: bad.is_empty(),
        detail: format!(
            "{vertices} vertices over {} graphs, failures {bad:?}",
            all.len()
        ),
    }
}

fn criterion_6(s: &Suites) -> Criterion {
    let by_perm: HashMap<&Permutation, &VerifyReport> =
        s.exhaustive.iter().map(|r| (&r.perm, r)).collect();
    let mut bad = Vec::new();
    for r in &s.exhaustive {
        let inv = by_perm[&invert(&r.perm)];
        if inv.vertex_count != r.vertex_count || inv.nesting_of_graph != r.nesting_of_graph {
            bad.push(r.perm.to_string());
        }
    }
    for r in &s.random {
        let h = build_bfs(&invert(&r.perm), BUDGET).unwrap();
        if h.vertex_count() != r.vertex_count || nesting_of_graph(&h).unwrap() != r.nesting_of_graph
        {
            bad.push(r.perm.to_string());
        }
    }
    Criterion {
        id: 6,
        name: "inverse-permutation invariants",
        passed: bad.is_empty(),
        detail: format!(
            "{} permutations, failures {:?}",
            s.exhaustive.len() + s.random.len(),
            &bad[..bad.len().min(5)]
        ),
    }
}

fn criterion_7() -> Criterion {
    let start = Instant::now();
    let report = cmd_stats(400, 200, 7, BUDGET).unwrap();
    let elapsed = start.elapsed();
    let in_band = (33.0..=38.0).contains(&report.lis_mean);
    Criterion {
        id: 7,
        name: "Monte-Carlo LIS mean, n = 400",
        passed: in_band && elapsed < Duration::from_secs(30),
        detail: format!(
            "lis_mean = {:.3} (band [33, 38]), stddev {:.3}, {:.2}s (limit 30s)",
            report.lis_mean,
            report.lis_stddev,
            elapsed.as_secs_f64()
        ),
    }
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

fn criterion_8() -> Criterion {
    let rho = make_permutation(&[2, 4, 3, 5, 1]).unwrap();
    let export = || {
        let g = build_bfs(&rho, BUDGET).unwrap();
        (export_dot(&g), export_json(&g))
    };
    let runs: Vec<_> = [1, 1, 4, 8]
        .into_iter()
        .map(|t| in_pool(t, export))
        .collect();
    let exports_equal = runs.windows(2).all(|w| w[0] == w[1]);

    let stats = |threads| in_pool(threads, || cmd_stats(20, 50, 7, BUDGET).unwrap());
    let key = |r: &cli::StatsReport| {
        (
            r.lis_mean.to_bits(),
            r.lis_stddev.to_bits(),
            r.nesting_checked,
            r.budget_skipped,
        )
    };
    let reports: Vec<_> = [1, 1, 4, 8].into_iter().map(stats).collect();
    let stats_equal = reports.windows(2).all(|w| key(&w[0]) == key(&w[1]));
    let all_confirmed = reports[0].nesting_checked == 50;

    Criterion {
        id: 8,
        name: "determinism of exports and stats",
        passed: exports_equal && stats_equal && all_confirmed,
        detail: format!(
            "DOT/JSON identical across runs and 1/4/8 threads: {exports_equal}; \
             stats bit-identical: {stats_equal}; nesting_checked = {}",
            reports[0].nesting_checked
        ),
    }
}

#[test]
fn acceptance() {
    let suites = run_suites();
    let criteria = vec![
        criterion_1(&suites),
        criterion_2(&suites),
        criterion_3(),
        criterion_4(&suites),
        criterion_5(&suites),
        criterion_6(&suites),
        criterion_7(),
        criterion_8(),
    ];
    println!();
    for c in &criteria {
        println!(
            "[{}] {}. {}: {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            c.detail
        );
    }
    let failed: BTreeSet<u32> = criteria
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.id)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
