//! Preisach graphs of permutations.
//!
//! For a permutation `rho` of `{1, ..., N}` the Preisach graph has as
//! vertices the spin configurations reachable from the all-down state under
//! two maps: `U` flips the lowest down spin up, `D` flips down the first up
//! spin in the scan order given by `rho`. Its vertices are in bijection with
//! the increasing subsequences of `rho`, and the number of alternating
//! `U`/`D` blocks needed to reach a vertex equals the length of the
//! corresponding subsequence.
//!
//! ```
//! use preisach::{build_bfs, nesting_of_graph, lis_patience, Permutation};
//!
//! let rho = Permutation::new(vec![2, 3, 1]).unwrap();
//! let g = build_bfs(&rho, 1 << 20).unwrap();
//! assert_eq!(g.vertex_count(), 5);
//! assert_eq!(nesting_of_graph(&g).unwrap(), lis_patience(&rho));
//! ```

pub mod bijection;
pub mod cli;
pub mod error;
pub mod graph;
pub mod oracles;
pub mod permutation;
pub mod spin;

pub use bijection::{
    block_decomposition, nesting_degree, nesting_degree_oracle, nesting_of_graph, phi, phi_inverse,
    phi_inverse_constructive, shortest_path, BlockDecomposition, IncreasingSubsequence, Path,
    PhiTable, ShortestPaths,
};
pub use error::{Error, Result};
pub use graph::{
    build_bfs, build_forward, check_absorption, check_lrpm, cycle_of, d_orbit, decompose,
    loop_vertices, u_orbit, Cycle, Decomposition, EdgeKind, LabeledEdge, PreisachGraph,
    DEFAULT_MAX_VERTICES,
};
pub use oracles::{count_increasing, enumerate_increasing, lis_bruteforce, lis_patience};
pub use permutation::{invert, make_permutation, Permutation};
pub use spin::{apply_d, apply_u, i_minus, i_plus, Spin, SpinConfig, SpinIndex};
