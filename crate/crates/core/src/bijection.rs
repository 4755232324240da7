//! Shortest paths from `alpha`, their switch-back decomposition, and the
//! map from vertices to increasing subsequences.
//!
//! The path to every vertex is unique; [`ShortestPaths`] checks this while
//! it runs the breadth-first search and reports a tie as an error instead of
//! picking one. Reading the labels of the edges that enter the switch-back
//! states from last to first gives an increasing subsequence whose length is
//! the number of alternating `U`/`D` blocks on the path.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, LabeledEdge, PreisachGraph, DEFAULT_MAX_VERTICES};
use crate::permutation::Permutation;
use crate::spin::{self, SpinConfig, SpinIndex};

/// A strictly increasing run of values of `rho` appearing at strictly
/// increasing positions. The empty subsequence is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingSubsequence {
    values: Vec<usize>,
}

impl IncreasingSubsequence {
    pub fn empty() -> Self {
        IncreasingSubsequence { values: Vec::new() }
    }

    pub fn new(rho: &Permutation, values: Vec<usize>) -> Result<Self> {
        let s = IncreasingSubsequence { values };
        s.check_against(rho)?;
        Ok(s)
    }

    /// Checks value and position monotonicity against `rho`.
    pub fn check_against(&self, rho: &Permutation) -> Result<()> {
        let n = rho.len();
        if let Some(&v) = self.values.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::NotIncreasing(format!("value {v} is not in 1..={n}")));
        }
        for w in self.values.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::NotIncreasing(format!(
                    "values {} and {} are not increasing",
                    w[0], w[1]
                )));
            }
            if rho.position_of(w[0]) >= rho.position_of(w[1]) {
                return Err(Error::NotIncreasing(format!(
                    "value {} does not occur before {} in {rho}",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for IncreasingSubsequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A walk from `alpha` along graph edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub start: SpinConfig,
    pub edges: Vec<LabeledEdge>,
    pub end: SpinConfig,
}

impl Path {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn kinds(&self) -> Vec<EdgeKind> {
        self.edges.iter().map(|e| e.kind).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub kind: EdgeKind,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// States where the path changes kind, followed by the destination.
    pub switchbacks: Vec<SpinConfig>,
    /// `labels[i]` is the label of the edge entering `switchbacks[i]`.
    pub labels: Vec<SpinIndex>,
}

/// Breadth-first shortest-path tree rooted at `alpha`, with uniqueness of
/// every shortest path verified during construction.
pub struct ShortestPaths<'g> {
    graph: &'g PreisachGraph,
    // parent[v] = (predecessor, kind, label) of the last edge on the path
    parent: Vec<Option<(usize, EdgeKind, SpinIndex)>>,
    dist: Vec<usize>,
}

impl<'g> ShortestPaths<'g> {
    pub fn new(graph: &'g PreisachGraph) -> Result<Self> {
        let count = graph.vertex_count();
        let root = graph
            .index_of(&graph.alpha())
            .ok_or_else(|| Error::NotAVertex(graph.alpha().to_string()))?;
        let mut dist = vec![usize::MAX; count];
        let mut ways = vec![0u8; count];
        let mut parent = vec![None; count];
        let mut queue = VecDeque::new();
        dist[root] = 0;
        ways[root] = 1;
        queue.push_back(root);

        while let Some(v) = queue.pop_front() {
            for kind in [EdgeKind::U, EdgeKind::D] {
                let Some((w, label)) = graph.successor_index(v, kind) else {
                    continue;
                };
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    ways[w] = ways[v];
                    parent[w] = Some((v, kind, label));
                    queue.push_back(w);
                } else if dist[w] == dist[v] + 1 {
                    ways[w] = ways[w].saturating_add(ways[v]);
                }
            }
        }

        for (i, (&d, &k)) in dist.iter().zip(&ways).enumerate() {
            if d == usize::MAX {
                return Err(Error::Unreachable(graph.vertex(i).to_string()));
            }
            if k > 1 {
                return Err(Error::UniquenessViolated(graph.vertex(i).to_string()));
            }
        }
        Ok(ShortestPaths {
            graph,
            parent,
            dist,
        })
    }

    pub fn graph(&self) -> &PreisachGraph {
        self.graph
    }

    pub fn distance(&self, sigma: &SpinConfig) -> Result<usize> {
        Ok(self.dist[self.vertex_index(sigma)?])
    }

    fn vertex_index(&self, sigma: &SpinConfig) -> Result<usize> {
        self.graph
            .index_of(sigma)
            .ok_or_else(|| Error::NotAVertex(sigma.to_string()))
    }

    /// Kinds and labels along the path to vertex `i`, first edge first.
    fn steps_to(&self, mut i: usize) -> Vec<(usize, usize, EdgeKind, SpinIndex)> {
        let mut steps = Vec::with_capacity(self.dist[i]);
        while let Some((p, kind, label)) = self.parent[i] {
            steps.push((p, i, kind, label));
            i = p;
        }
        steps.reverse();
        steps
    }

    pub fn path_to(&self, sigma: &SpinConfig) -> Result<Path> {
        let i = self.vertex_index(sigma)?;
        let edges = self
            .steps_to(i)
            .into_iter()
            .map(|(from, to, kind, label)| LabeledEdge {
                from: self.graph.vertex(from).clone(),
                to: self.graph.vertex(to).clone(),
                kind,
                label,
            })
            .collect();
        Ok(Path {
            start: self.graph.alpha(),
            edges,
            end: sigma.clone(),
        })
    }

    /// Switch-back labels `l_1, ..., l_m` of the path to `sigma`.
    fn switchback_labels(&self, sigma: &SpinConfig) -> Result<Vec<SpinIndex>> {
        let steps = self.steps_to(self.vertex_index(sigma)?);
        let mut labels = Vec::new();
        for (j, &(_, _, kind, label)) in steps.iter().enumerate() {
            let last_of_block = steps.get(j + 1).is_none_or(|next| next.2 != kind);
            if last_of_block {
                labels.push(label);
            }
        }
        Ok(labels)
    }

    pub fn phi(&self, sigma: &SpinConfig) -> Result<IncreasingSubsequence> {
        let values = self
            .switchback_labels(sigma)?
            .into_iter()
            .rev()
            .map(SpinIndex::get)
            .collect();
        Ok(IncreasingSubsequence { values })
    }

    pub fn nesting_degree(&self, sigma: &SpinConfig) -> Result<usize> {
        Ok(self.switchback_labels(sigma)?.len())
    }
}

/// Unique shortest path from `alpha` to `sigma`.
pub fn shortest_path(g: &PreisachGraph, sigma: &SpinConfig) -> Result<Path> {
    if !g.contains(sigma) {
        return Err(Error::NotAVertex(sigma.to_string()));
    }
    ShortestPaths::new(g)?.path_to(sigma)
}

/// Splits a path from `alpha` into maximal runs of equal-kind edges.
pub fn block_decomposition(p: &Path) -> Result<BlockDecomposition> {
    let mut current = &p.start;
    for e in &p.edges {
        if &e.from != current {
            return Err(Error::BrokenPath);
        }
        current = &e.to;
    }
    if current != &p.end {
        return Err(Error::BrokenPath);
    }
    if p.edges.first().is_some_and(|e| e.kind != EdgeKind::U) {
        return Err(Error::FirstBlockNotU);
    }

    let mut blocks: Vec<Block> = Vec::new();
    let mut switchbacks = Vec::new();
    let mut labels = Vec::new();
    for (j, e) in p.edges.iter().enumerate() {
        match blocks.last_mut() {
            Some(b) if b.kind == e.kind => b.len += 1,
            _ => blocks.push(Block {
                kind: e.kind,
                len: 1,
            }),
        }
        if p.edges.get(j + 1).is_none_or(|next| next.kind != e.kind) {
            switchbacks.push(e.to.clone());
            labels.push(e.label);
        }
    }
    Ok(BlockDecomposition {
        blocks,
        switchbacks,
        labels,
    })
}

/// `Phi(sigma) = (l_m, ..., l_2, l_1)`.
pub fn phi(g: &PreisachGraph, sigma: &SpinConfig) -> Result<IncreasingSubsequence> {
    if !g.contains(sigma) {
        return Err(Error::NotAVertex(sigma.to_string()));
    }
    ShortestPaths::new(g)?.phi(sigma)
}

/// Number of blocks on the shortest path to `sigma`.
pub fn nesting_degree(g: &PreisachGraph, sigma: &SpinConfig) -> Result<usize> {
    if !g.contains(sigma) {
        return Err(Error::NotAVertex(sigma.to_string()));
    }
    ShortestPaths::new(g)?.nesting_degree(sigma)
}

/// Maximum nesting degree over all vertices.
pub fn nesting_of_graph(g: &PreisachGraph) -> Result<usize> {
    let paths = ShortestPaths::new(g)?;
    g.vertices()
        .iter()
        .map(|v| paths.nesting_degree(v))
        .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
}

/// `Phi` tabulated over every vertex, for inversion by lookup.
pub struct PhiTable {
    images: Vec<IncreasingSubsequence>,
    preimages: HashMap<IncreasingSubsequence, usize>,
    vertices: Vec<SpinConfig>,
    perm: Permutation,
}

impl PhiTable {
    pub fn new(g: &PreisachGraph) -> Result<Self> {
        let paths = ShortestPaths::new(g)?;
        Self::from_paths(&paths)
    }

    pub fn from_paths(paths: &ShortestPaths<'_>) -> Result<Self> {
        let g = paths.graph();
        let images = g
            .vertices()
            .iter()
            .map(|v| paths.phi(v))
            .collect::<Result<Vec<_>>>()?;
        let mut preimages = HashMap::with_capacity(images.len());
        for (i, s) in images.iter().enumerate() {
            preimages.insert(s.clone(), i);
        }
        Ok(PhiTable {
            images,
            preimages,
            vertices: g.vertices().to_vec(),
            perm: g.perm().clone(),
        })
    }

    /// Images in canonical vertex order.
    pub fn images(&self) -> &[IncreasingSubsequence] {
        &self.images
    }

    /// No two vertices share an image.
    pub fn is_injective(&self) -> bool {
        self.preimages.len() == self.images.len()
    }

    pub fn invert(&self, s: &IncreasingSubsequence) -> Result<SpinConfig> {
        s.check_against(&self.perm)?;
        self.preimages
            .get(s)
            .map(|&i| self.vertices[i].clone())
            .ok_or_else(|| Error::Unreachable(format!("no vertex maps to {s}")))
    }
}

/// Inverse of `Phi` by table lookup over the vertices of `g`.
pub fn phi_inverse(g: &PreisachGraph, s: &IncreasingSubsequence) -> Result<SpinConfig> {
    s.check_against(g.perm())?;
    PhiTable::new(g)?.invert(s)
}

/// Inverse of `Phi` without the graph: with `s` read as `(l_m, ..., l_1)`,
/// take `U` steps from `alpha` until spin `l_1` flips, then `D` steps until
/// spin `l_2` flips, and so on, alternating.
pub fn phi_inverse_constructive(
    rho: &Permutation,
    s: &IncreasingSubsequence,
) -> Result<SpinConfig> {
    s.check_against(rho)?;
    let mut sigma = SpinConfig::alpha(rho.len());
    let mut kind = EdgeKind::U;
    for &target in s.values().iter().rev() {
        loop {
            let next = match kind {
                EdgeKind::U => spin::step_up(&sigma),
                EdgeKind::D => spin::step_down(&sigma, rho)?,
            };
            let (next, flipped) = next.ok_or_else(|| {
                Error::Unreachable(format!("{kind} orbit of {sigma} never flips spin {target}"))
            })?;
            sigma = next;
            if flipped.get() == target {
                break;
            }
        }
        kind = kind.other();
    }
    Ok(sigma)
}

/// Minimal number of alternating `U`/`D` blocks needed to reach each state
/// from `alpha`, found by a 0-1 breadth-first search over (state, last kind)
/// driven directly by the maps `U` and `D`. Continuing a block is free and
/// starting a new one costs 1.
pub fn nesting_degrees_oracle(
    rho: &Permutation,
    max_states: usize,
) -> Result<HashMap<SpinConfig, usize>> {
    let alpha = SpinConfig::alpha(rho.len());
    let mut best: HashMap<(SpinConfig, EdgeKind), usize> = HashMap::new();
    let mut deque = VecDeque::new();
    let mut result = HashMap::new();
    result.insert(alpha.clone(), 0);

    if let Some((first, _)) = spin::step_up(&alpha) {
        best.insert((first.clone(), EdgeKind::U), 1);
        deque.push_back((first, EdgeKind::U, 1));
    }
    while let Some((sigma, kind, d)) = deque.pop_front() {
        if best.get(&(sigma.clone(), kind)).is_some_and(|&b| b < d) {
            continue;
        }
        for next_kind in [EdgeKind::U, EdgeKind::D] {
            let next = match next_kind {
                EdgeKind::U => spin::step_up(&sigma),
                EdgeKind::D => spin::step_down(&sigma, rho)?,
            };
            let Some((next, _)) = next else { continue };
            let cost = d + usize::from(next_kind != kind);
            let key = (next, next_kind);
            if best.get(&key).is_some_and(|&b| b <= cost) {
                continue;
            }
            if best.len() >= max_states {
                return Err(Error::BudgetExceeded(max_states));
            }
            best.insert(key.clone(), cost);
            if cost == d {
                deque.push_front((key.0, key.1, cost));
            } else {
                deque.push_back((key.0, key.1, cost));
            }
        }
    }
    for ((sigma, _), d) in best {
        let entry = result.entry(sigma).or_insert(d);
        *entry = (*entry).min(d);
    }
    Ok(result)
}

/// Nesting degree of one state by exhaustive alternation search.
pub fn nesting_degree_oracle(rho: &Permutation, sigma: &SpinConfig) -> Result<usize> {
    if sigma.len() != rho.len() {
        return Err(Error::DimensionMismatch {
            config: sigma.len(),
            perm: rho.len(),
        });
    }
    nesting_degrees_oracle(rho, 2 * DEFAULT_MAX_VERTICES)?
        .get(sigma)
        .copied()
        .ok_or_else(|| Error::Unreachable(sigma.to_string()))
}
