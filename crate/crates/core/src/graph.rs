//! The Preisach graph of a permutation.
//!
//! Two independent builders are provided: [`build_bfs`] takes the closure of
//! `alpha` under the maps `U` and `D`, and [`build_forward`] grows the graph
//! one spin at a time by copying a sub-loop of the previous graph. Both
//! produce the same canonical [`PreisachGraph`].
//!
//! The second half of the module implements cycles, orbits, absorption,
//! loop return-point memory and loops over any [`Dynamics`], so the same
//! definitions can be evaluated on the raw maps or on a graph's own edges.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::spin::{self, Spin, SpinConfig, SpinIndex};

pub const DEFAULT_MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    U,
    D,
}

impl EdgeKind {
    pub fn other(self) -> EdgeKind {
        match self {
            EdgeKind::U => EdgeKind::D,
            EdgeKind::D => EdgeKind::U,
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeKind::U => f.write_str("U"),
            EdgeKind::D => f.write_str("D"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledEdge {
    pub from: SpinConfig,
    pub to: SpinConfig,
    pub kind: EdgeKind,
    pub label: SpinIndex,
}

/// Outgoing transition stored by vertex index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Arc {
    to: usize,
    label: SpinIndex,
}

/// A Preisach graph with vertices kept in canonical order (number of `+1`
/// spins, then spin sequence). The transitions `U omega = omega` and
/// `D alpha = alpha` are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreisachGraph {
    perm: Permutation,
    vertices: Vec<SpinConfig>,
    index: HashMap<SpinConfig, usize>,
    up: Vec<Option<Arc>>,
    down: Vec<Option<Arc>>,
}

impl PreisachGraph {
    /// Assembles a graph from a vertex set and labelled edges, checking the
    /// structural invariants: `alpha` and `omega` present, closed edge set,
    /// one `U` edge out of every vertex but `omega`, one `D` edge out of every
    /// vertex but `alpha`, and each label naming the single flipped spin.
    pub fn from_parts(
        perm: Permutation,
        vertices: impl IntoIterator<Item = SpinConfig>,
        edges: impl IntoIterator<Item = LabeledEdge>,
    ) -> Result<PreisachGraph> {
        let n = perm.len();
        let mut vertices: Vec<SpinConfig> = vertices.into_iter().collect();
        vertices.sort_by(|a, b| a.canonical_cmp(b));
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if v.len() != n {
                return Err(invalid(format!(
                    "vertex {v} has {} spins, expected {n}",
                    v.len()
                )));
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(invalid(format!("duplicate vertex {v}")));
            }
        }
        for required in [SpinConfig::alpha(n), SpinConfig::omega(n)] {
            if !index.contains_key(&required) {
                return Err(invalid(format!("missing vertex {required}")));
            }
        }

        let mut up = vec![None; vertices.len()];
        let mut down = vec![None; vertices.len()];
        for e in edges {
            let from = *index
                .get(&e.from)
                .ok_or_else(|| invalid(format!("edge source {} is not a vertex", e.from)))?;
            let to = *index
                .get(&e.to)
                .ok_or_else(|| invalid(format!("edge target {} is not a vertex", e.to)))?;
            let site = e.label.get();
            if site > n || e.from.flip(site) != e.to {
                return Err(invalid(format!(
                    "edge {} -> {} does not flip exactly spin {site}",
                    e.from, e.to
                )));
            }
            let (expected, slot) = match e.kind {
                EdgeKind::U => (Spin::Down, &mut up[from]),
                EdgeKind::D => (Spin::Up, &mut down[from]),
            };
            if e.from.spin(site) != expected {
                return Err(invalid(format!(
                    "{} edge {} -> {} flips spin {site} the wrong way",
                    e.kind, e.from, e.to
                )));
            }
            if slot.is_some() {
                return Err(invalid(format!("two {} edges leave {}", e.kind, e.from)));
            }
            *slot = Some(Arc { to, label: e.label });
        }

        for (i, v) in vertices.iter().enumerate() {
            if up[i].is_none() != v.is_omega() {
                return Err(invalid(format!("vertex {v} has a wrong number of U edges")));
            }
            if down[i].is_none() != v.is_alpha() {
                return Err(invalid(format!("vertex {v} has a wrong number of D edges")));
            }
        }

        Ok(PreisachGraph {
            perm,
            vertices,
            index,
            up,
            down,
        })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Number of spins.
    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn alpha(&self) -> SpinConfig {
        SpinConfig::alpha(self.n())
    }

    pub fn omega(&self) -> SpinConfig {
        SpinConfig::omega(self.n())
    }

    /// Vertices in canonical order.
    pub fn vertices(&self) -> &[SpinConfig] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.up.iter().flatten().count() + self.down.iter().flatten().count()
    }

    pub fn contains(&self, sigma: &SpinConfig) -> bool {
        self.index.contains_key(sigma)
    }

    pub fn index_of(&self, sigma: &SpinConfig) -> Option<usize> {
        self.index.get(sigma).copied()
    }

    pub fn vertex(&self, i: usize) -> &SpinConfig {
        &self.vertices[i]
    }

    /// Target index and label of the `U` edge leaving vertex `i`.
    pub fn up_index(&self, i: usize) -> Option<(usize, SpinIndex)> {
        self.up[i].map(|a| (a.to, a.label))
    }

    /// Target index and label of the `D` edge leaving vertex `i`.
    pub fn down_index(&self, i: usize) -> Option<(usize, SpinIndex)> {
        self.down[i].map(|a| (a.to, a.label))
    }

    pub fn successor_index(&self, i: usize, kind: EdgeKind) -> Option<(usize, SpinIndex)> {
        match kind {
            EdgeKind::U => self.up_index(i),
            EdgeKind::D => self.down_index(i),
        }
    }

    fn labeled(&self, from: usize, arc: Arc, kind: EdgeKind) -> LabeledEdge {
        LabeledEdge {
            from: self.vertices[from].clone(),
            to: self.vertices[arc.to].clone(),
            kind,
            label: arc.label,
        }
    }

    pub fn u_edge(&self, sigma: &SpinConfig) -> Option<LabeledEdge> {
        let i = self.index_of(sigma)?;
        self.up[i].map(|a| self.labeled(i, a, EdgeKind::U))
    }

    pub fn d_edge(&self, sigma: &SpinConfig) -> Option<LabeledEdge> {
        let i = self.index_of(sigma)?;
        self.down[i].map(|a| self.labeled(i, a, EdgeKind::D))
    }

    /// All edges: vertices in canonical order, `U` edge before `D` edge.
    pub fn edges(&self) -> Vec<LabeledEdge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.vertices.len() {
            if let Some(a) = self.up[i] {
                out.push(self.labeled(i, a, EdgeKind::U));
            }
            if let Some(a) = self.down[i] {
                out.push(self.labeled(i, a, EdgeKind::D));
            }
        }
        out
    }

    /// Checks every stored edge against the maps `U` and `D` of the
    /// permutation.
    pub fn edges_follow_transitions(&self) -> bool {
        self.vertices.iter().enumerate().all(|(i, v)| {
            let up_ok = match (spin::step_up(v), self.up[i]) {
                (None, None) => true,
                (Some((next, site)), Some(a)) => self.vertices[a.to] == next && a.label == site,
                _ => false,
            };
            let down_ok = match (spin::step_down(v, &self.perm).ok().flatten(), self.down[i]) {
                (None, None) => true,
                (Some((next, site)), Some(a)) => self.vertices[a.to] == next && a.label == site,
                _ => false,
            };
            up_ok && down_ok
        })
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidGraph(msg)
}

/// Closure of `{alpha}` under `U` and `D`, exploring the `U` successor
/// before the `D` successor of each dequeued vertex.
pub fn build_bfs(rho: &Permutation, max_vertices: usize) -> Result<PreisachGraph> {
    let n = rho.len();
    let alpha = SpinConfig::alpha(n);
    let mut seen: HashSet<SpinConfig> = HashSet::new();
    let mut order = Vec::new();
    let mut edges = Vec::new();
    let mut queue = VecDeque::new();

    if max_vertices == 0 {
        return Err(Error::BudgetExceeded(max_vertices));
    }
    seen.insert(alpha.clone());
    order.push(alpha.clone());
    queue.push_back(alpha);

    while let Some(sigma) = queue.pop_front() {
        let successors = [
            spin::step_up(&sigma).map(|(s, i)| (s, i, EdgeKind::U)),
            spin::step_down(&sigma, rho)?.map(|(s, i)| (s, i, EdgeKind::D)),
        ];
        for (next, label, kind) in successors.into_iter().flatten() {
            if !seen.contains(&next) {
                if seen.len() >= max_vertices {
                    return Err(Error::BudgetExceeded(max_vertices));
                }
                seen.insert(next.clone());
                order.push(next.clone());
                queue.push_back(next.clone());
            }
            edges.push(LabeledEdge {
                from: sigma.clone(),
                to: next,
                kind,
                label,
            });
        }
    }

    PreisachGraph::from_parts(rho.clone(), order, edges)
}

/// Growing graph used by [`build_forward`]: vertices by index with their
/// outgoing arcs.
struct PartialGraph {
    vertices: Vec<SpinConfig>,
    up: Vec<Option<Arc>>,
    down: Vec<Option<Arc>>,
}

impl PartialGraph {
    fn push(&mut self, v: SpinConfig) -> usize {
        self.vertices.push(v);
        self.up.push(None);
        self.down.push(None);
        self.vertices.len() - 1
    }
}

impl Dynamics for PartialGraph {
    type State = usize;

    fn up(&self, s: &usize) -> Option<usize> {
        self.up[*s].map(|a| a.to)
    }

    fn down(&self, s: &usize) -> Option<usize> {
        self.down[*s].map(|a| a.to)
    }
}

/// Builds the graph spin by spin over the sub-permutations `rho^(m)` (the
/// entries `<= m` in their relative order). Going from `m` to `m + 1`, with
/// `k` the position of `m + 1` in `rho^(m+1)` and `top = U^m alpha`, the loop
/// `(D^(k-1) top, top)` is copied with spin `m + 1` set to `+1`, keeping its
/// labels, and the copy is attached by a `U` edge `top -> copy(top)` and a
/// `D` edge `copy(D^(k-1) top) -> D^(k-1) top`, both labelled `m + 1`.
pub fn build_forward(rho: &Permutation, max_vertices: usize) -> Result<PreisachGraph> {
    let n = rho.len();
    if max_vertices == 0 {
        return Err(Error::BudgetExceeded(max_vertices));
    }
    let mut g = PartialGraph {
        vertices: Vec::new(),
        up: Vec::new(),
        down: Vec::new(),
    };
    let mut top = g.push(SpinConfig::alpha(n));

    for m in 0..n {
        let site = m + 1;
        let label = SpinIndex::new(site).expect("site is positive");
        let k = rho.restrict_to_values(site)?.position_of(site);

        let mut bottom = top;
        for _ in 1..k {
            bottom = g.down(&bottom).ok_or_else(|| {
                invalid(format!("forward step {site}: D orbit of top ended early"))
            })?;
        }
        let members = loop_closure(&g, bottom, top)?;
        if g.vertices.len() + members.len() > max_vertices {
            return Err(Error::BudgetExceeded(max_vertices));
        }

        let copies: HashMap<usize, usize> = members
            .iter()
            .map(|&v| {
                let copy = g.vertices[v].with_spin(site, Spin::Up);
                (v, g.push(copy))
            })
            .collect();
        for (&v, &c) in &copies {
            if let Some(a) = g.up[v] {
                if let Some(&to) = copies.get(&a.to) {
                    g.up[c] = Some(Arc { to, label: a.label });
                }
            }
            if let Some(a) = g.down[v] {
                if let Some(&to) = copies.get(&a.to) {
                    g.down[c] = Some(Arc { to, label: a.label });
                }
            }
        }
        let new_top = copies[&top];
        g.up[top] = Some(Arc { to: new_top, label });
        g.down[copies[&bottom]] = Some(Arc { to: bottom, label });
        top = new_top;
    }

    let edges: Vec<LabeledEdge> = (0..g.vertices.len())
        .flat_map(|i| {
            let up = g.up[i].map(|a| (a, EdgeKind::U));
            let down = g.down[i].map(|a| (a, EdgeKind::D));
            up.into_iter()
                .chain(down)
                .map(move |(a, kind)| (i, a, kind))
        })
        .map(|(i, a, kind)| LabeledEdge {
            from: g.vertices[i].clone(),
            to: g.vertices[a.to].clone(),
            kind,
            label: a.label,
        })
        .collect();
    PreisachGraph::from_parts(rho.clone(), g.vertices, edges)
}

/// A pair of maps `U`, `D` on some state space, with `None` marking a fixed
/// point.
pub trait Dynamics {
    type State: Clone + Eq + Hash;

    fn up(&self, s: &Self::State) -> Option<Self::State>;
    fn down(&self, s: &Self::State) -> Option<Self::State>;

    fn step(&self, s: &Self::State, kind: EdgeKind) -> Option<Self::State> {
        match kind {
            EdgeKind::U => self.up(s),
            EdgeKind::D => self.down(s),
        }
    }
}

/// The maps `U` and `D` of a permutation acting on spin configurations of
/// matching length.
pub struct Transitions<'a> {
    rho: &'a Permutation,
}

impl<'a> Transitions<'a> {
    pub fn new(rho: &'a Permutation) -> Self {
        Transitions { rho }
    }
}

impl Dynamics for Transitions<'_> {
    type State = SpinConfig;

    fn up(&self, s: &SpinConfig) -> Option<SpinConfig> {
        spin::step_up(s).map(|(next, _)| next)
    }

    fn down(&self, s: &SpinConfig) -> Option<SpinConfig> {
        spin::step_down(s, self.rho)
            .expect("dimensions checked at the public boundary")
            .map(|(next, _)| next)
    }
}

impl Dynamics for PreisachGraph {
    type State = SpinConfig;

    fn up(&self, s: &SpinConfig) -> Option<SpinConfig> {
        let i = self.index_of(s)?;
        self.up[i].map(|a| self.vertices[a.to].clone())
    }

    fn down(&self, s: &SpinConfig) -> Option<SpinConfig> {
        let i = self.index_of(s)?;
        self.down[i].map(|a| self.vertices[a.to].clone())
    }
}

fn orbit<D: Dynamics>(dynamics: &D, start: &D::State, kind: EdgeKind) -> Vec<D::State> {
    let mut out = vec![start.clone()];
    while let Some(next) = dynamics.step(out.last().unwrap(), kind) {
        out.push(next);
    }
    out
}

/// `U` boundary `mu ..= nu` and `D` boundary `nu ..= mu` of a cycle.
type Boundaries<S> = (Vec<S>, Vec<S>);

/// Boundaries of the cycle `(mu, nu)`, or `None` when `nu` is not on the `U`
/// orbit of `mu` or `mu` is not on the `D` orbit of `nu`.
fn boundaries<D: Dynamics>(
    dynamics: &D,
    mu: &D::State,
    nu: &D::State,
) -> Option<Boundaries<D::State>> {
    let walk = |from: &D::State, to: &D::State, kind| {
        let mut path = vec![from.clone()];
        while path.last().unwrap() != to {
            let next = dynamics.step(path.last().unwrap(), kind)?;
            path.push(next);
        }
        Some(path)
    };
    let u_boundary = walk(mu, nu, EdgeKind::U)?;
    let d_boundary = walk(nu, mu, EdgeKind::D)?;
    Some((u_boundary, d_boundary))
}

fn orbit_contains<D: Dynamics>(
    dynamics: &D,
    start: &D::State,
    kind: EdgeKind,
    target: &D::State,
) -> bool {
    let mut s = start.clone();
    loop {
        if &s == target {
            return true;
        }
        match dynamics.step(&s, kind) {
            Some(next) => s = next,
            None => return false,
        }
    }
}

fn is_absorbing<D: Dynamics>(
    dynamics: &D,
    mu: &D::State,
    nu: &D::State,
    u_boundary: &[D::State],
    d_boundary: &[D::State],
) -> bool {
    u_boundary
        .iter()
        .all(|u| orbit_contains(dynamics, u, EdgeKind::D, mu))
        && d_boundary
            .iter()
            .all(|v| orbit_contains(dynamics, v, EdgeKind::U, nu))
}

fn lrpm_memo<D: Dynamics>(
    dynamics: &D,
    mu: &D::State,
    nu: &D::State,
    memo: &mut HashMap<(D::State, D::State), bool>,
) -> bool {
    let key = (mu.clone(), nu.clone());
    if let Some(&known) = memo.get(&key) {
        return known;
    }
    let Some((ub, db)) = boundaries(dynamics, mu, nu) else {
        memo.insert(key, false);
        return false;
    };
    if !is_absorbing(dynamics, mu, nu, &ub, &db) {
        memo.insert(key, false);
        return false;
    }
    // (mu, nu) is one of its own major sub-cycles; every other one spans
    // strictly fewer steps, so the recursion is well founded.
    memo.insert(key.clone(), true);
    let ok = ub.iter().all(|u| lrpm_memo(dynamics, mu, u, memo))
        && db.iter().all(|v| lrpm_memo(dynamics, v, nu, memo));
    memo.insert(key, ok);
    ok
}

/// Iterative union of the boundary states of all major sub-cycles of
/// `(mu, nu)`, in discovery order. Every cycle met must be absorbing.
fn loop_closure<D: Dynamics>(dynamics: &D, mu: D::State, nu: D::State) -> Result<Vec<D::State>> {
    let mut members = Vec::new();
    let mut in_loop = HashSet::new();
    let mut visited = HashSet::new();
    let mut pending = vec![(mu, nu)];

    while let Some((mu, nu)) = pending.pop() {
        if !visited.insert((mu.clone(), nu.clone())) {
            continue;
        }
        let (ub, db) = boundaries(dynamics, &mu, &nu).ok_or(Error::NotACycle)?;
        if !is_absorbing(dynamics, &mu, &nu, &ub, &db) {
            return Err(Error::NotAbsorbing);
        }
        for s in ub.iter().chain(db.iter()) {
            if in_loop.insert(s.clone()) {
                members.push(s.clone());
            }
        }
        pending.extend(ub.into_iter().map(|u| (mu.clone(), u)));
        pending.extend(db.into_iter().map(|v| (v, nu.clone())));
    }
    Ok(members)
}

/// A `UD`-cycle `(mu, nu)` with `nu = U^n mu` and `mu = D^m nu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub mu: SpinConfig,
    pub nu: SpinConfig,
    /// `mu, U mu, ..., U^n mu = nu`
    pub u_boundary: Vec<SpinConfig>,
    /// `nu, D nu, ..., D^m nu = mu`
    pub d_boundary: Vec<SpinConfig>,
}

impl Cycle {
    /// `n`, the number of `U` steps from `mu` to `nu`.
    pub fn up_steps(&self) -> usize {
        self.u_boundary.len() - 1
    }

    /// `m`, the number of `D` steps from `nu` back to `mu`.
    pub fn down_steps(&self) -> usize {
        self.d_boundary.len() - 1
    }
}

fn check_config(sigma: &SpinConfig, rho: &Permutation) -> Result<()> {
    if sigma.len() != rho.len() {
        return Err(Error::DimensionMismatch {
            config: sigma.len(),
            perm: rho.len(),
        });
    }
    Ok(())
}

/// `sigma, U sigma, U^2 sigma, ...` up to and including `omega`.
pub fn u_orbit(rho: &Permutation, sigma: &SpinConfig) -> Result<Vec<SpinConfig>> {
    check_config(sigma, rho)?;
    Ok(orbit(&Transitions::new(rho), sigma, EdgeKind::U))
}

/// `sigma, D sigma, D^2 sigma, ...` up to and including `alpha`.
pub fn d_orbit(rho: &Permutation, sigma: &SpinConfig) -> Result<Vec<SpinConfig>> {
    check_config(sigma, rho)?;
    Ok(orbit(&Transitions::new(rho), sigma, EdgeKind::D))
}

/// Validates `(mu, nu)` as a cycle by walking both orbits.
pub fn cycle_of(rho: &Permutation, mu: &SpinConfig, nu: &SpinConfig) -> Result<Cycle> {
    check_config(mu, rho)?;
    check_config(nu, rho)?;
    let (u_boundary, d_boundary) =
        boundaries(&Transitions::new(rho), mu, nu).ok_or(Error::NotACycle)?;
    Ok(Cycle {
        mu: mu.clone(),
        nu: nu.clone(),
        u_boundary,
        d_boundary,
    })
}

/// True when the `D` orbit of every `U`-boundary state reaches `mu` and the
/// `U` orbit of every `D`-boundary state reaches `nu`.
pub fn check_absorption(rho: &Permutation, c: &Cycle) -> bool {
    is_absorbing(
        &Transitions::new(rho),
        &c.mu,
        &c.nu,
        &c.u_boundary,
        &c.d_boundary,
    )
}

/// Loop return-point memory: the cycle is absorbing and so, recursively, is
/// every major sub-cycle.
pub fn check_lrpm(rho: &Permutation, c: &Cycle) -> bool {
    let mut memo = HashMap::new();
    lrpm_memo(&Transitions::new(rho), &c.mu, &c.nu, &mut memo)
}

/// All vertices of the loop `(mu, nu)`.
pub fn loop_vertices(rho: &Permutation, c: &Cycle) -> Result<BTreeSet<SpinConfig>> {
    if !check_absorption(rho, c) {
        return Err(Error::NotAbsorbing);
    }
    Ok(
        loop_closure(&Transitions::new(rho), c.mu.clone(), c.nu.clone())?
            .into_iter()
            .collect(),
    )
}

/// Split of a graph on `N` spins into the loop below the `N`th spin flip and
/// the loop above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Loop `(alpha, U^(N-1) alpha)`; spin `N` is `-1` throughout.
    pub lower_loop: BTreeSet<SpinConfig>,
    /// Loop `(D^(k-1) omega, omega)` with `rho_k = N`; spin `N` is `+1`
    /// throughout.
    pub upper_loop: BTreeSet<SpinConfig>,
    /// The `U` edge `U^(N-1) alpha -> omega` and the `D` edge
    /// `D^(k-1) omega -> D^k omega`.
    pub joining: (LabeledEdge, LabeledEdge),
}

pub fn decompose(g: &PreisachGraph) -> Result<Decomposition> {
    let n = g.n();
    let k = g.perm().position_of(n);
    let below_top = (1..n).try_fold(g.alpha(), |s, _| g.up(&s).ok_or(Error::NotACycle))?;
    let upper_bottom = (1..k).try_fold(g.omega(), |s, _| g.down(&s).ok_or(Error::NotACycle))?;

    let lower_loop = loop_closure(g, g.alpha(), below_top.clone())?
        .into_iter()
        .collect();
    let upper_loop = loop_closure(g, upper_bottom.clone(), g.omega())?
        .into_iter()
        .collect();
    let up_join = g.u_edge(&below_top).ok_or(Error::NotACycle)?;
    let down_join = g.d_edge(&upper_bottom).ok_or(Error::NotACycle)?;
    Ok(Decomposition {
        lower_loop,
        upper_loop,
        joining: (up_join, down_join),
    })
}

/// `D^(k-1) U^(N-1) alpha = D^k U^N alpha = D^k omega` where `rho_k = N`.
pub fn merge_identity_up(rho: &Permutation) -> Result<bool> {
    let n = rho.len();
    let k = rho.position_of(n);
    let alpha = SpinConfig::alpha(n);
    let omega = SpinConfig::omega(n);
    let a = spin::apply_d_n(&spin::apply_u_n(&alpha, rho, n - 1)?, rho, k - 1)?;
    let b = spin::apply_d_n(&spin::apply_u_n(&alpha, rho, n)?, rho, k)?;
    let c = spin::apply_d_n(&omega, rho, k)?;
    Ok(a == b && b == c)
}

/// `U^(q-1) D^(N-1) omega = U^q D^N omega = U^q alpha` where `rho_N = q`.
pub fn merge_identity_down(rho: &Permutation) -> Result<bool> {
    let n = rho.len();
    let q = rho.at(n);
    let alpha = SpinConfig::alpha(n);
    let omega = SpinConfig::omega(n);
    let a = spin::apply_u_n(&spin::apply_d_n(&omega, rho, n - 1)?, rho, q - 1)?;
    let b = spin::apply_u_n(&spin::apply_d_n(&omega, rho, n)?, rho, q)?;
    let c = spin::apply_u_n(&alpha, rho, q)?;
    Ok(a == b && b == c)
}
