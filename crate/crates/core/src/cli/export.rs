use std::collections::VecDeque;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, LabeledEdge, PreisachGraph};
use crate::permutation::Permutation;
use crate::spin::{SpinConfig, SpinIndex};

/// DOT digraph: sign-string node names, `U` edges black and `D` edges red,
/// each labelled with the flipped spin.
pub fn export_dot(g: &PreisachGraph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph preisach {{").unwrap();
    writeln!(out, "  // rho = {}", g.perm()).unwrap();
    for v in g.vertices() {
        writeln!(out, "  \"{v}\";").unwrap();
    }
    for e in g.edges() {
        let color = match e.kind {
            EdgeKind::U => "black",
            EdgeKind::D => "red",
        };
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [color={color}, label={}];",
            e.from, e.to, e.label
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[derive(Debug, Serialize, Deserialize, Clone, Copy, PartialEq, Eq)]
enum KindDoc {
    U,
    D,
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeDoc {
    from: String,
    to: String,
    kind: KindDoc,
    label: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    perm: Vec<usize>,
    vertices: Vec<String>,
    edges: Vec<EdgeDoc>,
}

pub fn export_json(g: &PreisachGraph) -> String {
    let doc = GraphDoc {
        n: g.n(),
        perm: g.perm().values().to_vec(),
        vertices: g.vertices().iter().map(SpinConfig::sign_string).collect(),
        edges: g
            .edges()
            .into_iter()
            .map(|e| EdgeDoc {
                from: e.from.sign_string(),
                to: e.to.sign_string(),
                kind: match e.kind {
                    EdgeKind::U => KindDoc::U,
                    EdgeKind::D => KindDoc::D,
                },
                label: e.label.get(),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("graph documents always serialize")
}

/// Reads a graph written by [`export_json`]. The edges must be exactly the
/// transitions of the permutation and every vertex must be reachable from
/// `alpha`.
pub fn load_json(text: &str) -> Result<PreisachGraph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let perm = Permutation::new(doc.perm)?;
    if perm.len() != doc.n {
        return Err(Error::InvalidGraph(format!(
            "n = {} but perm has {} entries",
            doc.n,
            perm.len()
        )));
    }
    let vertices = doc
        .vertices
        .iter()
        .map(|s| SpinConfig::parse_signs(s, doc.n))
        .collect::<Result<Vec<_>>>()?;
    let edges = doc
        .edges
        .iter()
        .map(|e| {
            Ok(LabeledEdge {
                from: SpinConfig::parse_signs(&e.from, doc.n)?,
                to: SpinConfig::parse_signs(&e.to, doc.n)?,
                kind: match e.kind {
                    KindDoc::U => EdgeKind::U,
                    KindDoc::D => EdgeKind::D,
                },
                label: SpinIndex::new(e.label)
                    .ok_or_else(|| Error::InvalidGraph("edge label 0".into()))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let g = PreisachGraph::from_parts(perm, vertices, edges)?;
    if !g.edges_follow_transitions() {
        return Err(Error::InvalidGraph(
            "edges disagree with the transitions of the permutation".into(),
        ));
    }
    if reachable_count(&g) != g.vertex_count() {
        return Err(Error::InvalidGraph(
            "some vertices are unreachable from alpha".into(),
        ));
    }
    Ok(g)
}

fn reachable_count(g: &PreisachGraph) -> usize {
    let Some(root) = g.index_of(&g.alpha()) else {
        return 0;
    };
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for kind in [EdgeKind::U, EdgeKind::D] {
            if let Some((w, _)) = g.successor_index(v, kind) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    count
}
