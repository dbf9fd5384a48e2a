//! The graph JSON schema.
//!
//! ```json
//! {"bullet":false,
//!  "edges":[{"from":"v0","id":"p0","kind":"e1","to":"v1"}],
//!  "externals":[{"at":"v0","dir":"in","id":"x0","kind":"e1"}],
//!  "vertices":[{"id":"v0","kind":"v1"}]}
//! ```
//!
//! Canonical serialization is bit-exact: object keys sorted, vertex ids
//! renumbered canonically (`v0..`), edges sorted by (kind, from, to) and
//! renumbered `p0..`, externals kept in their labeled order `x0..`, and
//! gluon edges normalized to ascending endpoint order. Gluon externals
//! carry `"dir":"none"`.

use super::{EdgeKind, External, FeynGraph, Flow, GraphError, VertexKind};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize)]
struct SerVertex {
    id: String,
    kind: String,
}

#[derive(Serialize, Deserialize)]
struct SerEdge {
    from: String,
    id: String,
    kind: String,
    to: String,
}

#[derive(Serialize, Deserialize)]
struct SerExternal {
    at: String,
    dir: String,
    id: String,
    kind: String,
}

#[derive(Serialize, Deserialize)]
struct SerGraph {
    bullet: bool,
    edges: Vec<SerEdge>,
    externals: Vec<SerExternal>,
    vertices: Vec<SerVertex>,
}

/// Parses and validates a graph from schema JSON.
pub fn graph_from_json(text: &str) -> Result<FeynGraph, GraphError> {
    let ser: SerGraph =
        serde_json::from_str(text).map_err(|e| GraphError::Schema(e.to_string()))?;
    let mut ids: BTreeMap<String, usize> = BTreeMap::new();
    let mut kinds = Vec::new();
    for v in &ser.vertices {
        let kind = VertexKind::from_name(&v.kind)
            .ok_or_else(|| GraphError::Schema(format!("unknown vertex kind {:?}", v.kind)))?;
        if ids.insert(v.id.clone(), kinds.len()).is_some() {
            return Err(GraphError::Schema(format!("duplicate vertex id {:?}", v.id)));
        }
        kinds.push(kind);
    }
    let resolve = |id: &str| -> Result<usize, GraphError> {
        ids.get(id)
            .copied()
            .ok_or_else(|| GraphError::Schema(format!("unknown vertex id {:?}", id)))
    };
    let mut edges = Vec::new();
    for e in &ser.edges {
        let kind = EdgeKind::from_name(&e.kind)
            .ok_or_else(|| GraphError::Schema(format!("unknown edge kind {:?}", e.kind)))?;
        edges.push(super::Edge {
            kind,
            from: resolve(&e.from)?,
            to: resolve(&e.to)?,
        });
    }
    let mut externals = Vec::new();
    for x in &ser.externals {
        let kind = EdgeKind::from_name(&x.kind)
            .ok_or_else(|| GraphError::Schema(format!("unknown edge kind {:?}", x.kind)))?;
        let flow = Flow::from_name(&x.dir)
            .ok_or_else(|| GraphError::Schema(format!("unknown dir {:?}", x.dir)))?;
        externals.push(External {
            kind,
            flow,
            at: resolve(&x.at)?,
        });
    }
    FeynGraph::new(kinds, edges, externals, ser.bullet)
}

/// Serializes a graph as schema JSON with the documented deterministic
/// layout. The graph should already be canonically labeled; the id
/// renumbering here is positional.
pub fn graph_to_canonical_json(g: &FeynGraph) -> String {
    let vertices: Vec<SerVertex> = g
        .vertices
        .iter()
        .enumerate()
        .map(|(i, k)| SerVertex {
            id: format!("v{i}"),
            kind: k.name().to_string(),
        })
        .collect();
    let mut sorted_edges: Vec<&super::Edge> = g.edges.iter().collect();
    sorted_edges.sort();
    let edges: Vec<SerEdge> = sorted_edges
        .iter()
        .enumerate()
        .map(|(i, e)| SerEdge {
            from: format!("v{}", e.from),
            id: format!("p{i}"),
            kind: e.kind.name().to_string(),
            to: format!("v{}", e.to),
        })
        .collect();
    let externals: Vec<SerExternal> = g
        .externals
        .iter()
        .enumerate()
        .map(|(i, x)| SerExternal {
            at: format!("v{}", x.at),
            dir: x.flow.name().to_string(),
            id: format!("x{i}"),
            kind: x.kind.name().to_string(),
        })
        .collect();
    serde_json::to_string(&SerGraph {
        bullet: g.bullet,
        edges,
        externals,
        vertices,
    })
    .expect("serialization cannot fail")
}
