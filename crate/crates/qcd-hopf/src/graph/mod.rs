//! Typed QCD Feynman multigraphs.
//!
//! Three edge species (quark `e1`, ghost `e2`, gluon `e3`; the first two are
//! oriented) and five vertex species `v1..v5` with fixed leg profiles. A
//! graph consists of vertices, internal edges, an ordered list of external
//! legs, and an optional bullet decoration marking a quark two-point graph
//! as a mass-vertex contribution.

mod canon;
mod enumerate;
mod json;
mod subgraph;

pub use canon::{canonical_hash, canonicalize, CanonicalForm};
pub use enumerate::enumerate_graphs;
pub use json::{graph_from_json, graph_to_canonical_json};
pub use subgraph::{
    contract_union, divergent_bricks, divergent_subgraph_unions, extract_component, Brick,
    Decoration,
};

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum EdgeKind {
    /// `e1`, the quark line (oriented).
    Quark,
    /// `e2`, the ghost line (oriented).
    Ghost,
    /// `e3`, the gluon line (unoriented).
    Gluon,
}

impl EdgeKind {
    pub fn oriented(self) -> bool {
        !matches!(self, EdgeKind::Gluon)
    }

    pub fn name(self) -> &'static str {
        match self {
            EdgeKind::Quark => "e1",
            EdgeKind::Ghost => "e2",
            EdgeKind::Gluon => "e3",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "e1" => Some(EdgeKind::Quark),
            "e2" => Some(EdgeKind::Ghost),
            "e3" => Some(EdgeKind::Gluon),
            _ => None,
        }
    }

    pub const ALL: [EdgeKind; 3] = [EdgeKind::Quark, EdgeKind::Ghost, EdgeKind::Gluon];
}

/// Direction of a half-edge as seen from the vertex it is attached to.
/// Gluon half-edges are always `Un`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Flow {
    In,
    Out,
    Un,
}

impl Flow {
    pub fn name(self) -> &'static str {
        match self {
            Flow::In => "in",
            Flow::Out => "out",
            Flow::Un => "none",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "in" => Some(Flow::In),
            "out" => Some(Flow::Out),
            "none" => Some(Flow::Un),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum VertexKind {
    /// `v1`: quark-quark-gluon.
    V1,
    /// `v2`: ghost-ghost-gluon.
    V2,
    /// `v3`: three gluons.
    V3,
    /// `v4`: four gluons.
    V4,
    /// `v5`: quark mass insertion (valence two).
    V5,
}

impl VertexKind {
    pub const ALL: [VertexKind; 5] = [
        VertexKind::V1,
        VertexKind::V2,
        VertexKind::V3,
        VertexKind::V4,
        VertexKind::V5,
    ];

    pub fn index(self) -> usize {
        match self {
            VertexKind::V1 => 0,
            VertexKind::V2 => 1,
            VertexKind::V3 => 2,
            VertexKind::V4 => 3,
            VertexKind::V5 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexKind::V1 => "v1",
            VertexKind::V2 => "v2",
            VertexKind::V3 => "v3",
            VertexKind::V4 => "v4",
            VertexKind::V5 => "v5",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "v1" => Some(VertexKind::V1),
            "v2" => Some(VertexKind::V2),
            "v3" => Some(VertexKind::V3),
            "v4" => Some(VertexKind::V4),
            "v5" => Some(VertexKind::V5),
            _ => None,
        }
    }

    /// The leg profile as a sorted multiset of (edge kind, flow) stubs.
    pub fn leg_profile(self) -> &'static [(EdgeKind, Flow)] {
        use EdgeKind::*;
        use Flow::*;
        match self {
            VertexKind::V1 => &[(Quark, In), (Quark, Out), (Gluon, Un)],
            VertexKind::V2 => &[(Ghost, In), (Ghost, Out), (Gluon, Un)],
            VertexKind::V3 => &[(Gluon, Un), (Gluon, Un), (Gluon, Un)],
            VertexKind::V4 => &[(Gluon, Un), (Gluon, Un), (Gluon, Un), (Gluon, Un)],
            VertexKind::V5 => &[(Quark, In), (Quark, Out)],
        }
    }

    /// Valence N(v).
    pub fn valence(self) -> usize {
        self.leg_profile().len()
    }

    /// N_i(v): number of legs of the given edge kind.
    pub fn edge_count(self, k: EdgeKind) -> usize {
        self.leg_profile().iter().filter(|(e, _)| *e == k).count()
    }
}

/// A vertex or edge species; the possible residues of a 1PI graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Residue {
    Edge(EdgeKind),
    Vertex(VertexKind),
}

impl Residue {
    pub const ALL: [Residue; 8] = [
        Residue::Edge(EdgeKind::Quark),
        Residue::Edge(EdgeKind::Ghost),
        Residue::Edge(EdgeKind::Gluon),
        Residue::Vertex(VertexKind::V1),
        Residue::Vertex(VertexKind::V2),
        Residue::Vertex(VertexKind::V3),
        Residue::Vertex(VertexKind::V4),
        Residue::Vertex(VertexKind::V5),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Residue::Edge(k) => k.name(),
            Residue::Vertex(v) => v.name(),
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        EdgeKind::from_name(s)
            .map(Residue::Edge)
            .or_else(|| VertexKind::from_name(s).map(Residue::Vertex))
    }

    /// Valence N(r): total number of attached lines.
    pub fn valence(self) -> usize {
        match self {
            Residue::Edge(_) => 2,
            Residue::Vertex(v) => v.valence(),
        }
    }

    /// The external-leg profile, sorted.
    pub fn external_profile(self) -> Vec<(EdgeKind, Flow)> {
        match self {
            Residue::Edge(EdgeKind::Quark) | Residue::Vertex(VertexKind::V5) => {
                vec![(EdgeKind::Quark, Flow::In), (EdgeKind::Quark, Flow::Out)]
            }
            Residue::Edge(EdgeKind::Ghost) => {
                vec![(EdgeKind::Ghost, Flow::In), (EdgeKind::Ghost, Flow::Out)]
            }
            Residue::Edge(EdgeKind::Gluon) => vec![(EdgeKind::Gluon, Flow::Un); 2],
            Residue::Vertex(v) => v.leg_profile().to_vec(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub kind: EdgeKind,
    /// Source vertex; for oriented kinds the line flows `from -> to`.
    /// For gluons the pair is normalized to `from <= to`.
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct External {
    pub kind: EdgeKind,
    /// `In` means the line flows into the graph at the attachment vertex.
    pub flow: Flow,
    pub at: usize,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FeynGraph {
    pub vertices: Vec<VertexKind>,
    pub edges: Vec<Edge>,
    pub externals: Vec<External>,
    pub bullet: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("leg profile mismatch at vertex {vertex}: expected {expected}, found {found}")]
    LegProfileMismatch {
        vertex: usize,
        expected: String,
        found: String,
    },
    #[error("graph is not connected")]
    Disconnected,
    #[error("bullet decoration on a graph whose external legs are not one quark in / one quark out")]
    IllegalBullet,
    #[error("external-leg profile {0} is not the profile of any vertex or edge in R")]
    ResidueOutsideR(String),
    #[error("gluon externals carry no orientation and oriented externals need in/out (leg {0})")]
    BadExternalFlow(usize),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("contraction error: {0}")]
    Contraction(String),
}

impl FeynGraph {
    pub fn new(
        vertices: Vec<VertexKind>,
        edges: Vec<Edge>,
        externals: Vec<External>,
        bullet: bool,
    ) -> Result<Self, GraphError> {
        let mut g = FeynGraph {
            vertices,
            edges,
            externals,
            bullet,
        };
        g.normalize_gluon_edges();
        g.validate()?;
        Ok(g)
    }

    fn normalize_gluon_edges(&mut self) {
        for e in &mut self.edges {
            if !e.kind.oriented() && e.from > e.to {
                std::mem::swap(&mut e.from, &mut e.to);
            }
        }
    }

    /// The (kind, flow) stubs incident to vertex `v`, sorted.
    pub fn incident_stubs(&self, v: usize) -> Vec<(EdgeKind, Flow)> {
        let mut stubs = Vec::new();
        for e in &self.edges {
            let (ff, tf) = if e.kind.oriented() {
                (Flow::Out, Flow::In)
            } else {
                (Flow::Un, Flow::Un)
            };
            if e.from == v {
                stubs.push((e.kind, ff));
            }
            if e.to == v {
                stubs.push((e.kind, tf));
            }
        }
        for x in &self.externals {
            if x.at == v {
                stubs.push((x.kind, x.flow));
            }
        }
        stubs.sort();
        stubs
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.vertices.len();
        for e in &self.edges {
            if e.from >= n {
                return Err(GraphError::VertexOutOfRange(e.from));
            }
            if e.to >= n {
                return Err(GraphError::VertexOutOfRange(e.to));
            }
        }
        for (i, x) in self.externals.iter().enumerate() {
            if x.at >= n {
                return Err(GraphError::VertexOutOfRange(x.at));
            }
            let ok = if x.kind.oriented() {
                matches!(x.flow, Flow::In | Flow::Out)
            } else {
                matches!(x.flow, Flow::Un)
            };
            if !ok {
                return Err(GraphError::BadExternalFlow(i));
            }
        }
        for (v, kind) in self.vertices.iter().enumerate() {
            let found = self.incident_stubs(v);
            let expected = kind.leg_profile();
            if found != expected {
                return Err(GraphError::LegProfileMismatch {
                    vertex: v,
                    expected: format_profile(expected),
                    found: format_profile(&found),
                });
            }
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.bullet {
            let profile = self.external_profile();
            if profile != Residue::Vertex(VertexKind::V5).external_profile() {
                return Err(GraphError::IllegalBullet);
            }
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                for (a, b) in [(e.from, e.to), (e.to, e.from)] {
                    if a == v && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// L(Gamma) = E_int - V + 1 for a connected graph.
    pub fn loop_number(&self) -> u32 {
        (self.edges.len() + 1 - self.vertices.len()) as u32
    }

    /// The sorted multiset of external (kind, flow) pairs.
    pub fn external_profile(&self) -> Vec<(EdgeKind, Flow)> {
        let mut p: Vec<_> = self.externals.iter().map(|x| (x.kind, x.flow)).collect();
        p.sort();
        p
    }

    /// res(Gamma): the vertex or edge obtained by collapsing all internal
    /// structure. Bulleted quark two-point graphs give `v5`.
    pub fn residue(&self) -> Result<Residue, GraphError> {
        let profile = self.external_profile();
        for r in Residue::ALL {
            if r.external_profile() == profile {
                return match r {
                    Residue::Edge(EdgeKind::Quark) | Residue::Vertex(VertexKind::V5) => {
                        if self.bullet {
                            Ok(Residue::Vertex(VertexKind::V5))
                        } else {
                            Ok(Residue::Edge(EdgeKind::Quark))
                        }
                    }
                    other => Ok(other),
                };
            }
        }
        Err(GraphError::ResidueOutsideR(format_profile(&profile)))
    }

    /// 1PI: at least one loop and no internal edge is a bridge.
    pub fn is_one_particle_irreducible(&self) -> bool {
        if self.loop_number() == 0 {
            return false;
        }
        (0..self.edges.len()).all(|skip| self.connected_without(skip))
    }

    fn connected_without(&self, skip: usize) -> bool {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (i, e) in self.edges.iter().enumerate() {
                if i == skip {
                    continue;
                }
                for (a, b) in [(e.from, e.to), (e.to, e.from)] {
                    if a == v && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Number of `v5` vertices (the bullet decoration is not a vertex).
    pub fn v5_count(&self) -> u32 {
        self.vertices
            .iter()
            .filter(|k| **k == VertexKind::V5)
            .count() as u32
    }

    /// The multidegree d_1..d_5: vertex counts minus the Kronecker delta
    /// against the residue. The unique negative case is d_5 = -1 for a
    /// bulleted graph without internal mass insertions.
    pub fn multidegree(&self) -> Result<[i64; 5], GraphError> {
        let res = self.residue()?;
        let mut d = [0i64; 5];
        for k in &self.vertices {
            d[k.index()] += 1;
        }
        if let Residue::Vertex(v) = res {
            d[v.index()] -= 1;
        }
        Ok(d)
    }

    /// Vertex subsets reachable helper used by the subgraph machinery.
    pub(crate) fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

pub(crate) fn format_profile(p: &[(EdgeKind, Flow)]) -> String {
    let parts: Vec<String> = p
        .iter()
        .map(|(k, f)| match f {
            Flow::Un => k.name().to_string(),
            _ => format!("{}-{}", k.name(), f.name()),
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

/// Match a stub profile against R; used for residues of subgraph components.
pub(crate) fn profile_residue(profile: &[(EdgeKind, Flow)]) -> Option<Residue> {
    let mut p = profile.to_vec();
    p.sort();
    Residue::ALL.into_iter().find(|r| r.external_profile() == p)
}

/// Connectivity of an edge-induced structure over an arbitrary vertex set.
pub(crate) fn edges_connected(verts: &BTreeSet<usize>, edges: &[(usize, usize)]) -> bool {
    if verts.is_empty() {
        return false;
    }
    let start = *verts.iter().next().unwrap();
    let mut seen = BTreeSet::new();
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && verts.contains(&y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
    }
    seen.len() == verts.len()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// 1-loop quark self-energy: two v1 vertices, one gluon arc, one quark
    /// segment, external quark in/out.
    pub fn qse1() -> FeynGraph {
        FeynGraph::new(
            vec![VertexKind::V1, VertexKind::V1],
            vec![
                Edge {
                    kind: EdgeKind::Quark,
                    from: 0,
                    to: 1,
                },
                Edge {
                    kind: EdgeKind::Gluon,
                    from: 0,
                    to: 1,
                },
            ],
            vec![
                External {
                    kind: EdgeKind::Quark,
                    flow: Flow::In,
                    at: 0,
                },
                External {
                    kind: EdgeKind::Quark,
                    flow: Flow::Out,
                    at: 1,
                },
            ],
            false,
        )
        .unwrap()
    }

    /// 2-loop nested rainbow quark self-energy: quark line 0->1->2->3 with
    /// gluon arcs 0-3 (outer) and 1-2 (inner).
    pub fn rb2() -> FeynGraph {
        FeynGraph::new(
            vec![VertexKind::V1; 4],
            vec![
                Edge {
                    kind: EdgeKind::Quark,
                    from: 0,
                    to: 1,
                },
                Edge {
                    kind: EdgeKind::Quark,
                    from: 1,
                    to: 2,
                },
                Edge {
                    kind: EdgeKind::Quark,
                    from: 2,
                    to: 3,
                },
                Edge {
                    kind: EdgeKind::Gluon,
                    from: 0,
                    to: 3,
                },
                Edge {
                    kind: EdgeKind::Gluon,
                    from: 1,
                    to: 2,
                },
            ],
            vec![
                External {
                    kind: EdgeKind::Quark,
                    flow: Flow::In,
                    at: 0,
                },
                External {
                    kind: EdgeKind::Quark,
                    flow: Flow::Out,
                    at: 3,
                },
            ],
            false,
        )
        .unwrap()
    }

    /// k-loop nested rainbow (k >= 1).
    pub fn rainbow(k: usize) -> FeynGraph {
        let n = 2 * k;
        let mut edges = Vec::new();
        for i in 0..n - 1 {
            edges.push(Edge {
                kind: EdgeKind::Quark,
                from: i,
                to: i + 1,
            });
        }
        for i in 0..k {
            edges.push(Edge {
                kind: EdgeKind::Gluon,
                from: i,
                to: n - 1 - i,
            });
        }
        FeynGraph::new(
            vec![VertexKind::V1; n],
            edges,
            vec![
                External {
                    kind: EdgeKind::Quark,
                    flow: Flow::In,
                    at: 0,
                },
                External {
                    kind: EdgeKind::Quark,
                    flow: Flow::Out,
                    at: n - 1,
                },
            ],
            false,
        )
        .unwrap()
    }

    /// 3-loop gluon self-energy: quark cycle through 6 v1 vertices with two
    /// internal gluon chords; external gluons at vertices 0 and 3.
    /// Quark cycle 0 -> 1 -> 2 -> 3 -> 4 -> 5 -> 0, chords 1-5 and 2-4.
    pub fn gluon_se_3loop() -> FeynGraph {
        let mut edges = Vec::new();
        for i in 0..6 {
            edges.push(Edge {
                kind: EdgeKind::Quark,
                from: i,
                to: (i + 1) % 6,
            });
        }
        edges.push(Edge {
            kind: EdgeKind::Gluon,
            from: 1,
            to: 5,
        });
        edges.push(Edge {
            kind: EdgeKind::Gluon,
            from: 2,
            to: 4,
        });
        FeynGraph::new(
            vec![VertexKind::V1; 6],
            edges,
            vec![
                External {
                    kind: EdgeKind::Gluon,
                    flow: Flow::Un,
                    at: 0,
                },
                External {
                    kind: EdgeKind::Gluon,
                    flow: Flow::Un,
                    at: 3,
                },
            ],
            false,
        )
        .unwrap()
    }

    /// Tree graph: a single v1 vertex with three external legs.
    pub fn tree_v1() -> FeynGraph {
        FeynGraph::new(
            vec![VertexKind::V1],
            vec![],
            vec![
                External {
                    kind: EdgeKind::Quark,
                    flow: Flow::In,
                    at: 0,
                },
                External {
                    kind: EdgeKind::Quark,
                    flow: Flow::Out,
                    at: 0,
                },
                External {
                    kind: EdgeKind::Gluon,
                    flow: Flow::Un,
                    at: 0,
                },
            ],
            false,
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn qse1_invariants() {
        let g = qse1();
        assert_eq!(g.loop_number(), 1);
        assert_eq!(g.residue().unwrap(), Residue::Edge(EdgeKind::Quark));
        assert!(g.is_one_particle_irreducible());
        assert_eq!(g.multidegree().unwrap(), [2, 0, 0, 0, 0]);
    }

    #[test]
    fn rb2_invariants() {
        let g = rb2();
        assert_eq!(g.loop_number(), 2);
        assert_eq!(g.residue().unwrap(), Residue::Edge(EdgeKind::Quark));
        assert!(g.is_one_particle_irreducible());
        assert_eq!(g.multidegree().unwrap(), [4, 0, 0, 0, 0]);
    }

    #[test]
    fn bulleted_residue_and_negative_degree() {
        let mut g = qse1();
        g.bullet = true;
        g.validate().unwrap();
        assert_eq!(g.residue().unwrap(), Residue::Vertex(VertexKind::V5));
        assert_eq!(g.multidegree().unwrap(), [2, 0, 0, 0, -1]);
    }

    #[test]
    fn tree_is_not_1pi() {
        let g = tree_v1();
        assert_eq!(g.loop_number(), 0);
        assert!(!g.is_one_particle_irreducible());
        assert_eq!(g.residue().unwrap(), Residue::Vertex(VertexKind::V1));
        // residue v1 subtracts the delta from d_1
        assert_eq!(g.multidegree().unwrap(), [0, 0, 0, 0, 0]);
    }

    #[test]
    fn bridge_is_not_1pi() {
        // two QSE1 loops joined in series by a quark edge
        let g = FeynGraph::new(
            vec![VertexKind::V1; 4],
            vec![
                Edge {
                    kind: EdgeKind::Quark,
                    from: 0,
                    to: 1,
                },
                Edge {
                    kind: EdgeKind::Gluon,
                    from: 0,
                    to: 1,
                },
                Edge {
                    kind: EdgeKind::Quark,
                    from: 1,
                    to: 2,
                },
                Edge {
                    kind: EdgeKind::Quark,
                    from: 2,
                    to: 3,
                },
                Edge {
                    kind: EdgeKind::Gluon,
                    from: 2,
                    to: 3,
                },
            ],
            vec![
                External {
                    kind: EdgeKind::Quark,
                    flow: Flow::In,
                    at: 0,
                },
                External {
                    kind: EdgeKind::Quark,
                    flow: Flow::Out,
                    at: 3,
                },
            ],
            false,
        )
        .unwrap();
        assert_eq!(g.loop_number(), 2);
        assert!(!g.is_one_particle_irreducible());
    }

    #[test]
    fn illegal_bullet_rejected() {
        let mut g = gluon_se_3loop();
        g.bullet = true;
        assert_eq!(g.validate(), Err(GraphError::IllegalBullet));
    }

    #[test]
    fn leg_profile_mismatch_detected() {
        let mut g = qse1();
        g.vertices[1] = VertexKind::V3;
        assert!(matches!(
            g.validate(),
            Err(GraphError::LegProfileMismatch { vertex: 1, .. })
        ));
    }

    #[test]
    fn unmatchable_externals() {
        // two in-going quarks cannot be a residue in R
        let g = FeynGraph {
            vertices: vec![VertexKind::V1, VertexKind::V1],
            edges: vec![
                Edge {
                    kind: EdgeKind::Quark,
                    from: 0,
                    to: 1,
                },
                Edge {
                    kind: EdgeKind::Gluon,
                    from: 0,
                    to: 1,
                },
            ],
            externals: vec![
                External {
                    kind: EdgeKind::Quark,
                    flow: Flow::In,
                    at: 0,
                },
                External {
                    kind: EdgeKind::Quark,
                    flow: Flow::In,
                    at: 1,
                },
            ],
            bullet: false,
        };
        assert!(matches!(g.residue(), Err(GraphError::ResidueOutsideR(_))));
    }

    #[test]
    fn rainbow_loops() {
        for k in 1..=3 {
            let g = rainbow(k);
            assert_eq!(g.loop_number(), k as u32);
            assert!(g.is_one_particle_irreducible());
        }
    }
}
