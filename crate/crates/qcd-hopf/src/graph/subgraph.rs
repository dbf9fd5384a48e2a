//! Divergent subgraphs, their disjoint unions, and contraction.
//!
//! A divergent subgraph is determined by a vertex subset: it consists of the
//! chosen vertices together with all internal edges among them (the full,
//! vertex-induced subgraph). A union is a set of pairwise-disjoint such
//! subsets, each inducing a connected 1PI graph whose residue lies in R.
//! This matches both worked coproduct examples; in particular partial
//! edge-subset subgraphs (which would contribute extra tadpole cographs to
//! the three-loop gluon self-energy) are excluded.

use super::{
    edges_connected, profile_residue, Edge, EdgeKind, External, FeynGraph, Flow, GraphError,
    Residue, VertexKind,
};
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Brick {
    pub vertices: BTreeSet<usize>,
    pub residue: Residue,
}

/// Decoration applied when contracting a quark two-point component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decoration {
    /// Contract to a bare quark edge.
    Edge,
    /// Contract to a v5 mass vertex (the component enters as a bullet).
    Bullet,
}

fn induced_edges(g: &FeynGraph, verts: &BTreeSet<usize>) -> Vec<usize> {
    g.edges
        .iter()
        .enumerate()
        .filter(|(_, e)| verts.contains(&e.from) && verts.contains(&e.to))
        .map(|(i, _)| i)
        .collect()
}

/// Stub profile of the induced subgraph on `verts`: boundary half-edges plus
/// the graph's own external legs attached inside.
fn stub_profile(g: &FeynGraph, verts: &BTreeSet<usize>) -> Vec<(EdgeKind, Flow)> {
    let mut profile = Vec::new();
    for e in &g.edges {
        let fin = verts.contains(&e.from);
        let tin = verts.contains(&e.to);
        if fin && !tin {
            profile.push((e.kind, if e.kind.oriented() { Flow::Out } else { Flow::Un }));
        }
        if tin && !fin {
            profile.push((e.kind, if e.kind.oriented() { Flow::In } else { Flow::Un }));
        }
    }
    for x in &g.externals {
        if verts.contains(&x.at) {
            profile.push((x.kind, x.flow));
        }
    }
    profile.sort();
    profile
}

/// Residue of the induced subgraph on `verts`, if it lies in R.
pub(crate) fn component_residue(g: &FeynGraph, verts: &BTreeSet<usize>) -> Option<Residue> {
    profile_residue(&stub_profile(g, verts))
}

fn is_divergent_component(g: &FeynGraph, verts: &BTreeSet<usize>) -> Option<Residue> {
    if verts.len() < 2 || verts.len() >= g.vertex_count() {
        // a single vertex induces no edges; the full set induces the graph
        return None;
    }
    let edge_idx = induced_edges(g, verts);
    if edge_idx.len() < verts.len() {
        // fewer edges than vertices means no loop
        return None;
    }
    let pairs: Vec<(usize, usize)> = edge_idx
        .iter()
        .map(|&i| (g.edges[i].from, g.edges[i].to))
        .collect();
    if !edges_connected(verts, &pairs) {
        return None;
    }
    // 1PI: bridgeless
    for skip in 0..pairs.len() {
        let rest: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, p)| *p)
            .collect();
        if !edges_connected(verts, &rest) {
            return None;
        }
    }
    component_residue(g, verts)
}

/// All vertex subsets that induce a proper, connected 1PI subgraph with
/// residue in R.
pub fn divergent_bricks(g: &FeynGraph) -> Vec<Brick> {
    let n = g.vertex_count();
    assert!(n <= 24, "graph too large for subset enumeration");
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let verts: BTreeSet<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
        if let Some(residue) = is_divergent_component(g, &verts) {
            out.push(Brick { vertices: verts, residue });
        }
    }
    out.sort();
    out
}

/// All proper nonempty vertex-disjoint unions of divergent 1PI subgraphs.
pub fn divergent_subgraph_unions(g: &FeynGraph) -> Vec<Vec<Brick>> {
    let bricks = divergent_bricks(g);
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn rec(
        bricks: &[Brick],
        start: usize,
        used: &BTreeSet<usize>,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<Brick>>,
    ) {
        if !current.is_empty() {
            out.push(current.iter().map(|&i| bricks[i].clone()).collect());
        }
        for i in start..bricks.len() {
            if bricks[i].vertices.is_disjoint(used) {
                let mut used2 = used.clone();
                used2.extend(bricks[i].vertices.iter().copied());
                current.push(i);
                rec(bricks, i + 1, &used2, current, out);
                current.pop();
            }
        }
    }
    rec(&bricks, 0, &BTreeSet::new(), &mut current, &mut out);
    out.sort();
    out
}

/// Extracts the induced subgraph on `verts` as a standalone graph. The
/// external legs of the extracted graph are the boundary stubs, ordered by
/// (kind, flow) and then by their position in the parent graph.
pub fn extract_component(g: &FeynGraph, verts: &BTreeSet<usize>) -> Result<FeynGraph, GraphError> {
    let order: Vec<usize> = verts.iter().copied().collect();
    let newid = |v: usize| order.iter().position(|&x| x == v).unwrap();
    let vertices: Vec<VertexKind> = order.iter().map(|&v| g.vertices[v]).collect();
    let edges: Vec<Edge> = induced_edges(g, verts)
        .into_iter()
        .map(|i| {
            let e = &g.edges[i];
            Edge {
                kind: e.kind,
                from: newid(e.from),
                to: newid(e.to),
            }
        })
        .collect();

    // boundary stubs with deterministic keys into the parent graph
    let mut stubs: Vec<(EdgeKind, Flow, (u8, usize), usize)> = Vec::new();
    for (i, x) in g.externals.iter().enumerate() {
        if verts.contains(&x.at) {
            stubs.push((x.kind, x.flow, (0, i), x.at));
        }
    }
    for (i, e) in g.edges.iter().enumerate() {
        let fin = verts.contains(&e.from);
        let tin = verts.contains(&e.to);
        if fin && !tin {
            let flow = if e.kind.oriented() { Flow::Out } else { Flow::Un };
            stubs.push((e.kind, flow, (1, i), e.from));
        }
        if tin && !fin {
            let flow = if e.kind.oriented() { Flow::In } else { Flow::Un };
            stubs.push((e.kind, flow, (1, i), e.to));
        }
    }
    stubs.sort();
    let externals: Vec<External> = stubs
        .into_iter()
        .map(|(kind, flow, _, at)| External {
            kind,
            flow,
            at: newid(at),
        })
        .collect();
    FeynGraph::new(vertices, edges, externals, false)
}

/// Contracts a union of divergent subgraphs. `decorations[i]` must be `Some`
/// exactly when component `i` has residue e1 (quark two-point); ghost and
/// gluon two-point components contract to an edge and vertex-residue
/// components to the corresponding vertex.
pub fn contract_union(
    g: &FeynGraph,
    comps: &[BTreeSet<usize>],
    decorations: &[Option<Decoration>],
) -> Result<FeynGraph, GraphError> {
    if comps.len() != decorations.len() {
        return Err(GraphError::Contraction(
            "one decoration slot per component required".into(),
        ));
    }
    let mut all: BTreeSet<usize> = BTreeSet::new();
    for c in comps {
        for &v in c {
            if !all.insert(v) {
                return Err(GraphError::Contraction(
                    "components are not vertex-disjoint".into(),
                ));
            }
        }
    }

    // classify components
    enum Plan {
        ToVertex(VertexKind),
        Splice,
    }
    let mut plans = Vec::new();
    for (c, dec) in comps.iter().zip(decorations.iter()) {
        let residue = is_divergent_component(g, c).ok_or_else(|| {
            GraphError::Contraction("component is not a divergent 1PI subgraph".into())
        })?;
        let plan = match residue {
            Residue::Vertex(vk) => {
                if dec.is_some() {
                    return Err(GraphError::Contraction(
                        "decoration supplied for a non-quark-two-point component".into(),
                    ));
                }
                Plan::ToVertex(vk)
            }
            Residue::Edge(EdgeKind::Quark) => match dec {
                Some(Decoration::Edge) => Plan::Splice,
                Some(Decoration::Bullet) => Plan::ToVertex(VertexKind::V5),
                None => {
                    return Err(GraphError::Contraction(
                        "quark two-point component needs an edge-or-bullet decoration".into(),
                    ))
                }
            },
            Residue::Edge(_) => {
                if dec.is_some() {
                    return Err(GraphError::Contraction(
                        "decoration supplied for a non-quark-two-point component".into(),
                    ));
                }
                Plan::Splice
            }
        };
        plans.push(plan);
    }

    // extended id space: original vertices 0..n, one fresh id per ToVertex comp
    let n = g.vertex_count();
    let mut ext_kinds: Vec<VertexKind> = Vec::new();
    let mut comp_new_id: Vec<Option<usize>> = Vec::new();
    for plan in &plans {
        match plan {
            Plan::ToVertex(vk) => {
                comp_new_id.push(Some(n + ext_kinds.len()));
                ext_kinds.push(*vk);
            }
            Plan::Splice => comp_new_id.push(None),
        }
    }
    let vertex_image = |v: usize| -> Option<usize> {
        for (ci, c) in comps.iter().enumerate() {
            if c.contains(&v) {
                return comp_new_id[ci]; // None for splice comps (pending)
            }
        }
        Some(v)
    };

    // working edge and external lists; drop edges internal to a component
    let mut edges: Vec<Edge> = Vec::new();
    for e in &g.edges {
        if comps
            .iter()
            .any(|c| c.contains(&e.from) && c.contains(&e.to))
        {
            continue;
        }
        let from = vertex_image(e.from).unwrap_or(e.from);
        let to = vertex_image(e.to).unwrap_or(e.to);
        edges.push(Edge {
            kind: e.kind,
            from,
            to,
        });
    }
    let mut externals: Vec<External> = g
        .externals
        .iter()
        .map(|x| External {
            kind: x.kind,
            flow: x.flow,
            at: vertex_image(x.at).unwrap_or(x.at),
        })
        .collect();

    // splice the edge-residue components one at a time
    for (ci, plan) in plans.iter().enumerate() {
        if !matches!(plan, Plan::Splice) {
            continue;
        }
        let c = &comps[ci];
        // collect current stubs: (edge index, side) or external index
        #[derive(Clone, Copy)]
        enum Stub {
            EdgeHalf { idx: usize, inward: bool },
            Ext(usize),
        }
        let mut stubs: Vec<(Flow, Stub)> = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            let fin = c.contains(&e.from);
            let tin = c.contains(&e.to);
            if fin && tin {
                return Err(GraphError::Contraction(
                    "edge trapped inside a spliced component".into(),
                ));
            }
            if fin {
                let flow = if e.kind.oriented() { Flow::Out } else { Flow::Un };
                stubs.push((flow, Stub::EdgeHalf { idx: i, inward: false }));
            }
            if tin {
                let flow = if e.kind.oriented() { Flow::In } else { Flow::Un };
                stubs.push((flow, Stub::EdgeHalf { idx: i, inward: true }));
            }
        }
        for (i, x) in externals.iter().enumerate() {
            if c.contains(&x.at) {
                stubs.push((x.flow, Stub::Ext(i)));
            }
        }
        if stubs.len() != 2 {
            return Err(GraphError::Contraction(format!(
                "edge-residue component has {} boundary stubs",
                stubs.len()
            )));
        }
        let kind = match component_residue(g, c) {
            Some(Residue::Edge(k)) => k,
            _ => unreachable!("splice component verified above"),
        };
        // outside endpoint of a boundary edge half
        let outside = |e: &Edge, inward: bool| if inward { e.from } else { e.to };
        match (stubs[0], stubs[1]) {
            ((_, Stub::EdgeHalf { idx: i, inward: iin }), (_, Stub::EdgeHalf { idx: j, inward: jin })) => {
                let (u, w) = if kind.oriented() {
                    // the inward stub's edge arrives from outside: source side
                    let (src, dst) = if iin { (i, j) } else { (j, i) };
                    (edges[src].from, edges[dst].to)
                } else {
                    (outside(&edges[i], iin), outside(&edges[j], jin))
                };
                let mut remove = [i, j];
                remove.sort_unstable();
                edges.remove(remove[1]);
                edges.remove(remove[0]);
                edges.push(Edge {
                    kind,
                    from: u,
                    to: w,
                });
            }
            ((_, Stub::EdgeHalf { idx, inward }), (_, Stub::Ext(xi)))
            | ((_, Stub::Ext(xi)), (_, Stub::EdgeHalf { idx, inward })) => {
                let u = outside(&edges[idx], inward);
                externals[xi].at = u;
                edges.remove(idx);
            }
            _ => {
                return Err(GraphError::Contraction(
                    "component carries both external legs".into(),
                ));
            }
        }
    }

    // compact ids
    let mut live: Vec<usize> = (0..n)
        .filter(|v| !all.contains(v))
        .chain(n..n + ext_kinds.len())
        .collect();
    live.sort_unstable();
    let compact = |v: usize| live.iter().position(|&x| x == v).unwrap();
    let vertices: Vec<VertexKind> = live
        .iter()
        .map(|&v| if v < n { g.vertices[v] } else { ext_kinds[v - n] })
        .collect();
    let edges = edges
        .into_iter()
        .map(|e| Edge {
            kind: e.kind,
            from: compact(e.from),
            to: compact(e.to),
        })
        .collect();
    let externals = externals
        .into_iter()
        .map(|x| External {
            kind: x.kind,
            flow: x.flow,
            at: compact(x.at),
        })
        .collect();
    FeynGraph::new(vertices, edges, externals, g.bullet)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{canonicalize, graph_to_canonical_json};
    use super::*;

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    #[test]
    fn qse1_is_primitive() {
        assert!(divergent_subgraph_unions(&qse1()).is_empty());
    }

    #[test]
    fn rb2_has_one_union() {
        let g = rb2();
        let unions = divergent_subgraph_unions(&g);
        assert_eq!(unions.len(), 1);
        assert_eq!(unions[0].len(), 1);
        assert_eq!(unions[0][0].vertices, set(&[1, 2]));
        assert_eq!(unions[0][0].residue, Residue::Edge(EdgeKind::Quark));
    }

    #[test]
    fn rb2_contractions() {
        let g = rb2();
        let inner = set(&[1, 2]);

        let to_edge = contract_union(&g, &[inner.clone()], &[Some(Decoration::Edge)]).unwrap();
        let qse = canonicalize(&qse1()).graph;
        assert_eq!(
            graph_to_canonical_json(&canonicalize(&to_edge).graph),
            graph_to_canonical_json(&qse)
        );

        let to_bullet = contract_union(&g, &[inner.clone()], &[Some(Decoration::Bullet)]).unwrap();
        assert_eq!(to_bullet.loop_number(), 1);
        assert_eq!(to_bullet.v5_count(), 1);
        assert!(!to_bullet.bullet);
        assert_eq!(to_bullet.residue().unwrap(), Residue::Edge(EdgeKind::Quark));

        // decoration required for the quark two-point component
        assert!(contract_union(&g, &[inner.clone()], &[None]).is_err());

        // inner subgraph extracted is QSE1
        let ex = extract_component(&g, &inner).unwrap();
        assert_eq!(
            graph_to_canonical_json(&canonicalize(&ex).graph),
            graph_to_canonical_json(&qse)
        );
    }

    #[test]
    fn three_loop_display_unions() {
        let g = gluon_se_3loop();
        let unions = divergent_subgraph_unions(&g);
        // vertices: quark cycle 0..6, external gluons at 0 and 3, chords 1-5, 2-4.
        // Divergent subgraphs: 1-loop triangles at 0 and at 3, their 2-loop
        // extensions, and the disjoint pair of triangles.
        let mut vertex_sets: Vec<Vec<BTreeSet<usize>>> = unions
            .iter()
            .map(|u| u.iter().map(|b| b.vertices.clone()).collect())
            .collect();
        vertex_sets.sort();
        let mut expected = vec![
            vec![set(&[0, 1, 5])],
            vec![set(&[2, 3, 4])],
            vec![set(&[0, 1, 2, 4, 5])],
            vec![set(&[1, 2, 3, 4, 5])],
            vec![set(&[0, 1, 5]), set(&[2, 3, 4])],
        ];
        expected.sort();
        assert_eq!(vertex_sets, expected);
        for u in &unions {
            for b in u {
                assert_eq!(b.residue, Residue::Vertex(VertexKind::V1));
            }
        }
    }

    #[test]
    fn three_loop_contractions_loop_counts() {
        let g = gluon_se_3loop();
        for u in divergent_subgraph_unions(&g) {
            let comps: Vec<BTreeSet<usize>> = u.iter().map(|b| b.vertices.clone()).collect();
            let decs = vec![None; comps.len()];
            let c = contract_union(&g, &comps, &decs).unwrap();
            let lsum: u32 = u
                .iter()
                .map(|b| {
                    extract_component(&g, &b.vertices)
                        .unwrap()
                        .loop_number()
                })
                .sum();
            assert_eq!(c.loop_number(), g.loop_number() - lsum);
        }
    }

    #[test]
    fn multidegree_subtractive_under_contraction() {
        for g in [rb2(), gluon_se_3loop(), rainbow(3)] {
            let dg = g.multidegree().unwrap();
            for u in divergent_subgraph_unions(&g) {
                let comps: Vec<BTreeSet<usize>> = u.iter().map(|b| b.vertices.clone()).collect();
                let quark_slots: Vec<usize> = u
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| b.residue == Residue::Edge(EdgeKind::Quark))
                    .map(|(i, _)| i)
                    .collect();
                for mask in 0..(1u32 << quark_slots.len()) {
                    let mut decs: Vec<Option<Decoration>> = vec![None; comps.len()];
                    for (bit, &slot) in quark_slots.iter().enumerate() {
                        decs[slot] = Some(if mask & (1 << bit) != 0 {
                            Decoration::Bullet
                        } else {
                            Decoration::Edge
                        });
                    }
                    let cograph = contract_union(&g, &comps, &decs).unwrap();
                    let dc = cograph.multidegree().unwrap();
                    let mut dgamma = [0i64; 5];
                    for (i, b) in u.iter().enumerate() {
                        let mut part = extract_component(&g, &b.vertices).unwrap();
                        if decs[i] == Some(Decoration::Bullet) {
                            part.bullet = true;
                        }
                        let dp = part.multidegree().unwrap();
                        for j in 0..5 {
                            dgamma[j] += dp[j];
                        }
                    }
                    for j in 0..5 {
                        assert_eq!(dc[j], dg[j] - dgamma[j], "component {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn splice_can_create_self_loop() {
        // gluon bubble inserted in a tadpole line: w(v4) -- a(v3) == b(v3) -- w
        use super::super::{EdgeKind, External, Flow, VertexKind};
        let g = FeynGraph::new(
            vec![VertexKind::V4, VertexKind::V3, VertexKind::V3],
            vec![
                Edge {
                    kind: EdgeKind::Gluon,
                    from: 0,
                    to: 1,
                },
                Edge {
                    kind: EdgeKind::Gluon,
                    from: 0,
                    to: 2,
                },
                Edge {
                    kind: EdgeKind::Gluon,
                    from: 1,
                    to: 2,
                },
                Edge {
                    kind: EdgeKind::Gluon,
                    from: 1,
                    to: 2,
                },
            ],
            vec![
                External {
                    kind: EdgeKind::Gluon,
                    flow: Flow::Un,
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
        .unwrap();
        assert_eq!(g.loop_number(), 2);
        let unions = divergent_subgraph_unions(&g);
        assert_eq!(unions.len(), 1);
        assert_eq!(unions[0][0].vertices, set(&[1, 2]));
        assert_eq!(unions[0][0].residue, Residue::Edge(EdgeKind::Gluon));
        let c = contract_union(&g, &[set(&[1, 2])], &[None]).unwrap();
        // result: the gluon tadpole
        assert_eq!(c.vertices, vec![VertexKind::V4]);
        assert_eq!(c.loop_number(), 1);
        assert_eq!(c.edges.len(), 1);
        assert_eq!(c.edges[0].from, c.edges[0].to);
    }
}
