//! Exhaustive generation of 1PI graphs by Wick-style stub pairing.
//!
//! For a residue r and loop order L the admissible vertex multisets satisfy
//! n1 + n2 + n3 + 2 n4 = 2L + (N(r) - 2 if r is a vertex, else 0), which is
//! the multigrading/loop relation; v5 insertions carry weight zero and are
//! bounded by the explicit `max_v5` argument.

use super::{
    canonicalize, graph_to_canonical_json, Edge, EdgeKind, External, FeynGraph, Flow, Residue,
    VertexKind,
};
use std::collections::BTreeMap;

/// Complete duplicate-free list of canonical 1PI graphs with the given
/// residue, exactly `loops` loops and at most `max_v5` mass insertions.
/// Graphs for residue v5 are the quark two-point graphs with bullet = true.
pub fn enumerate_graphs(res: Residue, loops: u32, max_v5: u32) -> Vec<FeynGraph> {
    assert!(loops >= 1, "enumeration requires at least one loop");
    let mut out: BTreeMap<String, FeynGraph> = BTreeMap::new();
    let bullet = res == Residue::Vertex(VertexKind::V5);
    let extra = match res {
        Residue::Vertex(v) => v.valence() as u32 - 2,
        Residue::Edge(_) => 0,
    };
    let weight = 2 * loops + extra;

    for multiset in vertex_multisets(weight, max_v5) {
        let mut kinds = Vec::new();
        for (i, &cnt) in multiset.iter().enumerate() {
            for _ in 0..cnt {
                kinds.push(VertexKind::ALL[i]);
            }
        }
        if kinds.is_empty() {
            continue;
        }
        let externals = standard_externals(res);
        assign_externals(&kinds, &externals, &mut |ext_at| {
            let mut remaining = stub_counts(&kinds);
            for (x, &v) in externals.iter().zip(ext_at.iter()) {
                *remaining.get_mut(&(v, x.0, x.1)).unwrap() -= 1;
            }
            pair_stubs(&remaining, &mut |edges| {
                let externals_full: Vec<External> = externals
                    .iter()
                    .zip(ext_at.iter())
                    .map(|(&(kind, flow), &at)| External { kind, flow, at })
                    .collect();
                let g = FeynGraph {
                    vertices: kinds.clone(),
                    edges: edges.to_vec(),
                    externals: externals_full,
                    bullet,
                };
                if g.validate().is_ok() && g.is_one_particle_irreducible() {
                    debug_assert_eq!(g.loop_number(), loops);
                    let c = canonicalize(&g).graph;
                    out.entry(graph_to_canonical_json(&c)).or_insert(c);
                }
            });
        });
    }
    out.into_values().collect()
}

/// External legs of a residue in the fixed label order (kind, then flow).
pub fn standard_externals(res: Residue) -> Vec<(EdgeKind, Flow)> {
    res.external_profile()
}

fn vertex_multisets(weight: u32, max_v5: u32) -> Vec<[u32; 5]> {
    let mut out = Vec::new();
    for n4 in 0..=weight / 2 {
        let rem = weight - 2 * n4;
        for n3 in 0..=rem {
            for n2 in 0..=rem - n3 {
                let n1 = rem - n3 - n2;
                for n5 in 0..=max_v5 {
                    out.push([n1, n2, n3, n4, n5]);
                }
            }
        }
    }
    out
}

type StubCounts = BTreeMap<(usize, EdgeKind, Flow), u32>;

fn stub_counts(kinds: &[VertexKind]) -> StubCounts {
    let mut m = StubCounts::new();
    for (v, k) in kinds.iter().enumerate() {
        for &(ek, fl) in k.leg_profile() {
            *m.entry((v, ek, fl)).or_insert(0) += 1;
        }
    }
    m
}

/// Enumerates attachments of the labeled externals to vertices with a free
/// matching stub. Assignments are by vertex only; identical stubs at one
/// vertex are interchangeable.
fn assign_externals(
    kinds: &[VertexKind],
    externals: &[(EdgeKind, Flow)],
    visit: &mut impl FnMut(&[usize]),
) {
    fn rec(
        kinds: &[VertexKind],
        externals: &[(EdgeKind, Flow)],
        idx: usize,
        used: &mut StubCounts,
        at: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if idx == externals.len() {
            visit(at);
            return;
        }
        let (kind, flow) = externals[idx];
        for v in 0..kinds.len() {
            let capacity = kinds[v].leg_profile().iter().filter(|s| **s == (kind, flow)).count() as u32;
            let u = used.entry((v, kind, flow)).or_insert(0);
            if *u < capacity {
                *u += 1;
                at.push(v);
                rec(kinds, externals, idx + 1, used, at, visit);
                at.pop();
                *used.get_mut(&(v, kind, flow)).unwrap() -= 1;
            }
        }
    }
    let mut used = StubCounts::new();
    let mut at = Vec::new();
    rec(kinds, externals, 0, &mut used, &mut at, visit);
}

/// Pairs all remaining stubs into internal edges: oriented kinds match each
/// out-stub with an in-stub, gluon stubs pair among themselves.
fn pair_stubs(remaining: &StubCounts, visit: &mut impl FnMut(&[Edge])) {
    let expand = |kind: EdgeKind, flow: Flow| -> Vec<usize> {
        let mut list = Vec::new();
        for (&(v, k, f), &cnt) in remaining {
            if k == kind && f == flow {
                for _ in 0..cnt {
                    list.push(v);
                }
            }
        }
        list
    };

    let quark_out = expand(EdgeKind::Quark, Flow::Out);
    let quark_in = expand(EdgeKind::Quark, Flow::In);
    let ghost_out = expand(EdgeKind::Ghost, Flow::Out);
    let ghost_in = expand(EdgeKind::Ghost, Flow::In);
    let gluon = expand(EdgeKind::Gluon, Flow::Un);
    if quark_out.len() != quark_in.len()
        || ghost_out.len() != ghost_in.len()
        || gluon.len() % 2 != 0
    {
        return;
    }

    let mut edges = Vec::new();
    oriented_matchings(EdgeKind::Quark, &quark_out, &quark_in, &mut edges, &mut |e1| {
        oriented_matchings(EdgeKind::Ghost, &ghost_out, &ghost_in, e1, &mut |e2| {
            gluon_matchings(&gluon, e2, visit);
        });
    });
}

fn oriented_matchings(
    kind: EdgeKind,
    outs: &[usize],
    ins: &[usize],
    edges: &mut Vec<Edge>,
    visit: &mut impl FnMut(&mut Vec<Edge>),
) {
    fn rec(
        kind: EdgeKind,
        outs: &[usize],
        ins: &[usize],
        pos: usize,
        used: &mut Vec<bool>,
        edges: &mut Vec<Edge>,
        visit: &mut impl FnMut(&mut Vec<Edge>),
    ) {
        if pos == outs.len() {
            visit(edges);
            return;
        }
        for j in 0..ins.len() {
            if !used[j] {
                used[j] = true;
                edges.push(Edge {
                    kind,
                    from: outs[pos],
                    to: ins[j],
                });
                rec(kind, outs, ins, pos + 1, used, edges, visit);
                edges.pop();
                used[j] = false;
            }
        }
    }
    let mut used = vec![false; ins.len()];
    rec(kind, outs, ins, 0, &mut used, edges, visit);
}

fn gluon_matchings(stubs: &[usize], edges: &mut Vec<Edge>, visit: &mut impl FnMut(&[Edge])) {
    fn rec(
        stubs: &[usize],
        taken: &mut Vec<bool>,
        edges: &mut Vec<Edge>,
        visit: &mut impl FnMut(&[Edge]),
    ) {
        let first = match taken.iter().position(|t| !t) {
            None => {
                visit(edges);
                return;
            }
            Some(i) => i,
        };
        taken[first] = true;
        for j in first + 1..stubs.len() {
            if !taken[j] {
                taken[j] = true;
                let (a, b) = (stubs[first].min(stubs[j]), stubs[first].max(stubs[j]));
                edges.push(Edge {
                    kind: EdgeKind::Gluon,
                    from: a,
                    to: b,
                });
                rec(stubs, taken, edges, visit);
                edges.pop();
                taken[j] = false;
            }
        }
        taken[first] = false;
    }
    let mut taken = vec![false; stubs.len()];
    rec(stubs, &mut taken, edges, visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_loop_gluon_self_energy_has_four_graphs() {
        let graphs = enumerate_graphs(Residue::Edge(EdgeKind::Gluon), 1, 0);
        assert_eq!(graphs.len(), 4);
        // quark loop, ghost loop, gluon loop, gluon tadpole
        let mut kinds: Vec<Vec<VertexKind>> = graphs.iter().map(|g| g.vertices.clone()).collect();
        kinds.sort();
        assert_eq!(
            kinds,
            vec![
                vec![VertexKind::V1, VertexKind::V1],
                vec![VertexKind::V2, VertexKind::V2],
                vec![VertexKind::V3, VertexKind::V3],
                vec![VertexKind::V4],
            ]
        );
    }

    #[test]
    fn one_loop_quark_and_ghost_self_energy() {
        assert_eq!(enumerate_graphs(Residue::Edge(EdgeKind::Quark), 1, 0).len(), 1);
        assert_eq!(enumerate_graphs(Residue::Edge(EdgeKind::Ghost), 1, 0).len(), 1);
    }

    #[test]
    fn v5_residue_graphs_are_bulleted() {
        let graphs = enumerate_graphs(Residue::Vertex(VertexKind::V5), 1, 0);
        assert_eq!(graphs.len(), 1);
        assert!(graphs[0].bullet);
        assert_eq!(graphs[0].residue().unwrap(), Residue::Vertex(VertexKind::V5));
    }

    #[test]
    fn mass_insertions_respect_bound() {
        let zero = enumerate_graphs(Residue::Edge(EdgeKind::Quark), 1, 0);
        let one = enumerate_graphs(Residue::Edge(EdgeKind::Quark), 1, 1);
        assert_eq!(zero.len(), 1);
        // QSE1 plus QSE1 with a mass insertion on the internal quark segment
        assert_eq!(one.len(), 2);
        assert!(one.iter().all(|g| g.v5_count() <= 1));
    }
}
