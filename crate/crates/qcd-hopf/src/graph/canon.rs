//! Canonical labeling and symmetry factors.
//!
//! Isomorphisms fix every external leg pointwise and respect vertex/edge
//! kinds and quark/ghost orientation. Labelings are searched by backtracking
//! over color classes obtained from iterated degree/kind refinement; the
//! graphs handled here are small (a dozen vertices at most), so exhaustive
//! search within refined classes is adequate.
//!
//! Sym(Gamma) is the order of the automorphism group at the half-edge level:
//! vertex automorphisms times permutations of parallel internal edges times a
//! factor 2 for every unoriented (gluon) self-loop flip.

use super::{Edge, FeynGraph};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub graph: FeynGraph,
    pub sym: u64,
}

/// SHA-256 of the canonical JSON, truncated to 16 hex chars.
pub fn canonical_hash(canonical_json: &str) -> String {
    let mut h = Sha256::new();
    h.update(canonical_json.as_bytes());
    let digest = h.finalize();
    let mut s = String::new();
    for b in digest.iter().take(8) {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

pub fn canonicalize(g: &FeynGraph) -> CanonicalForm {
    let n = g.vertices.len();
    let colors = refine_colors(g);

    // group vertices into classes ordered by color
    let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (v, c) in colors.iter().enumerate() {
        classes.entry(*c).or_default().push(v);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();

    let mut search_space: u64 = 1;
    for c in &classes {
        search_space = search_space.saturating_mul(factorial(c.len() as u64));
    }
    assert!(
        search_space <= 20_000_000,
        "canonical labeling search space too large ({search_space})"
    );

    let mut best: Option<Vec<u32>> = None;
    let mut best_perm: Vec<usize> = Vec::new();
    let mut aut_count: u64 = 0;

    let mut perm = vec![0usize; n]; // old index -> new index
    enumerate_class_orders(&classes, 0, &mut perm, &mut |perm| {
        let cert = certificate(g, perm);
        match &best {
            Some(b) if cert > *b => {}
            Some(b) if cert == *b => aut_count += 1,
            _ => {
                best = Some(cert);
                best_perm = perm.to_vec();
                aut_count = 1;
            }
        }
    });

    let sym = aut_count * edge_factor(g);
    CanonicalForm {
        graph: relabel(g, &best_perm),
        sym,
    }
}

fn factorial(k: u64) -> u64 {
    (1..=k).product::<u64>().max(1)
}

/// Iterated refinement: start from (kind, attached external legs), then
/// repeatedly append the multiset of (edge kind, flow, neighbor color).
fn refine_colors(g: &FeynGraph) -> Vec<u64> {
    let n = g.vertices.len();
    let mut keys: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut k = vec![g.vertices[v].index() as u64];
            let mut exts: Vec<u64> = g
                .externals
                .iter()
                .enumerate()
                .filter(|(_, x)| x.at == v)
                .map(|(i, _)| i as u64)
                .collect();
            exts.sort();
            k.push(exts.len() as u64);
            k.extend(exts);
            k
        })
        .collect();
    let mut colors = rank(&keys);
    loop {
        for v in 0..n {
            let mut neigh: Vec<u64> = Vec::new();
            for e in &g.edges {
                let oriented = e.kind.oriented();
                if e.from == v {
                    let side = if oriented { 1 } else { 0 };
                    neigh.push(pack(e.kind as u64, side, colors[e.to], e.from == e.to));
                }
                if e.to == v {
                    let side = if oriented { 2 } else { 0 };
                    neigh.push(pack(e.kind as u64, side, colors[e.from], e.from == e.to));
                }
            }
            neigh.sort();
            keys[v] = vec![colors[v]];
            keys[v].extend(neigh);
        }
        let new_colors = rank(&keys);
        if new_colors == colors {
            return colors;
        }
        colors = new_colors;
    }
}

fn pack(kind: u64, side: u64, color: u64, self_loop: bool) -> u64 {
    (((kind * 4 + side) * 2 + self_loop as u64) << 32) | color
}

fn rank(keys: &[Vec<u64>]) -> Vec<u64> {
    let mut sorted: Vec<&Vec<u64>> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).unwrap() as u64)
        .collect()
}

fn enumerate_class_orders(
    classes: &[Vec<usize>],
    class_idx: usize,
    perm: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if class_idx == classes.len() {
        visit(perm);
        return;
    }
    let offset: usize = classes[..class_idx].iter().map(|c| c.len()).sum();
    let members = &classes[class_idx];
    permute(members, offset, perm, &mut |perm| {
        enumerate_class_orders(classes, class_idx + 1, perm, visit)
    });
}

fn permute(
    members: &[usize],
    offset: usize,
    perm: &mut Vec<usize>,
    visit: &mut impl FnMut(&mut Vec<usize>),
) {
    fn rec(
        members: &[usize],
        used: &mut Vec<bool>,
        pos: usize,
        offset: usize,
        perm: &mut Vec<usize>,
        visit: &mut impl FnMut(&mut Vec<usize>),
    ) {
        if pos == members.len() {
            visit(perm);
            return;
        }
        for i in 0..members.len() {
            if !used[i] {
                used[i] = true;
                perm[members[i]] = offset + pos;
                rec(members, used, pos + 1, offset, perm, visit);
                used[i] = false;
            }
        }
    }
    let mut used = vec![false; members.len()];
    rec(members, &mut used, 0, offset, perm, visit);
}

/// Flat encoding of the relabeled structure, compared lexicographically.
fn certificate(g: &FeynGraph, perm: &[usize]) -> Vec<u32> {
    let mut edges: Vec<(u32, u32, u32)> = g
        .edges
        .iter()
        .map(|e| {
            let (mut a, mut b) = (perm[e.from] as u32, perm[e.to] as u32);
            if !e.kind.oriented() && a > b {
                std::mem::swap(&mut a, &mut b);
            }
            (e.kind as u32, a, b)
        })
        .collect();
    edges.sort();
    let mut cert = Vec::with_capacity(3 * edges.len() + g.externals.len());
    for (k, a, b) in edges {
        cert.push(k);
        cert.push(a);
        cert.push(b);
    }
    for x in &g.externals {
        cert.push(perm[x.at] as u32);
    }
    cert
}

fn relabel(g: &FeynGraph, perm: &[usize]) -> FeynGraph {
    let n = g.vertices.len();
    let mut vertices = vec![g.vertices[0]; n];
    for (old, &new) in perm.iter().enumerate() {
        vertices[new] = g.vertices[old];
    }
    let mut edges: Vec<Edge> = g
        .edges
        .iter()
        .map(|e| {
            let (mut a, mut b) = (perm[e.from], perm[e.to]);
            if !e.kind.oriented() && a > b {
                std::mem::swap(&mut a, &mut b);
            }
            Edge {
                kind: e.kind,
                from: a,
                to: b,
            }
        })
        .collect();
    edges.sort();
    let externals = g
        .externals
        .iter()
        .map(|x| super::External {
            kind: x.kind,
            flow: x.flow,
            at: perm[x.at],
        })
        .collect();
    FeynGraph {
        vertices,
        edges,
        externals,
        bullet: g.bullet,
    }
}

/// Product over parallel-edge classes of mult!, times 2 per gluon self-loop.
fn edge_factor(g: &FeynGraph) -> u64 {
    let mut groups: BTreeMap<(u32, usize, usize), u64> = BTreeMap::new();
    let mut self_loop_flips = 1u64;
    for e in &g.edges {
        let (a, b) = if !e.kind.oriented() && e.from > e.to {
            (e.to, e.from)
        } else {
            (e.from, e.to)
        };
        *groups.entry((e.kind as u32, a, b)).or_insert(0) += 1;
        if !e.kind.oriented() && e.from == e.to {
            self_loop_flips *= 2;
        }
    }
    groups.values().map(|&m| factorial(m)).product::<u64>() * self_loop_flips
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{graph_to_canonical_json, EdgeKind, External, Flow, VertexKind};
    use super::*;

    fn gluon_bubble() -> FeynGraph {
        // 1-loop gluon self-energy from two v3 vertices and a double gluon line
        FeynGraph::new(
            vec![VertexKind::V3, VertexKind::V3],
            vec![
                Edge {
                    kind: EdgeKind::Gluon,
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
                    kind: EdgeKind::Gluon,
                    flow: Flow::Un,
                    at: 0,
                },
                External {
                    kind: EdgeKind::Gluon,
                    flow: Flow::Un,
                    at: 1,
                },
            ],
            false,
        )
        .unwrap()
    }

    fn gluon_tadpole() -> FeynGraph {
        // v4 with a gluon self-loop and two external gluons
        FeynGraph::new(
            vec![VertexKind::V4],
            vec![Edge {
                kind: EdgeKind::Gluon,
                from: 0,
                to: 0,
            }],
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
        .unwrap()
    }

    #[test]
    fn sym_examples() {
        assert_eq!(canonicalize(&qse1()).sym, 1);
        assert_eq!(canonicalize(&gluon_bubble()).sym, 2);
        assert_eq!(canonicalize(&gluon_tadpole()).sym, 2);
        assert_eq!(canonicalize(&rb2()).sym, 1);
    }

    #[test]
    fn canonical_form_is_relabel_invariant() {
        let g = rb2();
        let base = graph_to_canonical_json(&canonicalize(&g).graph);
        // relabel vertices by a rotation and by a reversal
        for perm in [vec![2usize, 3, 0, 1], vec![3, 1, 2, 0], vec![1, 0, 3, 2]] {
            let h = super::relabel(&g, &perm);
            assert!(h.validate().is_ok());
            let c = canonicalize(&h);
            assert_eq!(graph_to_canonical_json(&c.graph), base);
            assert_eq!(c.sym, 1);
        }
    }

    #[test]
    fn canonicalize_is_idempotent() {
        for g in [qse1(), rb2(), gluon_bubble(), gluon_tadpole(), gluon_se_3loop()] {
            let c1 = canonicalize(&g);
            let c2 = canonicalize(&c1.graph);
            assert_eq!(c1.graph, c2.graph);
            assert_eq!(c1.sym, c2.sym);
        }
    }
}
