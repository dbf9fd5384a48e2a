//! The free commutative algebra on decorated 1PI graphs with coproduct,
//! antipode, counit and both gradings.
//!
//! Elements are rational-linear combinations of monomials in canonical
//! generators; tensor elements live in the tensor square. The coproduct on a
//! generator sums the graph over its divergent subgraph unions, with quark
//! two-point components contributing both the edge and the bullet term, and
//! extends multiplicatively. Coproducts and antipodes are memoized per
//! generator behind a read-mostly cache.

use crate::graph::{
    canonical_hash, canonicalize, contract_union, divergent_subgraph_unions, enumerate_graphs,
    extract_component, graph_to_canonical_json, Decoration, EdgeKind, FeynGraph, GraphError,
    Residue,
};
use crate::rat::Q;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

#[derive(Debug)]
pub struct GenData {
    pub graph: FeynGraph,
    /// Canonical JSON of the graph; generator identity.
    pub key: String,
    /// Truncated SHA-256 of `key`, used in serialized element references.
    pub hash: String,
    pub loops: u32,
    pub sym: u64,
    pub residue: Residue,
    pub multidegree: [i64; 5],
    pub v5_count: u32,
}

/// A canonical decorated 1PI graph, interned and cheaply clonable.
#[derive(Clone)]
pub struct Generator(Arc<GenData>);

impl Generator {
    pub fn data(&self) -> &GenData {
        &self.0
    }

    pub fn loops(&self) -> u32 {
        self.0.loops
    }

    pub fn graph(&self) -> &FeynGraph {
        &self.0.graph
    }

    pub fn key(&self) -> &str {
        &self.0.key
    }

    pub fn hash(&self) -> &str {
        &self.0.hash
    }

    fn ord_key(&self) -> (u32, &str) {
        (self.0.loops, &self.0.key)
    }
}

impl PartialEq for Generator {
    fn eq(&self, other: &Self) -> bool {
        self.0.key == other.0.key
    }
}
impl Eq for Generator {}
impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Generator {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ord_key().cmp(&other.ord_key())
    }
}
impl std::hash::Hash for Generator {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.key.hash(state);
    }
}
impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Gen({} L{} {})",
            self.0.residue.name(),
            self.0.loops,
            self.0.hash
        )
    }
}

/// A commutative monomial of generators; the empty monomial is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub Vec<Generator>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn single(g: Generator) -> Self {
        Monomial(vec![g])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn loops(&self) -> u32 {
        self.0.iter().map(|g| g.loops()).sum()
    }

    pub fn multidegree(&self) -> [i64; 5] {
        let mut d = [0i64; 5];
        for g in &self.0 {
            for i in 0..5 {
                d[i] += g.data().multidegree[i];
            }
        }
        d
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        v.sort();
        Monomial(v)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Monomial {
    /// Graded-lexicographic: total loop number first, then the factor
    /// sequence (each factor ordered by loop then canonical serialization).
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.loops()
            .cmp(&other.loops())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A finite rational-linear combination of monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HopfElement(pub BTreeMap<Monomial, Q>);

impl HopfElement {
    pub fn zero() -> Self {
        HopfElement(BTreeMap::new())
    }

    pub fn one() -> Self {
        let mut m = BTreeMap::new();
        m.insert(Monomial::one(), Q::one());
        HopfElement(m)
    }

    pub fn from_generator(g: Generator) -> Self {
        let mut m = BTreeMap::new();
        m.insert(Monomial::single(g), Q::one());
        HopfElement(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &other.0 {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &other.0 {
            r.add_term(m.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        HopfElement(self.0.iter().map(|(m, c)| (m.clone(), -c.clone())).collect())
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        HopfElement(self.0.iter().map(|(m, c)| (m.clone(), c * s)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    /// Product discarding monomials above the loop cutoff.
    pub fn mul_trunc(&self, other: &Self, max_loops: u32) -> Self {
        let mut r = Self::zero();
        for (m1, c1) in &self.0 {
            let l1 = m1.loops();
            if l1 > max_loops {
                continue;
            }
            for (m2, c2) in &other.0 {
                if l1 + m2.loops() <= max_loops {
                    r.add_term(m1.mul(m2), c1 * c2);
                }
            }
        }
        r
    }

    pub fn truncate_loops(&self, max_loops: u32) -> Self {
        HopfElement(
            self.0
                .iter()
                .filter(|(m, _)| m.loops() <= max_loops)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    /// q_l: the loop-degree-l component.
    pub fn project_loops(&self, l: u32) -> Self {
        HopfElement(
            self.0
                .iter()
                .filter(|(m, _)| m.loops() == l)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    /// p_{n1..n5}: the multidegree component.
    pub fn project_multidegree(&self, n: [i64; 5]) -> Self {
        HopfElement(
            self.0
                .iter()
                .filter(|(m, _)| m.multidegree() == n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    /// The set of multidegrees occurring in the element.
    pub fn multidegrees(&self) -> Vec<[i64; 5]> {
        let mut v: Vec<[i64; 5]> = self.0.keys().map(|m| m.multidegree()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// epsilon: the coefficient of the empty monomial.
    pub fn counit(&self) -> Q {
        self.0.get(&Monomial::one()).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.0.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn max_loops(&self) -> u32 {
        self.0.keys().map(|m| m.loops()).max().unwrap_or(0)
    }
}

/// A finite rational-linear combination of monomial tensor pairs.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorElement(pub BTreeMap<(Monomial, Monomial), Q>);

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement(BTreeMap::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, l: Monomial, r: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.0.entry((l, r)) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for ((l, m), c) in &other.0 {
            r.add_term(l.clone(), m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for ((l, m), c) in &other.0 {
            r.add_term(l.clone(), m.clone(), -c.clone());
        }
        r
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        TensorElement(self.0.iter().map(|(k, c)| (k.clone(), c * s)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for ((l1, r1), c1) in &self.0 {
            for ((l2, r2), c2) in &other.0 {
                r.add_term(l1.mul(l2), r1.mul(r2), c1 * c2);
            }
        }
        r
    }

    pub fn tensor(a: &HopfElement, b: &HopfElement) -> Self {
        let mut r = Self::zero();
        for (m1, c1) in &a.0 {
            for (m2, c2) in &b.0 {
                r.add_term(m1.clone(), m2.clone(), c1 * c2);
            }
        }
        r
    }
}

/// Triple tensors, used for the coassociativity checks.
pub type Tensor3 = BTreeMap<(Monomial, Monomial, Monomial), Q>;

/// Shared context: generator interning plus memoized coproducts, antipodes
/// and enumerations. All operations are pure; the caches are read-mostly.
#[derive(Default)]
pub struct Hopf {
    registry: RwLock<HashMap<String, Generator>>,
    coproducts: RwLock<HashMap<String, TensorElement>>,
    antipodes: RwLock<HashMap<String, HopfElement>>,
    enumerations: RwLock<HashMap<(Residue, u32, u32), Vec<Generator>>>,
}

impl Hopf {
    pub fn new() -> Self {
        Self::default()
    }

    /// Canonicalizes and interns a graph as a generator.
    pub fn generator(&self, g: &FeynGraph) -> Result<Generator, GraphError> {
        g.validate()?;
        let residue = g.residue()?;
        if !g.is_one_particle_irreducible() {
            return Err(GraphError::Contraction(
                "generators must be 1PI graphs".into(),
            ));
        }
        let canon = canonicalize(g);
        let key = graph_to_canonical_json(&canon.graph);
        if let Some(hit) = self.registry.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let multidegree = canon.graph.multidegree()?;
        let data = GenData {
            hash: canonical_hash(&key),
            loops: canon.graph.loop_number(),
            sym: canon.sym,
            residue,
            multidegree,
            v5_count: canon.graph.v5_count(),
            graph: canon.graph,
            key,
        };
        let gen = Generator(Arc::new(data));
        self.registry
            .write()
            .unwrap()
            .insert(gen.key().to_string(), gen.clone());
        Ok(gen)
    }

    pub fn find_by_hash(&self, hash: &str) -> Option<Generator> {
        self.registry
            .read()
            .unwrap()
            .values()
            .find(|g| g.hash() == hash)
            .cloned()
    }

    /// Canonical 1PI generators with the given residue, loop order and
    /// mass-insertion bound.
    pub fn enumerate(&self, res: Residue, loops: u32, max_v5: u32) -> Vec<Generator> {
        if let Some(hit) = self.enumerations.read().unwrap().get(&(res, loops, max_v5)) {
            return hit.clone();
        }
        let gens: Vec<Generator> = enumerate_graphs(res, loops, max_v5)
            .iter()
            .map(|g| self.generator(g).expect("enumerated graphs are valid"))
            .collect();
        self.enumerations
            .write()
            .unwrap()
            .insert((res, loops, max_v5), gens.clone());
        gens
    }

    /// Delta on a generator.
    pub fn coproduct_generator(&self, g: &Generator) -> TensorElement {
        if let Some(hit) = self.coproducts.read().unwrap().get(g.key()) {
            return hit.clone();
        }
        let graph = g.graph();
        let mut t = TensorElement::zero();
        t.add_term(Monomial::single(g.clone()), Monomial::one(), Q::one());
        t.add_term(Monomial::one(), Monomial::single(g.clone()), Q::one());
        for union in divergent_subgraph_unions(graph) {
            let comps: Vec<_> = union.iter().map(|b| b.vertices.clone()).collect();
            let quark_slots: Vec<usize> = union
                .iter()
                .enumerate()
                .filter(|(_, b)| b.residue == Residue::Edge(EdgeKind::Quark))
                .map(|(i, _)| i)
                .collect();
            for mask in 0..(1u64 << quark_slots.len()) {
                let mut decorations: Vec<Option<Decoration>> = vec![None; comps.len()];
                for (bit, &slot) in quark_slots.iter().enumerate() {
                    decorations[slot] = Some(if mask & (1 << bit) != 0 {
                        Decoration::Bullet
                    } else {
                        Decoration::Edge
                    });
                }
                let mut factors = Vec::new();
                for (i, comp) in comps.iter().enumerate() {
                    let mut part = extract_component(graph, comp)
                        .expect("divergent components extract to valid graphs");
                    if decorations[i] == Some(Decoration::Bullet) {
                        part.bullet = true;
                    }
                    factors.push(self.generator(&part).expect("components are 1PI"));
                }
                factors.sort();
                let cograph = contract_union(graph, &comps, &decorations)
                    .expect("contraction of a divergent union is valid");
                let right = self
                    .generator(&cograph)
                    .expect("cographs of 1PI graphs are 1PI");
                t.add_term(Monomial(factors), Monomial::single(right), Q::one());
            }
        }
        self.coproducts
            .write()
            .unwrap()
            .insert(g.key().to_string(), t.clone());
        t
    }

    /// Delta on a monomial: multiplicative extension.
    pub fn coproduct_monomial(&self, m: &Monomial) -> TensorElement {
        let mut t = TensorElement::zero();
        t.add_term(Monomial::one(), Monomial::one(), Q::one());
        for g in &m.0 {
            t = t.mul(&self.coproduct_generator(g));
        }
        t
    }

    /// Delta on an element: linear extension.
    pub fn coproduct(&self, x: &HopfElement) -> TensorElement {
        let mut t = TensorElement::zero();
        for (m, c) in &x.0 {
            t = t.add(&self.coproduct_monomial(m).scale(c));
        }
        t
    }

    /// S on a generator: S(Gamma) = -Gamma - sum S(gamma) Gamma/gamma.
    pub fn antipode_generator(&self, g: &Generator) -> HopfElement {
        if let Some(hit) = self.antipodes.read().unwrap().get(g.key()) {
            return hit.clone();
        }
        let mut s = HopfElement::from_generator(g.clone()).neg();
        let delta = self.coproduct_generator(g);
        for ((left, right), c) in &delta.0 {
            if left.is_one() || right.is_one() {
                continue;
            }
            let s_left = self.antipode_monomial(left);
            let term = s_left.mul(&HopfElement(
                [(right.clone(), c.clone())].into_iter().collect(),
            ));
            s = s.sub(&term);
        }
        self.antipodes
            .write()
            .unwrap()
            .insert(g.key().to_string(), s.clone());
        s
    }

    pub fn antipode_monomial(&self, m: &Monomial) -> HopfElement {
        let mut r = HopfElement::one();
        for g in &m.0 {
            r = r.mul(&self.antipode_generator(g));
        }
        r
    }

    pub fn antipode(&self, x: &HopfElement) -> HopfElement {
        let mut r = HopfElement::zero();
        for (m, c) in &x.0 {
            r = r.add(&self.antipode_monomial(m).scale(c));
        }
        r
    }

    /// (Delta x id) Delta.
    pub fn coassoc_left(&self, x: &HopfElement) -> Tensor3 {
        let mut out: Tensor3 = BTreeMap::new();
        for ((l, r), c) in &self.coproduct(x).0 {
            for ((a, b), c2) in &self.coproduct_monomial(l).0 {
                add3(&mut out, a.clone(), b.clone(), r.clone(), c * c2);
            }
        }
        out
    }

    /// (id x Delta) Delta.
    pub fn coassoc_right(&self, x: &HopfElement) -> Tensor3 {
        let mut out: Tensor3 = BTreeMap::new();
        for ((l, r), c) in &self.coproduct(x).0 {
            for ((a, b), c2) in &self.coproduct_monomial(r).0 {
                add3(&mut out, l.clone(), a.clone(), b.clone(), c * c2);
            }
        }
        out
    }

    /// m(S x id) Delta x = u(eps(x)); returns the left-hand side.
    pub fn antipode_axiom_lhs(&self, x: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for ((l, r), c) in &self.coproduct(x).0 {
            let term = self.antipode_monomial(l).mul(&HopfElement(
                [(r.clone(), c.clone())].into_iter().collect(),
            ));
            out = out.add(&term);
        }
        out
    }

    /// (eps x id) Delta x, reassembled as an element.
    pub fn counit_left(&self, x: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for ((l, r), c) in &self.coproduct(x).0 {
            if l.is_one() {
                out.add_term(r.clone(), c.clone());
            }
        }
        out
    }

    pub fn counit_right(&self, x: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for ((l, r), c) in &self.coproduct(x).0 {
            if r.is_one() {
                out.add_term(l.clone(), c.clone());
            }
        }
        out
    }
}

fn add3(t: &mut Tensor3, a: Monomial, b: Monomial, c: Monomial, q: Q) {
    if q.is_zero() {
        return;
    }
    match t.entry((a, b, c)) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += q;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(q);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::rat::q;

    fn hopf() -> Hopf {
        Hopf::new()
    }

    #[test]
    fn coproduct_of_unit() {
        let h = hopf();
        let one = HopfElement::one();
        let t = h.coproduct(&one);
        assert_eq!(t.0.len(), 1);
        assert_eq!(
            t.0.get(&(Monomial::one(), Monomial::one())),
            Some(&q(1))
        );
    }

    #[test]
    fn coproduct_rb2_matches_paper() {
        let h = hopf();
        let rb2 = h.generator(&rb2()).unwrap();
        let qse = h.generator(&qse1()).unwrap();
        let mut bulleted = qse1();
        bulleted.bullet = true;
        let qse_bullet = h.generator(&bulleted).unwrap();

        let t = h.coproduct_generator(&rb2);
        assert_eq!(t.0.len(), 4);
        assert_eq!(
            t.0.get(&(Monomial::single(rb2.clone()), Monomial::one())),
            Some(&q(1))
        );
        assert_eq!(
            t.0.get(&(Monomial::one(), Monomial::single(rb2.clone()))),
            Some(&q(1))
        );
        assert_eq!(
            t.0.get(&(Monomial::single(qse.clone()), Monomial::single(qse.clone()))),
            Some(&q(1))
        );
        // the bullet term: QSE1_bullet (x) QSE1 with a v5 insertion
        let inserted: Vec<&(Monomial, Monomial)> = t
            .0
            .keys()
            .filter(|(l, _)| *l == Monomial::single(qse_bullet.clone()))
            .collect();
        assert_eq!(inserted.len(), 1);
        let (_, right) = inserted[0];
        assert_eq!(right.0.len(), 1);
        assert_eq!(right.0[0].data().v5_count, 1);
        assert_eq!(right.0[0].loops(), 1);
    }

    #[test]
    fn coproduct_three_loop_display_coefficients() {
        let h = hopf();
        let g = h.generator(&gluon_se_3loop()).unwrap();
        let t = h.coproduct_generator(&g);
        // Gamma x 1, 1 x Gamma, 2 (2-loop vc x 1-loop se), 2 (1-loop vc x
        // 2-loop se), 1 ((1-loop vc)^2 x 1-loop se)
        assert_eq!(t.0.len(), 5);
        let mut profile: Vec<(u32, usize, u32, String)> = t
            .0
            .iter()
            .map(|((l, r), c)| (l.loops(), l.0.len(), r.loops(), c.to_string()))
            .collect();
        profile.sort();
        assert_eq!(
            profile,
            vec![
                (0, 0, 3, "1".to_string()),
                (1, 1, 2, "2".to_string()),
                (2, 1, 1, "2".to_string()),
                (2, 2, 1, "1".to_string()),
                (3, 1, 0, "1".to_string()),
            ]
        );
    }

    #[test]
    fn antipode_examples() {
        let h = hopf();
        let qse = h.generator(&qse1()).unwrap();
        let rb2 = h.generator(&rb2()).unwrap();
        // S(QSE1) = -QSE1
        assert_eq!(
            h.antipode_generator(&qse),
            HopfElement::from_generator(qse.clone()).neg()
        );
        // S(1) = 1
        assert_eq!(h.antipode(&HopfElement::one()), HopfElement::one());
        // S(RB2) = -RB2 + QSE1^2 + QSE1_bullet * QSE1(v5-inserted)
        let s = h.antipode_generator(&rb2);
        assert_eq!(s.0.len(), 3);
        assert_eq!(s.coeff(&Monomial::single(rb2.clone())), q(-1));
        assert_eq!(
            s.coeff(&Monomial(vec![qse.clone(), qse.clone()])),
            q(1)
        );
        let others: Vec<_> = s
            .0
            .keys()
            .filter(|m| m.0.len() == 2 && m.0[0] != m.0[1])
            .collect();
        assert_eq!(others.len(), 1);
        assert_eq!(s.coeff(others[0]), q(1));
    }

    #[test]
    fn projections() {
        let h = hopf();
        let qse = HopfElement::from_generator(h.generator(&qse1()).unwrap());
        let rb2 = HopfElement::from_generator(h.generator(&rb2()).unwrap());
        let x = HopfElement::one().sub(&qse);
        assert_eq!(x.project_loops(1), qse.neg());
        let y = rb2.add(&qse);
        assert_eq!(y.project_multidegree([2, 0, 0, 0, 0]), qse);
        assert_eq!(y.project_multidegree([4, 0, 0, 0, 0]), rb2);
        // completeness: projections sum back
        let mut total = HopfElement::zero();
        for n in y.multidegrees() {
            total = total.add(&y.project_multidegree(n));
        }
        assert_eq!(total, y);
    }
}
