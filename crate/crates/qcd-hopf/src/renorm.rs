//! Laurent-series-valued characters, convolution, Birkhoff decomposition by
//! the Bogoliubov recursion with minimal subtraction, toy mu-scaled Feynman
//! rules on forest-nested graphs, Slavnov-Taylor-compatible characters, and
//! the renormalization-group flow F_t with its generator beta.

use crate::graph::{divergent_bricks, FeynGraph, Residue, VertexKind};
use crate::green::{generator_universe, st_ideal_generators, GreenError, TruncationSpec};
use crate::hopf::{Generator, Hopf, HopfElement, Monomial};
use crate::laurent::{LaurentSeries, PolyLT};
use crate::rat::Q;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RenormError {
    #[error("character does not cover generator {0}")]
    MissingGenerator(String),
    #[error("truncation mismatch between characters")]
    TruncationMismatch,
    #[error("overlapping divergences in {0}; toy rules need a forest of subdivergences")]
    OverlappingDivergences(String),
    #[error("pole depth exceeds the truncation window for {0}")]
    PoleDepth(String),
    #[error("pole cancellation failure on {0}")]
    PoleCancellation(String),
    #[error("{0}")]
    Green(#[from] GreenError),
    #[error("seed file error: {0}")]
    SeedFile(String),
}

/// A multiplicative functional from generators to Laurent series, extended
/// as an algebra homomorphism to monomials and linearly to elements.
#[derive(Clone, Debug)]
pub struct Character {
    vals: BTreeMap<Generator, LaurentSeries>,
}

impl Character {
    pub fn new(vals: BTreeMap<Generator, LaurentSeries>) -> Self {
        Character { vals }
    }

    /// The counit character u.eps on the given domain.
    pub fn counit(domain: &BTreeSet<Generator>) -> Self {
        Character {
            vals: domain
                .iter()
                .map(|g| (g.clone(), LaurentSeries::zero_exact()))
                .collect(),
        }
    }

    pub fn domain(&self) -> impl Iterator<Item = &Generator> {
        self.vals.keys()
    }

    pub fn value(&self, g: &Generator) -> Result<&LaurentSeries, RenormError> {
        self.vals
            .get(g)
            .ok_or_else(|| RenormError::MissingGenerator(g.hash().to_string()))
    }

    pub fn set_value(&mut self, g: Generator, v: LaurentSeries) {
        self.vals.insert(g, v);
    }

    pub fn eval_monomial(&self, m: &Monomial) -> Result<LaurentSeries, RenormError> {
        let mut out = LaurentSeries::one_exact();
        for g in &m.0 {
            out = out.mul(self.value(g)?);
        }
        Ok(out)
    }

    pub fn eval(&self, x: &HopfElement) -> Result<LaurentSeries, RenormError> {
        let mut out = LaurentSeries::zero_exact();
        for (m, c) in &x.0 {
            out = out.add(&self.eval_monomial(m)?.scale(c));
        }
        Ok(out)
    }

    /// mu-scaling: multiplies every generator value by exp(z L(Gamma) l).
    pub fn mu_scaled(&self, horizon: i64) -> Self {
        Character {
            vals: self
                .vals
                .iter()
                .map(|(g, v)| {
                    let p = PolyLT::var_l().scale(&Q::from_integer((g.loops() as i64).into()));
                    (g.clone(), v.with_horizon(horizon).mul_exp_z(&p))
                })
                .collect(),
        }
    }

    /// phi . S, the convolution inverse.
    pub fn inverse(&self, h: &Hopf) -> Result<Self, RenormError> {
        let mut vals = BTreeMap::new();
        for (g, _) in &self.vals {
            let s = h.antipode_generator(g);
            vals.insert(g.clone(), self.eval(&s)?);
        }
        Ok(Character { vals })
    }
}

/// (phi * psi)(Gamma) = sum phi(Gamma') psi(Gamma'') over the coproduct.
pub fn convolve(h: &Hopf, a: &Character, b: &Character) -> Result<Character, RenormError> {
    let dom_a: BTreeSet<&Generator> = a.vals.keys().collect();
    let dom_b: BTreeSet<&Generator> = b.vals.keys().collect();
    if dom_a != dom_b {
        return Err(RenormError::TruncationMismatch);
    }
    let mut vals = BTreeMap::new();
    for g in a.vals.keys() {
        let mut out = LaurentSeries::zero_exact();
        for ((l, r), c) in &h.coproduct_generator(g).0 {
            out = out.add(&a.eval_monomial(l)?.mul(&b.eval_monomial(r)?).scale(c));
        }
        vals.insert(g.clone(), out);
    }
    Ok(Character { vals })
}

#[derive(Clone, Debug)]
pub struct BirkhoffPair {
    pub minus: Character,
    pub plus: Character,
}

/// Bogoliubov recursion with minimal subtraction:
/// gamma_-(Gamma) = -T[ gamma(Gamma) + sum gamma_-(gamma') gamma(Gamma/gamma') ],
/// gamma_+ = the regular part of the same bracket.
pub fn birkhoff(h: &Hopf, gamma: &Character) -> Result<BirkhoffPair, RenormError> {
    let mut order: Vec<Generator> = gamma.vals.keys().cloned().collect();
    order.sort_by_key(|g| g.loops());
    let mut minus: BTreeMap<Generator, LaurentSeries> = BTreeMap::new();
    let mut plus: BTreeMap<Generator, LaurentSeries> = BTreeMap::new();
    for g in order {
        let mut rbar = gamma.value(&g)?.clone();
        for ((l, r), c) in &h.coproduct_generator(&g).0 {
            if l.is_one() || r.is_one() {
                continue;
            }
            let mut lval = LaurentSeries::one_exact();
            for gl in &l.0 {
                lval = lval.mul(minus.get(gl).ok_or_else(|| {
                    RenormError::MissingGenerator(gl.hash().to_string())
                })?);
            }
            rbar = rbar.add(&lval.mul(&gamma.eval_monomial(r)?).scale(c));
        }
        if rbar.horizon() < 0 {
            return Err(RenormError::PoleDepth(g.hash().to_string()));
        }
        minus.insert(g.clone(), rbar.pole_part().neg());
        plus.insert(g.clone(), rbar.regular_part());
    }
    Ok(BirkhoffPair {
        minus: Character { vals: minus },
        plus: Character { vals: plus },
    })
}

/// Toy regularized value of a forest-nested graph:
/// mu^{z L(Gamma)} * prod over nesting-tree nodes v of 1/(z w(v)), where
/// w(v) is the loop number of the divergent subgraph at v (the root is the
/// graph itself). Bulleted generators take the value 0: the mass part of a
/// massless-scheme self-energy vanishes, which is also what keeps the
/// Bogoliubov recursion from double-subtracting quark two-point
/// subdivergences.
pub fn nested_toy_rules(
    g: &FeynGraph,
    with_mu: bool,
    horizon: i64,
) -> Result<LaurentSeries, RenormError> {
    if g.bullet {
        return Ok(LaurentSeries::zero_exact());
    }
    let bricks = divergent_bricks(g);
    for (i, a) in bricks.iter().enumerate() {
        for b in bricks.iter().skip(i + 1) {
            let nested = a.vertices.is_subset(&b.vertices) || b.vertices.is_subset(&a.vertices);
            let disjoint = a.vertices.is_disjoint(&b.vertices);
            if !nested && !disjoint {
                return Err(RenormError::OverlappingDivergences(format!(
                    "subgraphs {:?} and {:?}",
                    a.vertices, b.vertices
                )));
            }
        }
    }
    let mut weights: Vec<u32> = vec![g.loop_number()];
    for b in &bricks {
        let sub = crate::graph::extract_component(g, &b.vertices)
            .expect("divergent bricks extract to valid graphs");
        weights.push(sub.loop_number());
    }
    let mut coeff = Q::one();
    for w in &weights {
        coeff /= Q::from_integer((*w as i64).into());
    }
    let value = LaurentSeries::monomial(-(weights.len() as i64), PolyLT::constant(coeff));
    if with_mu {
        let p = PolyLT::var_l().scale(&Q::from_integer((g.loop_number() as i64).into()));
        Ok(value.with_horizon(horizon).mul_exp_z(&p))
    } else {
        Ok(value.with_horizon(horizon))
    }
}

/// The closure of a generator set under coproduct legs, so that characters
/// defined on it can be convolved and Birkhoff-decomposed.
pub fn domain_closure(h: &Hopf, seed: impl IntoIterator<Item = Generator>) -> BTreeSet<Generator> {
    let mut dom: BTreeSet<Generator> = seed.into_iter().collect();
    let mut frontier: Vec<Generator> = dom.iter().cloned().collect();
    while let Some(g) = frontier.pop() {
        for ((l, r), _) in &h.coproduct_generator(&g).0 {
            for gref in l.0.iter().chain(r.0.iter()) {
                if dom.insert(gref.clone()) {
                    frontier.push(gref.clone());
                }
            }
        }
    }
    dom
}

/// Builds a character from a per-generator rule, on the coproduct closure
/// of the truncation universe.
pub fn character_from_rules(
    h: &Hopf,
    spec: TruncationSpec,
    mut rule: impl FnMut(&Generator) -> Result<LaurentSeries, RenormError>,
) -> Result<Character, RenormError> {
    let dom = domain_closure(h, generator_universe(h, spec, 0));
    let mut vals = BTreeMap::new();
    for g in dom {
        let v = rule(&g)?;
        vals.insert(g, v);
    }
    Ok(Character { vals })
}

/// The default seed: nested toy rules where the divergences form a forest,
/// and 1/(L! z^L) on graphs with overlapping divergences (any exact value
/// works for the identities that do not require 't Hooft consistency).
pub fn default_seed(g: &Generator, horizon: i64) -> LaurentSeries {
    match nested_toy_rules(g.graph(), false, horizon) {
        Ok(v) => v,
        Err(_) => {
            let l = g.loops() as i64;
            let mut c = Q::one();
            for i in 1..=l {
                c /= Q::from_integer(i.into());
            }
            LaurentSeries::monomial(-l, PolyLT::constant(c)).with_horizon(horizon)
        }
    }
}

/// Solves for a character that vanishes on the Slavnov-Taylor ideal
/// generators: a loop-order-triangular linear solve adjusting one pivot
/// graph per (residue v_i, loop order), the canonically largest generator
/// of that residue and order appearing in the constraint.
pub fn st_character(
    h: &Hopf,
    spec: TruncationSpec,
    seed: impl Fn(&Generator) -> LaurentSeries,
) -> Result<Character, RenormError> {
    let mut chi = character_from_rules(h, spec, |g| Ok(seed(g)))?;
    let gens = st_ideal_generators(h, spec);
    let mut constraints: Vec<_> = gens.equivalent.iter().collect();
    constraints.sort_by_key(|c| c.loops);
    for c in &constraints {
        if c.element.is_zero() {
            continue;
        }
        // the residue v_i of this constraint family: Y_{v_i} carries the
        // only vertex-residue generators other than v1
        let pivot_residue = c
            .element
            .0
            .keys()
            .flat_map(|m| m.0.iter())
            .filter_map(|g| match g.data().residue {
                Residue::Vertex(v) if v != VertexKind::V1 && v != VertexKind::V5 => Some(v),
                _ => None,
            })
            .max()
            .ok_or_else(|| {
                RenormError::Green(GreenError::SingularPivot(c.label.clone()))
            })?;
        let pivot = c
            .element
            .0
            .keys()
            .filter(|m| m.0.len() == 1)
            .map(|m| m.0[0].clone())
            .filter(|g| {
                g.data().residue == Residue::Vertex(pivot_residue) && g.loops() == c.loops
            })
            .max()
            .ok_or_else(|| {
                RenormError::Green(GreenError::SingularPivot(c.label.clone()))
            })?;
        let pivot_mono = Monomial::single(pivot.clone());
        let a = c.element.coeff(&pivot_mono);
        if a.is_zero() {
            return Err(RenormError::Green(GreenError::SingularPivot(
                c.label.clone(),
            )));
        }
        let mut rest = c.element.clone();
        rest.add_term(pivot_mono, -a.clone());
        let rest_val = chi.eval(&rest)?;
        chi.set_value(pivot, rest_val.scale(&(-Q::one() / a)));
    }
    // exactness check: every constraint evaluates to zero
    for c in constraints {
        let v = chi.eval(&c.element)?;
        if !v.is_zero() {
            return Err(RenormError::Green(GreenError::SingularPivot(format!(
                "constraint {} did not vanish after solving",
                c.label
            ))));
        }
    }
    Ok(chi)
}

/// F_t evaluated on x: the z -> 0 limit of
/// gamma_- * theta_{tz}(gamma_-^{-1}), with theta_{tz}(phi)(Gamma) =
/// e^{t z L(Gamma)} phi(Gamma). All negative powers of z must cancel; the
/// z^0 coefficient is polynomial in t.
pub fn rg_flow(
    h: &Hopf,
    gamma_minus: &Character,
    x: &HopfElement,
) -> Result<PolyLT, RenormError> {
    let inv = gamma_minus.inverse(h)?;
    let mut out = LaurentSeries::zero_exact();
    for ((l, r), c) in &h.coproduct(x).0 {
        let lval = gamma_minus.eval_monomial(l)?;
        let rval = inv.eval_monomial(r)?;
        let theta = PolyLT::var_t().scale(&Q::from_integer((r.loops() as i64).into()));
        // gamma_- values are pure poles with exact horizons; pick a finite
        // window wide enough to read the z^0 coefficient
        let window = 1 - rval.pole_bound().min(lval.pole_bound());
        let scaled = rval.with_horizon(window).mul_exp_z(&theta);
        out = out.add(&lval.mul(&scaled).scale(c));
    }
    if out.has_pole() {
        return Err(RenormError::PoleCancellation(format!(
            "negative z powers survive in F_t on {} monomials",
            x.0.len()
        )));
    }
    Ok(out.z0())
}

/// beta = d/dt F_t |_{t=0}: the t-linear coefficient of the flow.
pub fn beta_element(
    h: &Hopf,
    gamma_minus: &Character,
    x: &HopfElement,
) -> Result<Q, RenormError> {
    let p = rg_flow(h, gamma_minus, x)?;
    debug_assert!(p.0.keys().all(|(l, _)| *l == 0), "beta expects l-free flow");
    Ok(p.coeff(0, 1))
}

/// Per-generator F_t as a polynomial-valued character (used by the group
/// law check and by the CLI).
pub fn rg_flow_character(
    h: &Hopf,
    gamma_minus: &Character,
) -> Result<BTreeMap<Generator, PolyLT>, RenormError> {
    let mut out = BTreeMap::new();
    for g in gamma_minus.vals.keys() {
        let p = rg_flow(h, gamma_minus, &HopfElement::from_generator(g.clone()))?;
        out.insert(g.clone(), p);
    }
    Ok(out)
}

/// Checks F_{t+s} = F_t * F_s on a generator, as an exact polynomial
/// identity in two variables (s is carried in the l slot).
pub fn group_law_residual(
    h: &Hopf,
    flow: &BTreeMap<Generator, PolyLT>,
    g: &Generator,
) -> PolyLT {
    let swap_to_s = |p: &PolyLT| -> PolyLT {
        // move t-degrees into the l slot: F_s
        PolyLT(p.0.iter().map(|((l, t), c)| {
            assert_eq!(*l, 0, "flow polynomials are t-only");
            ((*t, 0), c.clone())
        }).collect())
    };
    let lhs = flow[g].t_shift_into_l();
    let mut rhs = PolyLT::zero();
    for ((l, r), c) in &h.coproduct_generator(g).0 {
        let mut fl = PolyLT::one();
        for gl in &l.0 {
            fl = fl.mul(&flow[gl]);
        }
        let mut fr = PolyLT::one();
        for gr in &r.0 {
            fr = fr.mul(&swap_to_s(&flow[gr]));
        }
        rhs = rhs.add(&fl.mul(&fr).scale(c));
    }
    lhs.sub(&rhs)
}

/// Serialized toy-rule overrides: {"rules":[{"graph":"<hash>","series":
/// [{"z":-1,"coeff":"1/1","l_deg":0,"t_deg":0},...]}]}.
pub fn seed_overrides_from_json(
    h: &Hopf,
    text: &str,
    horizon: i64,
) -> Result<BTreeMap<Generator, LaurentSeries>, RenormError> {
    #[derive(serde::Deserialize)]
    struct Entry {
        z: i64,
        coeff: String,
        #[serde(default)]
        l_deg: u32,
        #[serde(default)]
        t_deg: u32,
    }
    #[derive(serde::Deserialize)]
    struct Rule {
        graph: String,
        series: Vec<Entry>,
    }
    #[derive(serde::Deserialize)]
    struct File {
        rules: Vec<Rule>,
    }
    let file: File =
        serde_json::from_str(text).map_err(|e| RenormError::SeedFile(e.to_string()))?;
    let mut out = BTreeMap::new();
    for rule in file.rules {
        let gen = h
            .find_by_hash(&rule.graph)
            .ok_or_else(|| RenormError::SeedFile(format!("unknown graph hash {}", rule.graph)))?;
        let mut entries: BTreeMap<i64, PolyLT> = BTreeMap::new();
        for e in rule.series {
            let c = crate::rat::parse_q(&e.coeff)
                .ok_or_else(|| RenormError::SeedFile(format!("bad coefficient {}", e.coeff)))?;
            entries
                .entry(e.z)
                .or_insert_with(PolyLT::zero)
                .add_term((e.l_deg, e.t_deg), c);
        }
        out.insert(
            gen,
            LaurentSeries::from_coeffs(entries.into_iter().collect(), horizon),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{qse1, rainbow, rb2};
    use crate::rat::{q, qr};

    fn horizon() -> i64 {
        5
    }

    #[test]
    fn toy_rule_values() {
        let h = horizon();
        // QSE1 -> mu^z / z = 1/z + l + O(z)
        let v = nested_toy_rules(&qse1(), true, h).unwrap();
        assert_eq!(v.coeff(-1), PolyLT::one());
        assert_eq!(v.coeff(0), PolyLT::var_l());
        // RB2 -> mu^{2z} / (2 z^2)
        let v2 = nested_toy_rules(&rb2(), true, h).unwrap();
        assert_eq!(v2.coeff(-2), PolyLT::constant(qr(1, 2)));
        assert_eq!(v2.coeff(-1), PolyLT::var_l()); // (2l) * 1/2
        // RB3: chain of three nested nodes, mu^{3z}/(6 z^3)
        let v3 = nested_toy_rules(&rainbow(3), false, h).unwrap();
        assert_eq!(v3.pole_bound(), -3);
        assert_eq!(v3.coeff(-3), PolyLT::constant(qr(1, 6)));
        // a primitive 2-loop graph -> mu^{2z}/(2z): a single node with w = 2
        use crate::graph::{Edge, EdgeKind, External, Flow, VertexKind};
        let prim = FeynGraph::new(
            vec![VertexKind::V4, VertexKind::V4],
            vec![
                Edge { kind: EdgeKind::Gluon, from: 0, to: 1 },
                Edge { kind: EdgeKind::Gluon, from: 0, to: 1 },
                Edge { kind: EdgeKind::Gluon, from: 0, to: 1 },
            ],
            vec![
                External { kind: EdgeKind::Gluon, flow: Flow::Un, at: 0 },
                External { kind: EdgeKind::Gluon, flow: Flow::Un, at: 1 },
            ],
            false,
        )
        .unwrap();
        assert_eq!(prim.loop_number(), 2);
        let vp = nested_toy_rules(&prim, false, h).unwrap();
        assert_eq!(vp.pole_bound(), -1);
        assert_eq!(vp.coeff(-1), PolyLT::constant(qr(1, 2)));
        // bulleted generators take the value zero
        let mut b = qse1();
        b.bullet = true;
        assert!(nested_toy_rules(&b, true, h).unwrap().is_zero());
    }

    #[test]
    fn overlapping_divergences_detected() {
        // crossed 2-loop quark self-energy: arcs 0-2 and 1-3 overlap
        use crate::graph::{Edge, EdgeKind, External, Flow, VertexKind};
        let g = FeynGraph::new(
            vec![VertexKind::V1; 4],
            vec![
                Edge { kind: EdgeKind::Quark, from: 0, to: 1 },
                Edge { kind: EdgeKind::Quark, from: 1, to: 2 },
                Edge { kind: EdgeKind::Quark, from: 2, to: 3 },
                Edge { kind: EdgeKind::Gluon, from: 0, to: 2 },
                Edge { kind: EdgeKind::Gluon, from: 1, to: 3 },
            ],
            vec![
                External { kind: EdgeKind::Quark, flow: Flow::In, at: 0 },
                External { kind: EdgeKind::Quark, flow: Flow::Out, at: 3 },
            ],
            false,
        )
        .unwrap();
        assert!(matches!(
            nested_toy_rules(&g, false, horizon()),
            Err(RenormError::OverlappingDivergences(_))
        ));
    }

    #[test]
    fn birkhoff_on_primitive() {
        let h = Hopf::new();
        let g = h.generator(&qse1()).unwrap();
        // gamma(Gamma) = a/z + b
        let series = LaurentSeries::from_coeffs(
            vec![(-1, PolyLT::constant(q(3))), (0, PolyLT::constant(q(7)))],
            horizon(),
        );
        let dom = domain_closure(&h, [g.clone()]);
        let mut chi = Character::counit(&dom);
        chi.set_value(g.clone(), series);
        let pair = birkhoff(&h, &chi).unwrap();
        assert_eq!(pair.minus.value(&g).unwrap().coeff(-1), PolyLT::constant(q(-3)));
        assert_eq!(pair.plus.value(&g).unwrap().coeff(0), PolyLT::constant(q(7)));
        // counit decomposes trivially
        let unit = Character::counit(&dom);
        let upair = birkhoff(&h, &unit).unwrap();
        for g in &dom {
            assert!(upair.minus.value(g).unwrap().is_zero());
            assert!(upair.plus.value(g).unwrap().is_zero());
        }
    }

    #[test]
    fn mu_independence_of_counterterms_rainbow() {
        let h = Hopf::new();
        // domain: the 3-loop rainbow and its closure
        let rb3 = h.generator(&rainbow(3)).unwrap();
        let dom = domain_closure(&h, [rb3.clone()]);
        let mut vals = BTreeMap::new();
        for g in &dom {
            vals.insert(
                g.clone(),
                nested_toy_rules(g.graph(), true, horizon()).unwrap(),
            );
        }
        let chi = Character::new(vals);
        let pair = birkhoff(&h, &chi).unwrap();
        for g in &dom {
            let minus = pair.minus.value(g).unwrap();
            assert!(
                minus.is_l_free(),
                "gamma_- on {:?} depends on log mu: {:?}",
                g,
                minus
            );
            assert!(!pair.plus.value(g).unwrap().has_pole());
        }
        // hand values: gamma_-(RB2) = 1/(2z^2), gamma_-(RB3) = -1/(6z^3)
        let rb2 = h.generator(&rb2()).unwrap();
        assert_eq!(
            pair.minus.value(&rb2).unwrap().coeff(-2),
            PolyLT::constant(qr(1, 2))
        );
        assert_eq!(
            pair.minus.value(&rb3).unwrap().coeff(-3),
            PolyLT::constant(qr(-1, 6))
        );
    }

    #[test]
    fn convolution_axioms() {
        let h = Hopf::new();
        let spec = TruncationSpec::new(2, 0);
        let chi = character_from_rules(&h, spec, |g| {
            Ok(default_seed(g, horizon()))
        })
        .unwrap();
        let dom: BTreeSet<Generator> = chi.vals.keys().cloned().collect();
        let unit = Character::counit(&dom);
        // phi * (u eps) = phi
        let conv = convolve(&h, &chi, &unit).unwrap();
        for g in &dom {
            assert_eq!(conv.value(g).unwrap(), chi.value(g).unwrap());
        }
        // (phi S) * phi = u eps
        let inv = chi.inverse(&h).unwrap();
        let id = convolve(&h, &inv, &chi).unwrap();
        for g in &dom {
            assert!(id.value(g).unwrap().is_zero(), "on {:?}", g);
        }
        // primitives add
        let qse = h.generator(&qse1()).unwrap();
        let sum = convolve(&h, &chi, &chi).unwrap();
        assert_eq!(
            sum.value(&qse).unwrap(),
            &chi.value(&qse).unwrap().scale(&q(2))
        );
    }

    #[test]
    fn reconstruction() {
        let h = Hopf::new();
        let spec = TruncationSpec::new(2, 1);
        let chi = character_from_rules(&h, spec, |g| {
            Ok(default_seed(g, horizon()).with_horizon(horizon()))
        })
        .unwrap();
        let pair = birkhoff(&h, &chi).unwrap();
        let minus_inv = pair.minus.inverse(&h).unwrap();
        let recon = convolve(&h, &minus_inv, &pair.plus).unwrap();
        for g in pair.minus.vals.keys() {
            let lhs = recon.value(g).unwrap();
            let rhs = chi.value(g).unwrap();
            let diff = lhs.sub(rhs);
            assert!(diff.is_zero(), "reconstruction failed on {:?}: {:?}", g, diff);
        }
    }

    #[test]
    fn rg_flow_on_primitive() {
        let h = Hopf::new();
        let g = h.generator(&qse1()).unwrap();
        let dom = domain_closure(&h, [g.clone()]);
        let mut minus = Character::counit(&dom);
        minus.set_value(
            g.clone(),
            LaurentSeries::monomial(-1, PolyLT::constant(q(-5))),
        );
        // F_t(Gamma) = t a with gamma_-(Gamma) = -a/z
        let p = rg_flow(&h, &minus, &HopfElement::from_generator(g.clone())).unwrap();
        assert_eq!(p.coeff(0, 1), q(5));
        assert_eq!(p.coeff(0, 0), q(0));
        assert_eq!(
            beta_element(&h, &minus, &HopfElement::from_generator(g)).unwrap(),
            q(5)
        );
        // F_0 = u eps: constant coefficient vanishes on every generator
        // (t = 0 sets the polynomial to its (0,0) coefficient)
    }

    #[test]
    fn rg_group_law_under_nested_rules() {
        let h = Hopf::new();
        let spec = TruncationSpec::new(2, 0);
        let chi = character_from_rules(&h, spec, |g| Ok(default_seed(g, horizon())))
            .unwrap();
        let pair = birkhoff(&h, &chi).unwrap();
        let flow = rg_flow_character(&h, &pair.minus).unwrap();
        for g in pair.minus.vals.keys() {
            let r = group_law_residual(&h, &flow, g);
            assert!(r.is_zero(), "group law fails on {:?}: {:?}", g, r);
        }
    }
}
