//! Component-level BRST differential over explicit structure constants on a
//! Grassmann-graded polynomial algebra, in the constant-field sector (the
//! exterior derivative is set to zero).
//!
//! Scalars live in Q[sqrt(3)] so that both su(2) (Levi-Civita) and su(3)
//! (Gell-Mann) structure constants are exact. Quark bilinears are kept as
//! atomic units psi-open, psibar-open or closed sandwiches psibar T^{m1}..
//! T^{mk} psi whose color words are normalized to the PBW basis via
//! [T^a, T^b] = f^{ab}_c T^c; this keeps every check exact without complex
//! matrix entries.

use crate::rat::{q, qr, Q};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BrstError {
    #[error("bracket arguments must be homogeneous in total degree")]
    Inhomogeneous,
}

/// Element of Q[sqrt(3)]: a + b sqrt(3).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Ext3 {
    pub a: Q,
    pub b: Q,
}

impl Ext3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Ext3 {
            a: Q::one(),
            b: Q::zero(),
        }
    }

    pub fn from_q(a: Q) -> Self {
        Ext3 { a, b: Q::zero() }
    }

    pub fn sqrt3(c: Q) -> Self {
        Ext3 { a: Q::zero(), b: c }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Ext3 {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Ext3 {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }

    pub fn neg(&self) -> Self {
        Ext3 {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        // (a + b s)(c + d s) = ac + 3 bd + (ad + bc) s
        Ext3 {
            a: &self.a * &o.a + q(3) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Ext3 {
            a: &self.a * c,
            b: &self.b * c,
        }
    }
}

/// Color algebra with totally antisymmetric structure constants.
#[derive(Clone, Debug)]
pub struct ColorAlgebra {
    pub dim: usize,
    /// Dense table f[a][b][c].
    table: Vec<Ext3>,
}

impl ColorAlgebra {
    /// su(2): f^{abc} = epsilon_{abc}.
    pub fn su2() -> Self {
        let mut alg = ColorAlgebra {
            dim: 3,
            table: vec![Ext3::zero(); 27],
        };
        alg.set(0, 1, 2, Ext3::one());
        alg
    }

    /// su(3): Gell-Mann structure constants, exact over Q[sqrt(3)].
    pub fn su3() -> Self {
        let mut alg = ColorAlgebra {
            dim: 8,
            table: vec![Ext3::zero(); 512],
        };
        let half = Ext3::from_q(qr(1, 2));
        let mhalf = Ext3::from_q(qr(-1, 2));
        let s32 = Ext3::sqrt3(qr(1, 2));
        alg.set(0, 1, 2, Ext3::one()); // f123 = 1
        alg.set(0, 3, 6, half.clone()); // f147 = 1/2
        alg.set(0, 4, 5, mhalf.clone()); // f156 = -1/2
        alg.set(1, 3, 5, half.clone()); // f246 = 1/2
        alg.set(1, 4, 6, half.clone()); // f257 = 1/2
        alg.set(2, 3, 4, half.clone()); // f345 = 1/2
        alg.set(2, 5, 6, mhalf); // f367 = -1/2
        alg.set(3, 4, 7, s32.clone()); // f458 = sqrt(3)/2
        alg.set(5, 6, 7, s32); // f678 = sqrt(3)/2
        let _ = half;
        alg
    }

    /// Sets f^{abc} = v and all antisymmetric images.
    fn set(&mut self, a: usize, b: usize, c: usize, v: Ext3) {
        let d = self.dim;
        let perms: [([usize; 3], bool); 6] = [
            ([a, b, c], false),
            ([b, c, a], false),
            ([c, a, b], false),
            ([b, a, c], true),
            ([a, c, b], true),
            ([c, b, a], true),
        ];
        for (p, odd) in perms {
            let val = if odd { v.neg() } else { v.clone() };
            self.table[(p[0] * d + p[1]) * d + p[2]] = val;
        }
    }

    pub fn f(&self, a: u8, b: u8, c: u8) -> &Ext3 {
        &self.table[((a as usize) * self.dim + b as usize) * self.dim + c as usize]
    }

    pub fn is_totally_antisymmetric(&self) -> bool {
        let d = self.dim as u8;
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    if !self.f(a, b, c).add(self.f(b, a, c)).is_zero()
                        || !self.f(a, b, c).add(self.f(a, c, b)).is_zero()
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Adjoint Jacobi identity:
    /// sum_e (f^{abe} f^{cde} + f^{cbe} f^{dae} + f^{dbe} f^{ace}) = 0.
    pub fn jacobi_holds(&self) -> bool {
        let dim = self.dim as u8;
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    for d in 0..dim {
                        let mut s = Ext3::zero();
                        for e in 0..dim {
                            s = s
                                .add(&self.f(a, b, e).mul(self.f(c, d, e)))
                                .add(&self.f(c, b, e).mul(self.f(d, a, e)))
                                .add(&self.f(d, b, e).mul(self.f(a, c, e)));
                        }
                        if !s.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Adjoint-valued field symbols; the Lorentz slot is only carried by A.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Species {
    /// Gauge field component A^a_mu: form degree +1, total degree +1.
    A { mu: u8 },
    /// Ghost omega^a: ghost degree +1, total degree +1.
    Omega,
    /// Antighost omegabar^a: ghost degree -1, total degree -1.
    OmegaBar,
    /// Nakanishi-Lautrup h^a: all degrees 0.
    Aux,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct AdjSymbol {
    pub species: Species,
    pub color: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum QuarkKind {
    /// psibar T^{m..} (a free row index).
    OpenBar,
    /// psibar T^{m..} psi (closed color sandwich).
    Closed,
    /// T^{m..} psi (a free column index).
    Open,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct QuarkUnit {
    pub kind: QuarkKind,
    pub word: Vec<u8>,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Atom {
    Adj(AdjSymbol),
    Quark(QuarkUnit),
}

impl Atom {
    /// (grassmann, form, ghost) degrees.
    pub fn degrees(&self) -> (i64, i64, i64) {
        match self {
            Atom::Adj(s) => match s.species {
                Species::A { .. } => (0, 1, 0),
                Species::Omega => (1, 0, 1),
                Species::OmegaBar => (-1, 0, -1),
                Species::Aux => (0, 0, 0),
            },
            Atom::Quark(u) => match u.kind {
                QuarkKind::Open => (1, 0, 0),
                QuarkKind::OpenBar => (-1, 0, 0),
                QuarkKind::Closed => (0, 0, 0),
            },
        }
    }

    pub fn total_degree(&self) -> i64 {
        let (g, f, _) = self.degrees();
        g + f
    }

    pub fn ghost_degree(&self) -> i64 {
        self.degrees().2
    }

    pub fn is_odd(&self) -> bool {
        self.total_degree().rem_euclid(2) == 1
    }
}

/// A normal-ordered word of atoms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Word(pub Vec<Atom>);

impl Word {
    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|a| a.total_degree()).sum()
    }

    pub fn ghost_degree(&self) -> i64 {
        self.0.iter().map(|a| a.ghost_degree()).sum()
    }
}

/// Rational-linear combinations of normal-ordered words over Q[sqrt(3)].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedPoly(pub BTreeMap<Word, Ext3>);

impl GradedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_word(&mut self, w: Word, c: Ext3) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(w) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.0 {
            r.add_word(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.0 {
            r.add_word(w.clone(), c.neg());
        }
        r
    }

    pub fn scale(&self, c: &Ext3) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedPoly(self.0.iter().map(|(w, v)| (w.clone(), v.mul(c))).collect())
    }

    pub fn scale_q(&self, c: &Q) -> Self {
        self.scale(&Ext3::from_q(c.clone()))
    }

    /// A single atom as a polynomial.
    pub fn atom(alg: &ColorAlgebra, a: Atom) -> Self {
        let mut r = Self::zero();
        for (w, c) in normalize(alg, vec![a], Ext3::one()) {
            r.add_word(w, c);
        }
        r
    }

    pub fn mul(&self, o: &Self, alg: &ColorAlgebra) -> Self {
        let mut r = Self::zero();
        for (w1, c1) in &self.0 {
            for (w2, c2) in &o.0 {
                let mut atoms = w1.0.clone();
                atoms.extend(w2.0.iter().cloned());
                for (w, c) in normalize(alg, atoms, c1.mul(c2)) {
                    r.add_word(w, c);
                }
            }
        }
        r
    }

    /// Total degree when homogeneous.
    pub fn homogeneous_degree(&self) -> Result<i64, BrstError> {
        let mut deg = None;
        for w in self.0.keys() {
            let d = w.total_degree();
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return Err(BrstError::Inhomogeneous),
                _ => {}
            }
        }
        Ok(deg.unwrap_or(0))
    }
}

/// PBW normalization of a color word: sort indices nondecreasing using
/// T^a T^b = T^b T^a + f^{ab}_c T^c.
fn normalize_color_word(alg: &ColorAlgebra, word: &[u8]) -> Vec<(Vec<u8>, Ext3)> {
    // find the first descent
    let descent = word.windows(2).position(|w| w[0] > w[1]);
    match descent {
        None => vec![(word.to_vec(), Ext3::one())],
        Some(i) => {
            let (a, b) = (word[i], word[i + 1]);
            let mut swapped = word.to_vec();
            swapped.swap(i, i + 1);
            let mut out = Vec::new();
            for (w, c) in normalize_color_word(alg, &swapped) {
                out.push((w, c));
            }
            for cidx in 0..alg.dim as u8 {
                let fc = alg.f(a, b, cidx);
                if fc.is_zero() {
                    continue;
                }
                let mut contracted: Vec<u8> = word[..i].to_vec();
                contracted.push(cidx);
                contracted.extend_from_slice(&word[i + 2..]);
                for (w, c) in normalize_color_word(alg, &contracted) {
                    out.push((w, c.mul(fc)));
                }
            }
            out
        }
    }
}

/// Sorts atoms into normal order with Koszul signs; equal odd atoms kill
/// the word; quark color words are PBW-normalized first.
fn normalize(alg: &ColorAlgebra, atoms: Vec<Atom>, coeff: Ext3) -> Vec<(Word, Ext3)> {
    // expand quark units into PBW branches
    let mut branches: Vec<(Vec<Atom>, Ext3)> = vec![(Vec::new(), coeff)];
    for a in atoms {
        match a {
            Atom::Quark(u) if !u.word.is_sorted() => {
                let expansions = normalize_color_word(alg, &u.word);
                let mut next = Vec::new();
                for (prefix, c) in &branches {
                    for (w, fc) in &expansions {
                        let mut atoms2 = prefix.clone();
                        atoms2.push(Atom::Quark(QuarkUnit {
                            kind: u.kind,
                            word: w.clone(),
                        }));
                        next.push((atoms2, c.mul(fc)));
                    }
                }
                branches = next;
            }
            other => {
                for (prefix, _) in &mut branches {
                    prefix.push(other.clone());
                }
            }
        }
    }
    // sign-tracking insertion sort per branch
    let mut out = Vec::new();
    'branch: for (mut atoms, mut c) in branches {
        let n = atoms.len();
        for i in 1..n {
            let mut j = i;
            while j > 0 && atoms[j - 1] > atoms[j] {
                if atoms[j - 1].is_odd() && atoms[j].is_odd() {
                    c = c.neg();
                }
                atoms.swap(j - 1, j);
                j -= 1;
            }
        }
        // repeated odd atoms square to zero
        for w in atoms.windows(2) {
            if w[0] == w[1] && w[0].is_odd() {
                continue 'branch;
            }
        }
        out.push((Word(atoms), c));
    }
    out
}

/// The BRST differential in the constant-field sector:
/// s A = g [A, omega], s omega = g/2 [omega, omega], s omegabar = h,
/// s h = 0, s psi = g omega psi, s psibar = g psibar omega,
/// extended as a left graded derivation s(xy) = s(x) y + (-1)^{deg x} x s(y).
pub fn brst_s(x: &GradedPoly, alg: &ColorAlgebra, g: &Q) -> GradedPoly {
    let mut out = GradedPoly::zero();
    for (word, coeff) in &x.0 {
        let mut sign_prefix = Ext3::one();
        for (i, atom) in word.0.iter().enumerate() {
            let image = s_atom(atom, alg, g);
            for (replacement, c) in image {
                let mut atoms: Vec<Atom> = word.0[..i].to_vec();
                atoms.extend(replacement);
                atoms.extend(word.0[i + 1..].iter().cloned());
                let total = coeff.mul(&sign_prefix).mul(&c);
                for (w, cc) in normalize(alg, atoms, total) {
                    out.add_word(w, cc);
                }
            }
            if atom.is_odd() {
                sign_prefix = sign_prefix.neg();
            }
        }
    }
    out
}

/// s on a single atom, as a list of (replacement atoms, coefficient).
fn s_atom(atom: &Atom, alg: &ColorAlgebra, g: &Q) -> Vec<(Vec<Atom>, Ext3)> {
    let dim = alg.dim as u8;
    match atom {
        Atom::Adj(s) => match s.species {
            Species::A { mu } => {
                let mut out = Vec::new();
                for b in 0..dim {
                    for c in 0..dim {
                        let f = alg.f(s.color, b, c);
                        if f.is_zero() {
                            continue;
                        }
                        out.push((
                            vec![
                                Atom::Adj(AdjSymbol {
                                    species: Species::A { mu },
                                    color: b,
                                }),
                                Atom::Adj(AdjSymbol {
                                    species: Species::Omega,
                                    color: c,
                                }),
                            ],
                            f.scale(g),
                        ));
                    }
                }
                out
            }
            Species::Omega => {
                let mut out = Vec::new();
                for b in 0..dim {
                    for c in 0..dim {
                        let f = alg.f(s.color, b, c);
                        if f.is_zero() {
                            continue;
                        }
                        out.push((
                            vec![
                                Atom::Adj(AdjSymbol {
                                    species: Species::Omega,
                                    color: b,
                                }),
                                Atom::Adj(AdjSymbol {
                                    species: Species::Omega,
                                    color: c,
                                }),
                            ],
                            f.scale(&(g / q(2))),
                        ));
                    }
                }
                out
            }
            Species::OmegaBar => vec![(
                vec![Atom::Adj(AdjSymbol {
                    species: Species::Aux,
                    color: s.color,
                })],
                Ext3::one(),
            )],
            Species::Aux => vec![],
        },
        Atom::Quark(u) => {
            let omega = |a: u8| {
                Atom::Adj(AdjSymbol {
                    species: Species::Omega,
                    color: a,
                })
            };
            let unit = |kind: QuarkKind, word: Vec<u8>| Atom::Quark(QuarkUnit { kind, word });
            let mut out = Vec::new();
            match u.kind {
                QuarkKind::Open => {
                    // s(M psi) = g omega^a (M T^a) psi
                    for a in 0..dim {
                        let mut w = u.word.clone();
                        w.push(a);
                        out.push((
                            vec![omega(a), unit(QuarkKind::Open, w)],
                            Ext3::from_q(g.clone()),
                        ));
                    }
                }
                QuarkKind::OpenBar => {
                    // s(psibar M) = -g omega^a psibar (T^a M)
                    for a in 0..dim {
                        let mut w = vec![a];
                        w.extend_from_slice(&u.word);
                        out.push((
                            vec![omega(a), unit(QuarkKind::OpenBar, w)],
                            Ext3::from_q(-g.clone()),
                        ));
                    }
                }
                QuarkKind::Closed => {
                    // s(psibar M psi) = g omega^a (psibar M T^a psi
                    //                              - psibar T^a M psi)
                    for a in 0..dim {
                        let mut right = u.word.clone();
                        right.push(a);
                        out.push((
                            vec![omega(a), unit(QuarkKind::Closed, right)],
                            Ext3::from_q(g.clone()),
                        ));
                        let mut left = vec![a];
                        left.extend_from_slice(&u.word);
                        out.push((
                            vec![omega(a), unit(QuarkKind::Closed, left)],
                            Ext3::from_q(-g.clone()),
                        ));
                    }
                }
            }
            out
        }
    }
}

/// [X, Y] = XY - (-1)^{deg X deg Y} YX on homogeneous arguments.
pub fn graded_bracket(
    x: &GradedPoly,
    y: &GradedPoly,
    alg: &ColorAlgebra,
) -> Result<GradedPoly, BrstError> {
    let dx = x.homogeneous_degree()?;
    let dy = y.homogeneous_degree()?;
    let xy = x.mul(y, alg);
    let yx = y.mul(x, alg);
    Ok(if (dx * dy).rem_euclid(2) == 1 {
        xy.add(&yx)
    } else {
        xy.sub(&yx)
    })
}

/// Builders for the invariance checks.
pub mod elements {
    use super::*;

    pub fn adj(species: Species, color: u8) -> Atom {
        Atom::Adj(AdjSymbol { species, color })
    }

    /// F^a_{mu nu} = f^{abc} A^b_mu A^c_nu (the g A^2 part of the curvature).
    pub fn f_component(alg: &ColorAlgebra, a: u8, mu: u8, nu: u8) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for b in 0..alg.dim as u8 {
            for c in 0..alg.dim as u8 {
                let f = alg.f(a, b, c);
                if f.is_zero() {
                    continue;
                }
                let x = GradedPoly::atom(alg, adj(Species::A { mu }, b));
                let y = GradedPoly::atom(alg, adj(Species::A { mu: nu }, c));
                out = out.add(&x.mul(&y, alg).scale(f));
            }
        }
        out
    }

    /// sum_{a,mu,nu} F^a_{mu nu} F^a_{mu nu} over the slot set {0,1}.
    pub fn f_squared(alg: &ColorAlgebra) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for a in 0..alg.dim as u8 {
            for mu in 0..2 {
                for nu in 0..2 {
                    let f = f_component(alg, a, mu, nu);
                    out = out.add(&f.mul(&f, alg));
                }
            }
        }
        out
    }

    /// sum_a h^a h^a.
    pub fn h_squared(alg: &ColorAlgebra) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for a in 0..alg.dim as u8 {
            let h = GradedPoly::atom(alg, adj(Species::Aux, a));
            out = out.add(&h.mul(&h, alg));
        }
        out
    }

    /// psibar (lambda1 A^a_0 T^a + lambda5) psi.
    pub fn quark_color_term(alg: &ColorAlgebra, lambda1: &Q, lambda5: &Q) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for a in 0..alg.dim as u8 {
            let gauge = GradedPoly::atom(alg, adj(Species::A { mu: 0 }, a));
            let sandwich = GradedPoly::atom(
                alg,
                Atom::Quark(QuarkUnit {
                    kind: QuarkKind::Closed,
                    word: vec![a],
                }),
            );
            out = out.add(&gauge.mul(&sandwich, alg).scale_q(lambda1));
        }
        let mass = GradedPoly::atom(
            alg,
            Atom::Quark(QuarkUnit {
                kind: QuarkKind::Closed,
                word: vec![],
            }),
        );
        out.add(&mass.scale_q(lambda5))
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check: String,
    pub status: bool,
    pub witness: Option<String>,
}

fn report(check: &str, residual: &GradedPoly) -> CheckReport {
    CheckReport {
        check: check.to_string(),
        status: residual.is_zero(),
        witness: if residual.is_zero() {
            None
        } else {
            Some(format!("{:?}", residual.0.keys().next()))
        },
    }
}

/// All generator symbols of the algebra (one Lorentz slot sample for A).
pub fn generator_atoms(alg: &ColorAlgebra) -> Vec<Atom> {
    let mut out = Vec::new();
    for color in 0..alg.dim as u8 {
        for species in [
            Species::A { mu: 0 },
            Species::A { mu: 1 },
            Species::Omega,
            Species::OmegaBar,
            Species::Aux,
        ] {
            out.push(Atom::Adj(AdjSymbol { species, color }));
        }
    }
    out.push(Atom::Quark(QuarkUnit {
        kind: QuarkKind::Open,
        word: vec![],
    }));
    out.push(Atom::Quark(QuarkUnit {
        kind: QuarkKind::OpenBar,
        word: vec![],
    }));
    out.push(Atom::Quark(QuarkUnit {
        kind: QuarkKind::Closed,
        word: vec![0],
    }));
    out
}

/// Deterministic pseudo-random monomials from a seeded generator.
pub fn random_monomial(alg: &ColorAlgebra, rng: &mut impl FnMut() -> u64) -> GradedPoly {
    let gens = generator_atoms(alg);
    let len = 1 + (rng() % 4) as usize;
    let mut poly = GradedPoly::atom(alg, gens[(rng() % gens.len() as u64) as usize].clone());
    for _ in 1..len {
        let next = GradedPoly::atom(alg, gens[(rng() % gens.len() as u64) as usize].clone());
        poly = poly.mul(&next, alg);
        if poly.is_zero() {
            break;
        }
    }
    let choices: [i64; 6] = [1, -1, 2, -2, 3, -3];
    let num = choices[(rng() % 6) as usize];
    let den = 1 + (rng() % 4) as i64;
    poly.scale_q(&Q::new(num.into(), den.into()))
}

/// s(s(x)) = 0 on every generator symbol and on `trials` random monomials.
pub fn nilpotency_check(alg: &ColorAlgebra, trials: u32, seed: u64) -> Vec<CheckReport> {
    let g = q(1);
    let mut out = Vec::new();
    for atom in generator_atoms(alg) {
        let x = GradedPoly::atom(alg, atom.clone());
        let ss = brst_s(&brst_s(&x, alg, &g), alg, &g);
        out.push(report(&format!("s^2 on {:?}", atom), &ss));
    }
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
    let mut rng = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut all_ok = true;
    let mut witness = None;
    for i in 0..trials {
        let x = random_monomial(alg, &mut rng);
        let ss = brst_s(&brst_s(&x, alg, &g), alg, &g);
        if !ss.is_zero() {
            all_ok = false;
            witness = Some(format!("trial {i}: {:?}", x.0.keys().next()));
            break;
        }
    }
    out.push(CheckReport {
        check: format!("s^2 on {trials} random monomials"),
        status: all_ok,
        witness,
    });
    out
}

/// A random homogeneous polynomial: a few monomials of equal total degree.
fn random_homogeneous(alg: &ColorAlgebra, rng: &mut impl FnMut() -> u64) -> GradedPoly {
    loop {
        let first = random_monomial(alg, rng);
        if first.is_zero() {
            continue;
        }
        let target = first.homogeneous_degree().unwrap();
        let mut out = first;
        for _ in 0..2 {
            let cand = random_monomial(alg, rng);
            if !cand.is_zero() && cand.homogeneous_degree() == Ok(target) {
                out = out.add(&cand);
            }
        }
        if !out.is_zero() {
            return out;
        }
    }
}

/// Graded skew-symmetry, Leibniz, Jacobi and the derivation property of s
/// on seeded random homogeneous triples.
pub fn bracket_axiom_check(alg: &ColorAlgebra, trials: u32, seed: u64) -> Vec<CheckReport> {
    let g = q(1);
    let mut state = seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
    let mut rng = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut skew_ok = true;
    let mut leibniz_ok = true;
    let mut jacobi_ok = true;
    let mut derivation_ok = true;
    let mut witness: Option<String> = None;
    for i in 0..trials {
        let x = random_homogeneous(alg, &mut rng);
        let y = random_homogeneous(alg, &mut rng);
        let z = random_homogeneous(alg, &mut rng);
        let (dx, dy, dz) = (
            x.homogeneous_degree().unwrap(),
            y.homogeneous_degree().unwrap(),
            z.homogeneous_degree().unwrap(),
        );
        let sgn = |k: i64| if k.rem_euclid(2) == 1 { -1i64 } else { 1 };
        let signed = |p: GradedPoly, s: i64| if s < 0 { p.scale_q(&q(-1)) } else { p };

        // skew: [X,Y] + (-1)^{dx dy} [Y,X] = 0
        let skew = graded_bracket(&x, &y, alg)
            .unwrap()
            .add(&signed(graded_bracket(&y, &x, alg).unwrap(), sgn(dx * dy)));
        if !skew.is_zero() {
            skew_ok = false;
            witness.get_or_insert(format!("skew trial {i}"));
        }

        // Leibniz: [XY, Z] = X [Y,Z] + (-1)^{dy dz} [X,Z] Y
        let lhs = graded_bracket(&x.mul(&y, alg), &z, alg).unwrap();
        let rhs = x
            .mul(&graded_bracket(&y, &z, alg).unwrap(), alg)
            .add(&signed(
                graded_bracket(&x, &z, alg).unwrap().mul(&y, alg),
                sgn(dy * dz),
            ));
        if !lhs.sub(&rhs).is_zero() {
            leibniz_ok = false;
            witness.get_or_insert(format!("leibniz trial {i}"));
        }

        // Jacobi: (-1)^{dx dz} [[X,Y],Z] + cyclic = 0
        let j = signed(
            graded_bracket(&graded_bracket(&x, &y, alg).unwrap(), &z, alg).unwrap(),
            sgn(dx * dz),
        )
        .add(&signed(
            graded_bracket(&graded_bracket(&y, &z, alg).unwrap(), &x, alg).unwrap(),
            sgn(dy * dx),
        ))
        .add(&signed(
            graded_bracket(&graded_bracket(&z, &x, alg).unwrap(), &y, alg).unwrap(),
            sgn(dz * dy),
        ));
        if !j.is_zero() {
            jacobi_ok = false;
            witness.get_or_insert(format!("jacobi trial {i}"));
        }

        // derivation: s[X,Y] = [sX, Y] + (-1)^{dx} [X, sY]
        let sx = brst_s(&x, alg, &g);
        let sy = brst_s(&y, alg, &g);
        let lhs = brst_s(&graded_bracket(&x, &y, alg).unwrap(), alg, &g);
        let mut rhs = GradedPoly::zero();
        if !sx.is_zero() {
            rhs = rhs.add(&graded_bracket(&sx, &y, alg).unwrap());
        }
        if !sy.is_zero() {
            rhs = rhs.add(&signed(graded_bracket(&x, &sy, alg).unwrap(), sgn(dx)));
        }
        if !lhs.sub(&rhs).is_zero() {
            derivation_ok = false;
            witness.get_or_insert(format!("derivation trial {i}"));
        }
    }
    vec![
        CheckReport {
            check: format!("graded skew-symmetry on {trials} triples"),
            status: skew_ok,
            witness: witness.clone().filter(|_| !skew_ok),
        },
        CheckReport {
            check: format!("graded Leibniz on {trials} triples"),
            status: leibniz_ok,
            witness: witness.clone().filter(|_| !leibniz_ok),
        },
        CheckReport {
            check: format!("graded Jacobi on {trials} triples"),
            status: jacobi_ok,
            witness: witness.clone().filter(|_| !jacobi_ok),
        },
        CheckReport {
            check: format!("s is a bracket derivation on {trials} pairs"),
            status: derivation_ok,
            witness: witness.filter(|_| !derivation_ok),
        },
    ]
}

/// Pointwise gauge invariance of the derivative-free action terms:
/// s(F^2) = 0, s(h^2) = 0, s(psibar (g A + lambda5) psi) = 0 at lambda1 = g.
pub fn pointwise_invariance_check(alg: &ColorAlgebra, lambda5: &Q) -> Vec<CheckReport> {
    let g = q(1);
    let f2 = elements::f_squared(alg);
    let h2 = elements::h_squared(alg);
    let quark = elements::quark_color_term(alg, &g, lambda5);
    vec![
        report("s(F^a_{mu nu} F^a_{mu nu}) = 0", &brst_s(&f2, alg, &g)),
        report("s(h^a h^a) = 0", &brst_s(&h2, alg, &g)),
        report(
            "s(psibar (lambda1 A + lambda5) psi) = 0 at lambda1 = g",
            &brst_s(&quark, alg, &g),
        ),
    ]
}
