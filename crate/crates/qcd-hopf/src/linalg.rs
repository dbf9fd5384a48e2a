//! Exact sparse row reduction over the graded monomial basis.
//!
//! Rows are Hopf elements; the leading term of a row is its largest monomial
//! in the graded-lex order. The basis is kept fully reduced (no row contains
//! another row's leading monomial), so reduction against it is a single
//! descending sweep. The quotient projector associated with an ideal basis
//! maps an element to its normal form; monomials that never occur as leading
//! terms span the complement.

use crate::hopf::{HopfElement, Monomial};
use crate::rat::Q;
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Default, Clone, Debug)]
pub struct RowBasis {
    rows: BTreeMap<Monomial, HopfElement>,
}

impl RowBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &HopfElement> {
        self.rows.values()
    }

    fn leading(x: &HopfElement) -> Option<(Monomial, Q)> {
        x.0.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))
    }

    /// Normal form of `x` modulo the row space.
    pub fn reduce(&self, x: &HopfElement) -> HopfElement {
        let mut r = x.clone();
        loop {
            // largest reducible monomial
            let hit = r
                .0
                .iter()
                .rev()
                .find(|(m, _)| self.rows.contains_key(m))
                .map(|(m, c)| (m.clone(), c.clone()));
            match hit {
                None => return r,
                Some((m, c)) => {
                    let row = &self.rows[&m];
                    r = r.sub(&row.scale(&c));
                    debug_assert!(r.coeff(&m).is_zero());
                }
            }
        }
    }

    /// Inserts a row; returns true if it increased the rank.
    pub fn insert(&mut self, x: &HopfElement) -> bool {
        let r = self.reduce(x);
        let (lead, coeff) = match Self::leading(&r) {
            None => return false,
            Some(lc) => lc,
        };
        let monic = r.scale(&(Q::from_integer(1.into()) / coeff));
        // keep the basis fully reduced
        let keys: Vec<Monomial> = self.rows.keys().cloned().collect();
        for k in keys {
            let row = self.rows[&k].clone();
            let c = row.coeff(&lead);
            if !c.is_zero() {
                self.rows.insert(k, row.sub(&monic.scale(&c)));
            }
        }
        self.rows.insert(lead, monic);
        true
    }

    pub fn contains(&self, x: &HopfElement) -> bool {
        self.reduce(x).is_zero()
    }

    /// Row spaces are equal iff each basis reduces the other to zero.
    pub fn same_span(&self, other: &RowBasis) -> bool {
        self.rows.values().all(|r| other.contains(r))
            && other.rows.values().all(|r| self.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{qse1, rb2};
    use crate::hopf::Hopf;
    use crate::rat::q;

    #[test]
    fn reduction_and_rank() {
        let h = Hopf::new();
        let a = HopfElement::from_generator(h.generator(&qse1()).unwrap());
        let b = HopfElement::from_generator(h.generator(&rb2()).unwrap());

        let mut basis = RowBasis::new();
        assert!(basis.insert(&a.add(&b)));
        assert!(basis.insert(&a));
        // b is now in the span
        assert!(!basis.insert(&b.scale(&q(3))));
        assert_eq!(basis.rank(), 2);
        assert!(basis.contains(&a.sub(&b)));

        let mut other = RowBasis::new();
        other.insert(&a);
        other.insert(&b);
        assert!(basis.same_span(&other));

        let mut smaller = RowBasis::new();
        smaller.insert(&a);
        assert!(!basis.same_span(&smaller));

        // the unit is not in the span
        assert!(!basis.contains(&HopfElement::one()));
    }
}
