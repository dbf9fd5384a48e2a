//! Truncated Laurent series in the regulator z whose coefficients are
//! polynomials in l = log mu and the RG time t, over exact rationals.
//!
//! A series carries a hard pole bound (nothing below `lo`) and a knowledge
//! horizon `hi`: coefficients for z-exponents in [lo, hi] are exact, higher
//! ones are unknown. Addition intersects horizons; multiplication uses the
//! standard window rule hi = min(hi1 + lo2, hi2 + lo1).

use crate::rat::{format_q, Q};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Polynomial in (l, t) with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyLT(pub BTreeMap<(u32, u32), Q>);

impl PolyLT {
    pub fn zero() -> Self {
        PolyLT(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert((0, 0), c);
        }
        PolyLT(m)
    }

    pub fn var_l() -> Self {
        PolyLT([((1, 0), Q::one())].into_iter().collect())
    }

    pub fn var_t() -> Self {
        PolyLT([((0, 1), Q::one())].into_iter().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, k: (u32, u32), c: Q) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(k) {
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
        for (k, c) in &other.0 {
            r.add_term(*k, c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &other.0 {
            r.add_term(*k, -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        PolyLT(self.0.iter().map(|(k, c)| (*k, -c.clone())).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for ((l1, t1), c1) in &self.0 {
            for ((l2, t2), c2) in &other.0 {
                r.add_term((l1 + l2, t1 + t2), c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        PolyLT(self.0.iter().map(|(k, c)| (*k, c * s)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn coeff(&self, l: u32, t: u32) -> Q {
        self.0.get(&(l, t)).cloned().unwrap_or_else(Q::zero)
    }

    /// Degree in l, or None for the zero polynomial.
    pub fn l_degree(&self) -> Option<u32> {
        self.0.keys().map(|(l, _)| *l).max()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.0.keys().map(|(_, t)| *t).max()
    }

    pub fn is_constant(&self) -> bool {
        self.0.keys().all(|k| *k == (0, 0))
    }

    /// d/dl evaluated at l = 0: the (l^1, t^k) coefficients as a t-polynomial.
    pub fn d_dl_at_zero(&self) -> PolyLT {
        PolyLT(
            self.0
                .iter()
                .filter(|((l, _), _)| *l == 1)
                .map(|((_, t), c)| ((0, *t), c.clone()))
                .collect(),
        )
    }

    /// Substitute l = 0.
    pub fn at_l_zero(&self) -> PolyLT {
        PolyLT(
            self.0
                .iter()
                .filter(|((l, _), _)| *l == 0)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        )
    }

    /// Substitute t -> t + s where s is tracked in the l slot (the l slot
    /// must be unused). Used for the group-law check F_{t+s}.
    pub fn t_shift_into_l(&self) -> PolyLT {
        assert!(self.0.keys().all(|(l, _)| *l == 0), "l slot in use");
        let mut r = PolyLT::zero();
        for ((_, t), c) in &self.0 {
            // (t + s)^n = sum C(n,k) t^k s^(n-k)
            for k in 0..=*t {
                let mut binom = Q::one();
                for i in 0..k {
                    binom *= Q::from_integer(((t - i) as i64).into())
                        / Q::from_integer(((i + 1) as i64).into());
                }
                r.add_term((t - k, k), c * binom);
            }
        }
        r
    }

    pub fn to_string_human(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for ((l, t), c) in &self.0 {
            let mut s = format_q(c);
            if *l > 0 {
                s.push_str(&format!("*l^{l}"));
            }
            if *t > 0 {
                s.push_str(&format!("*t^{t}"));
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

const EXACT: i64 = i64::MAX / 4;

/// Truncated Laurent series in z over PolyLT coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentSeries {
    /// Hard pole bound: coefficients below this exponent are zero.
    lo: i64,
    /// Knowledge horizon: coefficients above this exponent are unknown.
    hi: i64,
    coeffs: BTreeMap<i64, PolyLT>,
}

impl LaurentSeries {
    pub fn zero_exact() -> Self {
        LaurentSeries {
            lo: 0,
            hi: EXACT,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one_exact() -> Self {
        Self::monomial(0, PolyLT::one())
    }

    /// An exactly-known finite sum c * z^k.
    pub fn monomial(k: i64, c: PolyLT) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentSeries {
            lo: k.min(0),
            hi: EXACT,
            coeffs,
        }
    }

    pub fn from_coeffs(entries: Vec<(i64, PolyLT)>, hi: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        let mut lo = 0;
        for (k, c) in entries {
            if !c.is_zero() && k <= hi {
                lo = lo.min(k);
                coeffs.insert(k, c);
            }
        }
        LaurentSeries { lo, hi, coeffs }
    }

    pub fn horizon(&self) -> i64 {
        self.hi
    }

    pub fn pole_bound(&self) -> i64 {
        self.lo
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &PolyLT)> {
        self.coeffs.iter()
    }

    fn trim(&mut self) {
        self.coeffs.retain(|k, c| !c.is_zero() && *k <= self.hi);
        let min_key = self.coeffs.keys().next().copied().unwrap_or(0);
        self.lo = self.lo.min(min_key.min(0));
    }

    pub fn with_horizon(&self, hi: i64) -> Self {
        let mut r = self.clone();
        r.hi = r.hi.min(hi);
        r.trim();
        r
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = LaurentSeries {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
            coeffs: self.coeffs.clone(),
        };
        for (k, c) in &other.coeffs {
            let entry = r.coeffs.entry(*k).or_insert_with(PolyLT::zero);
            *entry = entry.add(c);
        }
        r.trim();
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            lo: self.lo,
            hi: self.hi,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let hi = if self.hi >= EXACT && other.hi >= EXACT {
            EXACT
        } else {
            (self.hi.saturating_add(other.lo)).min(other.hi.saturating_add(self.lo))
        };
        let mut r = LaurentSeries {
            lo: self.lo + other.lo,
            hi,
            coeffs: BTreeMap::new(),
        };
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &other.coeffs {
                let k = k1 + k2;
                if k > r.hi {
                    continue;
                }
                let entry = r.coeffs.entry(k).or_insert_with(PolyLT::zero);
                *entry = entry.add(&c1.mul(c2));
            }
        }
        r.trim();
        r
    }

    pub fn scale(&self, s: &Q) -> Self {
        self.scale_poly(&PolyLT::constant(s.clone()))
    }

    pub fn scale_poly(&self, p: &PolyLT) -> Self {
        LaurentSeries {
            lo: self.lo,
            hi: self.hi,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (*k, c.mul(p)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Strict pole part (z-exponents < 0); exactly known once hi >= -1.
    pub fn pole_part(&self) -> Self {
        assert!(self.hi >= -1, "pole part unknown at this horizon");
        LaurentSeries {
            lo: self.lo,
            hi: EXACT,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| **k < 0)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Regular part (z-exponents >= 0), same horizon.
    pub fn regular_part(&self) -> Self {
        LaurentSeries {
            lo: 0,
            hi: self.hi,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| **k >= 0)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn has_pole(&self) -> bool {
        self.coeffs.keys().any(|k| *k < 0)
    }

    /// Coefficient at z^k; panics if the horizon does not cover k.
    pub fn coeff(&self, k: i64) -> PolyLT {
        assert!(k <= self.hi, "coefficient beyond horizon");
        self.coeffs.get(&k).cloned().unwrap_or_else(PolyLT::zero)
    }

    pub fn z0(&self) -> PolyLT {
        self.coeff(0)
    }

    /// Multiply by exp(z * p) where p is a polynomial factor (e.g. L*l for
    /// the unit of mass, or t*L for the RG scaling); the exponential is
    /// expanded as far as the horizon requires.
    pub fn mul_exp_z(&self, p: &PolyLT) -> Self {
        if p.is_zero() {
            return self.clone();
        }
        let mut r = LaurentSeries {
            lo: self.lo,
            hi: self.hi,
            coeffs: BTreeMap::new(),
        };
        if self.coeffs.is_empty() {
            return r;
        }
        assert!(
            self.hi < EXACT,
            "choose a finite horizon before exponential scaling"
        );
        let min_key = *self.coeffs.keys().next().unwrap();
        let max_order = (self.hi - min_key).max(0) as u32;
        let mut factorial = Q::one();
        let mut ppow = PolyLT::one();
        for n in 0..=max_order {
            if n > 0 {
                factorial *= Q::from_integer((n as i64).into());
                ppow = ppow.mul(p);
            }
            let term = ppow.scale(&(Q::one() / factorial.clone()));
            for (k, c) in &self.coeffs {
                let kk = k + n as i64;
                if kk > r.hi {
                    continue;
                }
                let entry = r.coeffs.entry(kk).or_insert_with(PolyLT::zero);
                *entry = entry.add(&c.mul(&term));
            }
        }
        r.trim();
        r
    }

    /// Substitute l = 0 in every coefficient.
    pub fn at_l_zero(&self) -> Self {
        LaurentSeries {
            lo: self.lo,
            hi: self.hi,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (*k, c.at_l_zero()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Maximum l-degree over all coefficients (None when l-free).
    pub fn l_degree(&self) -> Option<u32> {
        self.coeffs.values().filter_map(|c| c.l_degree()).max().filter(|d| *d > 0)
    }

    pub fn is_l_free(&self) -> bool {
        self.coeffs
            .values()
            .all(|c| c.0.keys().all(|(l, _)| *l == 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{q, qr};

    fn pole(k: i64) -> LaurentSeries {
        LaurentSeries::monomial(-k, PolyLT::one())
    }

    #[test]
    fn window_rules() {
        let a = pole(1); // 1/z, exact
        let b = a.with_horizon(3);
        let prod = b.mul(&b); // 1/z^2, horizon min(3-1, 3-1) = 2
        assert_eq!(prod.horizon(), 2);
        assert_eq!(prod.coeff(-2), PolyLT::one());
        assert_eq!(prod.coeff(0), PolyLT::zero());
    }

    #[test]
    fn minimal_subtraction_examples() {
        // a/z + b + c z -> a/z
        let s = LaurentSeries::from_coeffs(
            vec![
                (-1, PolyLT::constant(q(3))),
                (0, PolyLT::constant(q(5))),
                (1, PolyLT::constant(q(7))),
            ],
            5,
        );
        let p = s.pole_part();
        assert_eq!(p.coeff(-1), PolyLT::constant(q(3)));
        assert!(!p.coeffs.contains_key(&0));
        // pure regular -> 0
        assert!(LaurentSeries::monomial(2, PolyLT::one()).pole_part().is_zero());
        // (1/z^2)(1 + z l) -> 1/z^2 + l/z
        let s2 = LaurentSeries::monomial(-2, PolyLT::one())
            .mul_exp_z(&PolyLT::var_l())
            .with_horizon(2);
        let pp = s2.pole_part();
        assert_eq!(pp.coeff(-2), PolyLT::one());
        assert_eq!(pp.coeff(-1), PolyLT::var_l());
    }

    #[test]
    fn exp_z_expansion() {
        // mu^z / z = 1/z + l + z l^2/2 + ...
        let s = pole(1).with_horizon(2).mul_exp_z(&PolyLT::var_l());
        assert_eq!(s.coeff(-1), PolyLT::one());
        assert_eq!(s.coeff(0), PolyLT::var_l());
        assert_eq!(s.coeff(1), PolyLT::var_l().pow(2).scale(&qr(1, 2)));
    }

    #[test]
    fn t_shift_binomial() {
        // t^2 -> (t+s)^2 = t^2 + 2 t s + s^2 with s in the l slot
        let p = PolyLT::var_t().pow(2).t_shift_into_l();
        assert_eq!(p.coeff(0, 2), q(1));
        assert_eq!(p.coeff(1, 1), q(2));
        assert_eq!(p.coeff(2, 0), q(1));
    }
}
