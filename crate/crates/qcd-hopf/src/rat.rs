//! Small helpers around exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p/q` with the denominator always present.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// Generalized binomial coefficient C(alpha, k) for rational alpha.
pub fn binomial(alpha: &Q, k: u32) -> Q {
    let mut num = Q::one();
    for i in 0..k {
        num *= alpha - q(i as i64);
    }
    let mut fact = Q::one();
    for i in 1..=k {
        fact *= q(i as i64);
    }
    num / fact
}

/// Integer power with negative exponents allowed.
pub fn pow_q(x: &Q, e: i64) -> Q {
    if e >= 0 {
        let mut r = Q::one();
        for _ in 0..e {
            r *= x;
        }
        r
    } else {
        assert!(!x.is_zero(), "negative power of zero");
        let mut r = Q::one();
        for _ in 0..(-e) {
            r /= x;
        }
        r
    }
}

pub fn is_negative(x: &Q) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_half() {
        // C(1/2, 2) = (1/2)(-1/2)/2 = -1/8
        assert_eq!(binomial(&qr(1, 2), 2), qr(-1, 8));
        assert_eq!(binomial(&q(3), 2), q(3));
        assert_eq!(binomial(&qr(-3, 2), 0), q(1));
    }

    #[test]
    fn parse_format_roundtrip() {
        let x = qr(-7, 12);
        assert_eq!(parse_q(&format_q(&x)), Some(x));
        assert_eq!(parse_q("5"), Some(q(5)));
        assert_eq!(parse_q("1/0"), None);
    }
}
