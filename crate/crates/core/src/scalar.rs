//! Coefficient rings.
//!
//! Everything in this crate is exact. [`Rational`] is the ground field; the
//! deformation parameter `t` enters through [`crate::laurent::Laurent`] and
//! [`crate::ratfunc::RatFunc`]. Algebra elements are generic over [`Ring`], so
//! the same normal-ordering code serves constant and `t`-dependent families.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for the rational `p/q`.
pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(d))
}

/// Shorthand for the integer `p` as a rational.
pub fn qi(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Commutative ring containing the rationals.
pub trait Ring: Clone + Debug + Display + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn scale(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q))
    }

    fn from_int(k: i64) -> Self {
        Self::from_rational(&qi(k))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// `None` exactly when `self` is zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    /// A rational specialization used to guess ranks cheaply. For `ℚ` this is
    /// the identity; for function fields it evaluates at a fixed point that
    /// avoids small integers.
    fn specialize(&self) -> Option<Rational>;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn specialize(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Binomial coefficient `C(n, k)` as a rational.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return qi(0);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// Parse `p`, `p/q` or a decimal-free signed integer into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let r: Rational = s.parse().ok()?;
    if r.denom().is_negative() {
        return None;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), qi(10));
        assert_eq!(binomial(3, 0), qi(1));
        assert_eq!(binomial(2, 3), qi(0));
        assert_eq!(factorial(4), qi(24));
    }

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_rational("3/6"), Some(q(1, 2)));
        assert_eq!(parse_rational("-7"), Some(qi(-7)));
        assert_eq!(parse_rational("x"), None);
    }

    proptest! {
        #[test]
        fn reciprocal_is_exact(p in -10_000i64..10_000, d in 1i64..10_000) {
            prop_assume!(p != 0);
            let a = q(p, d);
            let b = q(d, p);
            prop_assert_eq!(Ring::mul(&a, &b), qi(1));
            prop_assert!(a.denom() > &BigInt::zero());
        }
    }
}
