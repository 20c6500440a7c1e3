//! Rational functions in `t`, the fraction field of [`LaurentPoly`].

use std::fmt;

use crate::laurent::LaurentPoly;
use crate::scalar::{q, Field, Rational, Ring};

/// `num / den` in lowest terms; `den` is a monic polynomial with nonzero
/// constant term, so all powers of `t` live in `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let v = den.val().expect("nonzero");
        let (num, den) = (num.shift(-v), den.shift(-v));
        let g = num.gcd(&den);
        let (num, _) = num.div_rem_laurent(&g);
        let (den, _) = den.div_rem_laurent(&g);
        let lead = den.top_coeff().cloned().expect("nonzero");
        let inv = lead.inv().expect("nonzero");
        Some(RatFunc { num: num.scale_field(&inv), den: den.scale_field(&inv) })
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }
}

impl LaurentPoly {
    /// Exact division of Laurent polynomials when `rhs` divides `self` up to
    /// a power of `t`; returns quotient and polynomial remainder.
    pub(crate) fn div_rem_laurent(&self, rhs: &Self) -> (Self, Self) {
        let sv = self.val().unwrap_or(0);
        let rv = rhs.val().unwrap_or(0);
        let (quo, rem) = self.shift(-sv).div_rem(&rhs.shift(-rv));
        (quo.shift(sv - rv), rem.shift(sv))
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }
    fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RatFunc::new(self.num.add(&rhs.num), self.den.clone()).expect("nonzero");
        }
        RatFunc::new(self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)), self.den.mul(&rhs.den)).expect("nonzero")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero")
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_rational(q: &Rational) -> Self {
        RatFunc::from_laurent(LaurentPoly::from_rational(q))
    }
    fn scale(&self, q: &Rational) -> Self {
        if Ring::is_zero(q) {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(q), den: self.den.clone() }
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    fn specialize(&self) -> Option<Rational> {
        let at = q(31, 17);
        let n = self.num.eval(&at)?;
        let d = self.den.eval(&at)?;
        d.inv().map(|di| n * di)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &str, d: &str) -> RatFunc {
        RatFunc::new(LaurentPoly::parse(n).unwrap(), LaurentPoly::parse(d).unwrap()).unwrap()
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let a = rf("1-t^2", "1+t");
        assert_eq!(a, rf("1-t", "1"));
        let b = rf("t", "t^2");
        assert_eq!(b, RatFunc::from_laurent(LaurentPoly::parse("t^-1").unwrap()));
    }

    #[test]
    fn field_ops() {
        let a = rf("1", "1+t");
        let b = rf("t", "1+t");
        assert_eq!(a.add(&b), RatFunc::one());
        let inv = a.inv().unwrap();
        assert_eq!(inv.mul(&a), RatFunc::one());
        assert!(RatFunc::zero().inv().is_none());
    }
}
