//! Laurent polynomials in one parameter `t`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Field, Rational, Ring};

/// Finite sum `Σ c_k t^k`, `k ∈ ℤ`, with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<F> {
    terms: BTreeMap<i64, F>,
}

impl<F> Default for Laurent<F> {
    fn default() -> Self {
        Laurent { terms: BTreeMap::new() }
    }
}

/// Laurent polynomials over the rationals.
pub type LaurentPoly = Laurent<Rational>;

impl<F: Field> Laurent<F> {
    pub fn monomial(c: F, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Laurent { terms }
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    /// The parameter `t` itself.
    pub fn t() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, F)>) -> Self {
        let mut out = Laurent { terms: BTreeMap::new() };
        for (k, c) in it {
            out.add_term(k, &c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> F {
        self.terms.get(&k).cloned().unwrap_or_else(F::zero)
    }

    fn add_term(&mut self, k: i64, c: &F) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(F::zero);
        *slot = slot.add(c);
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// The t-adic valuation: smallest exponent with a nonzero coefficient.
    pub fn val(&self) -> Result<i64> {
        self.terms.keys().next().copied().ok_or(Error::ValuationOfZero)
    }

    /// Largest exponent present, `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `t = 0`; requires no negative powers.
    pub fn eval0(&self) -> Result<F> {
        match self.terms.keys().next() {
            Some(&k) if k < 0 => Err(Error::PoleAtZero),
            _ => Ok(self.coeff(0)),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        let mut acc = F::zero();
        let inv = x.inv();
        for (k, c) in &self.terms {
            let p = if *k >= 0 { x.pow(*k as u32) } else { inv.as_ref()?.pow((-*k) as u32) };
            acc = acc.add(&c.mul(&p));
        }
        Some(acc)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Laurent<G> {
        Laurent::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }

    pub fn scale_field(&self, c: &F) -> Self {
        Laurent::from_terms(self.terms.iter().map(|(k, x)| (*k, x.mul(c))))
    }

    /// Leading coefficient in the polynomial sense (highest exponent).
    pub fn top_coeff(&self) -> Option<&F> {
        self.terms.values().next_back()
    }

    /// Division with remainder, treating both sides as polynomials after
    /// clearing negative powers (`self = q·rhs + r`, `deg r < deg rhs`).
    /// Both operands must have nonnegative valuation.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let d = rhs.max_exp().expect("division by zero polynomial");
        let lead_inv = rhs.top_coeff().and_then(|c| c.inv()).expect("nonzero");
        let mut rem = self.clone();
        let mut quo = Laurent::default();
        while let Some(e) = rem.max_exp() {
            if e < d {
                break;
            }
            let c = rem.coeff(e).mul(&lead_inv);
            let term = Laurent::monomial(c.clone(), e - d);
            quo.add_term(e - d, &c);
            rem = Ring::sub(&rem, &Ring::mul(&term, rhs));
        }
        (quo, rem)
    }

    /// Monic gcd of the polynomial parts, ignoring powers of `t` (which are
    /// units in the Laurent ring).
    pub fn gcd(&self, other: &Self) -> Self {
        let norm = |p: &Self| -> Self {
            match p.val() {
                Ok(v) => p.shift(-v),
                Err(_) => p.clone(),
            }
        };
        let mut a = norm(self);
        let mut b = norm(other);
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = norm(&r);
        }
        match a.top_coeff().and_then(|c| c.inv()) {
            Some(inv) => a.scale_field(&inv),
            None => a,
        }
    }
}

impl<F: Field> Ring for Laurent<F> {
    fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &c.neg());
        }
        out
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, &x.mul(y));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(F::from_rational(q))
    }
    fn scale(&self, q: &Rational) -> Self {
        Laurent::from_terms(self.terms.iter().map(|(k, c)| (*k, c.scale(q))))
    }
}

impl<F: Field> fmt::Display for Laurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let s = c.to_string();
            let compound = s.contains(['+', ' ']) || s[1..].contains('-');
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, if compound { format!("({s})") } else { s }),
            };
            if idx > 0 {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            match k {
                0 => write!(f, "{body}")?,
                1 => write!(f, "{body}*t")?,
                _ => write!(f, "{body}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Laurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl LaurentPoly {
    /// Parse the text form `c*t^k` joined by `+`/`-`, e.g. `1+2*t^3`,
    /// `1/2*t^-1`, `t`, `-t^2`.
    pub fn parse(input: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad Laurent polynomial `{input}`"));
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        // Split on +/- that are not part of an exponent (`^-1`).
        let mut pieces = Vec::new();
        let mut cur = String::new();
        let bytes: Vec<char> = s.chars().collect();
        for (i, &ch) in bytes.iter().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && bytes[i - 1] != '^' {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        pieces.push(cur);
        let mut out = Laurent::default();
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(r) => (-1, r),
                None => (1, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff_txt, exp) = if let Some(pos) = body.find('t') {
                let (c, rest) = body.split_at(pos);
                let exp = match rest.strip_prefix("t^") {
                    Some(e) => e.parse::<i64>().map_err(|_| bad())?,
                    None if rest == "t" => 1,
                    None => return Err(bad()),
                };
                let c = c.strip_suffix('*').unwrap_or(c);
                (if c.is_empty() { "1" } else { c }, exp)
            } else {
                (body, 0)
            };
            let c = parse_rational(coeff_txt).ok_or_else(bad)?;
            let c = if sign < 0 { -c } else { c };
            out.add_term(exp, &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn valuation() {
        assert_eq!(lp("3*t^2+t^5").val().unwrap(), 2);
        assert_eq!(lp("1/2*t^-1+7").val().unwrap(), -1);
        assert!(matches!(LaurentPoly::zero().val(), Err(Error::ValuationOfZero)));
    }

    #[test]
    fn value_at_zero() {
        assert_eq!(lp("5+2*t").eval0().unwrap(), qi(5));
        assert_eq!(lp("t^3").eval0().unwrap(), qi(0));
        assert!(matches!(lp("t^-1").eval0(), Err(Error::PoleAtZero)));
    }

    #[test]
    fn parse_and_print() {
        let p = lp("1+2*t^3");
        assert_eq!(p.coeff(3), qi(2));
        assert_eq!(p.to_string(), "1+2*t^3");
        let r = lp("1/2*t^-1");
        assert_eq!(r.coeff(-1), q(1, 2));
        assert_eq!(lp("1-t").to_string(), "1-1*t");
        assert_eq!(LaurentPoly::parse(&lp("-3/4*t^-2+t").to_string()).unwrap(), lp("-3/4*t^-2+t"));
        assert!(LaurentPoly::parse("1+").is_err());
        assert!(LaurentPoly::parse("2*x").is_err());
    }

    #[test]
    fn arithmetic_and_gcd() {
        let a = lp("1+t");
        let b = lp("1-t");
        assert_eq!(a.mul(&b), lp("1-t^2"));
        let g = lp("1-t^2").gcd(&lp("t+t^2"));
        assert_eq!(g, lp("1+t"));
        let (qq, r) = lp("1-t^2").div_rem(&a);
        assert_eq!(qq, b);
        assert!(r.is_zero());
    }
}
