//! Truncated series in `u^{-1}` with Yangian coefficients, the generating
//! matrix `T(u)`, and its inverse.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pbw::YangianElement;
use crate::scalar::{binomial, qi, Rational, Ring};

/// `Σ_{p=0}^{cap} x_p u^{-p}`; everything beyond `u^{-cap}` is discarded.
#[derive(Clone, PartialEq)]
pub struct USeries<R: Ring = Rational> {
    coeffs: Vec<YangianElement<R>>,
}

impl<R: Ring> USeries<R> {
    pub fn zero(cap: usize) -> Self {
        USeries { coeffs: vec![YangianElement::zero(); cap + 1] }
    }

    pub fn one(cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.coeffs[0] = YangianElement::one();
        s
    }

    /// `t_{ij}(u) = δ_{ij} + Σ_r t_{ij}^{(r)} u^{-r}`.
    pub fn t(i: usize, j: usize, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        if i == j {
            s.coeffs[0] = YangianElement::one();
        }
        for r in 1..=cap {
            s.coeffs[r] = YangianElement::gen(i, j, r);
        }
        s
    }

    /// Pads or truncates to `cap`.
    pub fn from_coeffs(mut coeffs: Vec<YangianElement<R>>, cap: usize) -> Self {
        coeffs.resize(cap + 1, YangianElement::zero());
        USeries { coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `u^{-p}`.
    pub fn coeff(&self, p: usize) -> &YangianElement<R> {
        &self.coeffs[p]
    }

    pub fn coeffs(&self) -> &[YangianElement<R>] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        USeries { coeffs: (0..=cap).map(|p| self.coeffs[p].add(&other.coeffs[p])).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        USeries { coeffs: (0..=cap).map(|p| self.coeffs[p].sub(&other.coeffs[p])).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        USeries { coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&YangianElement<R>) -> YangianElement<S>) -> USeries<S> {
        USeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Cauchy product; the coefficient at `u^{-p}` is `Σ_{a+b=p} s1[a]·s2[b]`.
    /// Both factors are truncated to the smaller cap.
    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        let coeffs = (0..=cap)
            .into_par_iter()
            .map(|p| {
                let mut acc = YangianElement::zero();
                for a in 0..=p {
                    let (x, y) = (&self.coeffs[a], &other.coeffs[p - a]);
                    if !x.is_zero() && !y.is_zero() {
                        acc.add_assign(&x.mul(y));
                    }
                }
                acc
            })
            .collect();
        USeries { coeffs }
    }

    /// Re-expand `s(u)` as a series in `u' = u + shift` where each power
    /// `u^{-r}` becomes `Σ_m C(r+m-1, m) w^m u^{-(r+m)}`, i.e. the series of
    /// `(u - w)^{-r}` in `u`. Used with `w = c` for `s(u - c)`.
    fn reexpand(&self, w: &Rational, sign_flip: bool) -> Self {
        let cap = self.cap();
        let mut out = Self::zero(cap);
        out.coeffs[0] = self.coeffs[0].clone();
        for r in 1..=cap {
            if self.coeffs[r].is_zero() {
                continue;
            }
            let sign = if sign_flip && r % 2 == 1 { qi(-1) } else { qi(1) };
            let mut wp = qi(1);
            for m in 0..=(cap - r) {
                let c = &sign * binomial((r + m - 1) as u64, m as u64) * &wp;
                if !Ring::is_zero(&c) {
                    out.coeffs[r + m].add_assign(&self.coeffs[r].scale_rational(&c));
                }
                wp = &wp * w;
            }
        }
        out
    }

    /// `s(u - c)`, truncated at the same cap.
    pub fn shift_u(&self, c: &Rational) -> Self {
        if Ring::is_zero(c) {
            return self.clone();
        }
        self.reexpand(c, false)
    }

    /// `s(-u - m)`: `(-u-m)^{-r} = (-1)^r Σ_k C(r+k-1,k) (-m)^k u^{-(r+k)}`.
    pub fn substitute_neg(&self, m: usize) -> Self {
        self.reexpand(&qi(-(m as i64)), true)
    }
}

impl<R: Ring> fmt::Display for USeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, x) in self.coeffs.iter().enumerate() {
            if !x.is_zero() {
                writeln!(f, "u^-{p} : {x}")?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for USeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Square matrix of series sharing one cap.
#[derive(Clone, PartialEq, Debug)]
pub struct MatrixSeries<R: Ring = Rational> {
    n: usize,
    entries: Vec<USeries<R>>,
}

impl<R: Ring> MatrixSeries<R> {
    /// The generating matrix `T(u)` of `Y(gl_n)`.
    pub fn t_matrix(n: usize, cap: usize) -> Self {
        let entries = (1..=n).flat_map(|i| (1..=n).map(move |j| USeries::t(i, j, cap))).collect();
        MatrixSeries { n, entries }
    }

    pub fn identity(n: usize, cap: usize) -> Self {
        let entries = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| if i == j { USeries::one(cap) } else { USeries::zero(cap) }))
            .collect();
        MatrixSeries { n, entries }
    }

    pub fn from_entries(n: usize, entries: Vec<USeries<R>>) -> Self {
        assert_eq!(entries.len(), n * n);
        MatrixSeries { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> usize {
        self.entries.iter().map(|e| e.cap()).min().unwrap_or(0)
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &USeries<R> {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let cap = self.cap().min(other.cap());
        let entries = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / n + 1, idx % n + 1);
                (1..=n).fold(USeries::zero(cap), |acc, l| acc.add(&self.entry(i, l).mul(other.entry(l, j))))
            })
            .collect();
        MatrixSeries { n, entries }
    }

    pub fn map_entries(&self, f: impl Fn(&USeries<R>) -> USeries<R>) -> Self {
        MatrixSeries { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn substitute_neg(&self, m: usize) -> Self {
        self.map_entries(|s| s.substitute_neg(m))
    }

    /// Inverse of `1 + N` as `Σ_m (-N)^m`; `N` has no `u^0` term, so `m ≤ cap`
    /// suffices.
    pub fn invert(&self) -> Result<Self> {
        let n = self.n;
        let cap = self.cap();
        for i in 1..=n {
            for j in 1..=n {
                let c0 = self.entry(i, j).coeff(0);
                let expect = if i == j { YangianElement::one() } else { YangianElement::zero() };
                if *c0 != expect {
                    return Err(Error::NotUnipotent);
                }
            }
        }
        let minus_n = MatrixSeries {
            n,
            entries: self
                .entries
                .iter()
                .enumerate()
                .map(|(idx, s)| {
                    let mut c = s.coeffs.iter().map(|x| x.neg()).collect::<Vec<_>>();
                    if idx / n == idx % n {
                        c[0] = YangianElement::zero();
                    }
                    USeries { coeffs: c }
                })
                .collect(),
        };
        let mut acc = Self::identity(n, cap);
        let mut power = Self::identity(n, cap);
        for _ in 1..=cap {
            power = power.mul(&minus_n);
            acc = MatrixSeries { n, entries: acc.entries.iter().zip(&power.entries).map(|(a, b)| a.add(b)).collect() };
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    type Y = YangianElement;

    fn single(i: usize, j: usize, r: usize) -> Y {
        Y::gen(i, j, r)
    }

    #[test]
    fn series_product_examples() {
        let cap = 3;
        let a = USeries::from_coeffs(vec![Y::one(), single(1, 1, 1)], cap);
        let b = USeries::from_coeffs(vec![Y::one(), single(2, 2, 1)], cap);
        let p = a.mul(&b);
        assert_eq!(*p.coeff(1), single(1, 1, 1).add(&single(2, 2, 1)));
        assert_eq!(*p.coeff(2), single(1, 1, 1).mul(&single(2, 2, 1)));
        assert!(p.coeff(3).is_zero());
        assert_eq!(a.mul(&USeries::one(cap)), a);
        let c = USeries::<Rational>::t(1, 2, 2).mul(&USeries::t(2, 1, 2));
        assert_eq!(*c.coeff(2), single(1, 2, 1).mul(&single(2, 1, 1)));
    }

    #[test]
    fn shift_examples() {
        let s = USeries::from_coeffs(vec![Y::one(), single(1, 1, 1)], 4);
        let sh = s.shift_u(&qi(1));
        for p in 1..=4 {
            assert_eq!(*sh.coeff(p), single(1, 1, 1));
        }
        assert_eq!(s.shift_u(&qi(0)), s);
        let s2 = USeries::from_coeffs(vec![Y::zero(), Y::zero(), single(1, 1, 2)], 3);
        assert_eq!(*s2.shift_u(&qi(1)).coeff(3), single(1, 1, 2).scale(&qi(2)));
        // Shifting by c then by -c is the identity up to the cap.
        let t = USeries::<Rational>::t(1, 2, 4);
        assert_eq!(t.shift_u(&q(3, 2)).shift_u(&q(-3, 2)), t);
    }

    #[test]
    fn inverse_examples() {
        let t = MatrixSeries::<Rational>::t_matrix(1, 3);
        let inv = t.invert().unwrap();
        let x = single(1, 1, 1);
        assert_eq!(*inv.entry(1, 1).coeff(1), x.neg());
        assert_eq!(*inv.entry(1, 1).coeff(2), x.mul(&x).sub(&single(1, 1, 2)));
        let id = MatrixSeries::<Rational>::identity(2, 3);
        assert_eq!(id.invert().unwrap(), id);
        let sub = t.substitute_neg(1).invert().unwrap();
        assert_eq!(*sub.entry(1, 1).coeff(1), x);
        assert_eq!(*sub.entry(1, 1).coeff(2), x.mul(&x).sub(&x).sub(&single(1, 1, 2)));
        let t2 = MatrixSeries::<Rational>::t_matrix(2, 3);
        assert_eq!(t2.mul(&t2.invert().unwrap()), MatrixSeries::identity(2, 3));
        let bad = MatrixSeries::from_entries(1, vec![USeries::<Rational>::t(1, 2, 2)]);
        assert!(matches!(bad.invert(), Err(Error::NotUnipotent)));
    }
}
