//! Quantum minors, the series `τ_k(u, C)`, and generators of Bethe
//! subalgebras.

use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use rustc_hash::FxBuildHasher;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::pbw::Yangian;
use crate::presentation::{Flags, Presentation};
use crate::scalar::{factorial, qi, Field, Rational, Ring};
use crate::series::USeries;

/// Diagonal matrix `C = diag(λ_1, …, λ_n)` whose entries may depend on `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusFamily<R = Rational> {
    pub eigenvalues: Vec<R>,
}

impl<R: Ring> TorusFamily<R> {
    pub fn new(eigenvalues: Vec<R>) -> Self {
        TorusFamily { eigenvalues }
    }

    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Pairwise distinct eigenvalues (as elements of the coefficient ring).
    pub fn is_regular(&self) -> bool {
        let e = &self.eigenvalues;
        (0..e.len()).all(|a| (a + 1..e.len()).all(|b| !e[a].sub(&e[b]).is_zero()))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.eigenvalues.iter().all(|x| !x.is_zero())
    }

    pub fn flags(&self) -> Flags {
        Flags { regular: self.is_regular(), nondegenerate: self.is_nondegenerate() }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TorusFamily<S> {
        TorusFamily { eigenvalues: self.eigenvalues.iter().map(f).collect() }
    }
}

impl<R: Ring + std::fmt::Display> std::fmt::Display for TorusFamily<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.eigenvalues.iter().map(ToString::to_string).collect();
        write!(f, "diag({})", parts.join(", "))
    }
}

impl TorusFamily<Rational> {
    pub fn constant(values: &[Rational]) -> Self {
        TorusFamily { eigenvalues: values.to_vec() }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        TorusFamily { eigenvalues: values.iter().map(|&v| qi(v)).collect() }
    }

    /// `C^{-1}`; requires a nondegenerate matrix.
    pub fn inverse(&self) -> Result<Self> {
        self.eigenvalues
            .iter()
            .map(|x| x.inv().ok_or_else(|| Error::NonRegular("zero eigenvalue has no inverse".into())))
            .collect::<Result<Vec<_>>>()
            .map(TorusFamily::new)
    }
}

impl TorusFamily<LaurentPoly> {
    /// Comma-separated Laurent entries, e.g. `1,1+t,2`.
    pub fn parse(spec: &str) -> Result<Self> {
        let entries = spec.split(',').map(LaurentPoly::parse).collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(Error::Parse("empty matrix".into()));
        }
        Ok(TorusFamily { eigenvalues: entries })
    }

    /// Entries without `t`, if every entry is constant.
    pub fn as_constant(&self) -> Option<TorusFamily<Rational>> {
        self.eigenvalues
            .iter()
            .map(|p| p.terms().all(|(k, _)| k == 0).then(|| p.coeff(0)))
            .collect::<Option<Vec<_>>>()
            .map(TorusFamily::new)
    }
}

type ShiftKey = (usize, usize, i64, usize);

fn shifted_t(a: usize, b: usize, c: usize, cap: usize) -> Arc<USeries> {
    static CACHE: OnceLock<DashMap<ShiftKey, Arc<USeries>, FxBuildHasher>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| DashMap::with_hasher(FxBuildHasher));
    let key = (a, b, c as i64, cap);
    if let Some(hit) = cache.get(&key) {
        return hit.clone();
    }
    let s = Arc::new(USeries::t(a, b, cap).shift_u(&qi(c as i64)));
    cache.insert(key, s.clone());
    s
}

/// Permutations of `0..k` with their signs.
pub(crate) fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, k: usize, out: &mut Vec<(Vec<usize>, i64)>) {
        if prefix.len() == k {
            let mut inv = 0;
            for a in 0..k {
                for b in a + 1..k {
                    if prefix[a] > prefix[b] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for x in 0..k {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, k, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], k, &mut out);
    out
}

/// `Π_m t_{rows[m], cols[m]}(u - shifts[m])`.
fn ordered_product(rows: &[usize], cols: &[usize], shifts: &[usize], cap: usize) -> USeries {
    let mut acc = USeries::one(cap);
    for m in 0..rows.len() {
        acc = acc.mul(&shifted_t(rows[m], cols[m], shifts[m], cap));
    }
    acc
}

fn check_indices(a: &[usize], b: &[usize]) -> Result<()> {
    let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&x| x >= 1);
    if a.len() != b.len() || a.is_empty() || !increasing(a) || !increasing(b) {
        return Err(Error::BadMinorIndices);
    }
    Ok(())
}

/// Row expansion `Σ_σ sgn σ · t_{a_σ(1) b_1}(u) ⋯ t_{a_σ(k) b_k}(u-k+1)`.
pub fn quantum_minor_rows(a: &[usize], b: &[usize], cap: usize) -> Result<USeries> {
    check_indices(a, b)?;
    let k = a.len();
    let shifts: Vec<usize> = (0..k).collect();
    let mut acc = USeries::zero(cap);
    for (perm, sign) in signed_permutations(k) {
        let rows: Vec<usize> = perm.iter().map(|&p| a[p]).collect();
        let term = ordered_product(&rows, b, &shifts, cap);
        acc = if sign > 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc)
}

/// Column expansion `Σ_σ sgn σ · t_{a_1 b_σ(1)}(u-k+1) ⋯ t_{a_k b_σ(k)}(u)`.
pub fn quantum_minor_cols(a: &[usize], b: &[usize], cap: usize) -> Result<USeries> {
    check_indices(a, b)?;
    let k = a.len();
    let shifts: Vec<usize> = (0..k).rev().collect();
    let mut acc = USeries::zero(cap);
    for (perm, sign) in signed_permutations(k) {
        let cols: Vec<usize> = perm.iter().map(|&p| b[p]).collect();
        let term = ordered_product(a, &cols, &shifts, cap);
        acc = if sign > 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc)
}

/// Quantum minor `t^{a_1…a_k}_{b_1…b_k}(u)`, computed by both expansions and
/// compared. Memoized.
pub fn quantum_minor(a: &[usize], b: &[usize], cap: usize) -> Result<Arc<USeries>> {
    type Key = (Vec<usize>, Vec<usize>, usize);
    static CACHE: OnceLock<DashMap<Key, Arc<USeries>, FxBuildHasher>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| DashMap::with_hasher(FxBuildHasher));
    let key = (a.to_vec(), b.to_vec(), cap);
    if let Some(hit) = cache.get(&key) {
        return Ok(hit.clone());
    }
    let rows = quantum_minor_rows(a, b, cap)?;
    let cols = quantum_minor_cols(a, b, cap)?;
    if rows != cols {
        return Err(Error::Consistency(format!("row and column expansions of the minor {a:?},{b:?} differ")));
    }
    let out = Arc::new(rows);
    cache.insert(key, out.clone());
    Ok(out)
}

/// Increasing `k`-subsets of `1..=n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// `τ_k(u, C) = Σ_{a_1<…<a_k} λ_{a_1}⋯λ_{a_k} t^{a}_{a}(u)`.
pub fn tau_minor<R: Ring>(c: &TorusFamily<R>, k: usize, cap: usize) -> Result<USeries<R>> {
    let n = c.n();
    if k == 0 || k > n {
        return Err(Error::Config(format!("τ_k needs 1 ≤ k ≤ n, got k={k}, n={n}")));
    }
    let mut acc = USeries::<R>::zero(cap);
    for a in subsets(n, k) {
        let weight = a.iter().fold(R::one(), |w, &i| w.mul(&c.eigenvalues[i - 1]));
        if weight.is_zero() {
            continue;
        }
        let minor = quantum_minor(&a, &a, cap)?;
        acc = acc.add(&minor.map_coeffs(|x| x.to_ring::<R>()).scale(&weight));
    }
    Ok(acc)
}

/// `τ_k(u, C) = (1/k!) tr A_k C_1⋯C_k T_1(u)⋯T_k(u-k+1)`, expanded as
/// `(1/k!) Σ_{j ∈ [n]^k} Σ_σ sgn σ · Π λ_{j_m} · t_{j_1 j_σ(1)}(u) ⋯ t_{j_k j_σ(k)}(u-k+1)`.
/// Independent of the minor formula; used as its oracle.
pub fn tau_trace<R: Ring>(c: &TorusFamily<R>, k: usize, cap: usize) -> Result<USeries<R>> {
    let n = c.n();
    if k == 0 || k > n {
        return Err(Error::Config(format!("τ_k needs 1 ≤ k ≤ n, got k={k}, n={n}")));
    }
    let perms = signed_permutations(k);
    let shifts: Vec<usize> = (0..k).collect();
    let mut acc = USeries::<R>::zero(cap);
    let total = n.pow(k as u32);
    for code in 0..total {
        let mut j = Vec::with_capacity(k);
        let mut x = code;
        for _ in 0..k {
            j.push(x % n + 1);
            x /= n;
        }
        let weight = j.iter().fold(R::one(), |w, &i| w.mul(&c.eigenvalues[i - 1]));
        if weight.is_zero() {
            continue;
        }
        let mut inner = USeries::<Rational>::zero(cap);
        for (perm, sign) in &perms {
            let cols: Vec<usize> = perm.iter().map(|&p| j[p]).collect();
            let term = ordered_product(&j, &cols, &shifts, cap);
            inner = if *sign > 0 { inner.add(&term) } else { inner.sub(&term) };
        }
        acc = acc.add(&inner.map_coeffs(|x| x.to_ring::<R>()).scale(&weight));
    }
    let norm = R::from_rational(&factorial(k as u64).recip());
    Ok(acc.scale(&norm))
}

/// Quantum determinant of `T(u)`.
pub fn qdet(n: usize, cap: usize) -> Result<Arc<USeries>> {
    let all: Vec<usize> = (1..=n).collect();
    quantum_minor(&all, &all, cap)
}

/// Generators of `B(C)`: the `u^{-p}` coefficients, `1 ≤ p ≤ d_cap`, of
/// `τ_1, …, τ_n`, with declared degree `p`.
pub fn bethe_generators<R: Ring>(c: &TorusFamily<R>, d_cap: usize) -> Result<Presentation<Yangian, R>> {
    let n = c.n();
    let mut pres = Presentation::new(n, format!("B({})", fmt_diag(c)));
    pres.flags = c.flags();
    for k in 1..=n {
        let tau = tau_minor(c, k, d_cap)?;
        for p in 1..=d_cap {
            pres.push(tau.coeff(p).clone(), p, format!("tau{k}[u^-{p}]"));
        }
    }
    Ok(pres)
}

/// Gelfand–Tsetlin generators: coefficients of the quantum determinants of
/// the leading `m × m` submatrices of `T(u)`.
pub fn gt_generators(n: usize, d_cap: usize) -> Result<Presentation<Yangian, Rational>> {
    let mut pres = Presentation::new(n, format!("GT({n})"));
    for m in 1..=n {
        let q = qdet(m, d_cap)?;
        for p in 1..=d_cap {
            pres.push(q.coeff(p).clone(), p, format!("qdet{m}[u^-{p}]"));
        }
    }
    Ok(pres)
}

pub(crate) fn fmt_diag<R: Ring>(c: &TorusFamily<R>) -> String {
    let parts: Vec<String> = c.eigenvalues.iter().map(|x| x.to_string()).collect();
    format!("diag({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    type Y = crate::pbw::YangianElement;

    fn t(i: usize, j: usize, r: usize) -> Y {
        Y::gen(i, j, r)
    }

    #[test]
    fn minor_examples() {
        let cap = 3;
        let m = quantum_minor(&[1, 2], &[1, 2], cap).unwrap();
        let expect = USeries::t(1, 1, cap)
            .mul(&USeries::t(2, 2, cap).shift_u(&qi(1)))
            .sub(&USeries::t(2, 1, cap).mul(&USeries::t(1, 2, cap).shift_u(&qi(1))));
        assert_eq!(*m, expect);
        assert_eq!(*m.coeff(1), t(1, 1, 1).add(&t(2, 2, 1)));
        assert_eq!(*quantum_minor(&[2], &[1], cap).unwrap(), USeries::t(2, 1, cap));
        assert!(matches!(quantum_minor(&[2, 1], &[1, 2], cap), Err(Error::BadMinorIndices)));
        assert!(matches!(quantum_minor(&[1], &[1, 2], cap), Err(Error::BadMinorIndices)));
    }

    #[test]
    fn tau_examples() {
        let c = TorusFamily::from_ints(&[3, 5]);
        let t2 = tau_minor(&c, 2, 2).unwrap();
        assert_eq!(*t2.coeff(1), t(1, 1, 1).add(&t(2, 2, 1)).scale(&qi(15)));
        let t1 = tau_minor(&c, 1, 2).unwrap();
        assert_eq!(*t1.coeff(1), t(1, 1, 1).scale(&qi(3)).add(&t(2, 2, 1).scale(&qi(5))));
        // τ_n depends on C only through det C.
        let c2 = TorusFamily::from_ints(&[1, 15]);
        assert_eq!(tau_minor(&c2, 2, 3).unwrap(), tau_minor(&c, 2, 3).unwrap());
        let e = TorusFamily::from_ints(&[1, 1]);
        assert_eq!(tau_trace(&e, 1, 3).unwrap(), USeries::t(1, 1, 3).add(&USeries::t(2, 2, 3)));
        assert_eq!(tau_trace(&e, 2, 3).unwrap(), tau_minor(&e, 2, 3).unwrap());
    }

    #[test]
    fn trace_matches_minors_rank_three() {
        let c = TorusFamily::from_ints(&[1, 2, 3]);
        assert_eq!(tau_trace(&c, 2, 3).unwrap(), tau_minor(&c, 2, 3).unwrap());
    }

    #[test]
    fn qdet_examples() {
        assert_eq!(*qdet(1, 3).unwrap(), USeries::t(1, 1, 3));
        assert_eq!(*qdet(2, 3).unwrap().coeff(1), t(1, 1, 1).add(&t(2, 2, 1)));
        let q2 = qdet(2, 3).unwrap();
        for p in 1..=3 {
            for (i, j) in [(1, 2), (2, 1), (1, 1)] {
                for r in 1..=2 {
                    assert!(q2.coeff(p).commutator(&t(i, j, r)).is_zero());
                }
            }
        }
    }

    #[test]
    fn generator_examples() {
        let b = bethe_generators(&TorusFamily::from_ints(&[4]), 3).unwrap();
        assert_eq!(b.generators.len(), 3);
        assert_eq!(b.generators[2].element, t(1, 1, 3).scale(&qi(4)));
        let b2 = bethe_generators(&TorusFamily::from_ints(&[1, 2]), 1).unwrap();
        assert_eq!(b2.generators[0].element, t(1, 1, 1).add(&t(2, 2, 1).scale(&qi(2))));
        assert_eq!(b2.generators[1].element, t(1, 1, 1).add(&t(2, 2, 1)).scale(&qi(2)));
        let degenerate = bethe_generators(&TorusFamily::constant(&[q(1, 1), q(1, 1)]), 1).unwrap();
        assert!(!degenerate.flags.regular);
        let gt = gt_generators(2, 2).unwrap();
        assert_eq!(gt.generators[0].element, t(1, 1, 1));
        assert!(gt.commutativity_check().passed());
    }

    #[test]
    fn family_parsing() {
        let f = TorusFamily::parse("1,1+t,2").unwrap();
        assert_eq!(f.n(), 3);
        assert!(f.is_regular());
        assert!(f.as_constant().is_none());
        let never = TorusFamily::parse("1,1").unwrap();
        assert!(!never.is_regular());
        assert_eq!(TorusFamily::parse("1,2").unwrap().as_constant(), Some(TorusFamily::from_ints(&[1, 2])));
        assert!(TorusFamily::parse("1,,2").is_err());
    }
}
