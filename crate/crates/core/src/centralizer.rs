//! The centralizer construction `η_k: Y(gl_n) ⊗ A_0 → U(gl_{n+k})^{gl_k}`
//! at a fixed `k`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::bethe::{bethe_generators, qdet, TorusFamily};
use crate::classical::quantum_shift_generators_unchecked;
use crate::error::{Error, Result};
use crate::homs::{embed_i, omega_capped};
use crate::limits::filtered_components;
use crate::matrix::ExactMatrix;
use crate::pbw::{ambient_basis, EnvElement, Word, YangianElement};
use crate::scalar::{qi, Rational, Ring};

/// Polynomial in `𝓔_1, 𝓔_2, …` with `deg 𝓔_i = i`. Monomials are sorted
/// lists of variable indices.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct A0Element {
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl A0Element {
    pub fn one() -> Self {
        Self::monomial(Vec::new())
    }

    /// `𝓔_i`.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "A_0 variables start at 1");
        Self::monomial(vec![i])
    }

    pub fn monomial(mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        A0Element { terms: BTreeMap::from([(vars, qi(1))]) }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let s = terms.get(m).map_or_else(|| c.clone(), |x| x + c);
            if Ring::is_zero(&s) {
                terms.remove(m);
            } else {
                terms.insert(m.clone(), s);
            }
        }
        A0Element { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = A0Element::default();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut m = [a.as_slice(), b.as_slice()].concat();
                m.sort_unstable();
                out = out.add(&A0Element { terms: BTreeMap::from([(m, x * y)]) });
            }
        }
        out
    }

    /// Monomials of weighted degree exactly `d`.
    pub fn monomials_of_degree(d: usize) -> Vec<Vec<usize>> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rem == 0 {
                let mut m = cur.clone();
                m.reverse();
                out.push(m);
                return;
            }
            for i in (1..=max.min(rem)).rev() {
                cur.push(i);
                rec(rem - i, i, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, d, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for A0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> = m.iter().map(|i| format!("E{i}")).collect();
                if vars.is_empty() {
                    c.to_string()
                } else {
                    format!("{c} * {}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for A0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Φ_k = π_{n+k} ∘ ω_{n+k} ∘ i_k`.
pub fn phi_map(x: &YangianElement, n: usize, k: usize) -> Result<EnvElement> {
    debug_assert!(x.max_index() <= n);
    let cap = x.max_level().max(1);
    Ok(omega_capped(&embed_i(x, k), n + k, cap)?.evaluate())
}

/// `𝓔_i ↦` the `u^{-i}` coefficient of `π_{n+k}(qdet T(u))`.
pub fn z_map(a: &A0Element, n_plus_k: usize) -> Result<EnvElement> {
    let cap = a.terms().flat_map(|(m, _)| m.iter().copied()).max().unwrap_or(0);
    let images: Vec<EnvElement> = if cap == 0 {
        Vec::new()
    } else {
        let q = qdet(n_plus_k, cap)?;
        (1..=cap).map(|i| q.coeff(i).evaluate()).collect()
    };
    let mut out = EnvElement::zero();
    for (m, c) in a.terms() {
        let term = m.iter().fold(EnvElement::one(), |acc, &i| acc.mul(&images[i - 1]));
        out.add_scaled(&term, c);
    }
    Ok(out)
}

/// `η_k(x ⊗ a) = Φ_k(x) · z_k(a)`.
pub fn eta_map(x: &YangianElement, a: &A0Element, n: usize, k: usize) -> Result<EnvElement> {
    Ok(phi_map(x, n, k)?.mul(&z_map(a, n + k)?))
}

/// One membership test of the inclusion check.
#[derive(Clone, Debug)]
pub struct Membership {
    pub name: String,
    pub degree: usize,
    pub member: bool,
    /// Residual modulo the target component; zero exactly for members.
    pub residual: EnvElement,
}

#[derive(Clone, Debug)]
pub struct InclusionReport {
    pub target: String,
    pub entries: Vec<Membership>,
}

impl InclusionReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|m| m.member)
    }
}

/// Tests `η_k(g ⊗ 1) ∈ F̂(diag(C, 0^k))` for every generator `g` of `B(C)`
/// of degree `≤ d_cap`, and `z(𝓔_i)` for `i ≤ d_cap`, by exact reduction.
pub fn check_incl(c: &TorusFamily, k: usize, d_cap: usize) -> Result<InclusionReport> {
    if !c.is_nondegenerate() {
        return Err(Error::NonRegular("the inclusion needs a nondegenerate C".into()));
    }
    let n = c.n();
    let mut diag = c.eigenvalues.clone();
    diag.extend(std::iter::repeat_n(qi(0), k));
    let fhat = quantum_shift_generators_unchecked(&diag);
    let comps = filtered_components(&fhat, d_cap)?;
    let b = bethe_generators(c, d_cap)?;
    let mut items: Vec<(String, usize, EnvElement)> = b
        .generators
        .par_iter()
        .map(|g| Ok((format!("eta({})", g.name), g.degree, phi_map(&g.element, n, k)?)))
        .collect::<Result<_>>()?;
    for i in 1..=d_cap {
        items.push((format!("z(E{i})"), i, z_map(&A0Element::var(i), n + k)?));
    }
    let entries = items
        .into_par_iter()
        .map(|(name, degree, img)| {
            let residual = comps[degree - 1].residual(&img)?;
            Ok(Membership { name, degree, member: residual.is_zero(), residual })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InclusionReport { target: fhat.label, entries })
}

/// Rank of `η_k` on the degree-`≤ d` part of `Y(gl_n) ⊗ A_0`, constants
/// included, next to the dimension of that part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EtaRank {
    pub domain_dim: usize,
    pub rank: usize,
}

impl EtaRank {
    pub fn injective(&self) -> bool {
        self.rank == self.domain_dim
    }
}

pub fn eta_rank(n: usize, k: usize, d: usize) -> Result<EtaRank> {
    let mut y_words: Vec<Word> = vec![Word::new()];
    y_words.extend(ambient_basis(n, d, d));
    let mut domain: Vec<(YangianElement, A0Element)> = Vec::new();
    for w in &y_words {
        let dy = crate::pbw::word_degree(w);
        for b in 0..=(d - dy) {
            for m in A0Element::monomials_of_degree(b) {
                domain.push((YangianElement::from_terms([(w.clone(), qi(1))]), A0Element::monomial(m)));
            }
        }
    }
    let images = domain.par_iter().map(|(x, a)| eta_map(x, a, n, k)).collect::<Result<Vec<_>>>()?;
    let mut index: FxHashMap<Word, usize> = FxHashMap::default();
    for img in &images {
        for (w, _) in img.terms() {
            let next = index.len();
            index.entry(w.clone()).or_insert(next);
        }
    }
    let cols = index.len();
    let rows = images
        .iter()
        .map(|img| {
            let mut v = vec![qi(0); cols];
            for (w, c) in img.terms() {
                v[index[w]] = c.clone();
            }
            v
        })
        .collect();
    Ok(EtaRank { domain_dim: domain.len(), rank: ExactMatrix::from_rows(cols, rows).rank() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(i: usize, j: usize) -> EnvElement {
        EnvElement::gen(i, j, 1)
    }

    #[test]
    fn phi_examples() {
        let t11 = YangianElement::gen(1, 1, 1);
        assert_eq!(phi_map(&t11, 1, 0).unwrap(), big(1, 1));
        assert_eq!(phi_map(&YangianElement::one(), 2, 1).unwrap(), EnvElement::one());
        let p = phi_map(&t11, 1, 1).unwrap();
        assert!(p.commutator(&big(2, 2)).is_zero());
        // Level-2 images are gl_k invariant too.
        for (i, j) in [(1, 1), (1, 2), (2, 1)] {
            let img = phi_map(&YangianElement::gen(i, j, 2), 2, 2).unwrap();
            for (a, b) in [(3, 3), (3, 4), (4, 3), (4, 4)] {
                assert!(img.commutator(&big(a, b)).is_zero());
            }
        }
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_map(&A0Element::var(1), 2).unwrap(), big(1, 1).add(&big(2, 2)));
        assert_eq!(z_map(&A0Element::one(), 2).unwrap(), EnvElement::one());
        assert!(z_map(&A0Element::var(2), 2).unwrap().commutator(&big(1, 2)).is_zero());
    }

    #[test]
    fn eta_examples() {
        let x = YangianElement::gen(1, 2, 2);
        assert_eq!(eta_map(&x, &A0Element::one(), 2, 1).unwrap(), phi_map(&x, 2, 1).unwrap());
        let a = A0Element::var(2).mul(&A0Element::var(1));
        assert_eq!(eta_map(&YangianElement::one(), &a, 2, 1).unwrap(), z_map(&a, 3).unwrap());
        assert!(eta_map(&x, &a, 2, 1).unwrap().degree() <= 5);
        assert_eq!(A0Element::monomials_of_degree(3).len(), 3);
    }

    #[test]
    fn inclusion_examples() {
        let r = check_incl(&TorusFamily::from_ints(&[1]), 1, 2).unwrap();
        assert!(r.passed(), "{:?}", r.entries.iter().filter(|m| !m.member).collect::<Vec<_>>());
        assert!(check_incl(&TorusFamily::from_ints(&[1, 0]), 1, 2).is_err());
        let r = check_incl(&TorusFamily::from_ints(&[1, 2]), 1, 3).unwrap();
        assert!(r.passed());
        assert!(r.entries.iter().any(|m| m.name == "z(E3)"));
    }

    #[test]
    fn inclusion_sweep() {
        for c in [vec![2], vec![-1, 3], vec![1, 2]] {
            for k in 1..=2 {
                let d = if c.len() == 2 && k == 2 { 2 } else { 3 };
                assert!(check_incl(&TorusFamily::from_ints(&c), k, d).unwrap().passed(), "{c:?} k={k}");
            }
        }
    }

    #[test]
    fn eta_ranks() {
        for (n, k, d) in [(1, 1, 1), (2, 1, 1), (1, 2, 2), (2, 2, 2)] {
            assert!(eta_rank(n, k, d).unwrap().injective(), "n={n} k={k} d={d}");
        }
        // With k < d the map has a kernel.
        assert_eq!(eta_rank(1, 1, 2).unwrap(), EtaRank { domain_dim: 8, rank: 7 });
    }
}
