//! Shift of argument subalgebras `F(C) ⊂ S(gl_n)` and their lifts
//! `F̂(C) ⊂ U(gl_n)`, Gaudin quadratic elements, Shuvalov limits, and the
//! predicted Poincaré series.

use std::collections::BTreeMap;
use std::fmt;

use crate::bethe::{bethe_generators, signed_permutations, TorusFamily};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::limits::{filtered_components, subspace_equal, FilteredSubspace};
use crate::matrix::IncrementalEchelon;
use crate::pbw::{ambient_basis, Element, EnvElement, Gen, SymElement, Symmetric, Word};
use crate::presentation::{Flags, Presentation};
use crate::scalar::{factorial, parse_rational, qi, Field, Rational, Ring};

/// `diag(λ_1^{k_1}, …, λ_l^{k_l})` with pairwise distinct `λ_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockDiagonal {
    pub blocks: Vec<(Rational, usize)>,
}

impl BlockDiagonal {
    pub fn new(blocks: Vec<(Rational, usize)>) -> Result<Self> {
        for (a, (x, k)) in blocks.iter().enumerate() {
            if *k == 0 {
                return Err(Error::Parse(format!("block {x} has multiplicity 0")));
            }
            if blocks[..a].iter().any(|(y, _)| y == x) {
                return Err(Error::Parse(format!("eigenvalue {x} repeated across blocks")));
            }
        }
        Ok(BlockDiagonal { blocks })
    }

    /// Parses `"1:2,2:1"` (eigenvalue `:` multiplicity; multiplicity defaults to 1).
    pub fn parse(spec: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (v, k) = part.split_once(':').unwrap_or((part, "1"));
            let v = parse_rational(v.trim()).ok_or_else(|| Error::Parse(format!("bad eigenvalue `{v}`")))?;
            let k = k.trim().parse().map_err(|_| Error::Parse(format!("bad multiplicity `{k}`")))?;
            blocks.push((v, k));
        }
        if blocks.is_empty() {
            return Err(Error::Parse("empty block specification".into()));
        }
        Self::new(blocks)
    }

    /// Groups equal entries of a diagonal, in order of first appearance.
    pub fn from_diagonal(diag: &[Rational]) -> Self {
        let mut blocks: Vec<(Rational, usize)> = Vec::new();
        for x in diag {
            match blocks.iter_mut().find(|(y, _)| y == x) {
                Some(b) => b.1 += 1,
                None => blocks.push((x.clone(), 1)),
            }
        }
        BlockDiagonal { blocks }
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.1).sum()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.1).collect()
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        self.blocks.iter().flat_map(|(x, k)| std::iter::repeat_n(x.clone(), *k)).collect()
    }

    pub fn is_regular(&self) -> bool {
        self.blocks.iter().all(|b| b.1 == 1)
    }
}

impl fmt::Display for BlockDiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|(x, k)| format!("{x}:{k}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn e(i: usize, j: usize) -> SymElement {
    SymElement::gen(i, j, 1)
}

/// `∂f/∂e_g`.
pub fn partial(f: &SymElement, g: Gen) -> SymElement {
    Element::from_terms(f.terms().filter_map(|(w, c)| {
        let m = w.iter().filter(|&&x| x == g).count();
        (m > 0).then(|| {
            let pos = w.iter().position(|&x| x == g).expect("present");
            let mut v = w.clone();
            v.remove(pos);
            (v, c * qi(m as i64))
        })
    }))
}

fn variables(f: &SymElement) -> Vec<Gen> {
    let mut v: Vec<Gen> = f.terms().flat_map(|(w, _)| w.iter().copied()).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// `{e_ij, e_kl} = δ_jk e_il − δ_li e_kj`, extended by Leibniz.
pub fn poisson_bracket(f: &SymElement, g: &SymElement) -> SymElement {
    let mut out = SymElement::zero();
    let gv = variables(g);
    for a in variables(f) {
        let fa = partial(f, a);
        for &b in &gv {
            let mut ab = SymElement::zero();
            if a.j() == b.i() {
                ab = ab.add(&e(a.i(), b.j()));
            }
            if b.j() == a.i() {
                ab = ab.sub(&e(b.i(), a.j()));
            }
            if !ab.is_zero() {
                out.add_assign(&fa.mul(&partial(g, b)).mul(&ab));
            }
        }
    }
    out
}

/// Sum of the principal `k × k` minors of `(e_ij)` restricted to `indices`.
fn principal_minor_sum(indices: &[usize], k: usize) -> SymElement {
    let perms = signed_permutations(k);
    let mut out = SymElement::zero();
    for sub in crate::bethe::subsets(indices.len(), k) {
        let idx: Vec<usize> = sub.iter().map(|&s| indices[s - 1]).collect();
        for (p, sign) in &perms {
            let mut m = SymElement::one();
            for a in 0..k {
                m = m.mul(&e(idx[a], idx[p[a]]));
            }
            out.add_scaled(&m, &qi(*sign));
        }
    }
    out
}

/// `Φ_1, …, Φ_m`: coefficients of the characteristic polynomial of `(e_ij)`.
pub fn char_invariants(m: usize) -> Vec<SymElement> {
    let all: Vec<usize> = (1..=m).collect();
    principal_invariants(&all)
}

/// The basic invariants of `gl_k ⊂ gl_n` for the block on `indices`.
pub fn principal_invariants(indices: &[usize]) -> Vec<SymElement> {
    (1..=indices.len()).map(|k| principal_minor_sum(indices, k)).collect()
}

/// `d/ds f(x + sC)|_{s=0}` for diagonal `C`.
pub fn dir_derivative(f: &SymElement, diag: &[Rational]) -> SymElement {
    let mut out = SymElement::zero();
    for (a, c) in diag.iter().enumerate() {
        if !Ring::is_zero(c) {
            out.add_scaled(&partial(f, Gen::new(a + 1, a + 1, 1)), c);
        }
    }
    out
}

/// Adds `x` unless it is constant or linearly dependent on the generators
/// already accepted in the same degree.
struct Pruner {
    n: usize,
    by_degree: Vec<Option<(Vec<Word>, IncrementalEchelon<Rational>)>>,
}

impl Pruner {
    fn new(n: usize) -> Self {
        Pruner { n, by_degree: Vec::new() }
    }

    fn accept(&mut self, x: &SymElement) -> bool {
        let d = x.degree();
        if d == 0 {
            return false;
        }
        if self.by_degree.len() <= d {
            self.by_degree.resize_with(d + 1, || None);
        }
        let n = self.n;
        let (basis, ech) = self.by_degree[d].get_or_insert_with(|| {
            let b: Vec<Word> = ambient_basis(n, d, 1).into_iter().filter(|w| w.len() == d).collect();
            let cols = b.len();
            (b, IncrementalEchelon::new(cols))
        });
        let v: Vec<Rational> = basis.iter().map(|w| x.coeff(w)).collect();
        ech.insert(&v).is_none()
    }
}

/// Generators of `F(C)`: `∂_C^m Φ_k` for `0 ≤ m < k ≤ n`, declared degree
/// `k − m`; constants and same-degree linear dependents are dropped.
pub fn shift_arg_generators(diag: &[Rational]) -> Presentation<Symmetric, Rational> {
    let n = diag.len();
    let bd = BlockDiagonal::from_diagonal(diag);
    let mut pres = Presentation::new(n, format!("F({bd})"));
    pres.flags = Flags { regular: bd.is_regular(), nondegenerate: diag.iter().all(|x| !Ring::is_zero(x)) };
    let mut pruner = Pruner::new(n);
    for (k, phi) in char_invariants(n).into_iter().enumerate() {
        let k = k + 1;
        let mut f = phi;
        for m in 0..k {
            if pruner.accept(&f) {
                pres.push(f.clone(), k - m, format!("d^{m}Phi{k}"));
            }
            f = dir_derivative(&f, diag);
        }
    }
    pres
}

/// `H_i = Σ_{j≠i} e_ij e_ji / (z_i − z_j)`.
pub fn gaudin_quadratic(z: &[Rational]) -> Result<Vec<SymElement>> {
    let n = z.len();
    if !TorusFamily::constant(z).is_regular() {
        return Err(Error::NonRegular(format!(
            "repeated point among {:?}",
            z.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        )));
    }
    Ok((1..=n)
        .map(|i| {
            let mut h = SymElement::zero();
            for j in (1..=n).filter(|&j| j != i) {
                let c = (&z[i - 1] - &z[j - 1]).inv().expect("distinct");
                h.add_scaled(&e(i, j).mul(&e(j, i)), &c);
            }
            h
        })
        .collect())
}

/// `x_1⋯x_d ↦ (1/d!) Σ_σ x_σ(1)⋯x_σ(d)`.
pub fn symmetrize(f: &SymElement) -> EnvElement {
    let mut out = EnvElement::zero();
    for (w, c) in f.terms() {
        let d = w.len();
        let mut acc = EnvElement::zero();
        for (p, _) in signed_permutations(d) {
            let mut m = EnvElement::one();
            for &a in &p {
                m = m.mul(&EnvElement::gen(w[a].i(), w[a].j(), 1));
            }
            acc.add_assign(&m);
        }
        out.add_scaled(&acc, &(c / factorial(d as u64)));
    }
    out
}

/// `F̂(C)` by symmetrizing the generators of `F(C)`.
pub fn quantum_shift_generators_unchecked(diag: &[Rational]) -> Presentation<crate::pbw::Enveloping, Rational> {
    let classical = shift_arg_generators(diag);
    let mut pres = classical.map(diag.len(), symmetrize);
    pres.label = format!("F^({})", BlockDiagonal::from_diagonal(diag));
    pres
}

/// `π_n(B(C))` with each generator declared at its actual filtration degree.
pub fn evaluation_image(c: &TorusFamily, d_cap: usize) -> Result<Presentation<crate::pbw::Enveloping, Rational>> {
    let b = bethe_generators(c, d_cap)?;
    let mut out = Presentation::new(c.n(), format!("pi({})", b.label));
    out.flags = b.flags;
    for g in &b.generators {
        let x = g.element.evaluate();
        let d = x.degree();
        out.push(x, d, format!("pi({})", g.name));
    }
    Ok(out)
}

/// Compares components `d ≤ d_cap` of `F̂(C)` and `π(B(C^{-1}))`.
pub fn evaluation_cross_check(diag: &[Rational], d_cap: usize) -> Result<Vec<crate::limits::Comparison>> {
    let fhat = filtered_components(&quantum_shift_generators_unchecked(diag), d_cap)?;
    let inv = TorusFamily::constant(diag).inverse()?;
    let img = filtered_components(&evaluation_image(&inv, d_cap)?, d_cap)?;
    fhat.iter().zip(&img).map(|(a, b)| subspace_equal(a, b)).collect()
}

/// `F̂(C)`; when `C` is invertible and regular the lift is cross-checked
/// against the evaluation image of a Bethe subalgebra up to `d_cap`.
pub fn quantum_shift_generators(
    diag: &[Rational],
    d_cap: usize,
) -> Result<Presentation<crate::pbw::Enveloping, Rational>> {
    let c = TorusFamily::constant(diag);
    if c.is_regular() && c.is_nondegenerate() {
        for (d, cmp) in evaluation_cross_check(diag, d_cap)?.iter().enumerate() {
            if !cmp.equal {
                return Err(Error::Consistency(format!(
                    "lifted F(C) differs from the evaluation image in degree {}",
                    d + 1
                )));
            }
        }
    }
    Ok(quantum_shift_generators_unchecked(diag))
}

/// Generators `∂_{C(t)}^m Φ_k` of `F(C(t))` for `C(t) = Σ_m t^m C_m`, as
/// polynomials in `t`. Feeds the Grassmannian limit that Shuvalov's
/// description is compared against.
pub fn shift_family_generators(stages: &[Vec<Rational>]) -> Result<Presentation<Symmetric, LaurentPoly>> {
    let n = stages.first().map(Vec::len).ok_or_else(|| Error::NonRegular("no stages".into()))?;
    if stages.iter().any(|s| s.len() != n) {
        return Err(Error::ArityMismatch {
            slots: n,
            parts: stages.iter().map(Vec::len).find(|&l| l != n).unwrap_or(0),
        });
    }
    let mut pres = Presentation::new(n, "F(C(t))");
    for (k, phi) in char_invariants(n).into_iter().enumerate() {
        let k = k + 1;
        let mut f: BTreeMap<i64, SymElement> = BTreeMap::from([(0, phi)]);
        for m in 0..k {
            let mut x = Element::<Symmetric, LaurentPoly>::zero();
            for (e, g) in &f {
                x.add_assign(&g.map_coeffs(|c| LaurentPoly::monomial(c.clone(), *e)));
            }
            if x.degree() > 0 {
                pres.push(x, k - m, format!("d^{m}Phi{k}"));
            }
            let mut next: BTreeMap<i64, SymElement> = BTreeMap::new();
            for (e, g) in &f {
                for (j, c) in stages.iter().enumerate() {
                    let d = dir_derivative(g, c);
                    if !d.is_zero() {
                        next.entry(e + j as i64).or_insert_with(SymElement::zero).add_assign(&d);
                    }
                }
            }
            f = next;
        }
    }
    Ok(pres)
}

/// Generators of `lim_{t→0} F(C_0 + t C_1 + t² C_2 + ⋯)`: for every `k ≥ -1`
/// the invariants of `z_k = ∩_{i ≤ k} z(C_i)` and their derivatives along
/// `C_{k+1}`.
pub fn shuvalov_limit_generators(stages: &[Vec<Rational>]) -> Result<Presentation<Symmetric, Rational>> {
    let n = stages.first().map(Vec::len).ok_or_else(|| Error::NonRegular("no stages".into()))?;
    if stages.iter().any(|s| s.len() != n) {
        return Err(Error::ArityMismatch {
            slots: n,
            parts: stages.iter().map(Vec::len).find(|&l| l != n).unwrap_or(0),
        });
    }
    let mut pres = Presentation::new(n, "Shuvalov limit");
    let mut pruner = Pruner::new(n);
    let mut blocks: Vec<Vec<usize>> = vec![(1..=n).collect()];
    for k in 0..=stages.len() {
        let along = stages.get(k);
        for block in &blocks {
            for (deg, phi) in principal_invariants(block).into_iter().enumerate() {
                let deg = deg + 1;
                let mut f = phi;
                for m in 0..deg {
                    if pruner.accept(&f) {
                        pres.push(f.clone(), deg - m, format!("z{}:d^{m}Phi{deg}{block:?}", k as i64 - 1));
                    }
                    match along {
                        Some(c) => f = dir_derivative(&f, c),
                        None => break,
                    }
                }
            }
        }
        if let Some(c) = along {
            blocks = blocks
                .iter()
                .flat_map(|b| {
                    let mut parts: Vec<Vec<usize>> = Vec::new();
                    for &i in b {
                        match parts.iter_mut().find(|p| c[p[0] - 1] == c[i - 1]) {
                            Some(p) => p.push(i),
                            None => parts.push(vec![i]),
                        }
                    }
                    parts
                })
                .collect();
        }
    }
    if blocks.iter().any(|b| b.len() > 1) {
        return Err(Error::NonRegular("C_0 + t C_1 + ⋯ is not regular at generic t".into()));
    }
    Ok(pres)
}

/// Coefficients up to `x^dmax` of `Π_i (1 − x^i)^{-e_i}` for `(i, e_i)` pairs.
pub fn series_from_exponents(exponents: &[(usize, i64)], dmax: usize) -> Vec<i64> {
    let mut c = vec![0i64; dmax + 1];
    c[0] = 1;
    for &(i, e) in exponents {
        if i == 0 || i > dmax {
            continue;
        }
        if e >= 0 {
            for _ in 0..e {
                for d in i..=dmax {
                    c[d] += c[d - i];
                }
            }
        } else {
            for _ in 0..(-e) {
                for d in (i..=dmax).rev() {
                    c[d] -= c[d - i];
                }
            }
        }
    }
    c
}

/// `P_n(x) Π_i Z_{k_i}(x)/P_{k_i}(x)` for block multiplicities `k_i`,
/// coefficients of degrees `0..=dmax`.
pub fn poincare_predicted(multiplicities: &[usize], dmax: usize) -> Vec<i64> {
    let n: usize = multiplicities.iter().sum();
    let exps: Vec<(usize, i64)> = (1..=n)
        .map(|i| {
            let mut e = (n - i + 1) as i64;
            for &k in multiplicities.iter().filter(|&&k| i <= k) {
                e -= (k - i) as i64;
            }
            (i, e)
        })
        .collect();
    series_from_exponents(&exps, dmax)
}

/// Poincaré series of limits of `F(diag(C, 0^k))`, `C ∈ gl_n` regular.
pub fn poincare_l36(n: usize, k: usize, dmax: usize) -> Vec<i64> {
    let exps: Vec<(usize, i64)> =
        (1..=n + k).map(|i| (i, if i <= k { n as i64 + 1 } else { (n + k - i + 1) as i64 })).collect();
    series_from_exponents(&exps, dmax)
}

/// Degree-≤2 part of `F(C)` as predicted for regular `C`: `h ⊕ S²(h) ⊕ Q_C`.
pub fn quadratic_prediction(diag: &[Rational]) -> Result<FilteredSubspace<Symmetric, Rational>> {
    let n = diag.len();
    let mut elems: Vec<SymElement> = (1..=n).map(|i| e(i, i)).collect();
    for i in 1..=n {
        for j in i..=n {
            elems.push(e(i, i).mul(&e(j, j)));
        }
    }
    elems.extend(gaudin_quadratic(diag)?);
    FilteredSubspace::span(n, 2, &elems)
}

/// The associated graded of a filtered subspace of `U_d`, inside `S_d`.
pub fn graded_shadow<F: Field>(
    sub: &FilteredSubspace<crate::pbw::Enveloping, F>,
) -> Result<FilteredSubspace<Symmetric, F>> {
    let amb = sub.ambient();
    let tops: Vec<Element<Symmetric, F>> =
        (1..=amb.d).flat_map(|deg| sub.graded_piece(deg).into_iter().map(|x| x.gr())).collect();
    FilteredSubspace::span(amb.n, amb.d, &tops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::{filtered_component, graded_dimensions};
    use crate::scalar::q;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| qi(x)).collect()
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(poisson_bracket(&e(1, 2), &e(2, 1)), e(1, 1).sub(&e(2, 2)));
        let f = e(1, 2).mul(&e(2, 1)).add(&e(1, 1));
        assert!(poisson_bracket(&f, &f).is_zero());
        assert_eq!(
            poisson_bracket(&e(1, 1).mul(&e(2, 2)), &e(1, 2)),
            e(1, 2).mul(&e(2, 2)).sub(&e(1, 1).mul(&e(1, 2)))
        );
    }

    #[test]
    fn invariants_and_derivatives() {
        let phi = char_invariants(2);
        assert_eq!(phi[0], e(1, 1).add(&e(2, 2)));
        assert_eq!(phi[1], e(1, 1).mul(&e(2, 2)).sub(&e(1, 2).mul(&e(2, 1))));
        assert!(poisson_bracket(&phi[1], &e(1, 2)).is_zero());
        let c = ints(&[1, 2]);
        assert_eq!(dir_derivative(&phi[0], &c), SymElement::scalar(qi(3)));
        assert_eq!(dir_derivative(&phi[1], &c), e(2, 2).add(&e(1, 1).scale(&qi(2))));
        assert_eq!(dir_derivative(&dir_derivative(&phi[1], &c), &c), SymElement::scalar(qi(4)));
        for f in char_invariants(3) {
            for i in 1..=3 {
                for j in 1..=3 {
                    assert!(poisson_bracket(&f, &e(i, j)).is_zero());
                }
            }
        }
    }

    #[test]
    fn shift_generators() {
        let p = shift_arg_generators(&ints(&[1, 2]));
        let gens: Vec<_> = p.generators.iter().map(|g| g.element.clone()).collect();
        let phi = char_invariants(2);
        assert_eq!(gens, vec![phi[0].clone(), phi[1].clone(), e(1, 1).scale(&qi(2)).add(&e(2, 2))]);
        let central = shift_arg_generators(&ints(&[1, 1]));
        assert_eq!(central.generators.len(), 2);
        assert!(!central.flags.regular);
        assert_eq!(graded_dimensions(&shift_arg_generators(&ints(&[1, 2, 3])), 1).unwrap(), vec![3]);
        assert_eq!(filtered_component(&p, 2).unwrap().dim(), 6);
    }

    #[test]
    fn gaudin_examples() {
        let h = gaudin_quadratic(&ints(&[0, 1])).unwrap();
        assert_eq!(h[0], e(1, 2).mul(&e(2, 1)).neg());
        assert_eq!(h[1], e(1, 2).mul(&e(2, 1)));
        let h3 = gaudin_quadratic(&ints(&[0, 1, 2])).unwrap();
        assert!(h3.iter().fold(SymElement::zero(), |a, x| a.add(x)).is_zero());
        assert!(poisson_bracket(&h3[0], &h3[1]).is_zero());
        assert!(matches!(gaudin_quadratic(&ints(&[1, 1])), Err(Error::NonRegular(_))));
    }

    #[test]
    fn symmetrization() {
        let x = symmetrize(&e(1, 2).mul(&e(2, 1)));
        let big = |i, j| EnvElement::gen(i, j, 1);
        let half = q(1, 2);
        assert_eq!(x, big(1, 2).mul(&big(2, 1)).sub(&big(1, 1).sub(&big(2, 2)).scale(&half)));
        assert_eq!(symmetrize(&e(1, 1)), big(1, 1));
        let f = e(1, 2).mul(&e(2, 3)).mul(&e(3, 1)).add(&e(2, 1).mul(&e(1, 2)));
        assert_eq!(symmetrize(&f).gr(), f.homogeneous_part(3));
    }

    #[test]
    fn lifted_subalgebras() {
        let p = quantum_shift_generators(&ints(&[1, 2]), 3).unwrap();
        let c1 = filtered_component(&p, 1).unwrap();
        let big = |i, j| EnvElement::gen(i, j, 1);
        assert_eq!(c1, FilteredSubspace::span(2, 1, &[big(1, 1), big(2, 2)]).unwrap());
        assert!(p.commutativity_check().passed());
        for cmp in evaluation_cross_check(&[qi(1), q(1, 2)], 3).unwrap() {
            assert!(cmp.equal);
        }
        let center = quantum_shift_generators(&ints(&[1, 1]), 3).unwrap();
        assert_eq!(center.generators.len(), 2);
    }

    #[test]
    fn shuvalov_examples() {
        let lim = shuvalov_limit_generators(&[ints(&[1, 1]), ints(&[1, 2])]).unwrap();
        let direct = shift_arg_generators(&ints(&[1, 2]));
        assert_eq!(filtered_components(&lim, 3).unwrap(), filtered_components(&direct, 3).unwrap());
        let single = shuvalov_limit_generators(&[ints(&[1, 2, 3])]).unwrap();
        assert_eq!(
            filtered_components(&single, 2).unwrap(),
            filtered_components(&shift_arg_generators(&ints(&[1, 2, 3])), 2).unwrap()
        );
        assert!(matches!(shuvalov_limit_generators(&[ints(&[1, 1])]), Err(Error::NonRegular(_))));
    }

    #[test]
    fn shuvalov_matches_family_limit() {
        let stages = [ints(&[1, 1, 2]), ints(&[0, 1, 0])];
        let lim = crate::limits::limit_components(&shift_family_generators(&stages).unwrap(), 3).unwrap();
        let pred = filtered_components(&shuvalov_limit_generators(&stages).unwrap(), 3).unwrap();
        assert_eq!(lim, pred);
        assert_eq!(pred.iter().map(FilteredSubspace::dim).collect::<Vec<_>>(), vec![3, 11, 28]);
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(poincare_predicted(&[1], 4), vec![1, 1, 1, 1, 1]);
        assert_eq!(poincare_l36(1, 1, 3), vec![1, 2, 4, 6]);
        // C = E: the series of the center Z_2.
        assert_eq!(poincare_predicted(&[2], 4), series_from_exponents(&[(1, 1), (2, 1)], 4));
        assert_eq!(series_from_exponents(&[(1, 1), (1, -1)], 3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn block_parsing() {
        let b = BlockDiagonal::parse("1:2,2:1").unwrap();
        assert_eq!(b.diagonal(), ints(&[1, 1, 2]));
        assert_eq!(b.multiplicities(), vec![2, 1]);
        assert!(BlockDiagonal::parse("1:2,1:1").is_err());
        assert!(BlockDiagonal::parse("x").is_err());
    }
}
