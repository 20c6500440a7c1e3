//! Filtered components of generated subalgebras and their `t → 0` limits.
//!
//! A component is stored as the RREF of its coordinate matrix in the basis of
//! nonconstant PBW words of degree `≤ d`, ordered by descending degree and
//! then lexicographically. Constants always belong to a unital subalgebra and
//! are left out.

use std::marker::PhantomData;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laurent::{Laurent, LaurentPoly};
use crate::matrix::{rref_in_place, IncrementalEchelon};
use crate::pbw::{ambient_basis, word_degree, word_label, Element, Kind, Word};
use crate::presentation::Presentation;
use crate::ratfunc::RatFunc;
use crate::scalar::{q, Field, Rational, Ring};

/// Ordered monomial basis of `Y_d`, `U_d` or `S_d` (constants excluded).
#[derive(Debug)]
pub struct Ambient {
    pub symbol: &'static str,
    pub n: usize,
    pub d: usize,
    basis: Vec<Word>,
    index: FxHashMap<Word, usize>,
}

impl Ambient {
    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn column(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    fn same_as(&self, other: &Ambient) -> bool {
        self.symbol == other.symbol && self.n == other.n && self.d == other.d
    }
}

pub fn ambient<K: Kind>(n: usize, d: usize) -> Arc<Ambient> {
    type Cache = DashMap<(&'static str, usize, usize), Arc<Ambient>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(DashMap::new);
    cache
        .entry((K::SYMBOL, n, d))
        .or_insert_with(|| {
            let basis = ambient_basis(n, d, if K::SHOW_LEVEL { d } else { 1 });
            let index = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
            Arc::new(Ambient { symbol: K::SYMBOL, n, d, basis, index })
        })
        .clone()
}

/// Coordinates of `x` modulo constants.
pub fn coordinates<K: Kind, R: Ring>(x: &Element<K, R>, amb: &Ambient) -> Result<Vec<R>> {
    let mut v = vec![R::zero(); amb.len()];
    for (w, c) in x.terms() {
        if w.is_empty() {
            continue;
        }
        let col = amb.column(w).ok_or_else(|| {
            Error::AmbientMismatch(format!(
                "{} lies outside the degree-{} ambient of rank {}",
                word_label::<K>(w),
                amb.d,
                amb.n
            ))
        })?;
        v[col] = c.clone();
    }
    Ok(v)
}

fn element_from_row<K: Kind, R: Ring>(row: &[R], amb: &Ambient) -> Element<K, R> {
    Element::from_terms(
        row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (amb.basis[i].clone(), c.clone())),
    )
}

/// A subspace of a filtered component, in canonical RREF.
#[derive(Clone, Debug)]
pub struct FilteredSubspace<K, F> {
    ambient: Arc<Ambient>,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    _kind: PhantomData<K>,
}

impl<K: Kind, F: Field> FilteredSubspace<K, F> {
    pub fn zero(amb: Arc<Ambient>) -> Self {
        FilteredSubspace { ambient: amb, rows: Vec::new(), pivots: Vec::new(), _kind: PhantomData }
    }

    pub fn from_vectors(amb: Arc<Ambient>, mut vecs: Vec<Vec<F>>) -> Self {
        let pivots = rref_in_place(&mut vecs, amb.len());
        vecs.truncate(pivots.len());
        FilteredSubspace { ambient: amb, rows: vecs, pivots, _kind: PhantomData }
    }

    pub fn span(n: usize, d: usize, elems: &[Element<K, F>]) -> Result<Self> {
        let amb = ambient::<K>(n, d);
        let vecs = elems.iter().map(|x| coordinates(x, &amb)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_vectors(amb, vecs))
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_elements(&self) -> Vec<Element<K, F>> {
        self.rows.iter().map(|r| element_from_row(r, &self.ambient)).collect()
    }

    /// Remainder of `v` after reduction by the rows; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = r[p].clone();
            if f.is_zero() {
                continue;
            }
            for c in 0..r.len() {
                if !row[c].is_zero() {
                    r[c] = r[c].sub(&f.mul(&row[c]));
                }
            }
        }
        r
    }

    /// Residual of `x` modulo the subspace and constants.
    pub fn residual(&self, x: &Element<K, F>) -> Result<Element<K, F>> {
        let v = coordinates(x, &self.ambient)?;
        Ok(element_from_row(&self.reduce(&v), &self.ambient))
    }

    pub fn contains(&self, x: &Element<K, F>) -> Result<bool> {
        Ok(self.residual(x)?.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        check_same_ambient(&self.ambient, &other.ambient)?;
        Ok(self.rows.iter().all(|r| other.reduce(r).iter().all(|x| x.is_zero())))
    }

    /// Re-express in a larger ambient (same kind and rank, higher degree).
    pub fn lift(&self, d: usize) -> Result<Self> {
        let target = ambient::<K>(self.ambient.n, d);
        let elems = self.basis_elements();
        let vecs = elems.iter().map(|x| coordinates(x, &target)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_vectors(target, vecs))
    }

    /// Associated graded piece in degree `deg`: leading parts of the rows whose
    /// pivot sits in a degree-`deg` column.
    pub fn graded_piece(&self, deg: usize) -> Vec<Element<K, F>> {
        self.rows
            .iter()
            .zip(&self.pivots)
            .filter(|(_, &p)| word_degree(&self.ambient.basis[p]) == deg)
            .map(|(r, _)| element_from_row::<K, F>(r, &self.ambient).homogeneous_part(deg))
            .collect()
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> FilteredSubspace<K, G> {
        let vecs = self.rows.iter().map(|r| r.iter().map(&f).collect()).collect();
        FilteredSubspace::from_vectors(self.ambient.clone(), vecs)
    }

    /// Certificate form: ambient description and sparse rows with exact
    /// coefficients as strings.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                Value::Array(
                    r.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| json!([word_label::<K>(&self.ambient.basis[i]), c.to_string()]))
                        .collect(),
                )
            })
            .collect();
        json!({
            "algebra": self.ambient.symbol,
            "rank": self.ambient.n,
            "degree": self.ambient.d,
            "ambient_dim": self.ambient.len(),
            "dim": self.dim(),
            "rows": rows,
        })
    }
}

impl<K: Kind, F: Field> PartialEq for FilteredSubspace<K, F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient.same_as(&other.ambient) && self.rows == other.rows
    }
}

fn check_same_ambient(a: &Ambient, b: &Ambient) -> Result<()> {
    if a.same_as(b) {
        Ok(())
    } else {
        Err(Error::AmbientMismatch(format!(
            "{}(rank {}, degree {}) vs {}(rank {}, degree {})",
            a.symbol, a.n, a.d, b.symbol, b.n, b.d
        )))
    }
}

/// Outcome of a subspace comparison with both canonical forms attached.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub equal: bool,
    pub left: Value,
    pub right: Value,
}

pub fn subspace_equal<K: Kind, F: Field>(a: &FilteredSubspace<K, F>, b: &FilteredSubspace<K, F>) -> Result<Comparison> {
    check_same_ambient(&a.ambient, &b.ambient)?;
    Ok(Comparison { equal: a.rows == b.rows, left: a.to_json(), right: b.to_json() })
}

/// Products of generators over all multisets of total declared degree
/// `≤ dmax` (the empty product excluded), with their total degree.
pub fn spanning_products<K: Kind, R: Ring>(p: &Presentation<K, R>, dmax: usize) -> Vec<(Element<K, R>, usize)> {
    let gens: Vec<_> = p.generators.iter().filter(|g| g.degree <= dmax && !g.element.is_zero()).collect();
    let mut out = Vec::new();
    let mut layer: Vec<(Element<K, R>, usize, usize)> = vec![(Element::one(), 0, 0)];
    while !layer.is_empty() {
        let next: Vec<(Element<K, R>, usize, usize)> = layer
            .par_iter()
            .flat_map_iter(|(x, deg, start)| {
                gens.iter()
                    .enumerate()
                    .skip(*start)
                    .filter(move |(_, g)| deg + g.degree <= dmax)
                    .map(move |(idx, g)| (x.mul(&g.element), deg + g.degree, idx))
                    .collect::<Vec<_>>()
            })
            .collect();
        out.extend(next.iter().map(|(x, d, _)| (x.clone(), *d)));
        layer = next;
    }
    out
}

/// Components `B_d` for `d = 1..=dmax` (index `d-1`).
pub fn filtered_components<K: Kind, F: Field>(
    p: &Presentation<K, F>,
    dmax: usize,
) -> Result<Vec<FilteredSubspace<K, F>>> {
    let products = spanning_products(p, dmax);
    (1..=dmax)
        .into_par_iter()
        .map(|d| {
            let amb = ambient::<K>(p.rank, d);
            let vecs = products
                .iter()
                .filter(|(_, deg)| *deg <= d)
                .map(|(x, _)| coordinates(x, &amb))
                .collect::<Result<Vec<_>>>()?;
            Ok(FilteredSubspace::from_vectors(amb, vecs))
        })
        .collect()
}

pub fn filtered_component<K: Kind, F: Field>(p: &Presentation<K, F>, d: usize) -> Result<FilteredSubspace<K, F>> {
    if d == 0 {
        return Ok(FilteredSubspace::zero(ambient::<K>(p.rank, 0)));
    }
    Ok(filtered_components(p, d)?.pop().expect("d ≥ 1"))
}

/// `dim gr_d` for `d = 1..=dmax`.
pub fn graded_dimensions<K: Kind, F: Field>(p: &Presentation<K, F>, dmax: usize) -> Result<Vec<usize>> {
    let comps = filtered_components(p, dmax)?;
    let mut prev = 0;
    Ok(comps
        .iter()
        .map(|c| {
            let g = c.dim() - prev;
            prev = c.dim();
            g
        })
        .collect())
}

/// Specialization of family entries to rationals for rank guesses.
pub trait GenericValue {
    fn generic_value(&self, point: usize) -> Option<Rational>;
}

impl GenericValue for Rational {
    fn generic_value(&self, _point: usize) -> Option<Rational> {
        Some(self.clone())
    }
}

impl GenericValue for RatFunc {
    fn generic_value(&self, _point: usize) -> Option<Rational> {
        self.specialize()
    }
}

const POINTS: [(i64, i64); 2] = [(29, 11), (41, 13)];

impl<F: Field + GenericValue> GenericValue for Laurent<F> {
    fn generic_value(&self, point: usize) -> Option<Rational> {
        let (a, b) = POINTS[point];
        self.eval(&F::from_rational(&q(a, b)))?.generic_value(point)
    }
}

/// Independent spanning rows of a family of subspaces over `F(t)`.
#[derive(Clone, Debug)]
pub struct Family<K: Kind, F: Field> {
    ambient: Arc<Ambient>,
    rows: Vec<Vec<Laurent<F>>>,
    _kind: PhantomData<K>,
}

impl<K: Kind, F: Field + GenericValue> Family<K, F> {
    /// Keeps a maximal subset of rows that is independent at a generic
    /// specialization of `t` (two test points, larger rank wins). Rows
    /// independent at a point are independent over `F(t)`.
    pub fn from_spanning(amb: Arc<Ambient>, rows: Vec<Vec<Laurent<F>>>) -> Result<Self> {
        let mut best: Vec<usize> = Vec::new();
        for point in 0..POINTS.len() {
            let mut ech = IncrementalEchelon::<Rational>::new(amb.len());
            let mut chosen = Vec::new();
            for (i, r) in rows.iter().enumerate() {
                let v = r
                    .iter()
                    .map(|x| x.generic_value(point))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::NonRegular("family has a pole at the test point".into()))?;
                if ech.insert(&v).is_none() {
                    chosen.push(i);
                }
            }
            if chosen.len() > best.len() {
                best = chosen;
            }
        }
        let rows = best.into_iter().map(|i| rows[i].clone()).collect();
        Ok(Family { ambient: amb, rows, _kind: PhantomData })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }
}

fn row_val<F: Field>(row: &[Laurent<F>]) -> Option<i64> {
    row.iter().filter_map(|x| x.val().ok()).min()
}

fn normalize<F: Field>(row: &mut [Laurent<F>]) -> Result<()> {
    let v = row_val(row).ok_or_else(|| Error::Consistency("family rows are dependent over F(t)".into()))?;
    if v != 0 {
        for x in row.iter_mut() {
            *x = x.shift(-v);
        }
    }
    Ok(())
}

/// The `t → 0` limit point of a family in the Grassmannian.
///
/// Rows are normalized to valuation 0 and evaluated at `t = 0`. When the
/// value of row `i` depends on the values of rows `< i`, that dependency is
/// pulled back to a combination of the rows with higher valuation, which
/// replaces row `i`. Every replacement lowers the valuation of the Plücker
/// vector by at least one, which bounds the number of steps.
pub fn grassmannian_limit<K: Kind, F: Field>(fam: &Family<K, F>) -> Result<FilteredSubspace<K, F>> {
    let cols = fam.ambient.len();
    let mut rows = fam.rows.clone();
    for r in rows.iter_mut() {
        normalize(r)?;
    }
    let plucker_degree: i64 = rows.iter().map(|r| r.iter().filter_map(|x| x.max_exp()).max().unwrap_or(0)).sum();
    let guard = (plucker_degree.max(0) as usize + 1) * rows.len().max(1);
    let mut steps = 0;
    let mut ech = IncrementalEchelon::<F>::new(cols);
    let mut values = Vec::with_capacity(rows.len());
    for i in 0..rows.len() {
        loop {
            let w = rows[i].iter().map(|x| x.eval0()).collect::<Result<Vec<F>>>()?;
            match ech.insert(&w) {
                None => {
                    values.push(w);
                    break;
                }
                Some(c) => {
                    steps += 1;
                    if steps > guard {
                        return Err(Error::LimitDidNotStabilize(steps));
                    }
                    let mut r = rows[i].clone();
                    for (j, cj) in c.iter().enumerate() {
                        if cj.is_zero() {
                            continue;
                        }
                        for col in 0..cols {
                            if !rows[j][col].is_zero() {
                                r[col] = r[col].sub(&rows[j][col].scale_field(cj));
                            }
                        }
                    }
                    normalize(&mut r)?;
                    rows[i] = r;
                }
            }
        }
    }
    Ok(FilteredSubspace::from_vectors(fam.ambient.clone(), values))
}

/// Families of components `d = 1..=dmax` of a presentation over `F[t, t^{-1}]`.
pub fn family_components<K: Kind, F: Field + GenericValue>(
    p: &Presentation<K, Laurent<F>>,
    dmax: usize,
) -> Result<Vec<Family<K, F>>> {
    let products = spanning_products(p, dmax);
    (1..=dmax)
        .into_par_iter()
        .map(|d| {
            let amb = ambient::<K>(p.rank, d);
            let vecs = products
                .iter()
                .filter(|(_, deg)| *deg <= d)
                .map(|(x, _)| coordinates(x, &amb))
                .collect::<Result<Vec<_>>>()?;
            Family::from_spanning(amb, vecs)
        })
        .collect()
}

/// Limits of all components `d = 1..=dmax`.
pub fn limit_components<K: Kind, F: Field + GenericValue>(
    p: &Presentation<K, Laurent<F>>,
    dmax: usize,
) -> Result<Vec<FilteredSubspace<K, F>>> {
    family_components(p, dmax)?.par_iter().map(grassmannian_limit).collect()
}

/// Multiply each row of a subspace over `ℚ(s)` by the lcm of its
/// denominators, giving a family over `ℚ[s, s^{-1}]` with the same span.
pub fn clear_denominators<K: Kind>(sub: &FilteredSubspace<K, RatFunc>) -> Family<K, Rational> {
    let rows = sub
        .rows()
        .iter()
        .map(|r| {
            let mut l = LaurentPoly::one();
            for x in r.iter().filter(|x| !x.is_zero()) {
                let g = l.gcd(x.den());
                l = l.mul(x.den()).div_rem_laurent(&g).0;
            }
            r.iter().map(|x| x.num().mul(&l).div_rem_laurent(x.den()).0).collect()
        })
        .collect();
    Family { ambient: sub.ambient.clone(), rows, _kind: PhantomData }
}

/// `dim {x ∈ span of nonconstant words of degree ≤ d : [x, g] = 0 for all g}`.
pub fn centralizer_dimension<K: Kind, F: Field>(gens: &[Element<K, F>], n: usize, d: usize) -> usize {
    let amb = ambient::<K>(n, d);
    let gens: Vec<&Element<K, F>> = gens.iter().filter(|g| g.degree() > 0).collect();
    let brackets: Vec<Vec<(usize, Word, F)>> = amb
        .basis()
        .par_iter()
        .map(|w| {
            let x = Element::<K, F>::from_terms([(w.clone(), F::one())]);
            let mut out = Vec::new();
            for (gi, g) in gens.iter().enumerate() {
                for (v, c) in x.commutator(g).terms() {
                    out.push((gi, v.clone(), c.clone()));
                }
            }
            out
        })
        .collect();
    let mut index: FxHashMap<(usize, Word), usize> = FxHashMap::default();
    for row in &brackets {
        for (gi, v, _) in row {
            let next = index.len();
            index.entry((*gi, v.clone())).or_insert(next);
        }
    }
    let cols = index.len();
    let mut m: Vec<Vec<F>> = brackets
        .into_iter()
        .map(|row| {
            let mut v = vec![F::zero(); cols];
            for (gi, w, c) in row {
                v[index[&(gi, w)]] = c;
            }
            v
        })
        .collect();
    let rank = rref_in_place(&mut m, cols).len();
    amb.len() - rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bethe::{bethe_generators, TorusFamily};
    use crate::pbw::{Yangian, YangianElement};
    use crate::scalar::qi;

    type Y = YangianElement;

    fn t(i: usize, j: usize, r: usize) -> Y {
        Y::gen(i, j, r)
    }

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    /// Two-dimensional toy ambient: `t[1,1,1]`, `t[2,2,1]` inside `Y_1(gl_2)`.
    fn toy_family(rows: &[[&str; 2]]) -> Family<Yangian, Rational> {
        let amb = ambient::<Yangian>(2, 1);
        let c11 = amb.column(&smallvec::smallvec![crate::pbw::Gen::new(1, 1, 1)]).unwrap();
        let c22 = amb.column(&smallvec::smallvec![crate::pbw::Gen::new(2, 2, 1)]).unwrap();
        let vecs = rows
            .iter()
            .map(|r| {
                let mut v = vec![LaurentPoly::zero(); amb.len()];
                v[c11] = lp(r[0]);
                v[c22] = lp(r[1]);
                v
            })
            .collect();
        Family::from_spanning(amb, vecs).unwrap()
    }

    fn toy_span(rows: &[[i64; 2]]) -> FilteredSubspace<Yangian, Rational> {
        let elems: Vec<Y> =
            rows.iter().map(|r| t(1, 1, 1).scale(&qi(r[0])).add(&t(2, 2, 1).scale(&qi(r[1])))).collect();
        FilteredSubspace::span(2, 1, &elems).unwrap()
    }

    #[test]
    fn limit_examples() {
        assert_eq!(grassmannian_limit(&toy_family(&[["1", "t"]])).unwrap(), toy_span(&[[1, 0]]));
        assert_eq!(grassmannian_limit(&toy_family(&[["t", "2*t"]])).unwrap(), toy_span(&[[1, 2]]));
        let full = grassmannian_limit(&toy_family(&[["1", "t"], ["1", "-t"]])).unwrap();
        assert_eq!(full, toy_span(&[[1, 0], [0, 1]]));
        // Constant families are unchanged.
        assert_eq!(grassmannian_limit(&toy_family(&[["3", "5"]])).unwrap(), toy_span(&[[3, 5]]));
        // Dependent spanning rows are dropped before the limit.
        assert_eq!(toy_family(&[["1", "t"], ["2", "2*t"]]).dim(), 1);
    }

    #[test]
    fn comparison_examples() {
        let x = toy_span(&[[1, 0]]);
        assert!(subspace_equal(&x, &x).unwrap().equal);
        assert!(!subspace_equal(&x, &toy_span(&[[0, 1]])).unwrap().equal);
        assert!(subspace_equal(&toy_span(&[[1, 1]]), &toy_span(&[[2, 2]])).unwrap().equal);
        let other = FilteredSubspace::<Yangian, Rational>::span(3, 1, &[t(1, 1, 1)]).unwrap();
        assert!(matches!(subspace_equal(&x, &other), Err(Error::AmbientMismatch(_))));
    }

    #[test]
    fn bethe_components() {
        let b = bethe_generators(&TorusFamily::from_ints(&[1, 2]), 3).unwrap();
        let c1 = filtered_component(&b, 1).unwrap();
        assert_eq!(c1, FilteredSubspace::span(2, 1, &[t(1, 1, 1), t(2, 2, 1)]).unwrap());
        assert_eq!(filtered_component(&b, 0).unwrap().dim(), 0);
        assert_eq!(graded_dimensions(&b, 3).unwrap(), vec![2, 5, 10]);
        let comps = filtered_components(&b, 3).unwrap();
        for d in 1..3 {
            assert!(comps[d - 1].lift(d + 1).unwrap().is_subspace_of(&comps[d]).unwrap());
        }
        let empty = Presentation::<Yangian, Rational>::new(2, "empty");
        assert_eq!(graded_dimensions(&empty, 3).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn centralizer_examples() {
        let b = bethe_generators(&TorusFamily::from_ints(&[1, 2]), 3).unwrap();
        let gens: Vec<Y> = b.generators.iter().map(|g| g.element.clone()).collect();
        assert_eq!(centralizer_dimension(&gens, 2, 1), 2);
        assert_eq!(centralizer_dimension(&[Y::one()], 2, 1), 4);
        let gl2: Vec<Y> = [(1, 1), (1, 2), (2, 1), (2, 2)].iter().map(|&(i, j)| t(i, j, 1)).collect();
        assert_eq!(centralizer_dimension(&gl2, 2, 1), 1);
    }

    #[test]
    fn clearing_denominators_keeps_span() {
        let amb = ambient::<Yangian>(1, 1);
        let s = RatFunc::new(lp("1"), lp("1+t")).unwrap();
        let sub = FilteredSubspace::<Yangian, RatFunc>::from_vectors(amb, vec![vec![s]]);
        let fam = clear_denominators(&sub);
        assert_eq!(fam.rows[0][0], lp("1"));
    }
}
