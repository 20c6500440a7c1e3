//! PBW-ordered polynomials in the symbols `t_{ij}^{(r)}`.
//!
//! One representation serves three algebras:
//!
//! * [`Yangian`]: `Y(gl_n)`, generators `t_{ij}^{(r)}`, `r ≥ 1`, with the
//!   commutator
//!   `[t_ij^(r), t_kl^(s)] = Σ_{a=1}^{min(r,s)} (t_kj^(a-1) t_il^(r+s-a) - t_kj^(r+s-a) t_il^(a-1))`.
//! * [`Enveloping`]: `U(gl_n)`, the level-one symbols `E_ij = t_ij^(1)` with
//!   `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj`. These are the level-one Yangian
//!   relations, so the same engine is used.
//! * [`Symmetric`]: `S(gl_n)`, commuting symbols `e_ij`.
//!
//! A monomial is a word sorted by `(r, i, j)`; products are brought back to
//! normal form by adjacent transpositions. Products are exact, never
//! truncated.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use rustc_hash::{FxBuildHasher, FxHashMap};
use smallvec::SmallVec;

use crate::scalar::{Rational, Ring};

/// The symbol `t_{ij}^{(r)}` packed as `r << 16 | i << 8 | j`, so the derived
/// order is the canonical `(r, i, j)` lexicographic order.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen(u32);

impl Gen {
    /// `t_{ij}^{(r)}` with 1-based indices.
    pub fn new(i: usize, j: usize, r: usize) -> Gen {
        assert!((1..256).contains(&i) && (1..256).contains(&j), "index out of range");
        assert!((1..65536).contains(&r), "level out of range");
        Gen(((r as u32) << 16) | ((i as u32) << 8) | j as u32)
    }

    pub fn i(self) -> usize {
        ((self.0 >> 8) & 0xff) as usize
    }

    pub fn j(self) -> usize {
        (self.0 & 0xff) as usize
    }

    pub fn level(self) -> usize {
        (self.0 >> 16) as usize
    }

    pub fn with_indices(self, i: usize, j: usize) -> Gen {
        Gen::new(i, j, self.level())
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{},{},{}]", self.i(), self.j(), self.level())
    }
}

pub type Word = SmallVec<[Gen; 8]>;

pub fn word_degree(w: &[Gen]) -> usize {
    w.iter().map(|g| g.level()).sum()
}

/// Ambient basis order: higher filtration degree first, then lexicographic.
pub fn ambient_cmp(a: &[Gen], b: &[Gen]) -> Ordering {
    word_degree(b).cmp(&word_degree(a)).then_with(|| a.cmp(b))
}

type IntPoly = Vec<(Word, i64)>;

/// Which multiplication law applies to words.
pub trait Kind: Copy + Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static {
    const SYMBOL: &'static str;
    const SHOW_LEVEL: bool;
    fn mul_words(a: &Word, b: &Word) -> Arc<IntPoly>;
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Yangian;
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Enveloping;
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symmetric;

impl Kind for Yangian {
    const SYMBOL: &'static str = "t";
    const SHOW_LEVEL: bool = true;
    fn mul_words(a: &Word, b: &Word) -> Arc<IntPoly> {
        engine().mul_words(a, b)
    }
}

impl Kind for Enveloping {
    const SYMBOL: &'static str = "E";
    const SHOW_LEVEL: bool = false;
    fn mul_words(a: &Word, b: &Word) -> Arc<IntPoly> {
        debug_assert!(a.iter().chain(b.iter()).all(|g| g.level() == 1));
        engine().mul_words(a, b)
    }
}

impl Kind for Symmetric {
    const SYMBOL: &'static str = "e";
    const SHOW_LEVEL: bool = false;
    fn mul_words(a: &Word, b: &Word) -> Arc<IntPoly> {
        let mut w: Word = a.iter().chain(b.iter()).copied().collect();
        w.sort_unstable();
        Arc::new(vec![(w, 1)])
    }
}

/// Memoized normal ordering. Entries are write-once; lookups never hold a
/// shard lock across a recursive call.
struct Engine {
    commutators: DashMap<(Gen, Gen), Arc<IntPoly>, FxBuildHasher>,
    word_gen: DashMap<(Word, Gen), Arc<IntPoly>, FxBuildHasher>,
    word_word: DashMap<(Word, Word), Arc<IntPoly>, FxBuildHasher>,
}

fn engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(|| Engine {
        commutators: DashMap::with_hasher(FxBuildHasher),
        word_gen: DashMap::with_hasher(FxBuildHasher),
        word_word: DashMap::with_hasher(FxBuildHasher),
    })
}

fn accumulate(acc: &mut FxHashMap<Word, i64>, w: Word, c: i64) {
    let slot = acc.entry(w).or_insert(0);
    *slot = slot.checked_add(c).expect("structure constant overflow");
}

fn finish(acc: FxHashMap<Word, i64>) -> Arc<IntPoly> {
    let mut v: IntPoly = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Arc::new(v)
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

impl Engine {
    /// `[a, b]` in normal form via the closed formula.
    fn commutator(&self, a: Gen, b: Gen) -> Arc<IntPoly> {
        if let Some(hit) = self.commutators.get(&(a, b)) {
            return hit.clone();
        }
        let (r, s) = (a.level(), b.level());
        let (i, j, k, l) = (a.i(), a.j(), b.i(), b.j());
        let mut acc = FxHashMap::default();
        for m in 1..=r.min(s) {
            let hi = r + s - m;
            // t_kj^(m-1) t_il^(hi)
            self.add_product(&mut acc, (k, j, m - 1), (i, l, hi), 1);
            // - t_kj^(hi) t_il^(m-1)
            self.add_product(&mut acc, (k, j, hi), (i, l, m - 1), -1);
        }
        let out = finish(acc);
        self.commutators.insert((a, b), out.clone());
        out
    }

    /// Adds `sign · t_x^(p) t_y^(q)` where level 0 means the Kronecker delta.
    fn add_product(
        &self,
        acc: &mut FxHashMap<Word, i64>,
        x: (usize, usize, usize),
        y: (usize, usize, usize),
        sign: i64,
    ) {
        match (x.2, y.2) {
            (0, 0) => {
                let c = sign * delta(x.0, x.1) * delta(y.0, y.1);
                if c != 0 {
                    accumulate(acc, Word::new(), c);
                }
            }
            (0, q) => {
                if x.0 == x.1 {
                    accumulate(acc, smallvec::smallvec![Gen::new(y.0, y.1, q)], sign);
                }
            }
            (p, 0) => {
                if y.0 == y.1 {
                    accumulate(acc, smallvec::smallvec![Gen::new(x.0, x.1, p)], sign);
                }
            }
            (p, q) => {
                let w: Word = smallvec::smallvec![Gen::new(x.0, x.1, p)];
                for (v, c) in self.word_gen(&w, Gen::new(y.0, y.1, q)).iter() {
                    accumulate(acc, v.clone(), sign * c);
                }
            }
        }
    }

    /// Normal form of `w · g` for a sorted word `w`.
    fn word_gen(&self, w: &Word, g: Gen) -> Arc<IntPoly> {
        match w.last() {
            None => return Arc::new(vec![(smallvec::smallvec![g], 1)]),
            Some(&x) if x <= g => {
                let mut v = w.clone();
                v.push(g);
                return Arc::new(vec![(v, 1)]);
            }
            _ => {}
        }
        let key = (w.clone(), g);
        if let Some(hit) = self.word_gen.get(&key) {
            return hit.clone();
        }
        let x = *w.last().expect("nonempty");
        let head: Word = w[..w.len() - 1].iter().copied().collect();
        let mut acc = FxHashMap::default();
        // w g = (head g) x + head [x, g]
        for (v, c) in self.word_gen(&head, g).iter() {
            for (v2, c2) in self.word_gen(v, x).iter() {
                accumulate(&mut acc, v2.clone(), c * c2);
            }
        }
        for (u, c) in self.commutator(x, g).iter() {
            for (v, c2) in self.mul_words(&head, u).iter() {
                accumulate(&mut acc, v.clone(), c * c2);
            }
        }
        let out = finish(acc);
        self.word_gen.insert(key, out.clone());
        out
    }

    fn mul_words(&self, a: &Word, b: &Word) -> Arc<IntPoly> {
        if b.is_empty() {
            return Arc::new(vec![(a.clone(), 1)]);
        }
        if a.is_empty() {
            return Arc::new(vec![(b.clone(), 1)]);
        }
        if b.len() == 1 {
            return self.word_gen(a, b[0]);
        }
        if a.last() <= b.first() {
            let mut v = a.clone();
            v.extend(b.iter().copied());
            return Arc::new(vec![(v, 1)]);
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.word_word.get(&key) {
            return hit.clone();
        }
        let mut cur: FxHashMap<Word, i64> = FxHashMap::default();
        cur.insert(a.clone(), 1);
        for &g in b.iter() {
            let mut next = FxHashMap::default();
            for (v, c) in &cur {
                for (v2, c2) in self.word_gen(v, g).iter() {
                    accumulate(&mut next, v2.clone(), c * c2);
                }
            }
            next.retain(|_, c| *c != 0);
            cur = next;
        }
        let out = finish(cur);
        self.word_word.insert(key, out.clone());
        out
    }
}

/// `[a, b]` for two Yangian generators, in normal form.
pub fn commutator_closed(a: Gen, b: Gen) -> Element<Yangian, Rational> {
    Element::from_int_poly(&engine().commutator(a, b))
}

/// Finite linear combination of normal-ordered words.
#[derive(Clone)]
pub struct Element<K, R> {
    terms: FxHashMap<Word, R>,
    _kind: PhantomData<K>,
}

pub type YangianElement<R = Rational> = Element<Yangian, R>;
pub type EnvElement<R = Rational> = Element<Enveloping, R>;
pub type SymElement<R = Rational> = Element<Symmetric, R>;

impl<K: Kind, R: Ring> PartialEq for Element<K, R> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<K: Kind, R: Ring> Element<K, R> {
    pub fn zero() -> Self {
        Element { terms: FxHashMap::default(), _kind: PhantomData }
    }

    pub fn one() -> Self {
        Self::scalar(R::one())
    }

    pub fn scalar(c: R) -> Self {
        Self::from_terms([(Word::new(), c)])
    }

    /// The generator `t_{ij}^{(r)}` (for `U` and `S`, `r` must be 1).
    pub fn gen(i: usize, j: usize, r: usize) -> Self {
        Self::from_terms([(smallvec::smallvec![Gen::new(i, j, r)], R::one())])
    }

    /// Build from words that must already be sorted.
    pub fn from_terms(it: impl IntoIterator<Item = (Word, R)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in it {
            debug_assert!(w.windows(2).all(|p| p[0] <= p[1]), "unsorted word");
            out.add_term(w, c);
        }
        out
    }

    fn from_int_poly(p: &IntPoly) -> Self {
        Self::from_terms(p.iter().map(|(w, c)| (w.clone(), R::from_int(*c))))
    }

    fn add_term(&mut self, w: Word, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Gen]) -> R {
        self.terms.get(w).cloned().unwrap_or_else(R::zero)
    }

    /// Terms in ambient order (highest degree first).
    pub fn sorted_terms(&self) -> Vec<(&Word, &R)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ambient_cmp(a.0, b.0));
        v
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &R)> {
        self.terms.iter()
    }

    /// Filtration degree (`Σ r` over the factors); 0 for scalars and for zero.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| word_degree(w)).max().unwrap_or(0)
    }

    /// Largest level `r` of any symbol that occurs.
    pub fn max_level(&self) -> usize {
        self.terms.keys().flat_map(|w| w.iter().map(|g| g.level())).max().unwrap_or(0)
    }

    /// Largest index `i` or `j` that occurs.
    pub fn max_index(&self) -> usize {
        self.terms.keys().flat_map(|w| w.iter().map(|g| g.i().max(g.j()))).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> R {
        self.coeff(&[])
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &R) {
        if s.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.mul(s));
        }
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &R) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(s))
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Element<K, S> {
        Element::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Exact product in normal form.
    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: FxHashMap<Word, R> = FxHashMap::default();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let c = c1.mul(c2);
                for (w, k) in K::mul_words(w1, w2).iter() {
                    let term = if *k == 1 { c.clone() } else { c.mul(&R::from_int(*k)) };
                    let slot = acc.entry(w.clone()).or_insert_with(R::zero);
                    *slot = slot.add(&term);
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Element { terms: acc, _kind: PhantomData }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Apply the algebra homomorphism determined by its values on generators.
    pub fn map_hom<K2: Kind>(&self, image: impl Fn(Gen) -> Element<K2, R>) -> Element<K2, R> {
        let mut cache: FxHashMap<Gen, Element<K2, R>> = FxHashMap::default();
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            let mut prod = Element::<K2, R>::one();
            for g in w.iter() {
                let img = cache.entry(*g).or_insert_with(|| image(*g));
                prod = prod.mul(img);
            }
            out.add_scaled(&prod, c);
        }
        out
    }

    /// Rename symbols by an index map. When the relabelled words stay sorted
    /// this is a plain relabel; otherwise products are re-normal-ordered.
    pub fn relabel(&self, f: impl Fn(Gen) -> Gen) -> Self {
        let mut out = Self::zero();
        let mut unsorted = Vec::new();
        for (w, c) in &self.terms {
            let v: Word = w.iter().map(|g| f(*g)).collect();
            if v.windows(2).all(|p| p[0] <= p[1]) {
                out.add_term(v, c.clone());
            } else {
                unsorted.push((v, c.clone()));
            }
        }
        for (v, c) in unsorted {
            let mut prod = Self::one();
            for g in v {
                prod = prod.mul(&Self::from_terms([(smallvec::smallvec![g], R::one())]));
            }
            out.add_scaled(&prod, &c);
        }
        out
    }

    /// Reinterpret the words under another multiplication law.
    pub fn cast<K2: Kind>(&self) -> Element<K2, R> {
        Element { terms: self.terms.clone(), _kind: PhantomData }
    }

    /// Homogeneous component of the given degree.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        Element::from_terms(self.terms.iter().filter(|(w, _)| word_degree(w) == d).map(|(w, c)| (w.clone(), c.clone())))
    }
}

impl<K: Kind> Element<K, Rational> {
    /// Lift to any coefficient ring.
    pub fn to_ring<S: Ring>(&self) -> Element<K, S> {
        self.map_coeffs(|c| S::from_rational(c))
    }
}

impl<R: Ring> Element<Yangian, R> {
    /// Evaluation homomorphism `π_n`: `t^(1)_ij ↦ E_ij`, `t^(r)_ij ↦ 0` for `r ≥ 2`.
    /// On normal-ordered words this is a projection.
    pub fn evaluate(&self) -> Element<Enveloping, R> {
        Element::from_terms(
            self.terms.iter().filter(|(w, _)| w.iter().all(|g| g.level() == 1)).map(|(w, c)| (w.clone(), c.clone())),
        )
    }
}

impl<R: Ring> Element<Enveloping, R> {
    /// The copy of `U(gl_n)` inside `Y(gl_n)` spanned by the `t_ij^(1)`.
    pub fn to_yangian(&self) -> Element<Yangian, R> {
        self.cast()
    }

    /// Image in the associated graded: the top-degree part as a polynomial.
    pub fn gr(&self) -> Element<Symmetric, R> {
        self.homogeneous_part(self.degree()).cast()
    }
}

fn fmt_word<K: Kind>(w: &[Gen], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (n, g) in w.iter().enumerate() {
        if n > 0 {
            write!(f, "*")?;
        }
        if K::SHOW_LEVEL {
            write!(f, "{}[{},{},{}]", K::SYMBOL, g.i(), g.j(), g.level())?;
        } else {
            write!(f, "{}[{},{}]", K::SYMBOL, g.i(), g.j())?;
        }
    }
    Ok(())
}

/// Renders `±c * t[i,j,r]*t[k,l,s] ± …` in ambient order.
impl<K: Kind, R: Ring> fmt::Display for Element<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            let s = c.to_string();
            let simple = !s[1..].contains(['+', '-']);
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if simple => (true, rest.to_string()),
                _ if simple => (false, s),
                _ => (false, format!("({s})")),
            };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{body} * ")?;
                fmt_word::<K>(w, f)?;
            }
        }
        Ok(())
    }
}

impl<K: Kind, R: Ring> fmt::Debug for Element<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Label of a word, e.g. `t[1,2,1]*t[2,1,1]`; `1` for the empty word.
pub fn word_label<K: Kind>(w: &[Gen]) -> String {
    struct L<'a, K>(&'a [Gen], PhantomData<K>);
    impl<K: Kind> fmt::Display for L<'_, K> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.0.is_empty() {
                write!(f, "1")
            } else {
                fmt_word::<K>(self.0, f)
            }
        }
    }
    L::<K>(w, PhantomData).to_string()
}

/// Parse a generator `t[i,j,r]` (or `E[i,j]` / `e[i,j]`, read as level 1).
pub fn parse_gen(s: &str) -> Option<Gen> {
    let s = s.trim();
    let body = s.strip_prefix("t[").or_else(|| s.strip_prefix("E[")).or_else(|| s.strip_prefix("e["))?;
    let body = body.strip_suffix(']')?;
    let nums: Vec<usize> = body.split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>()?;
    match (s.starts_with('t'), nums.as_slice()) {
        (true, [i, j, r]) if *r >= 1 => Some(Gen::new(*i, *j, *r)),
        (false, [i, j]) => Some(Gen::new(*i, *j, 1)),
        _ => None,
    }
}

/// All sorted words over `gl_n` symbols of degree in `1..=d`. With
/// `max_level = 1` this is a basis of `U_d` (or `S_d`) minus constants.
pub fn ambient_basis(n: usize, d: usize, max_level: usize) -> Vec<Word> {
    let mut gens: Vec<Gen> = Vec::new();
    for r in 1..=max_level.min(d) {
        for i in 1..=n {
            for j in 1..=n {
                gens.push(Gen::new(i, j, r));
            }
        }
    }
    gens.sort();
    let mut out = Vec::new();
    let mut stack: Vec<(Word, usize, usize)> = vec![(Word::new(), 0, 0)];
    while let Some((w, start, deg)) = stack.pop() {
        if !w.is_empty() {
            out.push(w.clone());
        }
        for (idx, g) in gens.iter().enumerate().skip(start) {
            if deg + g.level() <= d {
                let mut v = w.clone();
                v.push(*g);
                stack.push((v, idx, deg + g.level()));
            }
        }
    }
    out.sort_by(|a, b| ambient_cmp(a, b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    type Y = YangianElement;

    fn t(i: usize, j: usize, r: usize) -> Y {
        Y::gen(i, j, r)
    }

    #[test]
    fn closed_commutator_examples() {
        assert_eq!(commutator_closed(Gen::new(1, 2, 1), Gen::new(2, 1, 1)), t(1, 1, 1).sub(&t(2, 2, 1)));
        let g = Gen::new(1, 2, 3);
        assert!(commutator_closed(g, g).is_zero());
        assert!(commutator_closed(Gen::new(1, 1, 1), Gen::new(2, 2, 2)).is_zero());
    }

    #[test]
    fn one_swap() {
        let lhs = t(2, 1, 1).mul(&t(1, 2, 1));
        let rhs = Y::from_terms([(smallvec::smallvec![Gen::new(1, 2, 1), Gen::new(2, 1, 1)], qi(1))])
            .sub(&t(1, 1, 1))
            .add(&t(2, 2, 1));
        assert_eq!(lhs, rhs);
        let x = t(1, 1, 1);
        assert_eq!(Y::one().mul(&x), x);
        assert_eq!(x.mul(&x).len(), 1);
        assert_eq!(x.mul(&x).degree(), 2);
    }

    /// `t^(0)_ij = δ_ij`, as an element.
    fn tt(i: usize, j: usize, r: usize) -> Y {
        if r == 0 {
            if i == j {
                Y::one()
            } else {
                Y::zero()
            }
        } else {
            t(i, j, r)
        }
    }

    #[test]
    fn defining_relations_hold() {
        for n in 1..=3usize {
            for r in 0..=5usize {
                for s in 0..=(5 - r) {
                    let idx = (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b)));
                    let pairs: Vec<_> = idx.clone().flat_map(|x| idx.clone().map(move |y| (x, y))).collect();
                    for ((i, j), (k, l)) in pairs {
                        let lhs =
                            tt(i, j, r + 1).commutator(&tt(k, l, s)).sub(&tt(i, j, r).commutator(&tt(k, l, s + 1)));
                        let rhs = tt(k, j, r).mul(&tt(i, l, s)).sub(&tt(k, j, s).mul(&tt(i, l, r)));
                        assert_eq!(lhs, rhs, "relation fails at i={i} j={j} k={k} l={l} r={r} s={s}");
                    }
                }
            }
        }
    }

    #[test]
    fn envelope_and_symmetric_products() {
        let e21 = EnvElement::<Rational>::gen(2, 1, 1);
        let e12 = EnvElement::<Rational>::gen(1, 2, 1);
        let p = e21.mul(&e12);
        let expect = e12.mul(&e21).sub(&EnvElement::gen(1, 1, 1)).add(&EnvElement::gen(2, 2, 1));
        assert_eq!(p, expect);
        assert_eq!(p.gr(), SymElement::gen(1, 2, 1).mul(&SymElement::gen(2, 1, 1)));
        let a = SymElement::<Rational>::gen(2, 1, 1);
        let b = SymElement::<Rational>::gen(1, 2, 1);
        assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn display_and_parse() {
        let x = t(1, 2, 1).mul(&t(2, 1, 1));
        assert_eq!(x.to_string(), "1 * t[1,2,1]*t[2,1,1]");
        assert_eq!(t(2, 1, 1).mul(&t(1, 2, 1)).to_string(), "1 * t[1,2,1]*t[2,1,1] - 1 * t[1,1,1] + 1 * t[2,2,1]");
        assert_eq!(parse_gen("t[2,3,4]"), Some(Gen::new(2, 3, 4)));
        assert_eq!(parse_gen("E[1,2]"), Some(Gen::new(1, 2, 1)));
        assert_eq!(parse_gen("t[1,2]"), None);
    }

    #[test]
    fn ambient_basis_counts() {
        // Y_2(gl_2) minus constants: 4 + 4 + 10.
        assert_eq!(ambient_basis(2, 2, 2).len(), 18);
        // U_2(gl_2) minus constants: 4 + 10.
        assert_eq!(ambient_basis(2, 2, 1).len(), 14);
    }
}
