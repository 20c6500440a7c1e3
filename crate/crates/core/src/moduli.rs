//! Stable rational curves with marked points `0, 1, …, n, ∞`, their strata,
//! operad substitution, degeneration schedules, and predicted limit
//! subalgebras.
//!
//! A curve is a rooted tree. The root is the component through `∞`; every
//! component lists its children with a coordinate on that component. Label
//! `0` is the marked point `0`; the child leading towards it sits at
//! coordinate `0`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::bethe::{bethe_generators, TorusFamily};
use crate::classical::quantum_shift_generators_unchecked;
use crate::error::{Error, Result};
use crate::homs::{embed_indices, embed_psi_onto};
use crate::laurent::{Laurent, LaurentPoly};
use crate::limits::{clear_denominators, filtered_components, grassmannian_limit, limit_components, FilteredSubspace};
use crate::pbw::{Enveloping, Yangian};
use crate::presentation::Presentation;
use crate::ratfunc::RatFunc;
use crate::scalar::{parse_rational, qi, Rational, Ring};

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Leaf(usize),
    Comp(Component),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub children: Vec<(Node, Rational)>,
}

/// A stable curve; `has_zero` is false for the curves of `M̄_{0,m+1}` that
/// index limit shift of argument subalgebras (points `1..m` and `∞`).
#[derive(Clone, Debug, PartialEq)]
pub struct StableCurve {
    pub n: usize,
    pub has_zero: bool,
    pub root: Component,
}

impl Node {
    fn has_zero(&self) -> bool {
        match self {
            Node::Leaf(a) => *a == 0,
            Node::Comp(c) => c.children.iter().any(|(x, _)| x.has_zero()),
        }
    }

    /// Marked points other than `0`, sorted.
    pub fn points(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_points(&mut out);
        out.sort_unstable();
        out
    }

    fn collect_points(&self, out: &mut Vec<usize>) {
        match self {
            Node::Leaf(0) => {}
            Node::Leaf(a) => out.push(*a),
            Node::Comp(c) => c.children.iter().for_each(|(x, _)| x.collect_points(out)),
        }
    }

    fn leaves(&self, out: &mut Vec<usize>) {
        match self {
            Node::Leaf(a) => out.push(*a),
            Node::Comp(c) => c.children.iter().for_each(|(x, _)| x.leaves(out)),
        }
    }

    fn depth(&self) -> usize {
        match self {
            Node::Leaf(_) => 0,
            Node::Comp(c) => 1 + c.depth(),
        }
    }

    fn relabel(&self, f: &dyn Fn(usize) -> usize) -> Node {
        match self {
            Node::Leaf(a) => Node::Leaf(f(*a)),
            Node::Comp(c) => Node::Comp(c.relabel(f)),
        }
    }
}

impl Component {
    fn depth(&self) -> usize {
        self.children.iter().map(|(x, _)| x.depth()).max().unwrap_or(0)
    }

    fn relabel(&self, f: &dyn Fn(usize) -> usize) -> Component {
        Component { children: self.children.iter().map(|(x, c)| (x.relabel(f), c.clone())).collect() }
    }

    fn components(&self) -> usize {
        self.children.iter().map(|(x, _)| if let Node::Comp(c) = x { c.components() } else { 0 }).sum::<usize>() + 1
    }

    /// Leaf sets of all non-root components below this one.
    fn clusters(&self, out: &mut BTreeSet<Vec<usize>>) {
        for (x, _) in &self.children {
            if let Node::Comp(c) = x {
                let mut l = Vec::new();
                x.leaves(&mut l);
                l.sort_unstable();
                out.insert(l);
                c.clusters(out);
            }
        }
    }

    fn validate(&self, is_root: bool) -> Result<()> {
        let special = self.children.len() + 1;
        if special < 3 {
            return Err(Error::InvalidCurve(format!(
                "a {} component has only {special} distinguished points",
                if is_root { "root" } else { "bubble" }
            )));
        }
        for (a, (x, c)) in self.children.iter().enumerate() {
            if self.children[..a].iter().any(|(_, d)| d == c) {
                return Err(Error::InvalidCurve(format!("coordinate {c} used twice on one component")));
            }
            if x.has_zero() && !Ring::is_zero(c) {
                return Err(Error::InvalidCurve(format!("the branch towards 0 sits at {c}, not 0")));
            }
            if let Node::Comp(sub) = x {
                sub.validate(false)?;
            }
        }
        Ok(())
    }

    /// Fills missing coordinates: `0` for the branch towards `0`, otherwise
    /// the smallest unused of `1, 2, 3, …`.
    fn assign(children: Vec<(Node, Option<Rational>)>) -> Component {
        let mut used: Vec<Rational> = children.iter().filter_map(|(_, c)| c.clone()).collect();
        let mut next = 1i64;
        let children = children
            .into_iter()
            .map(|(x, c)| {
                let c = match c {
                    Some(c) => c,
                    None if x.has_zero() => qi(0),
                    None => {
                        while used.contains(&qi(next)) {
                            next += 1;
                        }
                        used.push(qi(next));
                        qi(next)
                    }
                };
                (x, c)
            })
            .collect();
        Component { children }
    }
}

impl StableCurve {
    pub fn new(root: Component, has_zero: bool) -> Result<Self> {
        let mut l = Vec::new();
        Node::Comp(root.clone()).leaves(&mut l);
        l.sort_unstable();
        let n = l.iter().copied().max().unwrap_or(0);
        let expect: Vec<usize> = (if has_zero { 0 } else { 1 }..=n).collect();
        if l != expect {
            return Err(Error::InvalidCurve(format!("marked points {l:?} are not {expect:?}")));
        }
        root.validate(true)?;
        Ok(StableCurve { n, has_zero, root })
    }

    /// Parses e.g. `((0,2)@0, 1@1, inf)`. A curve without the label `0` is
    /// read as a curve of `M̄_{0,n+1}`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let (item, coord) = p.item()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(Error::Parse(format!("trailing input at byte {}", p.pos)));
        }
        let Item::List(children, infs) = item else {
            return Err(Error::Parse("a curve is a parenthesized list".into()));
        };
        if infs != 1 || coord.is_some() {
            return Err(Error::Parse("the outer list must contain `inf` once and carry no coordinate".into()));
        }
        let root = Component::assign(children);
        let has_zero = Node::Comp(root.clone()).has_zero();
        Self::new(root, has_zero)
    }

    /// The curve `P^1` with `0, z_1, …, z_n, ∞`.
    pub fn nondegenerate(z: &[Rational]) -> Result<Self> {
        let mut children = vec![(Node::Leaf(0), qi(0))];
        children.extend(z.iter().enumerate().map(|(a, c)| (Node::Leaf(a + 1), c.clone())));
        Self::new(Component { children }, true)
    }

    /// Number of nodes (internal edges).
    pub fn codimension(&self) -> usize {
        self.root.components() - 1
    }

    pub fn depth(&self) -> usize {
        self.root.depth()
    }

    /// Combinatorial type: leaf sets of the non-root components.
    pub fn clusters(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        self.root.clusters(&mut out);
        out
    }

    /// Slots in gluing order: `0` first when present, then `1..=n`.
    fn slots(&self) -> Vec<usize> {
        (if self.has_zero { 0 } else { 1 }..=self.n).collect()
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (a, (x, c)) in self.children.iter().enumerate() {
            if a > 0 {
                write!(f, ", ")?;
            }
            match x {
                Node::Leaf(l) => write!(f, "{l}@{c}")?,
                Node::Comp(sub) => write!(f, "{sub}@{c}")?,
            }
        }
        write!(f, ")")
    }
}

impl fmt::Display for StableCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.root.to_string();
        write!(f, "{}, inf)", &s[..s.len() - 1])
    }
}

enum Item {
    Leaf(usize),
    Inf,
    List(Vec<(Node, Option<Rational>)>, usize),
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn token(&mut self, stop: &[u8]) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && !stop.contains(&self.s[self.pos]) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("").trim()
    }

    fn item(&mut self) -> Result<(Item, Option<Rational>)> {
        let item = if self.peek() == Some(b'(') {
            self.pos += 1;
            let mut children = Vec::new();
            let mut infs = 0;
            loop {
                match self.item()? {
                    (Item::Inf, None) => infs += 1,
                    (Item::Inf, Some(_)) => return Err(Error::Parse("`inf` takes no coordinate".into())),
                    (Item::Leaf(a), c) => children.push((Node::Leaf(a), c)),
                    (Item::List(sub, 0), c) => children.push((Node::Comp(Component::assign(sub)), c)),
                    (Item::List(..), _) => return Err(Error::Parse("`inf` inside a bubble".into())),
                }
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(Error::Parse(format!("expected `,` or `)` at byte {}", self.pos))),
                }
            }
            Item::List(children, infs)
        } else {
            let tok = self.token(b",)@");
            match tok {
                "inf" => Item::Inf,
                _ => Item::Leaf(tok.parse().map_err(|_| Error::Parse(format!("bad marked point `{tok}`")))?),
            }
        };
        let coord = if self.peek() == Some(b'@') {
            self.pos += 1;
            let tok = self.token(b",)");
            Some(parse_rational(tok).ok_or_else(|| Error::Parse(format!("bad coordinate `{tok}`")))?)
        } else {
            None
        };
        Ok((item, coord))
    }
}

fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for p in set_partitions(rest) {
        for b in 0..p.len() {
            let mut q = p.clone();
            q[b].insert(0, first);
            out.push(q);
        }
        let mut q = p;
        q.insert(0, vec![first]);
        out.push(q);
    }
    out
}

/// All component trees on the leaf set `items` (at least two children).
fn component_types(items: &[usize]) -> Vec<Component> {
    let mut out = Vec::new();
    for part in set_partitions(items).into_iter().filter(|p| p.len() >= 2) {
        let mut choices: Vec<Vec<Node>> = Vec::new();
        for block in &part {
            if block.len() == 1 {
                choices.push(vec![Node::Leaf(block[0])]);
            } else {
                choices.push(component_types(block).into_iter().map(Node::Comp).collect());
            }
        }
        let mut acc: Vec<Vec<Node>> = vec![Vec::new()];
        for ch in choices {
            acc = acc
                .into_iter()
                .flat_map(|pre| ch.iter().map(move |x| [pre.clone(), vec![x.clone()]].concat()))
                .collect();
        }
        out.extend(acc.into_iter().map(|nodes| Component::assign(nodes.into_iter().map(|x| (x, None)).collect())));
    }
    out
}

/// Strata of `M̄_{0,n+2}` grouped by codimension.
pub fn enumerate_strata(n: usize) -> Vec<Vec<StableCurve>> {
    let labels: Vec<usize> = (0..=n).collect();
    let mut by_codim: Vec<Vec<StableCurve>> = Vec::new();
    for root in component_types(&labels) {
        let curve = StableCurve::new(root, true).expect("enumerated curves are stable");
        let c = curve.codimension();
        if by_codim.len() <= c {
            by_codim.resize_with(c + 1, Vec::new);
        }
        by_codim[c].push(curve);
    }
    by_codim
}

/// Independent count: laminar families of subsets `S ⊂ {0..n}` with
/// `2 ≤ |S| ≤ n`, grouped by size. Each such family is one stratum.
pub fn brute_force_strata(n: usize) -> Vec<BTreeSet<BTreeSet<Vec<usize>>>> {
    let m = n + 1;
    let candidates: Vec<Vec<usize>> = (1u32..(1 << m))
        .filter(|mask| (2..m as u32).contains(&mask.count_ones()))
        .map(|mask| (0..m).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    let compatible = |a: &Vec<usize>, b: &Vec<usize>| {
        let inter = a.iter().filter(|x| b.contains(x)).count();
        inter == 0 || inter == a.len() || inter == b.len()
    };
    let mut out: Vec<BTreeSet<BTreeSet<Vec<usize>>>> = Vec::new();
    fn rec(
        start: usize,
        chosen: &mut Vec<usize>,
        cands: &[Vec<usize>],
        ok: &dyn Fn(&Vec<usize>, &Vec<usize>) -> bool,
        out: &mut Vec<BTreeSet<BTreeSet<Vec<usize>>>>,
    ) {
        if out.len() <= chosen.len() {
            out.resize_with(chosen.len() + 1, BTreeSet::new);
        }
        out[chosen.len()].insert(chosen.iter().map(|&i| cands[i].clone()).collect());
        for i in start..cands.len() {
            if chosen.iter().all(|&j| ok(&cands[i], &cands[j])) {
                chosen.push(i);
                rec(i + 1, chosen, cands, ok, out);
                chosen.pop();
            }
        }
    }
    rec(0, &mut Vec::new(), &candidates, &compatible, &mut out);
    out
}

/// What to glue into one slot of a substitution.
#[derive(Clone, Debug, PartialEq)]
pub enum CurvePart {
    Point,
    Curve(StableCurve),
}

/// Operad substitution: the `∞` of each part is glued to the matching
/// marked point of `outer`. Points are renumbered in slot order.
pub fn substitute(outer: &StableCurve, parts: &[CurvePart]) -> Result<StableCurve> {
    let slots = outer.slots();
    if slots.len() != parts.len() {
        return Err(Error::ArityMismatch { slots: slots.len(), parts: parts.len() });
    }
    let mut images: Vec<Node> = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for (&slot, part) in slots.iter().zip(parts) {
        match part {
            CurvePart::Point => {
                images.push(Node::Leaf(if slot == 0 { 0 } else { offset + 1 }));
                if slot != 0 {
                    offset += 1;
                }
            }
            CurvePart::Curve(c) => {
                if c.has_zero != (slot == 0) {
                    return Err(Error::InvalidCurve(format!(
                        "part for slot {slot} must {}contain 0",
                        if slot == 0 { "" } else { "not " }
                    )));
                }
                let off = offset;
                images.push(Node::Comp(c.root.relabel(&|a| if a == 0 { 0 } else { a + off })));
                offset += c.n;
            }
        }
    }
    fn glue(c: &Component, slots: &[usize], images: &[Node]) -> Component {
        Component {
            children: c
                .children
                .iter()
                .map(|(x, coord)| {
                    let y = match x {
                        Node::Leaf(a) => images[slots.iter().position(|s| s == a).expect("slot")].clone(),
                        Node::Comp(sub) => Node::Comp(glue(sub, slots, images)),
                    };
                    (y, coord.clone())
                })
                .collect(),
        }
    }
    StableCurve::new(glue(&outer.root, &slots, &images), outer.has_zero)
}

fn coordinate_paths(node: &Node, prefix: &mut Vec<Rational>, out: &mut Vec<(usize, Vec<Rational>)>) {
    match node {
        Node::Leaf(a) => out.push((*a, prefix.clone())),
        Node::Comp(c) => {
            for (x, coord) in &c.children {
                prefix.push(coord.clone());
                coordinate_paths(x, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// For each point `1..=n`, the coordinates along its path from the root.
fn paths(x: &StableCurve) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    coordinate_paths(&Node::Comp(x.root.clone()), &mut Vec::new(), &mut out);
    out.sort_by_key(|p| p.0);
    out.into_iter().filter(|p| p.0 != 0).map(|p| p.1).collect()
}

/// `λ_a(t) = Σ_m c_m(a) t^{N_m}` with `N_0 = 0` and `N_{m+1} = N_m + 1`,
/// the smallest exponents exceeding every degree used at shallower levels.
pub fn curve_to_schedule(x: &StableCurve) -> TorusFamily<LaurentPoly> {
    TorusFamily::new(
        paths(x)
            .into_iter()
            .map(|p| Laurent::from_terms(p.into_iter().enumerate().map(|(m, c)| (m as i64, c))))
            .collect(),
    )
}

/// Two-parameter schedule `c_0 + c_1 s + c_2 s t` for curves of depth
/// `≤ 2`; the outer variable `s` is the Laurent variable and `t` lives in
/// the coefficient field, so the `s → 0` limit is taken first.
pub fn iterated_schedule(x: &StableCurve) -> Result<TorusFamily<Laurent<RatFunc>>> {
    if x.depth() > 2 {
        return Err(Error::InvalidCurve(format!("iterated schedules support depth ≤ 2, got {}", x.depth())));
    }
    Ok(TorusFamily::new(
        paths(x)
            .into_iter()
            .map(|p| {
                let c = |m: usize| p.get(m).cloned().unwrap_or_else(|| qi(0));
                let inner = LaurentPoly::from_terms([(0, c(1)), (1, c(2))]);
                Laurent::from_terms([(0, RatFunc::from_rational(&c(0))), (1, RatFunc::from_laurent(inner))])
            })
            .collect(),
    ))
}

fn local_positions(sub: &[usize], all: &[usize]) -> Vec<usize> {
    sub.iter().map(|a| all.iter().position(|b| b == a).expect("subset") + 1).collect()
}

/// `F̂(X)` for a curve without `0`, on the points `labels` of `U(gl_m)`.
fn predict_classical(c: &Component, labels: &[usize]) -> Presentation<Enveloping, Rational> {
    let m = labels.len();
    let mut diag = vec![qi(0); m];
    for (x, coord) in &c.children {
        for p in x.points() {
            diag[local_positions(&[p], labels)[0] - 1] = coord.clone();
        }
    }
    let mut pres = quantum_shift_generators_unchecked(&diag);
    for (x, _) in &c.children {
        if let Node::Comp(sub) = x {
            let pts = x.points();
            let map = local_positions(&pts, labels);
            let inner = predict_classical(sub, &pts);
            pres.extend(&inner.map(m, |e| e.relabel(|g| g.with_indices(map[g.i() - 1], map[g.j() - 1]))));
        }
    }
    pres
}

/// The recursive prediction for a component containing `0`, in `Y(gl_m)`
/// with `m = labels.len()`.
fn predict_quantum(c: &Component, labels: &[usize], d_cap: usize) -> Result<Presentation<Yangian, Rational>> {
    let m = labels.len();
    let mut pres = Presentation::new(m, "");
    let mut nz: Vec<(usize, Rational)> = Vec::new();
    for (x, coord) in &c.children {
        let pts = x.points();
        if x.has_zero() {
            if let Node::Comp(sub) = x {
                if !pts.is_empty() {
                    let targets = local_positions(&pts, labels);
                    let inner = predict_quantum(sub, &pts, d_cap)?;
                    pres.extend(&inner.map(m, |e| embed_psi_onto(e, &targets, m)));
                }
            }
            continue;
        }
        nz.extend(local_positions(&pts, labels).into_iter().map(|p| (p, coord.clone())));
        if let Node::Comp(sub) = x {
            let map = local_positions(&pts, labels);
            let inner = predict_classical(sub, &pts);
            pres.extend(&inner.map(m, |e| embed_indices(&e.to_yangian(), &map)));
        }
    }
    nz.sort_by_key(|p| p.0);
    let targets: Vec<usize> = nz.iter().map(|p| p.0).collect();
    let cmat = TorusFamily::constant(&nz.iter().map(|p| p.1.clone()).collect::<Vec<_>>());
    let b = bethe_generators(&cmat, d_cap)?;
    let mut out = b.map(m, |e| embed_indices(e, &targets));
    out.flags = pres.flags;
    out.extend(&pres);
    Ok(out)
}

/// Generators of the limit subalgebra attached to `x`: `B(C)` on the points
/// off the `0`-branch, `ψ` of the prediction for the `0`-branch, and `F̂` of
/// every other bubble through `t^{(1)}`.
pub fn predicted_subalgebra(x: &StableCurve, d_cap: usize) -> Result<Presentation<Yangian, Rational>> {
    if !x.has_zero {
        return Err(Error::InvalidCurve("Bethe limits are indexed by curves with the point 0".into()));
    }
    let labels: Vec<usize> = (1..=x.n).collect();
    let mut p = predict_quantum(&x.root, &labels, d_cap)?;
    p.label = format!("prediction{x}");
    Ok(p)
}

pub fn predicted_components(x: &StableCurve, d_cap: usize) -> Result<Vec<FilteredSubspace<Yangian, Rational>>> {
    filtered_components(&predicted_subalgebra(x, d_cap)?, d_cap)
}

/// Limit components along the single-parameter schedule of `x`.
pub fn nested_limit(x: &StableCurve, d_cap: usize) -> Result<Vec<FilteredSubspace<Yangian, Rational>>> {
    let sched = curve_to_schedule(x);
    if !sched.is_regular() {
        return Err(Error::NonRegular(format!("schedule of {x} has repeated eigenvalues")));
    }
    limit_components(&bethe_generators(&sched, d_cap)?, d_cap)
}

/// Limit of limits: `s → 0` over `ℚ(t)`, then `t → 0`.
pub fn iterated_limit(x: &StableCurve, d_cap: usize) -> Result<Vec<FilteredSubspace<Yangian, Rational>>> {
    let sched = iterated_schedule(x)?;
    let inner = limit_components(&bethe_generators(&sched, d_cap)?, d_cap)?;
    inner.par_iter().map(|sub| grassmannian_limit(&clear_denominators(sub))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::principal_invariants;
    use crate::classical::symmetrize;

    fn curve(s: &str) -> StableCurve {
        StableCurve::parse(s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let x = curve("((0,2)@0, 1@1, inf)");
        assert_eq!(x.n, 2);
        assert_eq!(x.codimension(), 1);
        assert_eq!(x.to_string(), "((0@0, 2@1)@0, 1@1, inf)");
        assert_eq!(curve(&x.to_string()), x);
        assert!(StableCurve::parse("(0, 1, 2)").is_err());
        assert!(StableCurve::parse("(0, 1@1, 2@1, inf)").is_err());
        assert!(StableCurve::parse("((0, 2)@3, 1, inf)").is_err());
        assert!(StableCurve::parse("((0), 1, 2, inf)").is_err());
        assert!(StableCurve::parse("(0, 2, inf)").is_err());
    }

    #[test]
    fn strata_counts() {
        let counts = |n| enumerate_strata(n).iter().map(Vec::len).collect::<Vec<_>>();
        assert_eq!(counts(2), vec![1, 3]);
        assert_eq!(counts(3), vec![1, 10, 15]);
        for n in 2..=4 {
            let ours: Vec<BTreeSet<BTreeSet<Vec<usize>>>> =
                enumerate_strata(n).iter().map(|l| l.iter().map(|x| x.clusters()).collect()).collect();
            assert_eq!(ours, brute_force_strata(n), "n={n}");
        }
    }

    #[test]
    fn contraction_closure() {
        let strata = enumerate_strata(3);
        let known: BTreeSet<_> = strata.iter().flatten().map(|x| x.clusters()).collect();
        for x in strata.iter().flatten() {
            for s in x.clusters() {
                let mut fewer = x.clusters();
                fewer.remove(&s);
                assert!(known.contains(&fewer));
            }
        }
    }

    #[test]
    fn substitution() {
        let outer = curve("(0, 1, 2, inf)");
        assert_eq!(substitute(&outer, &[CurvePart::Point, CurvePart::Point, CurvePart::Point]).unwrap(), outer);
        let pair = curve("(1, 2, inf)");
        let x = substitute(&outer, &[CurvePart::Point, CurvePart::Curve(pair.clone()), CurvePart::Point]).unwrap();
        assert_eq!(x.n, 3);
        let strata = enumerate_strata(3);
        assert!(strata[1].iter().any(|y| y.clusters() == x.clusters()));
        // Nested substitution agrees with a single call.
        let small = curve("(0, 1, inf)");
        let step = substitute(&small, &[CurvePart::Point, CurvePart::Curve(pair.clone())]).unwrap();
        let twice = substitute(&step, &[CurvePart::Point, CurvePart::Curve(pair.clone()), CurvePart::Point]).unwrap();
        let inner = substitute(&pair, &[CurvePart::Curve(pair.clone()), CurvePart::Point]).unwrap();
        let once = substitute(&small, &[CurvePart::Point, CurvePart::Curve(inner)]).unwrap();
        assert_eq!(twice.clusters(), once.clusters());
        assert!(matches!(substitute(&outer, &[CurvePart::Point]), Err(Error::ArityMismatch { slots: 3, parts: 1 })));
    }

    #[test]
    fn schedules() {
        let flat = curve("(0, 1@2, 2@5, inf)");
        assert_eq!(curve_to_schedule(&flat).as_constant().unwrap(), TorusFamily::from_ints(&[2, 5]));
        let r1 = curve("((0, 2@3)@0, 1@1, inf)");
        assert_eq!(curve_to_schedule(&r1), TorusFamily::parse("1,3*t").unwrap());
        let r2 = curve("(0, (1@1, 2@2)@1, inf)");
        assert_eq!(curve_to_schedule(&r2), TorusFamily::parse("1+t,1+2*t").unwrap());
        let deep = curve("(1@1, (0, (2@1,3@2)@1)@0, inf)");
        assert_eq!(curve_to_schedule(&deep), TorusFamily::parse("1,t+t^2,t+2*t^2").unwrap());
        for x in enumerate_strata(3).iter().flatten() {
            assert!(curve_to_schedule(x).is_regular(), "{x}");
        }
    }

    #[test]
    fn prediction_shapes() {
        let flat = curve("(0, 1@1, 2@2, inf)");
        let p = predicted_subalgebra(&flat, 2).unwrap();
        let b = bethe_generators(&TorusFamily::from_ints(&[1, 2]), 2).unwrap();
        assert_eq!(
            p.generators.iter().map(|g| &g.element).collect::<Vec<_>>(),
            b.generators.iter().map(|g| &g.element).collect::<Vec<_>>()
        );
        let r2 = curve("(0, (1@1, 2@2)@1, 3@2, inf)");
        let pr = predicted_subalgebra(&r2, 3).unwrap();
        assert!(pr.commutativity_check().passed());
        // Contains the center of U(gl_2) on the bubble.
        let comps = predicted_components(&r2, 2).unwrap();
        for z in principal_invariants(&[1, 2]) {
            let y = symmetrize(&z).to_yangian();
            assert!(comps[y.degree() - 1].contains(&y).unwrap());
        }
        let r1 = curve("((0, 2)@0, 1@1, inf)");
        assert!(predicted_subalgebra(&r1, 3).unwrap().commutativity_check().passed());
    }

    #[test]
    fn rank_two_limits_match_predictions() {
        for s in ["((0, 2)@0, 1@1, inf)", "(0, (1@1, 2@2)@1, inf)", "((0, 1@2)@0, 2@1, inf)"] {
            let x = curve(s);
            assert_eq!(nested_limit(&x, 2).unwrap(), predicted_components(&x, 2).unwrap(), "{s}");
        }
        let x = curve("((0, 2@1)@0, 1@1, inf)");
        assert_eq!(iterated_limit(&x, 2).unwrap(), nested_limit(&x, 2).unwrap());
    }
}
