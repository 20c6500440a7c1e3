//! Named verification experiments and the JSON report they produce.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bethe::{bethe_generators, gt_generators, qdet, tau_minor, tau_trace, TorusFamily};
use crate::centralizer::check_incl;
use crate::classical::{
    evaluation_cross_check, gaudin_quadratic, poincare_l36, poincare_predicted, poisson_bracket, quadratic_prediction,
    quantum_shift_generators, quantum_shift_generators_unchecked, shift_arg_generators, shift_family_generators,
    shuvalov_limit_generators, BlockDiagonal,
};
use crate::error::{Error, Result};
use crate::homs::{embed_indices, embed_psi, omega};
use crate::laurent::LaurentPoly;
use crate::limits::{
    centralizer_dimension, filtered_components, graded_dimensions, limit_components, subspace_equal, FilteredSubspace,
};
use crate::moduli::{
    brute_force_strata, curve_to_schedule, enumerate_strata, iterated_limit, nested_limit, predicted_components,
    predicted_subalgebra, StableCurve,
};
use crate::pbw::{Gen, Kind, Word, Yangian, YangianElement};
use crate::presentation::Presentation;
use crate::scalar::{parse_rational, qi, Field, Rational};

pub const SCHEMA_VERSION: u32 = 1;

/// Experiments accepted by `verify`. The last three are kernel-level checks.
pub const EXPERIMENTS: &[&str] = &[
    "commute",
    "omega-dual",
    "eval-image",
    "result2-1",
    "result2-2",
    "result1-curve",
    "shuvalov",
    "poincare",
    "incl",
    "gt-caterpillar",
    "gaudin",
    "strata",
    "relations",
    "tau-oracle",
    "maximality",
];

/// Command-line inputs; `None` means the experiment default.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ExperimentConfig {
    pub n: Option<usize>,
    pub degree: Option<usize>,
    pub ucap: Option<usize>,
    pub matrix: Option<String>,
    pub family: Option<String>,
    pub curve: Option<String>,
    pub blocks: Option<String>,
    pub k: Option<usize>,
}

impl ExperimentConfig {
    fn degree_or(&self, d: usize) -> Result<usize> {
        let d = self.degree.unwrap_or(d);
        if d == 0 {
            return Err(Error::Config("--degree must be at least 1".into()));
        }
        if let Some(p) = self.ucap {
            if p < d {
                return Err(Error::CapExceeded { needed: d, cap: p });
            }
        }
        Ok(d)
    }

    fn matrix_or(&self, default: &str) -> Result<Vec<Rational>> {
        let m = parse_diagonal(self.matrix.as_deref().unwrap_or(default))?;
        if let Some(n) = self.n {
            if n != m.len() {
                return Err(Error::Config(format!("--n {n} but the matrix has {} entries", m.len())));
            }
        }
        Ok(m)
    }

    fn family_or(&self, default: &str) -> Result<TorusFamily<LaurentPoly>> {
        let f = TorusFamily::parse(self.family.as_deref().unwrap_or(default))?;
        if let Some(n) = self.n {
            if n != f.n() {
                return Err(Error::Config(format!("--n {n} but the family has {} entries", f.n())));
            }
        }
        Ok(f)
    }

    fn curve_or(&self, default: &str) -> Result<StableCurve> {
        StableCurve::parse(self.curve.as_deref().unwrap_or(default))
    }
}

/// Comma-separated diagonal entries, e.g. `1,2,1/3`.
pub fn parse_diagonal(s: &str) -> Result<Vec<Rational>> {
    let v: Vec<Rational> = s
        .split(',')
        .map(|x| parse_rational(x).ok_or_else(|| Error::Parse(format!("bad matrix entry `{x}`"))))
        .collect::<Result<_>>()?;
    if v.is_empty() {
        return Err(Error::Parse("empty matrix".into()));
    }
    Ok(v)
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub certificate: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, certificate: Value) -> Self {
        Check { name: name.into(), passed, certificate }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub experiment: String,
    pub inputs: Value,
    pub checks: Vec<Check>,
    pub data: Value,
    pub wall_time_secs: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        self.checks
            .iter()
            .map(|c| format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, self.experiment, c.name))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn report(experiment: &str, inputs: Value, start: Instant, checks: Vec<Check>, data: Value) -> Report {
    Report {
        schema_version: SCHEMA_VERSION,
        experiment: experiment.into(),
        inputs,
        checks,
        data,
        wall_time_secs: start.elapsed().as_secs_f64(),
    }
}

/// Coefficients of `x^1, …` of a series that starts at `x^0`.
fn positive_degrees(series: Vec<i64>) -> Vec<usize> {
    series.into_iter().skip(1).map(|x| x as usize).collect()
}

fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn dims<K: Kind, F: Field>(c: &[FilteredSubspace<K, F>]) -> Vec<usize> {
    c.iter().map(FilteredSubspace::dim).collect()
}

fn generator_json<K: Kind>(p: &Presentation<K, Rational>) -> Value {
    p.generators.iter().map(|g| json!({"name": g.name, "degree": g.degree, "element": g.element.to_string()})).collect()
}

/// Componentwise equality with both RREFs as the certificate.
fn compare_components<K: Kind, F: Field>(
    name: &str,
    left: &[FilteredSubspace<K, F>],
    right: &[FilteredSubspace<K, F>],
) -> Result<Check> {
    let mut per_degree = Vec::new();
    let mut ok = left.len() == right.len();
    for (d, (a, b)) in left.iter().zip(right).enumerate() {
        let cmp = subspace_equal(a, b)?;
        ok &= cmp.equal;
        per_degree.push(json!({
            "degree": d + 1,
            "equal": cmp.equal,
            "left": if cmp.equal { json!({"dim": a.dim()}) } else { a.to_json() },
            "right": if cmp.equal { json!({"dim": b.dim()}) } else { b.to_json() },
        }));
    }
    Ok(Check::new(name, ok, Value::Array(per_degree)))
}

fn containment<K: Kind, F: Field>(
    name: &str,
    small: &[FilteredSubspace<K, F>],
    big: &[FilteredSubspace<K, F>],
) -> Result<Check> {
    let mut per_degree = Vec::new();
    let mut ok = small.len() == big.len();
    for (d, (a, b)) in small.iter().zip(big).enumerate() {
        let sub = a.is_subspace_of(b)?;
        ok &= sub;
        per_degree.push(json!({"degree": d + 1, "contained": sub, "dims": [a.dim(), b.dim()]}));
    }
    Ok(Check::new(name, ok, Value::Array(per_degree)))
}

pub fn run(name: &str, cfg: &ExperimentConfig) -> Result<Report> {
    match name {
        "commute" => verify_commute(cfg),
        "omega-dual" => verify_omega_dual(cfg),
        "eval-image" => verify_eval_image(cfg),
        "result2-1" => verify_result2_1(cfg),
        "result2-2" => verify_result2_2(cfg),
        "result1-curve" => verify_result1_curve(cfg),
        "shuvalov" => verify_shuvalov(cfg),
        "poincare" => verify_poincare(cfg),
        "incl" => verify_incl(cfg),
        "gt-caterpillar" => verify_gt_caterpillar(cfg),
        "gaudin" => verify_gaudin(cfg),
        "strata" => verify_strata(cfg),
        "relations" => verify_relations(cfg),
        "tau-oracle" => verify_tau_oracle(cfg),
        "maximality" => verify_maximality(cfg),
        other => Err(Error::UnknownExperiment(other.into())),
    }
}

fn t(i: usize, j: usize, r: usize) -> YangianElement {
    match r {
        0 if i == j => YangianElement::one(),
        0 => YangianElement::zero(),
        _ => YangianElement::gen(i, j, r),
    }
}

/// The defining relation for all indices of `gl_n`, `n ≤ n_max`, and
/// `r + s ≤ rs_max`. Returns the number of instances and the failures.
pub fn relation_check(n_max: usize, rs_max: usize) -> (usize, Vec<String>) {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for r in 0..=rs_max {
            for s in 0..=(rs_max - r) {
                for i in 1..=n {
                    for j in 1..=n {
                        for k in 1..=n {
                            for l in 1..=n {
                                cases.push((i, j, k, l, r, s));
                            }
                        }
                    }
                }
            }
        }
    }
    let failures = cases
        .par_iter()
        .filter_map(|&(i, j, k, l, r, s)| {
            let lhs = t(i, j, r + 1).commutator(&t(k, l, s)).sub(&t(i, j, r).commutator(&t(k, l, s + 1)));
            let rhs = t(k, j, r).mul(&t(i, l, s)).sub(&t(k, j, s).mul(&t(i, l, r)));
            (lhs != rhs).then(|| format!("i={i} j={j} k={k} l={l} r={r} s={s}"))
        })
        .collect();
    (cases.len(), failures)
}

fn random_monomial(rng: &mut StdRng, n: usize, max_level: usize, max_len: usize) -> YangianElement {
    let len = rng.gen_range(1..=max_len);
    (0..len).fold(YangianElement::one(), |acc, _| {
        let g = Gen::new(rng.gen_range(1..=n), rng.gen_range(1..=n), rng.gen_range(1..=max_level));
        acc.mul(&YangianElement::from_terms([(Word::from_slice(&[g]), qi(1))]))
    })
}

/// `(ab)c = a(bc)` on `samples` seeded random triples of monomials in
/// `Y(gl_3)`. Returns the failing triples.
pub fn associativity_check(samples: usize, seed: u64) -> Vec<String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let triples: Vec<[YangianElement; 3]> =
        (0..samples).map(|_| std::array::from_fn(|_| random_monomial(&mut rng, 3, 3, 2))).collect();
    triples
        .par_iter()
        .filter_map(|[a, b, c]| (a.mul(b).mul(c) != a.mul(&b.mul(c))).then(|| format!("({a}) ({b}) ({c})")))
        .collect()
}

fn verify_relations(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let n = cfg.n.unwrap_or(3);
    let rs = cfg.degree.unwrap_or(6);
    let (count, failures) = relation_check(n, rs);
    let assoc = associativity_check(200, 7);
    let checks = vec![
        Check::new("defining relation", failures.is_empty(), json!({"instances": count, "failures": failures})),
        Check::new("associativity", assoc.is_empty(), json!({"triples": 200, "seed": 7, "failures": assoc})),
    ];
    Ok(report("relations", json!({"n_max": n, "rs_max": rs}), start, checks, Value::Null))
}

/// `τ_k` from the trace formula against the quantum-minor formula.
pub fn tau_oracle(c: &TorusFamily, cap: usize) -> Result<Vec<(usize, bool)>> {
    (1..=c.n()).into_par_iter().map(|k| Ok((k, tau_trace(c, k, cap)? == tau_minor(c, k, cap)?))).collect()
}

fn verify_tau_oracle(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let cap = cfg.degree_or(4)?;
    let mats: Vec<Vec<Rational>> = match &cfg.matrix {
        Some(_) => vec![cfg.matrix_or("")?],
        None => (1..=cfg.n.unwrap_or(3)).map(|n| (1..=n as i64).map(qi).collect()).collect(),
    };
    let mut checks = Vec::new();
    for m in &mats {
        for (k, ok) in tau_oracle(&TorusFamily::constant(m), cap)? {
            checks.push(Check::new(format!("tau_{k} diag({})", strs(m).join(",")), ok, json!({"k": k, "cap": cap})));
        }
    }
    let inputs = json!({"matrices": mats.iter().map(|m| strs(m)).collect::<Vec<_>>(), "cap": cap});
    Ok(report("tau-oracle", inputs, start, checks, Value::Null))
}

fn verify_commute(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let diag = cfg.matrix_or("1,2,3")?;
    let d = cfg.degree_or(4)?;
    let n = diag.len();
    let b = bethe_generators(&TorusFamily::constant(&diag), d)?;
    let rep = b.commutativity_check();
    let nonzero: Vec<Value> = rep
        .nonzero
        .iter()
        .map(|(i, j, c)| json!([b.generators[*i].name, b.generators[*j].name, c.to_string()]))
        .collect();
    let mut checks = vec![Check::new(
        "Bethe generators commute",
        rep.passed(),
        json!({"generators": b.generators.len(), "pairs": rep.pairs_checked, "nonzero": nonzero}),
    )];
    let levels = d.min(3);
    let q = qdet(n, d)?;
    let mut cases = Vec::new();
    for p in 1..=d {
        for r in 1..=levels {
            for i in 1..=n {
                for j in 1..=n {
                    cases.push((p, i, j, r));
                }
            }
        }
    }
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|&(p, i, j, r)| {
            let c = q.coeff(p).commutator(&YangianElement::gen(i, j, r));
            (!c.is_zero()).then(|| format!("qdet^({p}) vs t{i}{j}^({r}): {c}"))
        })
        .collect();
    checks.push(Check::new("qdet is central", bad.is_empty(), json!({"pairs": cases.len(), "nonzero": bad})));
    Ok(report("commute", json!({"matrix": strs(&diag), "degree": d}), start, checks, Value::Null))
}

fn verify_omega_dual(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let diag = cfg.matrix_or("1,2")?;
    let d = cfg.degree_or(3)?;
    let n = diag.len();
    let c = TorusFamily::constant(&diag);
    let b = bethe_generators(&c, d)?;
    let image = b.map(n, |x| omega(x, n));
    let left = filtered_components(&image, d)?;
    let right = filtered_components(&bethe_generators(&c.inverse()?, d)?, d)?;
    let checks = vec![compare_components("omega(B(C)) = B(C^-1)", &left, &right)?];
    Ok(report("omega-dual", json!({"matrix": strs(&diag), "degree": d}), start, checks, json!({"dims": dims(&left)})))
}

fn verify_eval_image(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let diag = cfg.matrix_or("1,2,4")?;
    let d = cfg.degree_or(3)?;
    let cmps = evaluation_cross_check(&diag, d)?;
    let cert: Vec<Value> = cmps
        .iter()
        .enumerate()
        .map(|(i, c)| json!({"degree": i + 1, "equal": c.equal, "left": c.left, "right": c.right}))
        .collect();
    let checks = vec![Check::new("F^(C) = pi(B(C^-1))", cmps.iter().all(|c| c.equal), Value::Array(cert))];
    Ok(report("eval-image", json!({"matrix": strs(&diag), "degree": d}), start, checks, Value::Null))
}

/// `i_k(B(C_0)) · ψ_{n-k}(B(C_1))` for `C(t) = diag(C_0, t C_1)`.
pub fn result2_1_prediction(
    family: &TorusFamily<LaurentPoly>,
    d_cap: usize,
) -> Result<Presentation<Yangian, Rational>> {
    let n = family.n();
    let mut c0 = Vec::new();
    let mut c1 = Vec::new();
    for (a, x) in family.eigenvalues.iter().enumerate() {
        let terms: Vec<(i64, Rational)> = x.terms().map(|(e, c)| (e, c.clone())).collect();
        match terms.as_slice() {
            [(0, c)] if c1.is_empty() => c0.push(c.clone()),
            [(1, c)] => c1.push(c.clone()),
            _ => {
                return Err(Error::Config(format!(
                    "entry {} of the family is not of the form c or c·t with constants first",
                    a + 1
                )))
            }
        }
    }
    let k = c0.len();
    if k == 0 || c1.is_empty() {
        return Err(Error::Config("need at least one constant and one t-linear entry".into()));
    }
    let b0 = bethe_generators(&TorusFamily::constant(&c0), d_cap)?;
    let b1 = bethe_generators(&TorusFamily::constant(&c1), d_cap)?;
    let mut p = b0.map(n, |x| x.clone());
    p.extend(&b1.map(n, |x| embed_psi(x, n - k, k)));
    p.label = format!("i_{k}(B(C0)) psi_{}(B(C1))", n - k);
    Ok(p)
}

fn verify_result2_1(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let fam = cfg.family_or("1,t")?;
    let d = cfg.degree_or(3)?;
    if !fam.is_regular() {
        return Err(Error::NonRegular("the family is never regular".into()));
    }
    let pred = result2_1_prediction(&fam, d)?;
    let lim = limit_components(&bethe_generators(&fam, d)?, d)?;
    let predc = filtered_components(&pred, d)?;
    let checks = vec![compare_components("limit = i(B(C0)) psi(B(C1))", &lim, &predc)?];
    Ok(report("result2-1", json!({"family": fam.to_string(), "degree": d}), start, checks, json!({"dims": dims(&lim)})))
}

/// `B(C_0) · F̂(C_1)` for `C(t) = C_0 + t C_1`, with `F̂` taken on each
/// eigenspace of `C_0` and pushed into `Y(gl_n)` through `t^{(1)}`.
pub fn result2_2_prediction(c0: &[Rational], c1: &[Rational], d_cap: usize) -> Result<Presentation<Yangian, Rational>> {
    let n = c0.len();
    if c1.len() != n {
        return Err(Error::ArityMismatch { slots: n, parts: c1.len() });
    }
    let mut p = bethe_generators(&TorusFamily::constant(c0), d_cap)?;
    let mut seen = Vec::new();
    for a in 0..n {
        if seen.contains(&c0[a]) {
            continue;
        }
        seen.push(c0[a].clone());
        let cluster: Vec<usize> = (0..n).filter(|&b| c0[b] == c0[a]).map(|b| b + 1).collect();
        if cluster.len() < 2 {
            continue;
        }
        let sub: Vec<Rational> = cluster.iter().map(|&b| c1[b - 1].clone()).collect();
        if !TorusFamily::constant(&sub).is_regular() {
            return Err(Error::NonRegular(format!("C1 is not regular on the cluster {cluster:?}")));
        }
        let fhat = quantum_shift_generators_unchecked(&sub);
        p.extend(&fhat.map(n, |x| embed_indices(&x.to_yangian(), &cluster)));
    }
    p.label = "B(C0) F^(C1)".into();
    Ok(p)
}

fn verify_result2_2(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let fam = cfg.family_or("1+t,1+2t")?;
    let d = cfg.degree_or(3)?;
    if !fam.is_regular() {
        return Err(Error::NonRegular("the family is never regular".into()));
    }
    let mut c0 = Vec::new();
    let mut c1 = Vec::new();
    for x in &fam.eigenvalues {
        if x.terms().any(|(e, _)| !(0..=1).contains(&e)) {
            return Err(Error::Config(format!("entry {x} is not linear in t")));
        }
        c0.push(x.coeff(0));
        c1.push(x.coeff(1));
    }
    if c0.iter().any(|c| c == &qi(0)) {
        return Err(Error::NonRegular("C0 must be invertible".into()));
    }
    let pred = filtered_components(&result2_2_prediction(&c0, &c1, d)?, d)?;
    let lim = limit_components(&bethe_generators(&fam, d)?, d)?;
    let checks = vec![compare_components("limit = B(C0) F^(C1)", &lim, &pred)?];
    Ok(report("result2-2", json!({"family": fam.to_string(), "degree": d}), start, checks, json!({"dims": dims(&lim)})))
}

fn verify_result1_curve(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let x = cfg.curve_or("(1@1, (0, (2@1, 3@2)@1)@0, inf)")?;
    let d = cfg.degree_or(3)?;
    let pred = predicted_components(&x, d)?;
    let mut checks = vec![compare_components("nested schedule limit = prediction", &nested_limit(&x, d)?, &pred)?];
    if x.depth() <= 2 {
        checks.push(compare_components("iterated limit = prediction", &iterated_limit(&x, d)?, &pred)?);
    }
    let data = json!({"schedule": curve_to_schedule(&x).to_string(), "dims": dims(&pred)});
    Ok(report("result1-curve", json!({"curve": x.to_string(), "degree": d}), start, checks, data))
}

/// Stages `C_0;C_1;…` separated by semicolons.
fn parse_stages(s: &str) -> Result<Vec<Vec<Rational>>> {
    s.split(';').map(parse_diagonal).collect()
}

fn verify_shuvalov(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let stages = parse_stages(cfg.matrix.as_deref().unwrap_or("1,1,2;0,1,0"))?;
    let d = cfg.degree_or(3)?;
    let n = stages[0].len();
    let pred = shuvalov_limit_generators(&stages)?;
    let predc = filtered_components(&pred, d)?;
    let lim = limit_components(&shift_family_generators(&stages)?, d)?;
    let graded = graded_dimensions(&pred, d)?;
    let series = positive_degrees(poincare_predicted(&vec![1; n], d));
    let checks = vec![
        compare_components("limit of F(C(t)) = Shuvalov generators", &lim, &predc)?,
        Check::new("graded dimensions = regular series", graded == series, json!({"graded": graded, "series": series})),
    ];
    let inputs = json!({"stages": stages.iter().map(|s| strs(s)).collect::<Vec<_>>(), "degree": d});
    Ok(report("shuvalov", inputs, start, checks, json!({"generators": generator_json(&pred)})))
}

fn verify_poincare(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let d = cfg.degree_or(4)?;
    let bd = BlockDiagonal::parse(cfg.blocks.as_deref().unwrap_or("1:2,2:1"))?;
    let graded = graded_dimensions(&shift_arg_generators(&bd.diagonal()), d)?;
    let series: Vec<usize> = positive_degrees(poincare_predicted(&bd.multiplicities(), d));
    let mut checks =
        vec![Check::new(format!("F({bd}) series"), graded == series, json!({"graded": graded, "predicted": series}))];
    let c = cfg.matrix_or("1,2")?;
    let k = cfg.k.unwrap_or(1);
    let mut diag = c.clone();
    diag.extend(std::iter::repeat_n(qi(0), k));
    let graded = graded_dimensions(&quantum_shift_generators_unchecked(&diag), d)?;
    let series: Vec<usize> = positive_degrees(poincare_l36(c.len(), k, d));
    checks.push(Check::new(
        format!("F^(diag({},0^{k})) series", strs(&c).join(",")),
        graded == series,
        json!({"graded": graded, "predicted": series}),
    ));
    let inputs = json!({"blocks": bd.to_string(), "matrix": strs(&c), "k": k, "degree": d});
    Ok(report("poincare", inputs, start, checks, Value::Null))
}

fn verify_incl(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let diag = cfg.matrix_or("1,2")?;
    let k = cfg.k.unwrap_or(1);
    let d = cfg.degree_or(3)?;
    let r = check_incl(&TorusFamily::constant(&diag), k, d)?;
    let checks = r
        .entries
        .iter()
        .map(|m| {
            let cert = if m.member {
                json!({"degree": m.degree})
            } else {
                json!({"degree": m.degree, "residual": m.residual.to_string()})
            };
            Check::new(format!("{} in {}", m.name, r.target), m.member, cert)
        })
        .collect();
    Ok(report("incl", json!({"matrix": strs(&diag), "k": k, "degree": d}), start, checks, Value::Null))
}

/// `diag(1, t, t², …, t^{n-1})`.
pub fn caterpillar_family(n: usize) -> TorusFamily<LaurentPoly> {
    TorusFamily::new((0..n as i64).map(|e| LaurentPoly::monomial(qi(1), e)).collect())
}

fn verify_gt_caterpillar(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let n = cfg.n.unwrap_or(2);
    let d = cfg.degree_or(3)?;
    let fam = match &cfg.family {
        Some(_) => cfg.family_or("")?,
        None => caterpillar_family(n),
    };
    let lim = limit_components(&bethe_generators(&fam, d)?, d)?;
    let gt = filtered_components(&gt_generators(fam.n(), d)?, d)?;
    let checks = vec![containment("GT components inside the limit", &gt, &lim)?];
    let data = json!({"limit_dims": dims(&lim), "gt_dims": dims(&gt), "equal": lim == gt});
    Ok(report("gt-caterpillar", json!({"family": fam.to_string(), "degree": d}), start, checks, data))
}

fn verify_gaudin(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let diag = cfg.matrix_or("1,2,3")?;
    let d = cfg.degree_or(4)?;
    let f = shift_arg_generators(&diag);
    let pairs: Vec<(usize, usize)> =
        (0..f.generators.len()).flat_map(|i| (i + 1..f.generators.len()).map(move |j| (i, j))).collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let b = poisson_bracket(&f.generators[i].element, &f.generators[j].element);
            (!b.is_zero()).then(|| format!("{{{}, {}}} = {b}", f.generators[i].name, f.generators[j].name))
        })
        .collect();
    let mut checks =
        vec![Check::new("F(C) Poisson-commutative", bad.is_empty(), json!({"pairs": pairs.len(), "nonzero": bad}))];
    let fhat = quantum_shift_generators(&diag, d)?;
    let rep = fhat.commutativity_check();
    let nonzero: Vec<String> = rep
        .nonzero
        .iter()
        .map(|(i, j, c)| format!("[{}, {}] = {c}", fhat.generators[*i].name, fhat.generators[*j].name))
        .collect();
    checks.push(Check::new("F^(C) commutative", rep.passed(), json!({"pairs": rep.pairs_checked, "nonzero": nonzero})));
    let quad = crate::limits::filtered_component(&f, 2)?;
    let pred = quadratic_prediction(&diag)?;
    let cmp = subspace_equal(&quad, &pred)?;
    checks.push(Check::new(
        "quadratic component = span(H_i) + S^2(h)",
        cmp.equal,
        json!({"dims": [quad.dim(), pred.dim()]}),
    ));
    let h = gaudin_quadratic(&diag)?;
    let data = json!({"gaudin": h.iter().map(ToString::to_string).collect::<Vec<_>>()});
    Ok(report("gaudin", json!({"matrix": strs(&diag), "degree": d}), start, checks, data))
}

fn verify_strata(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let n = cfg.n.unwrap_or(3);
    let strata = enumerate_strata(n);
    let counts: Vec<usize> = strata.iter().map(Vec::len).collect();
    let brute: Vec<usize> = brute_force_strata(n).iter().map(|s| s.len()).collect();
    let mut checks = vec![Check::new(
        "tree enumeration = laminar families",
        counts == brute,
        json!({"trees": counts, "laminar": brute}),
    )];
    let expected: Option<Vec<usize>> = match n {
        2 => Some(vec![1, 3]),
        3 => Some(vec![1, 10, 15]),
        _ => None,
    };
    if let Some(e) = expected {
        checks.push(Check::new("known counts", counts == e, json!({"expected": e})));
    }
    let data: Vec<Vec<String>> = strata.iter().map(|c| c.iter().map(ToString::to_string).collect()).collect();
    Ok(report("strata", json!({"n": n}), start, checks, json!({"strata": data})))
}

/// Dimensions of the centralizers of `B(C)` and of a limit subalgebra next to
/// the dimension of the subalgebra itself, each inside `Y_{≤d}`.
fn maximality_check(label: &str, comps: &[FilteredSubspace<Yangian, Rational>], n: usize, d: usize) -> Check {
    let gens = comps.last().map(|c| c.basis_elements()).unwrap_or_default();
    let z = centralizer_dimension(&gens, n, d);
    let own = comps[d - 1].dim();
    Check::new(format!("centralizer of {label} in degree {d}"), z == own, json!({"centralizer": z, "subalgebra": own}))
}

fn verify_maximality(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let diag = cfg.matrix_or("1,2")?;
    let fam = cfg.family_or("1,t")?;
    let d = cfg.degree_or(2)?;
    let gen_cap = d + 1;
    let n = diag.len();
    let b = filtered_components(&bethe_generators(&TorusFamily::constant(&diag), gen_cap)?, gen_cap)?;
    let lim = limit_components(&bethe_generators(&fam, gen_cap)?, gen_cap)?;
    let mut checks = Vec::new();
    for e in 1..=d {
        checks.push(maximality_check("B(C)", &b, n, e));
        checks.push(maximality_check("the limit", &lim, fam.n(), e));
    }
    let inputs = json!({"matrix": strs(&diag), "family": fam.to_string(), "degree": d, "generator_degree": gen_cap});
    Ok(report("maximality", inputs, start, checks, Value::Null))
}

/// Generators and dimensions of `B(C)`.
pub fn cmd_bethe(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let diag = cfg.matrix_or("1,2")?;
    let d = cfg.degree_or(3)?;
    let b = bethe_generators(&TorusFamily::constant(&diag), d)?;
    let mut per_degree = vec![0usize; d];
    for g in &b.generators {
        per_degree[g.degree - 1] += 1;
    }
    let data = json!({
        "label": b.label,
        "generators": generator_json(&b),
        "generators_per_degree": per_degree,
        "graded_dimensions": graded_dimensions(&b, d)?,
    });
    Ok(report("bethe", json!({"matrix": strs(&diag), "degree": d}), start, Vec::new(), data))
}

/// `F(C)`, its lift, and the predicted series.
pub fn cmd_shift(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let diag = match (&cfg.blocks, &cfg.matrix) {
        (Some(b), _) => BlockDiagonal::parse(b)?.diagonal(),
        (None, _) => cfg.matrix_or("1,2,3")?,
    };
    let d = cfg.degree_or(3)?;
    let bd = BlockDiagonal::from_diagonal(&diag);
    let f = shift_arg_generators(&diag);
    let graded = graded_dimensions(&f, d)?;
    let series: Vec<usize> = positive_degrees(poincare_predicted(&bd.multiplicities(), d));
    let fhat = quantum_shift_generators(&diag, d)?;
    let checks = vec![Check::new(
        "graded dimensions = predicted series",
        graded == series,
        json!({"graded": graded, "predicted": series}),
    )];
    let data = json!({"classical": generator_json(&f), "lift": generator_json(&fhat)});
    Ok(report("shift", json!({"matrix": strs(&diag), "degree": d}), start, checks, data))
}

/// Limit components along a family or a curve schedule.
pub fn cmd_limit(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let d = cfg.degree_or(3)?;
    let fam = match (&cfg.family, &cfg.curve) {
        (Some(_), _) => cfg.family_or("")?,
        (None, Some(_)) => curve_to_schedule(&cfg.curve_or("")?),
        (None, None) => return Err(Error::Config("limit needs --family or --curve".into())),
    };
    if !fam.is_regular() {
        return Err(Error::NonRegular(format!("{fam} has repeated entries for every t")));
    }
    let lim = limit_components(&bethe_generators(&fam, d)?, d)?;
    let data = json!({"components": lim.iter().map(FilteredSubspace::to_json).collect::<Vec<_>>()});
    Ok(report("limit", json!({"family": fam.to_string(), "degree": d}), start, Vec::new(), data))
}

/// The predicted limit subalgebra of a curve.
pub fn cmd_predict(cfg: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let d = cfg.degree_or(3)?;
    let x = cfg.curve_or("((0, 2)@0, 1@1, inf)")?;
    let p = predicted_subalgebra(&x, d)?;
    let comps = filtered_components(&p, d)?;
    let data = json!({
        "generators": generator_json(&p),
        "components": comps.iter().map(FilteredSubspace::to_json).collect::<Vec<_>>(),
    });
    Ok(report("predict", json!({"curve": x.to_string(), "degree": d}), start, Vec::new(), data))
}

pub fn cmd_strata(cfg: &ExperimentConfig) -> Result<Report> {
    let mut r = verify_strata(cfg)?;
    r.experiment = "strata".into();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        let cfg = ExperimentConfig { degree: Some(3), ucap: Some(2), ..Default::default() };
        assert!(matches!(run("commute", &cfg), Err(Error::CapExceeded { .. })));
        assert!(matches!(run("nope", &ExperimentConfig::default()), Err(Error::UnknownExperiment(_))));
        let bad = ExperimentConfig { matrix: Some("1,,2".into()), ..Default::default() };
        assert!(cmd_bethe(&bad).is_err());
        let never = ExperimentConfig { family: Some("1,1".into()), ..Default::default() };
        assert!(matches!(cmd_limit(&never), Err(Error::NonRegular(_))));
    }

    #[test]
    fn bethe_command() {
        let cfg = ExperimentConfig { matrix: Some("1".into()), degree: Some(3), ..Default::default() };
        assert_eq!(cmd_bethe(&cfg).unwrap().data["generators_per_degree"], json!([1, 1, 1]));
        let cfg = ExperimentConfig { matrix: Some("1,2".into()), degree: Some(2), ..Default::default() };
        assert_eq!(cmd_bethe(&cfg).unwrap().data["generators_per_degree"][0], json!(2));
    }

    #[test]
    fn limit_command() {
        let cfg = ExperimentConfig { family: Some("1,t".into()), degree: Some(1), ..Default::default() };
        let r = cmd_limit(&cfg).unwrap();
        let rows = &r.data["components"][0]["rows"];
        assert_eq!(rows.as_array().unwrap().len(), 2);
        let labels: Vec<&str> = rows.as_array().unwrap().iter().map(|r| r[0][0].as_str().unwrap()).collect();
        assert_eq!(labels, vec!["t[1,1,1]", "t[2,2,1]"]);
    }

    #[test]
    fn small_experiments_pass() {
        let cfg = ExperimentConfig { degree: Some(2), ..Default::default() };
        for name in ["omega-dual", "result2-1", "result2-2", "strata"] {
            let r = run(name, &cfg).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
        let r = run("strata", &ExperimentConfig::default()).unwrap();
        let mut a = r.to_json();
        let mut b = run("strata", &ExperimentConfig::default()).unwrap().to_json();
        a["wall_time_secs"] = Value::Null;
        b["wall_time_secs"] = Value::Null;
        assert_eq!(a, b);
    }
}
