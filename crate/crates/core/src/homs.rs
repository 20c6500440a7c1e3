//! The homomorphisms `i_k`, `φ_k`, `ψ_k`, `ω_n` and `π_n`.

use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use rustc_hash::FxBuildHasher;

use crate::error::{Error, Result};
use crate::pbw::{EnvElement, Gen, YangianElement};
use crate::scalar::{Rational, Ring};
use crate::series::{MatrixSeries, USeries};

type OmegaTable = DashMap<(usize, Gen), Arc<YangianElement>, FxBuildHasher>;

fn omega_table() -> &'static OmegaTable {
    static TABLE: OnceLock<OmegaTable> = OnceLock::new();
    TABLE.get_or_init(|| DashMap::with_hasher(FxBuildHasher))
}

/// `ω_n(t_{ij}^{(r)})`: the `u^{-r}` coefficient of `[T(-u-n)^{-1}]_{ij}`.
/// The whole inverse up to `u^{-r}` is stored on first use.
pub fn omega_generator(n: usize, g: Gen) -> Arc<YangianElement> {
    if let Some(hit) = omega_table().get(&(n, g)) {
        return hit.clone();
    }
    let cap = g.level();
    let inv = MatrixSeries::<Rational>::t_matrix(n, cap).substitute_neg(n).invert().expect("T(u) is unipotent");
    for a in 1..=n {
        for b in 1..=n {
            for p in 1..=cap {
                omega_table()
                    .entry((n, Gen::new(a, b, p)))
                    .or_insert_with(|| Arc::new(inv.entry(a, b).coeff(p).clone()));
            }
        }
    }
    omega_table().get(&(n, g)).expect("just inserted").clone()
}

/// The involution `ω_n: T(u) ↦ T(-u-n)^{-1}` of `Y(gl_n)`.
pub fn omega<R: Ring>(x: &YangianElement<R>, n: usize) -> YangianElement<R> {
    debug_assert!(x.max_index() <= n);
    x.map_hom(|g| omega_generator(n, g).to_ring())
}

/// `ω_n` with an explicit u-power budget: levels above `cap` are refused.
pub fn omega_capped<R: Ring>(x: &YangianElement<R>, n: usize, cap: usize) -> Result<YangianElement<R>> {
    let needed = x.max_level();
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    Ok(omega(x, n))
}

/// `ω_n` applied coefficientwise to a series.
pub fn omega_series<R: Ring>(s: &USeries<R>, n: usize) -> Result<USeries<R>> {
    let cap = s.cap();
    let coeffs = s.coeffs().iter().map(|x| omega_capped(x, n, cap)).collect::<Result<Vec<_>>>()?;
    Ok(USeries::from_coeffs(coeffs, cap))
}

/// `i_k: Y(gl_n) → Y(gl_{n+k})`, `t_{ij}^{(r)} ↦ t_{ij}^{(r)}`.
pub fn embed_i<R: Ring>(x: &YangianElement<R>, _k: usize) -> YangianElement<R> {
    x.clone()
}

/// `φ_k: t_{ij}^{(r)} ↦ t_{k+i,k+j}^{(r)}`.
pub fn embed_phi<R: Ring>(x: &YangianElement<R>, k: usize) -> YangianElement<R> {
    x.relabel(|g| g.with_indices(g.i() + k, g.j() + k))
}

/// Relabel indices through `map` (`j ↦ map[j-1]`). For an increasing map onto
/// a subset this is `i_k` or `φ_k` composed with a permutation.
pub fn embed_indices<R: Ring>(x: &YangianElement<R>, map: &[usize]) -> YangianElement<R> {
    x.relabel(|g| g.with_indices(map[g.i() - 1], map[g.j() - 1]))
}

/// `ψ_k = ω_{n+k} ∘ φ_k ∘ ω_n`.
pub fn embed_psi<R: Ring>(x: &YangianElement<R>, n: usize, k: usize) -> YangianElement<R> {
    omega(&embed_phi(&omega(x, n), k), n + k)
}

/// `ψ` onto an arbitrary index set `targets` of `Y(gl_big)`. Permutation
/// automorphisms commute with `ω`, so this is a permuted `ψ_{big-k}`.
pub fn embed_psi_onto<R: Ring>(x: &YangianElement<R>, targets: &[usize], big: usize) -> YangianElement<R> {
    omega(&embed_indices(&omega(x, targets.len()), targets), big)
}

/// Evaluation homomorphism `π_n`.
pub fn evaluate_pi<R: Ring>(x: &YangianElement<R>) -> EnvElement<R> {
    x.evaluate()
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
    fn omega_rank_one() {
        assert_eq!(omega(&t(1, 1, 1), 1), t(1, 1, 1));
        assert_eq!(omega(&Y::one(), 3), Y::one());
        let x = t(1, 1, 1);
        assert_eq!(*omega_generator(1, Gen::new(1, 1, 2)), x.mul(&x).sub(&x).sub(&t(1, 1, 2)));
    }

    #[test]
    fn omega_is_involutive() {
        for n in 1..=2 {
            for r in 1..=3 {
                for i in 1..=n {
                    for j in 1..=n {
                        assert_eq!(omega(&omega(&t(i, j, r), n), n), t(i, j, r), "n={n} ({i},{j},{r})");
                    }
                }
            }
        }
    }

    #[test]
    fn omega_is_multiplicative() {
        let (a, b) = (t(1, 2, 2), t(2, 1, 1));
        let n = 2;
        assert_eq!(omega(&a.mul(&b), n), omega(&a, n).mul(&omega(&b, n)));
        assert!(matches!(omega_capped(&a, n, 1), Err(Error::CapExceeded { needed: 2, cap: 1 })));
    }

    #[test]
    fn embeddings() {
        assert_eq!(embed_i(&t(1, 2, 1), 1), t(1, 2, 1));
        assert_eq!(embed_phi(&t(1, 1, 1), 1), t(2, 2, 1));
        assert_eq!(embed_phi(&t(1, 2, 3), 2), t(3, 4, 3));
        assert_eq!(embed_phi(&Y::one(), 2), Y::one());
        let x = t(2, 1, 1).mul(&t(1, 1, 2));
        assert_eq!(embed_phi(&x, 1), embed_phi(&t(2, 1, 1), 1).mul(&embed_phi(&t(1, 1, 2), 1)));
        // A non-monotone relabel re-normal-orders.
        let y = t(1, 2, 1).mul(&t(2, 1, 1));
        assert_eq!(embed_indices(&y, &[2, 1]), t(2, 1, 1).mul(&t(1, 2, 1)));
    }

    #[test]
    fn psi_centralizes_i() {
        let p = embed_psi(&t(1, 1, 1), 1, 1);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.homogeneous_part(1), t(2, 2, 1));
        for r in 1..=2 {
            let ps = embed_psi(&t(1, 1, r), 1, 1);
            for s in 1..=3 {
                assert!(ps.commutator(&embed_i(&t(1, 1, s), 1)).is_zero());
            }
        }
        assert_eq!(embed_psi_onto(&t(1, 1, 1), &[2], 2), p);
    }

    #[test]
    fn evaluation() {
        assert_eq!(evaluate_pi(&t(1, 2, 1)), EnvElement::gen(1, 2, 1));
        assert!(evaluate_pi(&t(1, 1, 2)).is_zero());
        let x = evaluate_pi(&t(2, 1, 1).mul(&t(1, 2, 1)));
        let e = |i, j| EnvElement::<Rational>::gen(i, j, 1);
        assert_eq!(x, e(1, 2).mul(&e(2, 1)).sub(&e(1, 1)).add(&e(2, 2)));
        assert_eq!(evaluate_pi(&Y::scalar(qi(3))), EnvElement::scalar(qi(3)));
    }
}
