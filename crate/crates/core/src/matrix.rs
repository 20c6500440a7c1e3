//! Dense exact matrices and reduced row echelon form.

use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<F>>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![vec![F::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = F::one();
        }
        m
    }

    /// Build from row vectors; all rows must share `cols`.
    pub fn from_rows(cols: usize, data: Vec<Vec<F>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        ExactMatrix { rows: data.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i][j]
    }

    pub fn into_rows(self) -> Vec<Vec<F>> {
        self.data
    }

    /// Reduced row echelon form and the pivot columns. Zero rows are kept at
    /// the bottom so the shape is unchanged.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.data.clone();
        let pivots = rref_in_place(&mut m, self.cols);
        (ExactMatrix { rows: self.rows, cols: self.cols, data: m }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = r.data[row][f].neg();
                }
                v
            })
            .collect()
    }
}

/// In-place Gauss–Jordan elimination over a field; returns pivot columns.
pub fn rref_in_place<F: Field>(m: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        if !m[row][col].is_one() {
            for x in &mut m[row][col..cols] {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
        }
        let prow = m[row].clone();
        let eliminate = |r: &mut Vec<F>| {
            let f = r[col].clone();
            if f.is_zero() {
                return;
            }
            for c in col..cols {
                if !prow[c].is_zero() {
                    r[c] = r[c].sub(&f.mul(&prow[c]));
                }
            }
        };
        for (idx, r) in m.iter_mut().enumerate() {
            if idx != row {
                eliminate(r);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Echelon basis built one vector at a time, remembering how each stored row
/// is combined from the accepted inputs.
#[derive(Clone, Debug)]
pub struct IncrementalEchelon<F> {
    cols: usize,
    rows: Vec<(usize, Vec<F>, Vec<F>)>,
}

impl<F: Field> IncrementalEchelon<F> {
    pub fn new(cols: usize) -> Self {
        IncrementalEchelon { cols, rows: Vec::new() }
    }

    /// Number of accepted (independent) inputs.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Accepts `v` if it is independent of the accepted inputs and returns
    /// `None`; otherwise returns `c` with `v = Σ_j c_j · accepted_j`.
    pub fn insert(&mut self, v: &[F]) -> Option<Vec<F>> {
        debug_assert_eq!(v.len(), self.cols);
        let m = self.rows.len();
        let mut r = v.to_vec();
        let mut combo = vec![F::zero(); m];
        for (p, row, rc) in &self.rows {
            let f = r[*p].clone();
            if f.is_zero() {
                continue;
            }
            for c in 0..self.cols {
                if !row[c].is_zero() {
                    r[c] = r[c].sub(&f.mul(&row[c]));
                }
            }
            for (j, x) in rc.iter().enumerate() {
                if !x.is_zero() {
                    combo[j] = combo[j].add(&f.mul(x));
                }
            }
        }
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Some(combo);
        };
        let inv = r[p].inv().expect("nonzero");
        let row: Vec<F> = r.iter().map(|x| x.mul(&inv)).collect();
        let mut rc: Vec<F> = combo.iter().map(|x| x.neg().mul(&inv)).collect();
        rc.push(inv);
        for (_, _, other) in self.rows.iter_mut() {
            other.push(F::zero());
        }
        self.rows.push((p, row, rc));
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::ratfunc::RatFunc;
    use crate::scalar::{qi, Rational, Ring};
    use proptest::prelude::*;

    fn mq(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        let cols = rows[0].len();
        ExactMatrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
    }

    #[test]
    fn rank_one() {
        let (r, p) = mq(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, mq(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn identity_is_fixed() {
        let id = ExactMatrix::<Rational>::identity(3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
    }

    #[test]
    fn over_rational_functions() {
        let t = RatFunc::from_laurent(LaurentPoly::parse("t").unwrap());
        let m = ExactMatrix::from_rows(2, vec![vec![t.clone(), RatFunc::one()], vec![RatFunc::zero(), t.clone()]]);
        let (r, p) = m.rref();
        // [[t,1],[0,t]] is invertible over Q(t): identity, with 1/t cleared in the second step.
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r, ExactMatrix::identity(2));
        // After the first normalization the top row is [1, 1/t].
        let mut rows = m.clone().into_rows();
        let inv = rows[0][0].inv().unwrap();
        rows[0] = rows[0].iter().map(|x| x.mul(&inv)).collect();
        assert_eq!(rows[0][1], RatFunc::from_laurent(LaurentPoly::parse("t^-1").unwrap()));
    }

    #[test]
    fn nullspace_basis() {
        let m = mq(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot: Rational = (0..3).map(|i| m.get(0, i) * &v[i]).sum();
            assert_eq!(dot, qi(0));
        }
    }

    #[test]
    fn incremental_dependencies() {
        let mut e = IncrementalEchelon::new(3);
        assert!(e.insert(&[qi(1), qi(2), qi(0)]).is_none());
        assert!(e.insert(&[qi(0), qi(1), qi(1)]).is_none());
        let c = e.insert(&[qi(2), qi(7), qi(3)]).unwrap();
        assert_eq!(c, vec![qi(2), qi(3)]);
        assert_eq!(e.rank(), 2);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5, 1usize..5)
            .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-3i64..4, c), r))
    }

    proptest! {
        #[test]
        fn rref_is_idempotent_and_keeps_row_space(rows in small_matrix()) {
            let cols = rows[0].len();
            let m = ExactMatrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect());
            let (r, p) = m.rref();
            prop_assert_eq!(r.rref(), (r.clone(), p.clone()));
            // Row spaces agree: stacking either onto the other does not raise the rank.
            let mut both = m.clone().into_rows();
            both.extend(r.clone().into_rows());
            let stacked = ExactMatrix::from_rows(cols, both);
            prop_assert_eq!(stacked.rank(), p.len());
            prop_assert_eq!(m.rank(), p.len());
            prop_assert!(p.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
