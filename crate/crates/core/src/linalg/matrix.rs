use num_traits::{One, Zero};

use super::{RatVector, Rational, RowSpace};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows that must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<RatVector>) -> Result<Self> {
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    actual: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(Self {
            rows: n_rows,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| super::rat(x)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<RatVector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<RatVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok((0..self.rows).map(|r| super::dot(self.row(r), v)).collect())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if other.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let s: Rational = (0..self.cols)
                    .map(|k| self.get(r, k) * other.get(k, c))
                    .sum();
                out.set(r, c, s);
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &RatMatrix) -> Result<RatMatrix> {
        if below.cols != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: below.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&below.entries);
        Ok(Self {
            rows: self.rows + below.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn without_row(&self, r: usize) -> RatMatrix {
        let rows = (0..self.rows)
            .filter(|&i| i != r)
            .map(|i| self.row(i).to_vec())
            .collect();
        Self::from_rows(self.cols, rows).expect("rows keep their width")
    }

    /// Exact rank, by fraction-free elimination over primitive integer rows.
    pub fn rank(&self) -> usize {
        let mut space = RowSpace::new(self.cols);
        for r in 0..self.rows {
            space.insert(self.row(r));
        }
        space.rank()
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).recip();
            for k in c..m.cols {
                let v = m.get(lead, k) * &inv;
                m.set(lead, k, v);
            }
            for r in 0..m.rows {
                if r == lead || m.get(r, c).is_zero() {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for k in c..m.cols {
                    let v = m.get(r, k) - &factor * m.get(lead, k);
                    m.set(r, k, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    /// Basis of the right null space, one vector per free column in
    /// increasing column order.
    pub fn kernel_basis(&self) -> Vec<RatVector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            for r in c + 1..n {
                if m.get(r, c).is_zero() {
                    continue;
                }
                let factor = m.get(r, c) / &pivot;
                for k in c..n {
                    let v = m.get(r, k) - &factor * m.get(c, k);
                    m.set(r, k, v);
                }
            }
            det *= pivot;
        }
        Ok(det)
    }

    /// Some exact solution of `self * x = b`, or `None` when the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<RatVector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                actual: b.len(),
            });
        }
        let rows = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let augmented = Self::from_rows(self.cols + 1, rows)?;
        let (r, pivots) = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, vectors_rank};
    use proptest::prelude::*;

    fn small_matrix() -> impl Strategy<Value = RatMatrix> {
        (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                let rows = v
                    .chunks(c.max(1))
                    .take(r)
                    .map(|ch| ch.iter().map(|&x| rat(x)).collect())
                    .collect();
                if c == 0 {
                    RatMatrix::from_rows(0, vec![vec![]; r]).unwrap()
                } else {
                    RatMatrix::from_rows(c, rows).unwrap()
                }
            })
        })
    }

    #[test]
    fn rank_edge_cases() {
        assert_eq!(RatMatrix::zeros(0, 0).rank(), 0);
        assert_eq!(RatMatrix::identity(3).rank(), 3);
        assert_eq!(RatMatrix::zeros(2, 5).rank(), 0);
    }

    #[test]
    fn kernel_edge_cases() {
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
        let k = RatMatrix::from_i64_rows(&[&[1, 0, 0]]).kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(v[0].is_zero());
        }
        assert_eq!(vectors_rank(&k), 2);
    }

    #[test]
    fn det_examples() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det().unwrap(), rat(-2));
        let v = RatMatrix::from_i64_rows(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9]]);
        assert_eq!(v.det().unwrap(), rat(2));
        assert_eq!(RatMatrix::zeros(0, 0).det().unwrap(), rat(1));
        assert!(matches!(
            RatMatrix::zeros(2, 3).det(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn solve_examples() {
        let b = vec![rat(4), rat(-1), rat(7)];
        assert_eq!(RatMatrix::identity(3).solve(&b).unwrap(), Some(b));
        let zero = RatMatrix::zeros(2, 2);
        assert_eq!(zero.solve(&[rat(1), rat(0)]).unwrap(), None);
        assert!(zero.solve(&[rat(1)]).is_err());
    }

    #[test]
    fn solve_nonsingular_residual() {
        let m = RatMatrix::from_i64_rows(&[
            &[2, -1, 0, 3],
            &[1, 5, -2, 0],
            &[0, 4, 1, -1],
            &[7, 0, 3, 2],
        ]);
        assert!(!m.det().unwrap().is_zero());
        let b = vec![rat(1), rat(-2), rat(3), rat(5)];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b);
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_agrees_with_rref(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.rref().1.len());
        }

        #[test]
        fn kernel_vectors_are_exact_and_independent(m in small_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.len(), m.cols() - m.rank());
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
            }
            prop_assert_eq!(vectors_rank(&k), k.len());
        }

        #[test]
        fn det_nonzero_iff_full_rank(v in prop::collection::vec(-3i64..=3, 16)) {
            let rows = v.chunks(4).map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
            let m = RatMatrix::from_rows(4, rows).unwrap();
            prop_assert_eq!(!m.det().unwrap().is_zero(), m.rank() == 4);
        }

        #[test]
        fn det_matches_cofactor_expansion(v in prop::collection::vec(-5i64..=5, 9)) {
            let rows = v.chunks(3).map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
            let m = RatMatrix::from_rows(3, rows).unwrap();
            let e = |r: usize, c: usize| v[r * 3 + c];
            let expanded = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
                - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
                + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
            prop_assert_eq!(m.det().unwrap(), rat(expanded));
        }
    }
}
