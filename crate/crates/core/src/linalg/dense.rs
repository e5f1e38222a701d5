use std::fmt;

use crate::error::{input, Result};
use crate::field::Scalar;

use super::sparse::SparseVec;

/// A dense matrix over an exact field, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Output of [`ExactMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<F> {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: ExactMatrix<F>,
}

impl<F: Scalar> ExactMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return input("ragged matrix rows");
        }
        Ok(ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Integer entries, mapped into the field.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == c), "ragged matrix rows");
        ExactMatrix {
            rows: rows.len(),
            cols: c,
            data: rows.iter().flat_map(|r| r.iter().map(|&x| F::from_i64(x))).collect(),
        }
    }

    pub fn from_sparse_rows(rows: &[SparseVec<F>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in r.iter() {
                m[(i, j)] = c.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec<F>> {
        (0..self.rows).map(|i| SparseVec::from_dense(self.row(i))).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return input(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let s = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                    out[(i, j)] = s;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect()
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    ///
    /// Columns are scanned left to right; the pivot in each column is the
    /// topmost remaining row with a nonzero entry there.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                let x = m[(r, j)].clone() * inv.clone();
                m[(r, j)] = x;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let x = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    m[(i, j)] = x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { rank: r, pivots, reduced: m }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space, one vector per free column in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let Rref { pivots, reduced, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn rows_independent(&self) -> bool {
        self.rank() == self.rows
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for ExactMatrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for ExactMatrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let cells: Vec<String> = row.iter().map(|x| format!("{x:?}")).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use num_traits::Zero;

    #[test]
    fn empty_matrix() {
        let m = ExactMatrix::<Rational>::zeros(0, 0);
        let r = m.rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn identity_over_gf7() {
        let r = ExactMatrix::<Fp<7>>::identity(3).rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert!(ExactMatrix::<Fp<7>>::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn one_by_two_over_gf2() {
        let m = ExactMatrix::<Fp<2>>::from_i64(&[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![Fp::<2>::from_i64(1), Fp::<2>::from_i64(1)]]);
    }

    #[test]
    fn zero_row_is_dependent() {
        let m = ExactMatrix::<Rational>::from_i64(&[&[1, 2], &[0, 0]]);
        assert!(!m.rows_independent());
        assert!(ExactMatrix::<Rational>::identity(2).rows_independent());
    }

    #[test]
    fn rational_rref_is_reduced() {
        let m = ExactMatrix::<Rational>::from_i64(&[&[2, 4, 1], &[1, 2, 3], &[3, 6, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(r.reduced.rref().reduced, r.reduced);
        for v in m.kernel_basis() {
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }
}
