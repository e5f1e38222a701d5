use crate::field::Scalar;

use super::sparse::{merge_axpy, SparseVec};

const NONE: u32 = u32::MAX;

/// An incrementally built row space in semi-echelon form.
///
/// Every stored row is monic at its leading (smallest) column and no two rows
/// share a leading column. Reduction removes all pivot columns from a vector,
/// so the result is the unique representative of its coset supported on
/// non-pivot columns, independent of insertion order.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    pivot_row: Vec<u32>,
    pivots: Vec<usize>,
    /// For each stored row, its expression in terms of the inserted vectors.
    tracks: Option<Vec<SparseVec<F>>>,
    inserted: usize,
}

impl<F: Scalar> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_row: vec![NONE; ncols], pivots: Vec::new(), tracks: None, inserted: 0 }
    }

    /// Like [`Echelon::new`], but remembers how each row arose from the inserted vectors.
    pub fn tracked(ncols: usize) -> Self {
        Echelon { tracks: Some(Vec::new()), ..Self::new(ncols) }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    /// Pivot column of each stored row, in storage order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NONE
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Number of vectors handed to [`Echelon::insert`] so far.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    fn reduce_inner(&self, v: &SparseVec<F>, mut coeffs: Option<&mut Vec<(u32, F)>>) -> SparseVec<F> {
        let mut out: Vec<(u32, F)> = Vec::new();
        let mut pending: Vec<(u32, F)> = v.raw().to_vec();
        let mut start = 0;
        loop {
            while start < pending.len() && self.pivot_row[pending[start].0 as usize] == NONE {
                out.push(pending[start].clone());
                start += 1;
            }
            if start == pending.len() {
                break;
            }
            let (col, c) = pending[start].clone();
            let r = self.pivot_row[col as usize];
            if let Some(cs) = coeffs.as_deref_mut() {
                cs.push((r, c.clone()));
            }
            let row = self.rows[r as usize].raw();
            pending = merge_axpy(&pending[start + 1..], &-c, &row[1..]);
            start = 0;
        }
        SparseVec::from_sorted(out)
    }

    /// The representative of `v` modulo the row space that avoids all pivot columns.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        self.reduce_inner(v, None)
    }

    /// Reduce, also returning the coefficients `c_r` with `v = Σ c_r row_r + remainder`.
    pub fn reduce_with_coords(&self, v: &SparseVec<F>) -> (SparseVec<F>, SparseVec<F>) {
        let mut cs = Vec::new();
        let rem = self.reduce_inner(v, Some(&mut cs));
        let coords = SparseVec::from_pairs(cs.into_iter().map(|(r, c)| (r as usize, c)));
        (rem, coords)
    }

    /// Coordinates of `v` in terms of the stored rows, or `None` if `v` is outside the row space.
    pub fn coordinates(&self, v: &SparseVec<F>) -> Option<SparseVec<F>> {
        let (rem, coords) = self.reduce_with_coords(v);
        rem.is_zero().then_some(coords)
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert `v`. Returns the index of the new row if `v` was independent.
    pub fn insert(&mut self, v: &SparseVec<F>) -> Option<usize> {
        let idx = self.inserted;
        self.inserted += 1;
        if self.tracks.is_none() {
            let r = self.reduce(v);
            return self.push_reduced(r);
        }
        let (r, coords) = self.reduce_with_coords(v);
        if r.is_zero() {
            return None;
        }
        let tracks = self.tracks.as_mut().expect("tracked");
        let mut track = SparseVec::unit(idx);
        for (row, c) in coords.iter() {
            track.add_assign_scaled(&-c.clone(), &tracks[row]);
        }
        let inv = r.leading().expect("nonzero").1.inv();
        tracks.push(track.scale(&inv));
        self.push_reduced(r)
    }

    fn push_reduced(&mut self, r: SparseVec<F>) -> Option<usize> {
        let (lead, c) = r.leading()?;
        debug_assert!(lead < self.ncols);
        let inv = c.inv();
        let r = r.scale(&inv);
        let k = self.rows.len();
        self.pivot_row[lead] = k as u32;
        self.pivots.push(lead);
        self.rows.push(r);
        Some(k)
    }

    /// Expression of stored row `k` as a combination of the inserted vectors (tracked mode only).
    pub fn track(&self, k: usize) -> Option<&SparseVec<F>> {
        self.tracks.as_ref().map(|t| &t[k])
    }

    /// Normal form of the unit vector at `col`.
    pub fn normal_form_of_unit(&self, col: usize) -> SparseVec<F> {
        self.reduce(&SparseVec::unit(col))
    }
}

/// Left kernel of a list of row vectors: combinations `Σ λ_i rows[i] = 0`.
///
/// Basis vectors are produced in input order: each one expresses the first
/// row that depends on its predecessors. Stops after `limit` vectors when given.
pub fn left_kernel<F: Scalar>(rows: &[SparseVec<F>], ncols: usize, limit: Option<usize>) -> Vec<SparseVec<F>> {
    let mut ech: Echelon<F> = Echelon::new(ncols);
    let mut tracks: Vec<SparseVec<F>> = Vec::new();
    let mut kernel = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if limit.is_some_and(|l| kernel.len() >= l) {
            break;
        }
        let (r, coords) = ech.reduce_with_coords(row);
        let mut track = SparseVec::unit(i);
        for (k, c) in coords.iter() {
            track.add_assign_scaled(&-c.clone(), &tracks[k]);
        }
        if r.is_zero() {
            kernel.push(track);
        } else {
            let inv = r.leading().expect("nonzero").1.inv();
            tracks.push(track.scale(&inv));
            ech.push_reduced(r);
        }
    }
    kernel
}

/// Rank of a list of sparse rows.
pub fn rank<F: Scalar>(rows: &[SparseVec<F>], ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// First dependency among `rows`, as a combination over row indices, if any.
pub fn first_dependency<F: Scalar>(rows: &[SparseVec<F>], ncols: usize) -> Option<SparseVec<F>> {
    left_kernel(rows, ncols, Some(1)).into_iter().next()
}
