use std::fmt;

use crate::field::Scalar;

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVec<F> {
    entries: Vec<(u32, F)>,
}

impl<F: Scalar> SparseVec<F> {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i as u32, F::one())] }
    }

    pub fn single(i: usize, c: F) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            SparseVec { entries: vec![(i as u32, c)] }
        }
    }

    /// Builds from entries already sorted by strictly increasing index. Zeros are dropped.
    pub fn from_sorted(entries: Vec<(u32, F)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        let mut entries = entries;
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    /// Builds from arbitrary (index, coefficient) pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, F)>>(pairs: I) -> Self {
        let mut v: Vec<(u32, F)> = pairs.into_iter().map(|(i, c)| (i as u32, c)).collect();
        v.sort_by_key(|e| e.0);
        let mut out: Vec<(u32, F)> = Vec::with_capacity(v.len());
        for (i, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == i => {
                    let s = last.1.clone() + c;
                    last.1 = s;
                }
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparseVec { entries: out }
    }

    pub fn from_dense(v: &[F]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<F> {
        let mut out = vec![F::zero(); len];
        for (i, c) in self.iter() {
            out[i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, &F)> + ExactSizeIterator + '_ {
        self.entries.iter().map(|(i, c)| (*i as usize, c))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(i, _)| *i as usize)
    }

    pub(crate) fn raw(&self) -> &[(u32, F)] {
        &self.entries
    }

    pub fn leading(&self) -> Option<(usize, &F)> {
        self.entries.first().map(|(i, c)| (*i as usize, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i as usize)
    }

    pub fn get(&self, i: usize) -> F {
        match self.entries.binary_search_by_key(&(i as u32), |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, x)| (*i, x.clone() * c.clone())).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, -x.clone())).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &F, other: &Self) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        SparseVec { entries: merge_axpy(&self.entries, c, &other.entries) }
    }

    pub fn add_assign_scaled(&mut self, c: &F, other: &Self) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        self.entries = merge_axpy(&self.entries, c, &other.entries);
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&-F::one(), other)
    }

    /// Shift every index by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        SparseVec { entries: self.entries.iter().map(|(i, c)| (*i + offset as u32, c.clone())).collect() }
    }

    /// Re-index through an increasing map; entries mapped to `None` are dropped.
    pub fn remap_monotone(&self, f: impl Fn(usize) -> Option<usize>) -> Self {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter_map(|(i, c)| f(*i as usize).map(|j| (j as u32, c.clone())))
                .collect(),
        }
    }

    /// Entries with index in `[lo, hi)`, re-based to start at 0.
    pub fn slice(&self, lo: usize, hi: usize) -> Self {
        let a = self.entries.partition_point(|e| (e.0 as usize) < lo);
        let b = self.entries.partition_point(|e| (e.0 as usize) < hi);
        SparseVec { entries: self.entries[a..b].iter().map(|(i, c)| (*i - lo as u32, c.clone())).collect() }
    }

    pub fn dot_dense(&self, v: &[F]) -> F {
        self.iter().fold(F::zero(), |acc, (i, c)| acc + c.clone() * v[i].clone())
    }

    /// Append an entry with index larger than every stored one.
    pub fn push(&mut self, i: usize, c: F) {
        debug_assert!(self.entries.last().is_none_or(|l| (l.0 as usize) < i));
        if !c.is_zero() {
            self.entries.push((i as u32, c));
        }
    }
}

impl<F: fmt::Debug> fmt::Debug for SparseVec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(i, c)| (i, c))).finish()
    }
}

/// Linear combination `Σ c_k v_k` of sparse vectors.
pub fn combine<'a, F: Scalar + 'a>(terms: impl IntoIterator<Item = (F, &'a SparseVec<F>)>) -> SparseVec<F> {
    SparseVec::from_pairs(
        terms
            .into_iter()
            .flat_map(|(c, v)| v.iter().map(move |(i, x)| (i, c.clone() * x.clone())).collect::<Vec<_>>()),
    )
}

pub(crate) fn merge_axpy<F: Scalar>(a: &[(u32, F)], c: &F, b: &[(u32, F)]) -> Vec<(u32, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ia, ib) = (a[i].0, b[j].0);
        if ia < ib {
            out.push(a[i].clone());
            i += 1;
        } else if ib < ia {
            out.push((ib, c.clone() * b[j].1.clone()));
            j += 1;
        } else {
            let s = a[i].1.clone() + c.clone() * b[j].1.clone();
            if !s.is_zero() {
                out.push((ia, s));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(k, x)| (*k, c.clone() * x.clone())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use num_traits::{One, Zero};

    type F = Fp<7>;

    fn v(pairs: &[(usize, i64)]) -> SparseVec<F> {
        SparseVec::from_pairs(pairs.iter().map(|&(i, c)| (i, F::from_i64(c))))
    }

    #[test]
    fn pairs_are_combined_and_zeros_dropped() {
        let x = v(&[(3, 1), (1, 2), (3, 6), (5, 0)]);
        assert_eq!(x.nnz(), 1);
        assert_eq!(x.get(1), F::from_i64(2));
        assert_eq!(x.get(3), F::zero());
    }

    #[test]
    fn axpy_cancels() {
        let a = v(&[(0, 1), (2, 3)]);
        let b = v(&[(2, 1), (4, 1)]);
        let c = a.add_scaled(&F::from_i64(-3), &b);
        assert_eq!(c, v(&[(0, 1), (4, -3)]));
        assert_eq!(c.leading(), Some((0, &F::one())));
    }

    #[test]
    fn slicing_and_shifting() {
        let a = v(&[(1, 1), (4, 2), (6, 3)]);
        assert_eq!(a.slice(3, 6), v(&[(1, 2)]));
        assert_eq!(a.shifted(2).slice(0, 4), v(&[(3, 1)]));
        assert_eq!(a.to_dense(7)[6], F::from_i64(3));
    }
}
