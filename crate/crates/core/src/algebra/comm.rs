//! Commutative expansion on multiset monomials.
//!
//! Monomials are nondecreasing words, ordered lexicographically within a
//! degree. `I_d` is spanned by the degree-`d` relations and `x·I_{d-1}`.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::field::Scalar;
use crate::linalg::{Echelon, SparseVec};

use super::basis::Basis;
use super::noncomm::FieldRelation;

const NONE: u32 = u32::MAX;

#[derive(Debug)]
struct CommLevel<F> {
    basis: Basis,
    /// All monomials of this degree, flattened.
    monos: Vec<u8>,
    index: HashMap<Vec<u8>, u32>,
    ideal: Echelon<F>,
    mono_to_basis: Vec<u32>,
    basis_to_mono: Vec<u32>,
    right: OnceLock<Vec<SparseVec<F>>>,
}

#[derive(Debug)]
pub(crate) struct CommExpansion<F> {
    n: usize,
    levels: Vec<CommLevel<F>>,
}

impl<F: Scalar> CommExpansion<F> {
    pub(crate) fn new(n: usize, relations: &[FieldRelation<F>], bound: usize) -> Self {
        let mut index = HashMap::new();
        index.insert(Vec::new(), 0);
        let level0 = CommLevel {
            basis: Basis::unit(),
            monos: Vec::new(),
            index,
            ideal: Echelon::new(1),
            mono_to_basis: vec![0],
            basis_to_mono: vec![0],
            right: OnceLock::new(),
        };
        let mut exp = CommExpansion { n, levels: vec![level0] };
        for _ in 1..=bound {
            exp.push_level(relations);
        }
        exp
    }

    pub(crate) fn dim(&self, d: usize) -> usize {
        self.levels[d].basis.len()
    }

    pub(crate) fn basis(&self, d: usize) -> &Basis {
        &self.levels[d].basis
    }

    fn mono(&self, d: usize, m: usize) -> &[u8] {
        &self.levels[d].monos[m * d..(m + 1) * d]
    }

    fn mono_count(&self, d: usize) -> usize {
        self.levels[d].monos.len().checked_div(d).unwrap_or(1)
    }

    fn times_var(&self, d: usize, m: usize, x: u8) -> usize {
        let mut w = self.mono(d, m).to_vec();
        let pos = w.partition_point(|&y| y <= x);
        w.insert(pos, x);
        self.levels[d + 1].index[&w] as usize
    }

    /// `right_table(d)[b·n + x]` is `b·x = x·b` in `A_d`.
    pub(crate) fn right_table(&self, d: usize) -> &[SparseVec<F>] {
        let level = &self.levels[d];
        level.right.get_or_init(|| {
            let prev = d - 1;
            let mut out = Vec::with_capacity(self.dim(prev) * self.n);
            for b in 0..self.dim(prev) {
                let m = self.levels[prev].basis_to_mono[b] as usize;
                for x in 0..self.n {
                    let target = self.times_var(prev, m, x as u8);
                    let r = level.ideal.reduce(&SparseVec::unit(target));
                    out.push(r.remap_monotone(|j| Some(level.mono_to_basis[j] as usize)));
                }
            }
            out
        })
    }

    fn push_level(&mut self, relations: &[FieldRelation<F>]) {
        let d = self.levels.len();
        let n = self.n;
        let mut monos = Vec::new();
        let mut index = HashMap::new();
        let mut count = 0u32;
        for m in 0..self.mono_count(d - 1) {
            let w = self.mono(d - 1, m);
            let lo = w.last().copied().unwrap_or(0);
            for x in lo..n as u8 {
                let mut word = w.to_vec();
                word.push(x);
                monos.extend_from_slice(&word);
                index.insert(word, count);
                count += 1;
            }
        }
        let mut ideal = Echelon::new(count as usize);
        for rel in relations.iter().filter(|r| r[0].1.len() == d) {
            let v = SparseVec::from_pairs(rel.iter().map(|(c, w)| {
                let mut w = w.clone();
                w.sort_unstable();
                (index[&w] as usize, c.clone())
            }));
            ideal.insert(&v);
        }
        let up = |m: usize, x: u8| -> usize {
            let mut w = self.mono(d - 1, m).to_vec();
            let pos = w.partition_point(|&y| y <= x);
            w.insert(pos, x);
            index[&w] as usize
        };
        let lower: Vec<SparseVec<F>> = self.levels[d - 1].ideal.rows().to_vec();
        for row in &lower {
            for x in 0..n as u8 {
                ideal.insert(&SparseVec::from_pairs(row.iter().map(|(m, c)| (up(m, x), c.clone()))));
            }
        }
        let mut mono_to_basis = vec![NONE; count as usize];
        let mut basis_to_mono = Vec::new();
        let mut basis = Basis::empty(d);
        let prev = &self.levels[d - 1];
        for m in 0..count as usize {
            if ideal.is_pivot(m) {
                continue;
            }
            let w = &monos[m * d..(m + 1) * d];
            let p = prev.mono_to_basis[prev.index[&w[..d - 1]] as usize];
            let s = prev.mono_to_basis[prev.index[&w[1..]] as usize];
            debug_assert!(p != NONE && s != NONE, "divisors of standard monomials are standard");
            mono_to_basis[m] = basis.len() as u32;
            basis_to_mono.push(m as u32);
            basis.push(w, p as usize, s as usize);
        }
        self.levels.push(CommLevel { basis, monos, index, ideal, mono_to_basis, basis_to_mono, right: OnceLock::new() });
    }
}
