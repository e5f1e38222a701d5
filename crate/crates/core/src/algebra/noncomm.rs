//! Degreewise expansion of `T(V)/I` by linear algebra on `A_{d-1} ⊗ V`.
//!
//! Degree `d` is built from degree `d − 1`: the column `b·n + x` stands for the
//! word `(normal word b)·x`. Since `I_{d-1} ⊗ V` is already zero in these
//! coordinates, `I_d` is spanned by the images of `u·r` for relations `r` and
//! normal words `u`. Rows with `u ≠ 1` span the image of `V ⊗ I_{d-1}`, so the
//! same echelon, before the bare relations are added, reduces modulo `I′`.

use std::sync::OnceLock;

use crate::field::Scalar;
use crate::linalg::{combine, Echelon, SparseVec};

use super::basis::Basis;

const NONE: u32 = u32::MAX;

pub(crate) type FieldRelation<F> = Vec<(F, Vec<u8>)>;

#[derive(Debug)]
pub(crate) struct NcLevel<F> {
    pub(crate) basis: Basis,
    /// `n · dim A_{d-1}`.
    ncols: usize,
    /// Image of `I_d`.
    full: Echelon<F>,
    /// Image of `V ⊗ I_{d-1}`.
    prime: Echelon<F>,
    col_to_basis: Vec<u32>,
    /// Relations of this degree that are independent modulo `V ⊗ I_{d-1} + I_{d-1} ⊗ V`,
    /// with their rows.
    minimal: Vec<(usize, SparseVec<F>)>,
    right: OnceLock<Vec<SparseVec<F>>>,
}

#[derive(Debug)]
pub(crate) struct NcExpansion<F> {
    n: usize,
    levels: Vec<NcLevel<F>>,
}

impl<F: Scalar> NcExpansion<F> {
    pub(crate) fn new(n: usize, relations: &[FieldRelation<F>], bound: usize) -> Self {
        let level0 = NcLevel {
            basis: Basis::unit(),
            ncols: 0,
            full: Echelon::new(0),
            prime: Echelon::new(0),
            col_to_basis: Vec::new(),
            minimal: Vec::new(),
            right: OnceLock::new(),
        };
        let mut exp = NcExpansion { n, levels: vec![level0] };
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

    pub(crate) fn minimal_relations(&self, d: usize) -> &[(usize, SparseVec<F>)] {
        &self.levels[d].minimal
    }

    /// `right_table(d)[b·n + x]` is `b·x` in `A_d`, for `b` a basis index of `A_{d-1}`.
    pub(crate) fn right_table(&self, d: usize) -> &[SparseVec<F>] {
        let level = &self.levels[d];
        level.right.get_or_init(|| {
            (0..level.ncols)
                .map(|c| {
                    let r = level.full.reduce(&SparseVec::unit(c));
                    r.remap_monotone(|j| Some(level.col_to_basis[j] as usize))
                })
                .collect()
        })
    }

    /// `v·x` for `v ∈ A_d`.
    pub(crate) fn right_mul_var(&self, d: usize, v: &SparseVec<F>, x: usize) -> SparseVec<F> {
        let table = self.right_table(d + 1);
        combine(v.iter().map(|(b, c)| (c.clone(), &table[b * self.n + x])))
    }

    /// Normal form of a word.
    pub(crate) fn nf_word(&self, w: &[u8]) -> SparseVec<F> {
        let mut v = SparseVec::unit(0);
        for (k, &x) in w.iter().enumerate() {
            v = self.right_mul_var(k, &v, x as usize);
        }
        v
    }

    /// Place `v ∈ A_{d-1}` into the columns of `A_{d-1} ⊗ V` next to generator `x`.
    pub(crate) fn tensor_column(&self, v: &SparseVec<F>, x: usize) -> SparseVec<F> {
        let n = self.n;
        v.remap_monotone(|b| Some(b * n + x))
    }

    /// The image in `A_{d-1} ⊗ V` of a degree-`d` combination of words.
    pub(crate) fn columns_of(&self, terms: &[(F, Vec<u8>)]) -> SparseVec<F> {
        let parts: Vec<(F, SparseVec<F>)> = terms
            .iter()
            .map(|(c, w)| {
                let (x, head) = w.split_last().expect("positive degree");
                (c.clone(), self.tensor_column(&self.nf_word(head), *x as usize))
            })
            .collect();
        combine(parts.iter().map(|(c, v)| (c.clone(), v)))
    }

    /// Coordinates of a degree-`d` element of `T(V)` in `T(V)_d / I′_d`:
    /// the reduced representative in `A_{d-1} ⊗ V` modulo `V ⊗ I_{d-1}`.
    pub(crate) fn reduce_mod_iprime(&self, d: usize, cols: &SparseVec<F>) -> SparseVec<F> {
        if d == 0 {
            return cols.clone();
        }
        self.levels[d].prime.reduce(cols)
    }

    /// `dim T(V)_d / I′_d`.
    pub(crate) fn iprime_codim(&self, d: usize) -> usize {
        if d == 0 {
            return 1;
        }
        let level = &self.levels[d];
        level.ncols - level.prime.rank()
    }

    /// Reduce columns of `A_{d-1} ⊗ V` all the way into `A_d`.
    #[cfg(test)]
    pub(crate) fn reduce_full(&self, d: usize, cols: &SparseVec<F>) -> SparseVec<F> {
        let level = &self.levels[d];
        level.full.reduce(cols).remap_monotone(|j| Some(level.col_to_basis[j] as usize))
    }

    #[allow(clippy::needless_range_loop)]
    fn push_level(&mut self, relations: &[FieldRelation<F>]) {
        let d = self.levels.len();
        let n = self.n;
        let prev_dim = self.dim(d - 1);
        let ncols = n * prev_dim;
        let mut prime = Echelon::new(ncols);
        for rel in relations {
            let e = rel[0].1.len();
            if e >= d {
                continue;
            }
            for u in 0..self.dim(d - e) {
                let parts: Vec<(F, SparseVec<F>)> = rel
                    .iter()
                    .map(|(c, w)| {
                        let (x, head) = w.split_last().expect("relations have degree at least 2");
                        let mut v = SparseVec::unit(u);
                        for (k, &y) in head.iter().enumerate() {
                            v = self.right_mul_var(d - e + k, &v, y as usize);
                        }
                        (c.clone(), self.tensor_column(&v, *x as usize))
                    })
                    .collect();
                prime.insert(&combine(parts.iter().map(|(c, v)| (c.clone(), v))));
            }
        }
        let mut full = prime.clone();
        let mut minimal = Vec::new();
        for (k, rel) in relations.iter().enumerate() {
            if rel[0].1.len() != d {
                continue;
            }
            let row = self.columns_of(rel);
            if full.insert(&row).is_some() {
                minimal.push((k, row));
            }
        }
        let mut col_to_basis = vec![NONE; ncols];
        let mut basis = Basis::empty(d);
        let mut word = Vec::with_capacity(d);
        for c in 0..ncols {
            if full.is_pivot(c) {
                continue;
            }
            let (p, x) = (c / n, c % n);
            word.clear();
            word.extend_from_slice(self.levels[d - 1].basis.word(p));
            word.push(x as u8);
            let suffix = if d == 1 {
                0
            } else {
                let prev = &self.levels[d - 1];
                let s = prev.col_to_basis[prev.basis.suffix(p) * n + x];
                debug_assert_ne!(s, NONE, "suffixes of normal words are normal");
                s as usize
            };
            col_to_basis[c] = basis.len() as u32;
            basis.push(&word, p, suffix);
        }
        self.levels.push(NcLevel { basis, ncols, full, prime, col_to_basis, minimal, right: OnceLock::new() });
    }
}
