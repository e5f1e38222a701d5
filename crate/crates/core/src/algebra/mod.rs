//! Connected graded algebras `T(V)/I` expanded degree by degree.

mod basis;
mod comm;
mod noncomm;
mod presentation;
mod tensor;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{bound, input, Error, Result};
use crate::field::Scalar;
use crate::linalg::{combine, SparseVec};
use crate::series::Series;

pub(crate) use basis::Basis;
use comm::CommExpansion;
use noncomm::{FieldRelation, NcExpansion};
pub use presentation::{Presentation, Relation, Word};
pub(crate) use presentation::word_label;
pub use tensor::TensorElement;
pub(crate) use tensor::element_label;

#[derive(Debug)]
enum Backend<F> {
    Noncommutative(NcExpansion<F>),
    Commutative(CommExpansion<F>),
}

/// A presented algebra with bases, normal forms and multiplication tables
/// through a fixed degree bound.
///
/// Elements of `A_d` are sparse coordinate vectors over the normal-form words
/// of degree `d`. Words are ordered by length, then lexicographically in the
/// declaration order of the generators; the smallest word of each element of
/// `I` is the one that gets rewritten.
pub struct Algebra<F: Scalar> {
    presentation: Presentation,
    bound: usize,
    backend: Backend<F>,
    left: Vec<OnceLock<Vec<SparseVec<F>>>>,
    shadow: OnceLock<NcExpansion<F>>,
}

fn field_relations<F: Scalar>(p: &Presentation) -> Result<Vec<FieldRelation<F>>> {
    let mut out = Vec::new();
    for r in p.relations() {
        let mut terms = Vec::new();
        for (c, w) in r.terms() {
            let c = F::from_ratio(c.numer(), c.denom())
                .ok_or_else(|| Error::Input(format!("coefficient {c} is undefined in characteristic {}", F::characteristic())))?;
            if !c.is_zero() {
                terms.push((c, w.clone()));
            }
        }
        if !terms.is_empty() {
            out.push(terms);
        }
    }
    Ok(out)
}

impl<F: Scalar> Algebra<F> {
    /// Expand `p` through degree `max_deg`.
    pub fn expand(p: &Presentation, max_deg: usize) -> Result<Self> {
        let rels = field_relations::<F>(p)?;
        let backend = if p.is_commutative() {
            Backend::Commutative(CommExpansion::new(p.n(), &rels, max_deg))
        } else {
            Backend::Noncommutative(NcExpansion::new(p.n(), &rels, max_deg))
        };
        Ok(Algebra {
            presentation: p.clone(),
            bound: max_deg,
            backend,
            left: (0..=max_deg).map(|_| OnceLock::new()).collect(),
            shadow: OnceLock::new(),
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn vars(&self) -> &[String] {
        self.presentation.vars()
    }

    pub fn n(&self) -> usize {
        self.presentation.n()
    }

    /// Largest degree available.
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_commutative(&self) -> bool {
        self.presentation.is_commutative()
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.presentation.is_polynomial_ring()
    }

    pub fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.bound {
            return bound(format!("degree {d} requested from an algebra expanded through degree {}", self.bound));
        }
        Ok(())
    }

    pub(crate) fn basis(&self, d: usize) -> &Basis {
        match &self.backend {
            Backend::Noncommutative(e) => e.basis(d),
            Backend::Commutative(e) => e.basis(d),
        }
    }

    /// `dim A_d`. Panics beyond the bound.
    pub fn dim(&self, d: usize) -> usize {
        assert!(d <= self.bound, "degree {d} beyond the expansion bound {}", self.bound);
        match &self.backend {
            Backend::Noncommutative(e) => e.dim(d),
            Backend::Commutative(e) => e.dim(d),
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.bound).map(|d| self.dim(d)).collect()
    }

    pub fn hilbert_series(&self) -> Series {
        Series::new(self.dims().into_iter().map(|d| d as i64).collect()).expect("degree 0 is always present")
    }

    /// The normal-form word of basis element `b` of `A_d`.
    pub fn word(&self, d: usize, b: usize) -> &[u8] {
        self.basis(d).word(b)
    }

    pub fn word_label(&self, w: &[u8]) -> String {
        word_label(self.vars(), w)
    }

    pub fn element_label(&self, d: usize, v: &SparseVec<F>) -> String {
        element_label(self.vars(), v.iter().map(|(b, c)| (self.word(d, b), c.clone())))
    }

    fn right_table(&self, d: usize) -> &[SparseVec<F>] {
        match &self.backend {
            Backend::Noncommutative(e) => e.right_table(d),
            Backend::Commutative(e) => e.right_table(d),
        }
    }

    /// `left_table(d)[b·n + x]` is `x·b` in `A_d` for `b` a basis index of `A_{d-1}`.
    pub(crate) fn left_table(&self, d: usize) -> &[SparseVec<F>] {
        if let Backend::Commutative(e) = &self.backend {
            return e.right_table(d);
        }
        self.left[d].get_or_init(|| {
            let n = self.n();
            if d == 1 {
                return (0..n).map(SparseVec::unit).collect();
            }
            let prev = self.basis(d - 1);
            let lower = self.left_table(d - 1);
            let right = self.right_table(d);
            let mut out = Vec::with_capacity(prev.len() * n);
            for b in 0..prev.len() {
                let (p, y) = (prev.prefix(b), prev.last(b));
                for x in 0..n {
                    let v = &lower[p * n + x];
                    out.push(combine(v.iter().map(|(k, c)| (c.clone(), &right[k * n + y]))));
                }
            }
            out
        })
    }

    /// `x·v` for `v ∈ A_d`. Panics beyond the bound.
    pub fn left_mul_var(&self, d: usize, v: &SparseVec<F>, x: usize) -> SparseVec<F> {
        let table = self.left_table(d + 1);
        let n = self.n();
        combine(v.iter().map(|(b, c)| (c.clone(), &table[b * n + x])))
    }

    /// `v·x` for `v ∈ A_d`. Panics beyond the bound.
    pub fn right_mul_var(&self, d: usize, v: &SparseVec<F>, x: usize) -> SparseVec<F> {
        let table = self.right_table(d + 1);
        let n = self.n();
        combine(v.iter().map(|(b, c)| (c.clone(), &table[b * n + x])))
    }

    /// The product of `a ∈ A_p` and `c ∈ A_q`.
    pub fn multiply(&self, p: usize, a: &SparseVec<F>, q: usize, c: &SparseVec<F>) -> Result<SparseVec<F>> {
        self.check_degree(p + q)?;
        Ok(self.mul_unchecked(p, a, q, c))
    }

    pub(crate) fn mul_unchecked(&self, p: usize, a: &SparseVec<F>, q: usize, c: &SparseVec<F>) -> SparseVec<F> {
        let mut parts: Vec<(F, SparseVec<F>)> = Vec::new();
        if p <= q {
            for (b, coeff) in a.iter() {
                let mut r = c.clone();
                for (k, &x) in self.word(p, b).iter().rev().enumerate() {
                    r = self.left_mul_var(q + k, &r, x as usize);
                }
                parts.push((coeff.clone(), r));
            }
        } else {
            for (b, coeff) in c.iter() {
                let mut r = a.clone();
                for (k, &x) in self.word(q, b).iter().enumerate() {
                    r = self.right_mul_var(p + k, &r, x as usize);
                }
                parts.push((coeff.clone(), r));
            }
        }
        combine(parts.iter().map(|(c, v)| (c.clone(), v)))
    }

    /// Normal form of a word in the generators.
    pub fn nf_word(&self, w: &[u8]) -> Result<SparseVec<F>> {
        self.check_degree(w.len())?;
        let mut v = SparseVec::unit(0);
        for (k, &x) in w.iter().enumerate() {
            v = self.right_mul_var(k, &v, x as usize);
        }
        Ok(v)
    }

    /// Parse a homogeneous element such as `2ab - ba` and return its degree and normal form.
    pub fn parse_element(&self, s: &str) -> Result<(usize, SparseVec<F>)> {
        let r = Relation::parse(s, self.vars())?;
        let d = r.degree().ok_or_else(|| Error::Input(format!("'{s}' is not homogeneous")))?;
        self.check_degree(d)?;
        let mut parts = Vec::new();
        for (c, w) in r.terms() {
            let c = F::from_ratio(c.numer(), c.denom())
                .ok_or_else(|| Error::Input(format!("coefficient {c} is undefined in this field")))?;
            parts.push((c, self.nf_word(w)?));
        }
        Ok((d, combine(parts.iter().map(|(c, v)| (c.clone(), v)))))
    }

    /// The canonical lift: each basis element goes to its normal-form word.
    pub fn lift(&self, d: usize, v: &SparseVec<F>) -> TensorElement<F> {
        TensorElement::from_terms(d, v.iter().map(|(b, c)| (self.word(d, b).to_vec(), c.clone())))
    }

    /// The image of a tensor element in `A`.
    pub fn reduce_tensor(&self, t: &TensorElement<F>) -> Result<SparseVec<F>> {
        let mut parts = Vec::new();
        for (w, c) in t.terms() {
            parts.push((c.clone(), self.nf_word(w)?));
        }
        Ok(combine(parts.iter().map(|(c, v)| (c.clone(), v))))
    }

    /// The expansion of the tensor-algebra presentation (commutators included
    /// for commutative algebras), used for reduction modulo `I′`.
    pub(crate) fn tensor_expansion(&self) -> &NcExpansion<F> {
        match &self.backend {
            Backend::Noncommutative(e) => e,
            Backend::Commutative(_) => self.shadow.get_or_init(|| {
                let rels = field_relations::<F>(&self.presentation.tensor_presentation())
                    .expect("coefficients were already accepted");
                NcExpansion::new(self.n(), &rels, self.bound)
            }),
        }
    }

    /// Coordinates of `t` in `T(V)_d / I′_d`, `I′ = V ⊗ I + I ⊗ V`.
    pub fn reduce_mod_iprime(&self, t: &TensorElement<F>) -> Result<SparseVec<F>> {
        let d = t.degree();
        self.check_degree(d)?;
        if d == 0 {
            let c = t.terms().next().map(|(_, c)| c.clone()).unwrap_or_else(F::zero);
            return Ok(SparseVec::single(0, c));
        }
        let e = self.tensor_expansion();
        let terms: Vec<(F, Vec<u8>)> = t.terms().map(|(w, c)| (c.clone(), w.to_vec())).collect();
        Ok(e.reduce_mod_iprime(d, &e.columns_of(&terms)))
    }

    /// `dim T(V)_d / I′_d`.
    pub fn iprime_codim(&self, d: usize) -> Result<usize> {
        self.check_degree(d)?;
        Ok(self.tensor_expansion().iprime_codim(d))
    }

    /// `Σ_k a_k·b_k` reduced modulo `I′`, where each `a_k, b_k` is a lifted normal form.
    /// Avoids materializing the product in `T(V)`.
    pub(crate) fn product_mod_iprime(&self, pairs: &[(usize, &SparseVec<F>, usize, &SparseVec<F>)]) -> SparseVec<F> {
        let e = self.tensor_expansion();
        let mut parts: Vec<(F, SparseVec<F>)> = Vec::new();
        let mut degree = None;
        for &(p, a, q, c) in pairs {
            debug_assert!(q >= 1);
            degree = Some(p + q);
            let terms: Vec<(F, Vec<u8>)> = a.iter().map(|(b, x)| (x.clone(), self.word(p, b).to_vec())).collect();
            // normal form of the left factor inside the tensor expansion
            let mut left = SparseVec::zero();
            for (x, w) in &terms {
                left.add_assign_scaled(x, &e.nf_word(w));
            }
            for (b, y) in c.iter() {
                let w = self.word(q, b);
                let (last, head) = w.split_last().expect("positive degree");
                let mut v = left.clone();
                for (k, &z) in head.iter().enumerate() {
                    v = e.right_mul_var(p + k, &v, z as usize);
                }
                parts.push((y.clone(), e.tensor_column(&v, *last as usize)));
            }
        }
        let Some(d) = degree else {
            return SparseVec::zero();
        };
        e.reduce_mod_iprime(d, &combine(parts.iter().map(|(c, v)| (c.clone(), v))))
    }

    /// Relations of degree `d` that are minimal (independent modulo `V ⊗ I + I ⊗ V`),
    /// as rows over `A_{d-1} ⊗ V` with column `b·n + x`. Only for noncommutative algebras.
    pub(crate) fn minimal_relation_rows(&self, d: usize) -> Option<&[(usize, SparseVec<F>)]> {
        match &self.backend {
            Backend::Noncommutative(e) => Some(e.minimal_relations(d)),
            Backend::Commutative(_) => None,
        }
    }

    /// Number of minimal relations of each degree, from the tensor expansion.
    pub fn minimal_relation_degrees(&self) -> Vec<usize> {
        let e = self.tensor_expansion();
        (0..=self.bound).flat_map(|d| std::iter::repeat_n(d, e.minimal_relations(d).len())).collect()
    }

    /// An element given by explicit coordinates, checked against `dim A_d`.
    pub fn element(&self, d: usize, coords: &[(usize, F)]) -> Result<SparseVec<F>> {
        self.check_degree(d)?;
        if let Some((b, _)) = coords.iter().find(|(b, _)| *b >= self.dim(d)) {
            return input(format!("basis index {b} out of range in degree {d}"));
        }
        Ok(SparseVec::from_pairs(coords.iter().cloned()))
    }
}

impl<F: Scalar> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, through degree {})", self.presentation, self.bound)
    }
}

#[cfg(test)]
mod tests;
