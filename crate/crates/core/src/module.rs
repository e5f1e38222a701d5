//! Graded left modules realized as subquotients `X/Y` of the algebra, with `Y ⊆ X`
//! left ideals (or two-sided ideals) computed degree by degree.

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{input, Error, Result};
use crate::field::Scalar;
use crate::linalg::{Echelon, SparseVec};
use crate::resolution::Bounds;
use crate::stanley_reisner::MonomialIdeal;

/// A homogeneous subspace of `A_t`.
#[derive(Clone, Debug)]
enum Space<F> {
    Zero,
    Full,
    Span(Echelon<F>),
}

impl<F: Scalar> Space<F> {
    fn from_echelon(e: Echelon<F>, dim: usize) -> Self {
        if e.rank() == 0 {
            Space::Zero
        } else if e.rank() == dim {
            Space::Full
        } else {
            Space::Span(e)
        }
    }

    fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        match self {
            Space::Zero => v.clone(),
            Space::Full => SparseVec::zero(),
            Space::Span(e) => e.reduce(v),
        }
    }

    fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// A spanning set (unit vectors when full).
    fn spanning(&self, dim: usize) -> Vec<SparseVec<F>> {
        match self {
            Space::Zero => Vec::new(),
            Space::Full => (0..dim).map(SparseVec::unit).collect(),
            Space::Span(e) => e.rows().to_vec(),
        }
    }

    fn is_subspace_of(&self, other: &Space<F>, dim: usize) -> bool {
        match (self, other) {
            (Space::Zero, _) | (_, Space::Full) => true,
            _ => self.spanning(dim).iter().all(|v| other.contains(v)),
        }
    }

    fn sum(&self, other: &Space<F>, dim: usize) -> Space<F> {
        match (self, other) {
            (Space::Full, _) | (_, Space::Full) => Space::Full,
            (Space::Zero, s) | (s, Space::Zero) => s.clone(),
            (Space::Span(a), Space::Span(b)) => {
                let mut e = a.clone();
                for r in b.rows() {
                    e.insert(r);
                }
                Space::from_echelon(e, dim)
            }
        }
    }
}

/// How a module was built, for reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Trivial,
    Ideal { two_sided: bool },
    CyclicQuotient { two_sided: bool },
    Quotient,
    Component { lo: usize, hi: usize },
}

#[derive(Clone, Debug)]
enum Coords<F> {
    Empty,
    Units,
    NonPivots(Vec<u32>),
    Reduced(Echelon<F>),
}

#[derive(Clone, Debug)]
struct Slice<F> {
    basis: Vec<SparseVec<F>>,
    coords: Coords<F>,
}

/// A graded left `A`-module through a degree bound, as a subquotient of `A`.
#[derive(Clone)]
pub struct Module<F: Scalar> {
    alg: Arc<Algebra<F>>,
    bound: usize,
    provenance: Provenance,
    description: String,
    gens_x: Vec<(usize, SparseVec<F>)>,
    gens_y: Vec<(usize, SparseVec<F>)>,
    xs: Vec<Space<F>>,
    ys: Vec<Space<F>>,
    slices: Vec<Slice<F>>,
    /// `action[t][x][k]`: coordinates of `x · e_k` in `M_{t+1}`.
    action: Vec<Vec<Vec<SparseVec<F>>>>,
}

const NONE: u32 = u32::MAX;

fn closure<F: Scalar>(alg: &Algebra<F>, bound: usize, gens: &[(usize, SparseVec<F>)], two_sided: bool) -> Vec<Space<F>> {
    let mut out: Vec<Space<F>> = Vec::with_capacity(bound + 1);
    for t in 0..=bound {
        let dim = alg.dim(t);
        if t > 0 && matches!(out[t - 1], Space::Full) {
            out.push(Space::Full);
            continue;
        }
        let mut e = Echelon::new(dim);
        for (_, g) in gens.iter().filter(|(d, _)| *d == t) {
            e.insert(g);
        }
        if t > 0 {
            if let Space::Span(prev) = &out[t - 1] {
                for r in prev.rows() {
                    for x in 0..alg.n() {
                        e.insert(&alg.left_mul_var(t - 1, r, x));
                        if two_sided {
                            e.insert(&alg.right_mul_var(t - 1, r, x));
                        }
                    }
                }
            }
        }
        out.push(Space::from_echelon(e, dim));
    }
    out
}

fn check_gens<F: Scalar>(alg: &Algebra<F>, gens: &[(usize, SparseVec<F>)]) -> Result<()> {
    for (d, g) in gens {
        alg.check_degree(*d)?;
        if g.max_index().is_some_and(|m| m >= alg.dim(*d)) {
            return input(format!("generator coordinates out of range in degree {d}"));
        }
    }
    Ok(())
}

impl<F: Scalar> Module<F> {
    #[allow(clippy::too_many_arguments)]
    fn from_spaces(
        alg: Arc<Algebra<F>>,
        bound: usize,
        provenance: Provenance,
        description: String,
        gens_x: Vec<(usize, SparseVec<F>)>,
        gens_y: Vec<(usize, SparseVec<F>)>,
        xs: Vec<Space<F>>,
        ys: Vec<Space<F>>,
    ) -> Self {
        let mut slices = Vec::with_capacity(bound + 1);
        for t in 0..=bound {
            let dim = alg.dim(t);
            let slice = match (&xs[t], &ys[t]) {
                (Space::Zero, _) | (_, Space::Full) => Slice { basis: Vec::new(), coords: Coords::Empty },
                (Space::Full, Space::Zero) => {
                    Slice { basis: (0..dim).map(SparseVec::unit).collect(), coords: Coords::Units }
                }
                (Space::Full, Space::Span(y)) => {
                    let mut map = vec![NONE; dim];
                    let mut basis = Vec::new();
                    for c in y.non_pivots() {
                        map[c] = basis.len() as u32;
                        basis.push(SparseVec::unit(c));
                    }
                    Slice { basis, coords: Coords::NonPivots(map) }
                }
                (Space::Span(x), y) => {
                    let mut e = Echelon::new(dim);
                    for r in x.rows() {
                        e.insert(&y.reduce(r));
                    }
                    Slice { basis: e.rows().to_vec(), coords: Coords::Reduced(e) }
                }
            };
            slices.push(slice);
        }
        let mut m = Module { alg, bound, provenance, description, gens_x, gens_y, xs, ys, slices, action: Vec::new() };
        let mut action = Vec::with_capacity(bound);
        for t in 0..bound {
            let per_var = (0..m.alg.n())
                .map(|x| {
                    m.slices[t]
                        .basis
                        .iter()
                        .map(|e| {
                            let img = m.alg.left_mul_var(t, e, x);
                            m.coords(t + 1, &img).expect("X is closed under left multiplication")
                        })
                        .collect()
                })
                .collect();
            action.push(per_var);
        }
        m.action = action;
        m
    }

    /// The trivial module `k = A/A_+`.
    pub fn trivial(alg: Arc<Algebra<F>>, bound: usize) -> Result<Self> {
        alg.check_degree(bound)?;
        let gens_x = vec![(0, SparseVec::unit(0))];
        let gens_y: Vec<_> = (0..alg.n()).map(|x| (1, SparseVec::unit(x))).collect();
        let xs = closure(&alg, bound, &gens_x, false);
        let ys = closure(&alg, bound, &gens_y, false);
        Ok(Self::from_spaces(alg, bound, Provenance::Trivial, "k".into(), gens_x, gens_y, xs, ys))
    }

    /// The left ideal (or two-sided ideal) generated by homogeneous elements of degree at least 2.
    pub fn ideal(alg: Arc<Algebra<F>>, gens: Vec<(usize, SparseVec<F>)>, two_sided: bool, bound: usize) -> Result<Self> {
        alg.check_degree(bound)?;
        check_gens(&alg, &gens)?;
        if let Some((d, _)) = gens.iter().find(|(d, g)| *d < 2 && !g.is_zero()) {
            return input(format!("ideal generator of degree {d}; generators must have degree at least 2"));
        }
        let description = format!(
            "{}({})",
            if two_sided { "two-sided ideal " } else { "ideal " },
            gens.iter().map(|(d, g)| alg.element_label(*d, g)).collect::<Vec<_>>().join(", ")
        );
        let xs = closure(&alg, bound, &gens, two_sided);
        let ys = vec![Space::Zero; bound + 1];
        Ok(Self::from_spaces(alg, bound, Provenance::Ideal { two_sided }, description, gens, Vec::new(), xs, ys))
    }

    /// `A/L` for the left (or two-sided) ideal `L` generated by `gens` (any positive degree).
    pub fn cyclic_quotient(alg: Arc<Algebra<F>>, gens: Vec<(usize, SparseVec<F>)>, two_sided: bool, bound: usize) -> Result<Self> {
        alg.check_degree(bound)?;
        check_gens(&alg, &gens)?;
        if gens.iter().any(|(d, g)| *d == 0 && !g.is_zero()) {
            return input("quotient by a unit ideal");
        }
        let description = format!(
            "A/({})",
            gens.iter().map(|(d, g)| alg.element_label(*d, g)).collect::<Vec<_>>().join(", ")
        );
        let gens_x = vec![(0, SparseVec::unit(0))];
        let xs = closure(&alg, bound, &gens_x, false);
        let ys = closure(&alg, bound, &gens, two_sided);
        Ok(Self::from_spaces(alg, bound, Provenance::CyclicQuotient { two_sided }, description, gens_x, gens, xs, ys))
    }

    /// `M/L` for a submodule `L` of `M` realized over the same algebra: the result is
    /// `X_M / (Y_M + X_L)`, which needs `X_L ⊆ X_M` and `Y_L ⊆ Y_M`.
    pub fn quotient(m: &Module<F>, l: &Module<F>) -> Result<Self> {
        if !Arc::ptr_eq(&m.alg, &l.alg) {
            return input("quotient of modules over different algebras");
        }
        let bound = m.bound.min(l.bound);
        let mut ys = Vec::with_capacity(bound + 1);
        for t in 0..=bound {
            let dim = m.alg.dim(t);
            if !l.xs[t].is_subspace_of(&m.xs[t], dim) || !l.ys[t].is_subspace_of(&m.ys[t], dim) {
                return input(format!("the second module is not a submodule of the first in degree {t}"));
            }
            ys.push(m.ys[t].sum(&l.xs[t], dim));
        }
        let gens_y = m.gens_y.iter().chain(&l.gens_x).cloned().collect();
        let description = format!("({}) / ({})", m.description, l.description);
        Ok(Self::from_spaces(
            m.alg.clone(),
            bound,
            Provenance::Quotient,
            description,
            m.gens_x.clone(),
            gens_y,
            m.xs[..=bound].to_vec(),
            ys,
        ))
    }

    /// `M_⟨lo,hi⟩ = Σ_{t=lo}^{hi} A·M_t`.
    pub fn component(&self, lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return input(format!("component bounds {lo} > {hi}"));
        }
        let mut gens: Vec<(usize, SparseVec<F>)> = Vec::new();
        for t in lo..=hi.min(self.bound) {
            for v in self.slices[t].basis.iter() {
                gens.push((t, v.clone()));
            }
        }
        let inner = closure(&self.alg, self.bound, &gens, false);
        let xs: Vec<Space<F>> =
            (0..=self.bound).map(|t| inner[t].sum(&self.ys[t], self.alg.dim(t))).collect();
        let description = format!("({})<{lo},{hi}>", self.description);
        Ok(Self::from_spaces(
            self.alg.clone(),
            self.bound,
            Provenance::Component { lo, hi },
            description,
            gens.into_iter().chain(self.gens_y.iter().cloned()).collect(),
            self.gens_y.clone(),
            xs,
            self.ys.clone(),
        ))
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.alg
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn dim(&self, t: usize) -> usize {
        self.slices[t].basis.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.bound).map(|t| self.dim(t)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.slices.iter().all(|s| s.basis.is_empty())
    }

    /// Least degree with `M_t ≠ 0`.
    pub fn bottom(&self) -> Option<usize> {
        (0..=self.bound).find(|&t| self.dim(t) > 0)
    }

    /// Representative in `A_t` of basis element `k` of `M_t`.
    pub fn basis_element(&self, t: usize, k: usize) -> &SparseVec<F> {
        &self.slices[t].basis[k]
    }

    /// Coordinates in `M_t` of `v ∈ A_t`, or `None` when `v ∉ X_t`.
    pub fn coords(&self, t: usize, v: &SparseVec<F>) -> Option<SparseVec<F>> {
        let r = self.ys[t].reduce(v);
        match &self.slices[t].coords {
            Coords::Empty => self.xs[t].contains(v).then(SparseVec::zero),
            Coords::Units => Some(r),
            Coords::NonPivots(map) => Some(r.remap_monotone(|c| Some(map[c] as usize))),
            Coords::Reduced(e) => e.coordinates(&r),
        }
    }

    /// `x · m` for `m ∈ M_t` in coordinates.
    pub fn act(&self, t: usize, x: usize, m: &SparseVec<F>) -> SparseVec<F> {
        let rows = &self.action[t][x];
        crate::linalg::combine(m.iter().map(|(k, c)| (c.clone(), &rows[k])))
    }

    /// `a · m` for `a ∈ A_p`, `m ∈ M_t`.
    pub fn act_element(&self, p: usize, a: &SparseVec<F>, t: usize, m: &SparseVec<F>) -> SparseVec<F> {
        let mut parts: Vec<(F, SparseVec<F>)> = Vec::new();
        for (b, c) in a.iter() {
            let mut r = m.clone();
            for (k, &x) in self.alg.word(p, b).iter().rev().enumerate() {
                r = self.act(t + k, x as usize, &r);
            }
            parts.push((c.clone(), r));
        }
        crate::linalg::combine(parts.iter().map(|(c, v)| (c.clone(), v)))
    }

    /// Element of `A_t` representing `m ∈ M_t`.
    pub fn representative(&self, t: usize, m: &SparseVec<F>) -> SparseVec<F> {
        crate::linalg::combine(m.iter().map(|(k, c)| (c.clone(), &self.slices[t].basis[k])))
    }

    pub fn element_label(&self, t: usize, m: &SparseVec<F>) -> String {
        self.alg.element_label(t, &self.representative(t, m))
    }

    /// Whether right multiplication by each generator preserves `X` and `Y`,
    /// so that `m ↦ m·x` is a well-defined map of left modules.
    pub fn has_right_action(&self) -> bool {
        (0..self.bound).all(|t| {
            let dim = self.alg.dim(t);
            (0..self.alg.n()).all(|x| {
                let ok = |s: &Space<F>, next: &Space<F>| {
                    s.spanning(dim).iter().all(|v| next.contains(&self.alg.right_mul_var(t, v, x)))
                };
                ok(&self.xs[t], &self.xs[t + 1]) && ok(&self.ys[t], &self.ys[t + 1])
            })
        })
    }

    /// `m · x` for `m ∈ M_t`; requires [`Module::has_right_action`].
    pub fn right_act(&self, t: usize, x: usize, m: &SparseVec<F>) -> Result<SparseVec<F>> {
        let rep = self.representative(t, m);
        let img = self.alg.right_mul_var(t, &rep, x);
        self.coords(t + 1, &img).ok_or_else(|| Error::Input("right multiplication leaves the module".into()))
    }

    /// A degree past which no Betti numbers can occur, when one is known
    /// without computation: over a polynomial ring, for modules built from
    /// monomials, the degree of the lcm of all monomial generators involved.
    pub fn degree_certificate(&self) -> Option<usize> {
        if !self.alg.is_polynomial_ring() {
            return None;
        }
        let n = self.alg.n();
        let lcm_degree = |gens: &[(usize, SparseVec<F>)]| -> Option<usize> {
            let mut exps = vec![0usize; n];
            for (d, g) in gens {
                if g.is_zero() {
                    continue;
                }
                if g.nnz() != 1 {
                    return None;
                }
                let (b, _) = g.leading().expect("nonzero");
                let mut e = vec![0usize; n];
                for &x in self.alg.word(*d, b) {
                    e[x as usize] += 1;
                }
                for (a, b) in exps.iter_mut().zip(e) {
                    *a = (*a).max(b);
                }
            }
            Some(exps.iter().sum())
        };
        Some(lcm_degree(&self.gens_x)?.max(lcm_degree(&self.gens_y)?))
    }
}

impl<F: Scalar> fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module({}, dims {:?})", self.description, self.dims())
    }
}

/// A module over a given algebra, described by generator strings.
#[derive(Clone, Debug, PartialEq, Eq, serde::Deserialize, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleSpec {
    /// The residue field `k = A/A₊`.
    Trivial,
    /// The left ideal generated by the elements.
    Ideal(Vec<String>),
    /// The two-sided ideal generated by the elements.
    TwoSided(Vec<String>),
    /// `A` modulo the left ideal generated by the elements.
    Cyclic(Vec<String>),
    /// `I/J` for left ideals `J ⊆ I`.
    Quotient { gens: Vec<String>, sub: Vec<String> },
    /// `I_⟨lo,hi⟩ = Σ_{lo ≤ t ≤ hi} A·I_t`.
    Component { lo: usize, hi: usize, ideal: Vec<String> },
}

impl ModuleSpec {
    pub fn build<F: Scalar>(&self, alg: &Arc<Algebra<F>>, bound: usize) -> Result<Module<F>> {
        let elems = |gens: &[String]| -> Result<Vec<(usize, SparseVec<F>)>> {
            gens.iter().map(|g| alg.parse_element(g)).collect()
        };
        match self {
            ModuleSpec::Trivial => Module::trivial(alg.clone(), bound),
            ModuleSpec::Ideal(g) => Module::ideal(alg.clone(), elems(g)?, false, bound),
            ModuleSpec::TwoSided(g) => Module::ideal(alg.clone(), elems(g)?, true, bound),
            ModuleSpec::Cyclic(g) => Module::cyclic_quotient(alg.clone(), elems(g)?, false, bound),
            ModuleSpec::Quotient { gens, sub } => {
                let i = Module::ideal(alg.clone(), elems(gens)?, false, bound)?;
                let j = Module::ideal(alg.clone(), elems(sub)?, false, bound)?;
                Module::quotient(&i, &j)
            }
            ModuleSpec::Component { lo, hi, ideal } => {
                Module::ideal(alg.clone(), elems(ideal)?, false, bound)?.component(*lo, *hi)
            }
        }
    }

    /// Every generator string mentioned.
    pub fn generators(&self) -> Vec<&str> {
        match self {
            ModuleSpec::Trivial => Vec::new(),
            ModuleSpec::Ideal(g) | ModuleSpec::TwoSided(g) | ModuleSpec::Cyclic(g) => {
                g.iter().map(String::as_str).collect()
            }
            ModuleSpec::Quotient { gens, sub } => gens.iter().chain(sub).map(String::as_str).collect(),
            ModuleSpec::Component { ideal, .. } => ideal.iter().map(String::as_str).collect(),
        }
    }

    /// Default bounds: over a polynomial ring with monomial generators,
    /// [`Bounds::polynomial_module`]; otherwise [`Bounds::quotient_algebra`].
    pub fn default_bounds(&self, vars: &[String], polynomial_ring: bool) -> Bounds {
        if !polynomial_ring {
            return Bounds::quotient_algebra();
        }
        let names: Vec<&str> = vars.iter().map(String::as_str).collect();
        match MonomialIdeal::from_strs(&names, &self.generators()) {
            Ok(ideal) => Bounds::polynomial_module(vars.len(), ideal.lcm_degree()),
            Err(_) => Bounds::quotient_algebra(),
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Trivial => write!(f, "k"),
            ModuleSpec::Ideal(g) => write!(f, "<{}>", g.join(", ")),
            ModuleSpec::TwoSided(g) => write!(f, "two-sided <{}>", g.join(", ")),
            ModuleSpec::Cyclic(g) => write!(f, "A/<{}>", g.join(", ")),
            ModuleSpec::Quotient { gens, sub } => write!(f, "<{}>/<{}>", gens.join(", "), sub.join(", ")),
            ModuleSpec::Component { lo, hi, ideal } => write!(f, "<{}>_<{lo},{hi}>", ideal.join(", ")),
        }
    }
}

/// The generators of a monomial ideal as elements of `alg`, matching variables by name.
pub fn monomial_elements<F: Scalar>(alg: &Algebra<F>, ideal: &MonomialIdeal) -> Result<Vec<(usize, SparseVec<F>)>> {
    let mut index = Vec::with_capacity(ideal.n());
    for v in ideal.vars() {
        match alg.vars().iter().position(|w| w == v) {
            Some(k) => index.push(k as u8),
            None => return input(format!("variable '{v}' of the ideal is not a generator of the algebra")),
        }
    }
    ideal
        .gens()
        .iter()
        .map(|e| {
            let word: Vec<u8> = e.iter().zip(&index).flat_map(|(&k, &x)| std::iter::repeat_n(x, k as usize)).collect();
            Ok((word.len(), alg.nf_word(&word)?))
        })
        .collect()
}

/// Parse generators such as `["abc", "cde"]` into algebra elements.
pub fn parse_elements<F: Scalar>(alg: &Algebra<F>, gens: &[&str]) -> Result<Vec<(usize, SparseVec<F>)>> {
    gens.iter().map(|g| alg.parse_element(g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Presentation;
    use crate::field::Gf32003;

    type F = Gf32003;

    fn s(vars: &[&str], d: usize) -> Arc<Algebra<F>> {
        Arc::new(Algebra::expand(&Presentation::polynomial_ring(vars), d).unwrap())
    }

    #[test]
    fn trivial_module_dims() {
        let a = s(&["a", "b", "c"], 4);
        let k = Module::trivial(a, 4).unwrap();
        assert_eq!(k.dims(), vec![1, 0, 0, 0, 0]);
        assert_eq!(k.degree_certificate(), Some(3));
    }

    #[test]
    fn prop_74_ideal_dims() {
        let a = s(&["a", "b", "c", "d", "e"], 5);
        let gens = parse_elements(&a, &["abc", "cde"]).unwrap();
        let j = Module::ideal(a, gens, false, 5).unwrap();
        assert_eq!(j.dims(), vec![0, 0, 0, 2, 10, 29]);
        assert_eq!(j.bottom(), Some(3));
        assert_eq!(j.degree_certificate(), Some(5));
    }

    #[test]
    fn linear_generators_rejected() {
        let a = s(&["a", "b"], 3);
        let gens = parse_elements(&a, &["a"]).unwrap();
        assert!(Module::ideal(a, gens, false, 3).is_err());
    }

    #[test]
    fn quotients() {
        let a = s(&["a", "b", "c", "d", "e", "f"], 6);
        let i = Module::ideal(a.clone(), parse_elements(&a, &["abc", "def", "abef"]).unwrap(), false, 6).unwrap();
        let j = Module::ideal(a.clone(), parse_elements(&a, &["abc", "abef"]).unwrap(), false, 6).unwrap();
        let q = Module::quotient(&i, &j).unwrap();
        // cyclic on def, with ab·def = 0
        assert_eq!(q.dims()[3], 1);
        assert_eq!(q.dims()[4], 6);
        assert!(Module::quotient(&j, &i).is_err());
        let zero = Module::quotient(&i, &i).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn components() {
        let a = s(&["a", "b", "c", "d", "e", "f"], 5);
        let i = Module::ideal(a.clone(), parse_elements(&a, &["abc", "cde", "ae"]).unwrap(), false, 5).unwrap();
        let c2 = i.component(2, 2).unwrap();
        let ae = Module::ideal(a.clone(), parse_elements(&a, &["ae"]).unwrap(), false, 5).unwrap();
        assert_eq!(c2.dims(), ae.dims());
        let c23 = i.component(2, 3).unwrap();
        assert_eq!(c23.dims(), i.dims());
        for t in 0..=5 {
            assert!(c2.dim(t) <= c23.dim(t));
        }
    }

    #[test]
    fn two_sided_ideal_of_quadratic_example() {
        let p = Presentation::from_strs(&["x", "y"], &["x^2 - x*y"], false).unwrap();
        let a = Arc::new(Algebra::<F>::expand(&p, 5).unwrap());
        let j = Module::ideal(a.clone(), parse_elements(&a, &["yx"]).unwrap(), true, 5).unwrap();
        let left = Module::ideal(a.clone(), parse_elements(&a, &["yx", "yxx"]).unwrap(), false, 5).unwrap();
        assert_eq!(j.dims(), left.dims());
        let b = Module::cyclic_quotient(a.clone(), parse_elements(&a, &["yx"]).unwrap(), true, 5).unwrap();
        assert_eq!(b.dims(), vec![1, 2, 2, 1, 1, 1]);
        assert!(b.has_right_action());
        let one_sided = Module::cyclic_quotient(a.clone(), parse_elements(&a, &["yx"]).unwrap(), false, 5).unwrap();
        assert!(!one_sided.has_right_action());
    }
}
