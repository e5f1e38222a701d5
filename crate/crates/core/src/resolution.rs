//! Minimal graded free resolutions, built degree by degree.
//!
//! Step `i` is a free module `Q^i = ⊕_g A(−deg g)`. In internal degree `t` its
//! basis is laid out block by block: generator `g` contributes `dim A_{t−deg g}`
//! consecutive coordinates, one per basis word of `A`. The differential is
//! stored as the image of every basis element, computed from degree `t − 1`
//! by a single left multiplication.

use std::sync::{Arc, OnceLock};

use crate::betti::BettiTable;
use crate::error::{bound, Result};
use crate::field::Scalar;
use crate::linalg::{combine, left_kernel, Echelon, SparseVec};
use crate::module::{Module, Provenance};

/// Homological and internal degree bounds of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Bounds {
    pub max_hom: usize,
    pub max_deg: usize,
}

impl Bounds {
    pub fn new(max_hom: usize, max_deg: usize) -> Self {
        Bounds { max_hom, max_deg }
    }

    /// Defaults for a module over a polynomial ring in `n` variables whose
    /// monomial generators have an lcm of degree `lcm`: `N = n + 1`,
    /// `D = max(lcm, 2N)`.
    pub fn polynomial_module(n: usize, lcm: usize) -> Self {
        Bounds::new(n + 1, lcm.max(2 * (n + 1)))
    }

    /// Defaults for checks on a quotient algebra: `(5, 8)`.
    pub fn quotient_algebra() -> Self {
        Bounds::new(5, 8)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ResolutionOptions {
    pub bounds: Bounds,
    /// For the trivial module over a noncommutative presentation, read steps
    /// 0–2 off the presentation instead of computing kernels.
    pub seed_from_presentation: bool,
    /// Keep every differential, not only those needed to find generators.
    /// Required for chain-map lifting.
    pub keep_differentials: bool,
}

impl ResolutionOptions {
    pub fn new(bounds: Bounds) -> Self {
        ResolutionOptions { bounds, seed_from_presentation: true, keep_differentials: false }
    }

    pub fn generic(mut self) -> Self {
        self.seed_from_presentation = false;
        self
    }

    pub fn keep_differentials(mut self) -> Self {
        self.keep_differentials = true;
        self
    }
}

#[derive(Debug)]
struct Step<F> {
    degrees: Vec<usize>,
    /// Image of each generator in step `i − 1` (or in `M`), in the layout of its own degree.
    images: Vec<SparseVec<F>>,
    /// `offsets[t][g]`: first coordinate of generator `g` in degree `t`; the last entry is the total.
    offsets: Vec<Vec<usize>>,
    /// `rows[t][k]`: image of basis element `k` of degree `t`.
    rows: Vec<Option<Vec<SparseVec<F>>>>,
    solvers: Vec<OnceLock<Echelon<F>>>,
    seeded: bool,
}

impl<F: Scalar> Step<F> {
    fn new(bound: usize, seeded: bool) -> Self {
        Step {
            degrees: Vec::new(),
            images: Vec::new(),
            offsets: Vec::with_capacity(bound + 1),
            rows: Vec::with_capacity(bound + 1),
            solvers: (0..=bound).map(|_| OnceLock::new()).collect(),
            seeded,
        }
    }

    fn dim(&self, t: usize) -> usize {
        *self.offsets[t].last().expect("layout has a total")
    }

    /// Generator owning coordinate `k` of degree `t`.
    fn block_of(&self, t: usize, k: usize) -> usize {
        self.offsets[t].partition_point(|&o| o <= k) - 1
    }
}

/// A minimal graded free resolution of a module, through `(N, D)`.
#[derive(Debug)]
pub struct MinimalResolution<F: Scalar> {
    module: Arc<Module<F>>,
    bounds: Bounds,
    /// Internal degrees actually computed: `min(D, certificate)` unless differentials are kept.
    computed_through: usize,
    certificate: Option<usize>,
    steps: Vec<Step<F>>,
}

impl<F: Scalar> MinimalResolution<F> {
    pub fn compute(module: Arc<Module<F>>, opts: ResolutionOptions) -> Result<Self> {
        let Bounds { max_hom, max_deg } = opts.bounds;
        if max_deg > module.bound() {
            return bound(format!(
                "internal degree bound {max_deg} exceeds the module realization (computed through {})",
                module.bound()
            ));
        }
        let certificate = module.degree_certificate();
        // chain-map lifting needs the free modules in every degree, even past the last generator
        let top = match certificate {
            Some(c) if !opts.keep_differentials => c.min(max_deg),
            _ => max_deg,
        };
        let alg = module.algebra().clone();
        let seed = opts.seed_from_presentation
            && *module.provenance() == Provenance::Trivial
            && alg.minimal_relation_rows(0).is_some();
        let seeded = |i: usize| seed && i <= 2;
        let mut steps: Vec<Step<F>> = (0..=max_hom).map(|i| Step::new(top, seeded(i))).collect();
        // kernel dimension of d_{i} in degree t, with d_{-1}: M → 0
        let mut prev_kernel: Vec<usize>;
        for t in 0..=top {
            prev_kernel = vec![module.dim(t)];
            for i in 0..=max_hom {
                let needs_rows = opts.keep_differentials || !seeded(i) || (i < max_hom && !seeded(i + 1));
                let old: Vec<usize> = {
                    let s = &steps[i];
                    let count = s.degrees.partition_point(|&d| d < t);
                    let mut off = Vec::with_capacity(count + 1);
                    let mut acc = 0;
                    off.push(0);
                    for &d in &s.degrees[..count] {
                        acc += alg.dim(t - d);
                        off.push(acc);
                    }
                    off
                };
                steps[i].offsets.push(old.clone());
                let old_dim = *old.last().expect("nonempty");
                let mut rows: Vec<SparseVec<F>> = Vec::new();
                if needs_rows && old_dim > 0 {
                    rows.reserve(old_dim);
                    let (lower, cur) = steps.split_at(i);
                    let cur = &cur[0];
                    let prev_rows = cur.rows[t - 1].as_ref().expect("rows of the previous degree are kept");
                    let prev_off = &cur.offsets[t - 1];
                    for (g, &d) in cur.degrees[..old.len() - 1].iter().enumerate() {
                        let basis = alg.basis(t - d);
                        for b in 0..basis.len() {
                            let x = basis.first(b);
                            let s = if t - d == 1 { 0 } else { basis.suffix(b) };
                            let below = &prev_rows[prev_off[g] + s];
                            let img = if i == 0 {
                                module.act(t - 1, x, below)
                            } else {
                                act_free(&alg, &lower[i - 1], t - 1, x, below)
                            };
                            rows.push(img);
                        }
                    }
                }
                // new generators in degree t
                let mut new_images: Vec<SparseVec<F>> = Vec::new();
                let target_dim = if i == 0 { module.dim(t) } else { steps[i - 1].dim(t) };
                if seeded(i) {
                    new_images = seeded_images(&alg, i, t);
                } else if prev_kernel[i] > 0 {
                    let mut e = Echelon::new(target_dim);
                    for r in &rows {
                        e.insert(r);
                    }
                    let deficit = prev_kernel[i] - e.rank();
                    if deficit > 0 {
                        if i == 0 {
                            new_images = e.non_pivots().into_iter().map(SparseVec::unit).collect();
                        } else {
                            let lower = &steps[i - 1];
                            let lower_rows = lower.rows[t].as_ref().expect("rows of the previous step are kept");
                            let free: Vec<usize> = e.non_pivots();
                            let sub: Vec<SparseVec<F>> = free.iter().map(|&p| lower_rows[p].clone()).collect();
                            let ncols = if i == 1 { module.dim(t) } else { steps[i - 2].dim(t) };
                            for k in left_kernel(&sub, ncols, Some(deficit)) {
                                new_images.push(k.remap_monotone(|j| Some(free[j])));
                            }
                        }
                        debug_assert_eq!(new_images.len(), deficit, "kernel dimension bookkeeping");
                    }
                }
                let s = &mut steps[i];
                let mut off = old;
                for img in new_images {
                    off.push(off.last().expect("nonempty") + 1);
                    if needs_rows {
                        rows.push(img.clone());
                    }
                    s.degrees.push(t);
                    s.images.push(img);
                }
                let dim = *off.last().expect("nonempty");
                *s.offsets.last_mut().expect("pushed above") = off;
                s.rows.push(needs_rows.then_some(rows));
                prev_kernel.push(dim - prev_kernel[i]);
                // rows of degree t − 1 are no longer needed unless kept
                if !opts.keep_differentials && t > 0 {
                    s.rows[t - 1] = None;
                }
            }
        }
        let res = MinimalResolution { module, bounds: opts.bounds, computed_through: top, certificate, steps };
        if cfg!(debug_assertions) {
            res.assert_minimal();
        }
        Ok(res)
    }

    fn assert_minimal(&self) {
        for i in 1..self.steps.len() {
            for g in 0..self.steps[i].degrees.len() {
                for h in 0..self.steps[i - 1].degrees.len() {
                    if self.steps[i - 1].degrees[h] == self.steps[i].degrees[g] {
                        assert!(self.entry(i, g, h).is_zero(), "resolution is not minimal");
                    }
                }
            }
        }
    }

    pub fn module(&self) -> &Arc<Module<F>> {
        &self.module
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    /// Internal degrees actually computed.
    pub fn computed_through(&self) -> usize {
        self.computed_through
    }

    /// Whether every Betti number in the requested bounds is final.
    pub fn degrees_complete(&self) -> bool {
        self.certificate.is_some_and(|c| c <= self.bounds.max_deg)
    }

    /// Projective dimension, when the computation proves the resolution ends.
    pub fn projective_dimension(&self) -> Option<usize> {
        if !self.degrees_complete() {
            return None;
        }
        let empty = (0..self.steps.len()).find(|&i| self.steps[i].degrees.is_empty())?;
        empty.checked_sub(1)
    }

    /// Whether the resolution is known to stop within the bounds.
    pub fn is_conclusive(&self) -> bool {
        self.projective_dimension().is_some() || (self.degrees_complete() && self.module.is_zero())
    }

    pub fn num_steps(&self) -> usize {
        self.steps.len()
    }

    /// Index of the last step with generators, within the bounds.
    pub fn last_nonempty_step(&self) -> Option<usize> {
        (0..self.steps.len()).rev().find(|&i| !self.steps[i].degrees.is_empty())
    }

    pub fn generator_degrees(&self, i: usize) -> &[usize] {
        &self.steps[i].degrees
    }

    pub fn betti_table(&self) -> BettiTable {
        let exact = if self.degrees_complete() { None } else { Some(self.bounds.max_deg) };
        let mut table = BettiTable::new(self.bounds.max_hom, self.bounds.max_deg, exact);
        for (i, s) in self.steps.iter().enumerate() {
            for &d in &s.degrees {
                table.add(i, d, 1);
            }
        }
        table
    }

    /// Dimension of step `i` in internal degree `t`.
    pub fn free_dim(&self, i: usize, t: usize) -> usize {
        self.steps[i].dim(t)
    }

    /// Coordinate of generator `g` of step `i` in degree `t ≥ deg g`.
    pub fn generator_index(&self, i: usize, t: usize, g: usize) -> usize {
        self.steps[i].offsets[t][g]
    }

    /// The generator owning coordinate `k` of step `i` in degree `t`, with the
    /// basis index in `A_{t − deg g}`.
    pub fn locate(&self, i: usize, t: usize, k: usize) -> (usize, usize) {
        let s = &self.steps[i];
        let g = s.block_of(t, k);
        (g, k - s.offsets[t][g])
    }

    /// Image of generator `g` of step `i` (coordinates of step `i − 1`, or of `M` for `i = 0`).
    pub fn image(&self, i: usize, g: usize) -> &SparseVec<F> {
        &self.steps[i].images[g]
    }

    /// Matrix entry of the differential: the coefficient of generator `h` of
    /// step `i − 1` in the image of generator `g` of step `i`, an element of
    /// `A_{deg g − deg h}` (zero when `deg h > deg g`).
    pub fn entry(&self, i: usize, g: usize, h: usize) -> SparseVec<F> {
        let t = self.steps[i].degrees[g];
        let lower = &self.steps[i - 1];
        if lower.degrees[h] > t {
            return SparseVec::zero();
        }
        let lo = lower.offsets[t][h];
        let hi = lower.offsets[t][h + 1];
        self.steps[i].images[g].slice(lo, hi)
    }

    /// Human-readable name of generator `g` of step `i`: its image written out.
    pub fn generator_label(&self, i: usize, g: usize) -> String {
        let t = self.steps[i].degrees[g];
        if i == 0 {
            return self.module.element_label(t, self.image(0, g));
        }
        let lower = &self.steps[i - 1];
        let alg = self.module.algebra();
        if lower.degrees.len() == 1 && i == 1 {
            return alg.element_label(t - lower.degrees[0], &self.entry(i, g, 0));
        }
        let parts: Vec<String> = (0..lower.degrees.len())
            .filter(|&h| lower.degrees[h] <= t)
            .filter_map(|h| {
                let e = self.entry(i, g, h);
                (!e.is_zero()).then(|| format!("({})·[{}:{}]", alg.element_label(t - lower.degrees[h], &e), i - 1, h))
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// `a·v` for `a ∈ A_p` and `v` in step `i`, degree `t`.
    pub fn mul_free(&self, i: usize, p: usize, a: &SparseVec<F>, t: usize, v: &SparseVec<F>) -> SparseVec<F> {
        let alg = self.module.algebra();
        let s = &self.steps[i];
        let mut parts: Vec<(F, SparseVec<F>)> = Vec::new();
        for (k, c) in v.iter() {
            let g = s.block_of(t, k);
            let q = t - s.degrees[g];
            let prod = alg.mul_unchecked(p, a, q, &SparseVec::unit(k - s.offsets[t][g]));
            parts.push((c.clone(), prod.shifted(s.offsets[t + p][g])));
        }
        combine(parts.iter().map(|(c, v)| (c.clone(), v)))
    }

    /// The differential applied to `v` in step `i`, degree `t`.
    /// Needs the differential to have been kept.
    pub fn apply(&self, i: usize, t: usize, v: &SparseVec<F>) -> SparseVec<F> {
        let rows = self.steps[i].rows[t].as_ref().expect("differential kept for this step");
        combine(v.iter().map(|(k, c)| (c.clone(), &rows[k])))
    }

    /// Some `z` in step `i`, degree `t`, with `d(z) = y`, if one exists.
    /// Needs the differential to have been kept.
    pub fn solve(&self, i: usize, t: usize, y: &SparseVec<F>) -> Option<SparseVec<F>> {
        let s = &self.steps[i];
        let e = s.solvers[t].get_or_init(|| {
            let rows = s.rows[t].as_ref().expect("differential kept for this step");
            let ncols = if i == 0 { self.module.dim(t) } else { self.steps[i - 1].dim(t) };
            let mut e = Echelon::tracked(ncols);
            for r in rows {
                e.insert(r);
            }
            e
        });
        let coords = e.coordinates(y)?;
        let mut z = SparseVec::zero();
        for (r, c) in coords.iter() {
            z.add_assign_scaled(c, e.track(r).expect("tracked"));
        }
        Some(z)
    }

    /// Whether the step-`i` rows were marked as coming from the presentation.
    pub fn is_seeded(&self, i: usize) -> bool {
        self.steps[i].seeded
    }
}

/// `x·v` for `v` in `step` at degree `t`, laid out in degree `t + 1`.
fn act_free<F: Scalar>(
    alg: &crate::algebra::Algebra<F>,
    step: &Step<F>,
    t: usize,
    x: usize,
    v: &SparseVec<F>,
) -> SparseVec<F> {
    let n = alg.n();
    let mut parts: Vec<(F, &SparseVec<F>, usize)> = Vec::with_capacity(v.nnz());
    for (k, c) in v.iter() {
        let g = step.block_of(t, k);
        let q = t - step.degrees[g];
        let table = alg.left_table(q + 1);
        parts.push((c.clone(), &table[(k - step.offsets[t][g]) * n + x], step.offsets[t + 1][g]));
    }
    let shifted: Vec<(F, SparseVec<F>)> = parts.into_iter().map(|(c, v, off)| (c, v.shifted(off))).collect();
    combine(shifted.iter().map(|(c, v)| (c.clone(), v)))
}

/// Steps 0–2 of the resolution of `k` read off a noncommutative presentation:
/// the unit, the generators, and the minimal relations.
fn seeded_images<F: Scalar>(alg: &crate::algebra::Algebra<F>, i: usize, t: usize) -> Vec<SparseVec<F>> {
    match (i, t) {
        (0, 0) => vec![SparseVec::unit(0)],
        (1, 1) => (0..alg.n()).map(SparseVec::unit).collect(),
        (2, t) if t >= 2 => {
            let n = alg.n();
            let block = alg.dim(t - 1);
            alg.minimal_relation_rows(t)
                .expect("noncommutative presentation")
                .iter()
                .map(|(_, row)| SparseVec::from_pairs(row.iter().map(|(c, v)| ((c % n) * block + c / n, v.clone()))))
                .collect()
        }
        _ => Vec::new(),
    }
}

/// Minimal resolution of `k` over `A` through `(N, D)`: the bigraded `Ext_A(k, k)` dimensions.
pub fn ext_of_quotient_algebra<F: Scalar>(
    alg: Arc<crate::algebra::Algebra<F>>,
    bounds: Bounds,
) -> Result<MinimalResolution<F>> {
    let k = Module::trivial(alg, bounds.max_deg)?;
    MinimalResolution::compute(Arc::new(k), ResolutionOptions::new(bounds))
}
