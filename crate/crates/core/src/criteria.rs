//! Decision procedures on minimal resolutions: linear-part and essential-product
//! row-independence tests, purity of `Ext_A(k, k)`, generation tests for
//! component submodules, the Yoneda-product cross-check, and the trivial-action test.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::Result;
use crate::field::Scalar;
use crate::linalg::{first_dependency, Echelon, SparseVec};
use crate::module::Module;
use crate::resolution::{Bounds, MinimalResolution, ResolutionOptions};
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Fails,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub note: String,
    pub rows: Vec<String>,
}

/// Result of a bounded check. A failure is always definitive; `Holds` is
/// definitive only when `conclusive` is set, and otherwise means no failure
/// was found within `bounds`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub outcome: Outcome,
    pub conclusive: bool,
    pub step: Option<usize>,
    pub degree: Option<usize>,
    pub witness: Option<Witness>,
    pub bounds: Bounds,
}

impl Verdict {
    pub fn holds(check: &str, bounds: Bounds, conclusive: bool) -> Self {
        Verdict {
            check: check.into(),
            outcome: Outcome::Holds,
            conclusive,
            step: None,
            degree: None,
            witness: None,
            bounds,
        }
    }

    pub fn fails(check: &str, bounds: Bounds, step: usize, degree: usize, witness: Witness) -> Self {
        Verdict {
            check: check.into(),
            outcome: Outcome::Fails,
            conclusive: true,
            step: Some(step),
            degree: Some(degree),
            witness: Some(witness),
            bounds,
        }
    }

    pub fn inconclusive(check: &str, bounds: Bounds, note: impl Into<String>) -> Self {
        Verdict {
            check: check.into(),
            outcome: Outcome::Inconclusive,
            conclusive: false,
            step: None,
            degree: None,
            witness: Some(Witness { note: note.into(), rows: Vec::new() }),
            bounds,
        }
    }

    pub fn holds_outcome(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn fails_outcome(&self) -> bool {
        self.outcome == Outcome::Fails
    }

    fn renamed(mut self, check: &str) -> Self {
        self.check = check.into();
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        match &mut self.witness {
            Some(w) => w.note = format!("{note}; {}", w.note),
            None => self.witness = Some(Witness { note, rows: Vec::new() }),
        }
        self
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.check)?;
        match self.outcome {
            Outcome::Holds if self.conclusive => write!(f, "holds")?,
            Outcome::Holds => write!(f, "holds up to (N={}, D={})", self.bounds.max_hom, self.bounds.max_deg)?,
            Outcome::Fails => {
                write!(f, "fails")?;
                if let Some(s) = self.step {
                    write!(f, " at step {s}")?;
                }
                if let Some(d) = self.degree {
                    write!(f, ", internal degree {d}")?;
                }
            }
            Outcome::Inconclusive => write!(f, "inconclusive")?,
        }
        if let Some(w) = &self.witness {
            if !w.note.is_empty() {
                write!(f, " ({})", w.note)?;
            }
            for r in &w.rows {
                write!(f, "\n    {r}")?;
            }
        }
        Ok(())
    }
}

/// Rows of one step grouped by the degree of their generator.
fn degree_groups(degrees: &[usize]) -> Vec<(usize, std::ops::Range<usize>)> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < degrees.len() {
        let d = degrees[start];
        let end = start + degrees[start..].iter().take_while(|&&e| e == d).count();
        out.push((d, start..end));
        start = end;
    }
    out
}

fn dependency_rows<F: Scalar>(r: &MinimalResolution<F>, step: usize, first: usize, dep: &SparseVec<F>) -> Vec<String> {
    dep.iter()
        .map(|(k, c)| format!("{c} × [{}]", r.generator_label(step, first + k)))
        .collect()
}

/// `L(f_i)`: the linear entries of the step-`i` matrix, keyed by `(column, variable)`.
fn linear_row<F: Scalar>(r: &MinimalResolution<F>, i: usize, g: usize) -> Vec<((usize, usize), F)> {
    let d = r.generator_degrees(i)[g];
    let mut out = Vec::new();
    for (h, &e) in r.generator_degrees(i - 1).iter().enumerate() {
        if e + 1 == d {
            for (x, c) in r.entry(i, g, h).iter() {
                out.push(((h, x), c.clone()));
            }
        }
    }
    out
}

/// Flatten keyed rows into sparse vectors over a shared column numbering.
fn flatten<F: Scalar, K: std::hash::Hash + Eq>(rows: Vec<Vec<(K, F)>>) -> (Vec<SparseVec<F>>, usize) {
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let pairs: Vec<(usize, F)> = row
            .into_iter()
            .map(|(k, c)| {
                let next = index.len();
                (*index.entry(k).or_insert(next), c)
            })
            .collect();
        out.push(SparseVec::from_pairs(pairs));
    }
    (out, index.len())
}

/// Linear-part test: `L(f_i)` has independent rows for every computed step `i ≥ 1`.
pub fn k1_check<F: Scalar>(r: &MinimalResolution<F>) -> Verdict {
    const CHECK: &str = "k1_check";
    for i in 1..r.num_steps() {
        for (d, range) in degree_groups(r.generator_degrees(i)) {
            let rows: Vec<_> = range.clone().map(|g| linear_row(r, i, g)).collect();
            let (rows, ncols) = flatten(rows);
            if let Some(dep) = first_dependency(&rows, ncols) {
                let witness = Witness {
                    note: format!("linear parts of step-{i} rows in degree {d} are dependent"),
                    rows: dependency_rows(r, i, range.start, &dep),
                };
                return Verdict::fails(CHECK, r.bounds(), i, d, witness);
            }
        }
    }
    Verdict::holds(CHECK, r.bounds(), r.is_conclusive())
}

/// Column key of a `k2_check` row: `(0, h, k)` is the product block at
/// target generator `h`, basis word `k`; `(1, h, k)` the linear-part block.
type RowCoord = (u8, usize, usize);

/// Essential-product test: for `0 ≤ i < min(N, pd)` the rows of
/// `[(f_{i+1} f_i) mod I′ | L(f_{i+1})]` are independent, with `f_0 = 0`.
pub fn k2_check<F: Scalar>(r: &MinimalResolution<F>) -> Verdict {
    const CHECK: &str = "k2_check";
    let alg = r.module().algebra();
    for i in 0..r.num_steps().saturating_sub(1) {
        let upper = r.generator_degrees(i + 1);
        let mid = r.generator_degrees(i);
        for (d, range) in degree_groups(upper) {
            let mut rows: Vec<Vec<(RowCoord, F)>> = Vec::with_capacity(range.len());
            for g in range.clone() {
                let mut row: Vec<(RowCoord, F)> = Vec::new();
                if i >= 1 {
                    let entries: Vec<(usize, SparseVec<F>)> = (0..mid.len())
                        .filter(|&h| mid[h] < d)
                        .map(|h| (h, r.entry(i + 1, g, h)))
                        .filter(|(_, a)| !a.is_zero())
                        .collect();
                    for (h2, &e) in r.generator_degrees(i - 1).iter().enumerate() {
                        if e + 2 > d {
                            continue;
                        }
                        let below: Vec<(usize, &SparseVec<F>, SparseVec<F>)> = entries
                            .iter()
                            .filter(|(h, _)| mid[*h] > e)
                            .map(|(h, a)| (*h, a, r.entry(i, *h, h2)))
                            .filter(|(_, _, c)| !c.is_zero())
                            .collect();
                        let pairs: Vec<(usize, &SparseVec<F>, usize, &SparseVec<F>)> =
                            below.iter().map(|(h, a, c)| (d - mid[*h], *a, mid[*h] - e, c)).collect();
                        if pairs.is_empty() {
                            continue;
                        }
                        for (k, c) in alg.product_mod_iprime(&pairs).iter() {
                            row.push(((0, h2, k), c.clone()));
                        }
                    }
                }
                row.extend(linear_row(r, i + 1, g).into_iter().map(|((h, x), c)| ((1, h, x), c)));
                rows.push(row);
            }
            let (rows, ncols) = flatten(rows);
            if let Some(dep) = first_dependency(&rows, ncols) {
                let witness = Witness {
                    note: format!(
                        "essential products and linear parts of step-{} rows in degree {d} are dependent",
                        i + 1
                    ),
                    rows: dependency_rows(r, i + 1, range.start, &dep),
                };
                return Verdict::fails(CHECK, r.bounds(), i, d, witness);
            }
        }
    }
    Verdict::holds(CHECK, r.bounds(), r.is_conclusive())
}

fn resolve<F: Scalar>(m: Arc<Module<F>>, bounds: Bounds) -> Result<MinimalResolution<F>> {
    MinimalResolution::compute(m, ResolutionOptions::new(bounds))
}

fn resolve_trivial<F: Scalar>(alg: &Arc<Algebra<F>>, bounds: Bounds) -> Result<MinimalResolution<F>> {
    resolve(Arc::new(Module::trivial(alg.clone(), bounds.max_deg)?), bounds)
}

/// The essential-product test applied to the trivial module.
pub fn algebra_k2_check<F: Scalar>(alg: &Arc<Algebra<F>>, bounds: Bounds) -> Result<Verdict> {
    Ok(k2_check(&resolve_trivial(alg, bounds)?).renamed("algebra_k2_check"))
}

/// Purity of `Ext_A(k, k)`: `β_{i,j} = 0` for `i ≠ j` within bounds.
pub fn koszul_check<F: Scalar>(alg: &Arc<Algebra<F>>, bounds: Bounds) -> Result<Verdict> {
    let r = resolve_trivial(alg, bounds)?;
    Ok(purity(&r, alg.presentation().is_quadratic()))
}

fn purity<F: Scalar>(r: &MinimalResolution<F>, quadratic: bool) -> Verdict {
    const CHECK: &str = "koszul_check";
    let table = r.betti_table();
    let offending = table.nonzero().filter(|((i, j), _)| i != j).min_by_key(|((i, j), _)| (*j, *i));
    let verdict = match offending {
        Some(((i, j), d)) => Verdict::fails(
            CHECK,
            r.bounds(),
            i,
            j,
            Witness { note: format!("Ext^({i},{j}) has dimension {d} off the diagonal"), rows: Vec::new() },
        ),
        None => Verdict::holds(CHECK, r.bounds(), r.is_conclusive()),
    };
    if quadratic {
        verdict
    } else {
        verdict.with_note("relations are not all quadratic")
    }
}

/// Generated in a single degree and passes the linear-part test.
pub fn koszul_module_check<F: Scalar>(r: &MinimalResolution<F>) -> Verdict {
    const CHECK: &str = "koszul_module_check";
    let degrees = r.generator_degrees(0);
    if let Some(&other) = degrees.iter().find(|&&d| d != degrees[0]) {
        let witness = Witness {
            note: format!("generated in degrees {} and {other}", degrees[0]),
            rows: Vec::new(),
        };
        return Verdict::fails(CHECK, r.bounds(), 0, other, witness);
    }
    k1_check(r).renamed(CHECK)
}

/// Degree of the last minimal generator of `M`, within the module's bound.
fn top_generator_degree<F: Scalar>(m: &Arc<Module<F>>, bounds: Bounds) -> Result<Option<usize>> {
    let r = resolve(m.clone(), Bounds::new(0, bounds.max_deg))?;
    Ok(r.generator_degrees(0).last().copied())
}

/// `A·M_i` is a Koszul module for every `i` from the bottom degree up to the
/// top generator degree (past it, `A·M_i` is a truncation of `A·M_top`).
pub fn componentwise_linear_check<F: Scalar>(m: &Arc<Module<F>>, bounds: Bounds) -> Result<Verdict> {
    const CHECK: &str = "componentwise_linear_check";
    let (Some(b), Some(top)) = (m.bottom(), top_generator_degree(m, bounds)?) else {
        return Ok(Verdict::holds(CHECK, bounds, true));
    };
    let mut conclusive = true;
    for i in b..=top {
        let c = Arc::new(m.component(i, i)?);
        let v = koszul_module_check(&resolve(c, bounds)?);
        match v.outcome {
            Outcome::Fails => {
                return Ok(v.renamed(CHECK).with_note(format!("component generated in degree {i}")));
            }
            Outcome::Inconclusive => return Ok(v.renamed(CHECK)),
            Outcome::Holds => conclusive &= v.conclusive,
        }
    }
    Ok(Verdict::holds(CHECK, bounds, conclusive))
}

/// `M_⟨b,j⟩` passes the essential-product test for every `j` from the bottom
/// degree up to the top generator degree (past it, `M_⟨b,j⟩ = M`).
pub fn strongly_k2_check<F: Scalar>(m: &Arc<Module<F>>, bounds: Bounds) -> Result<Verdict> {
    const CHECK: &str = "strongly_k2_check";
    let (Some(b), Some(top)) = (m.bottom(), top_generator_degree(m, bounds)?) else {
        return Ok(Verdict::holds(CHECK, bounds, true));
    };
    let mut conclusive = true;
    for j in b..=top {
        let c = Arc::new(m.component(b, j)?);
        let v = k2_check(&resolve(c, bounds)?);
        match v.outcome {
            Outcome::Fails => {
                return Ok(v.renamed(CHECK).with_note(format!("component generated in degrees {b}..{j}")));
            }
            Outcome::Inconclusive => return Ok(v.renamed(CHECK)),
            Outcome::Holds => conclusive &= v.conclusive,
        }
    }
    Ok(Verdict::holds(CHECK, bounds, conclusive))
}

/// Which part of `E(A)` generates the products in the Yoneda cross-check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YonedaSpan {
    /// The subalgebra generated by `E¹`.
    D1,
    /// The subalgebra generated by `E¹` and `E²`.
    D2,
}

/// `products[p][h][h']`: value of `g^* ⋆ h^*` on generator `h'`, for `g` a
/// step-`p` generator of the resolution of `k`, stored per `g`.
type ProductTable<F> = Vec<HashMap<(usize, usize), F>>;

/// Whether `Ext_A(M, k)` is generated by `Ext^0` under `D_1` or `D_2`, using
/// Yoneda products computed by lifting classes of `Ext(M, k)` to chain maps
/// into the resolution of `k`.
#[allow(clippy::needless_range_loop)]
pub fn yoneda_generation_check<F: Scalar>(m: &Arc<Module<F>>, bounds: Bounds, span: YonedaSpan) -> Result<Verdict> {
    let check = match span {
        YonedaSpan::D1 => "yoneda_generation_check[D1]",
        YonedaSpan::D2 => "yoneda_generation_check[D2]",
    };
    let alg = m.algebra();
    let p = resolve(m.clone(), bounds)?;
    let k = Arc::new(Module::trivial(alg.clone(), bounds.max_deg)?);
    let rk = MinimalResolution::compute(k, ResolutionOptions::new(Bounds::new(2, bounds.max_deg)).keep_differentials())?;
    let depth = match span {
        YonedaSpan::D1 => 1,
        YonedaSpan::D2 => 2,
    };
    let steps = p.num_steps();
    // tables[q][s]: products E^s ⋆ Ext^q → Ext^{q+s}, one map per E^s generator
    let mut tables: Vec<Vec<ProductTable<F>>> = Vec::with_capacity(steps);
    for q in 0..steps {
        let mut per_s: Vec<ProductTable<F>> = vec![Vec::new(); depth + 1];
        for (s, table) in per_s.iter_mut().enumerate().skip(1) {
            *table = vec![HashMap::new(); rk.generator_degrees(s).len()];
        }
        for (h, &dh) in p.generator_degrees(q).iter().enumerate() {
            let lifts = lift_class(&p, &rk, q, h, dh, depth);
            for (s, lifted) in lifts.iter().enumerate().skip(1) {
                for (h2, z) in lifted {
                    let t = p.generator_degrees(q + s)[*h2] - dh;
                    for (g, &dg) in rk.generator_degrees(s).iter().enumerate() {
                        if dg == t {
                            let c = z.get(rk.generator_index(s, t, g));
                            if !c.is_zero() {
                                per_s[s][g].insert((h, *h2), c);
                            }
                        }
                    }
                }
            }
        }
        tables.push(per_s);
    }
    // span[i]: homogeneous basis of the products landing in Ext^i, by degree
    let mut spans: Vec<HashMap<usize, Echelon<F>>> = Vec::with_capacity(steps);
    let mut ext0: HashMap<usize, Echelon<F>> = HashMap::new();
    let n0 = p.generator_degrees(0).len();
    for (h, &d) in p.generator_degrees(0).iter().enumerate() {
        ext0.entry(d).or_insert_with(|| Echelon::new(n0)).insert(&SparseVec::unit(h));
    }
    spans.push(ext0);
    for i in 1..steps {
        let ni = p.generator_degrees(i).len();
        let mut cur: HashMap<usize, Echelon<F>> = HashMap::new();
        for s in 1..=depth.min(i) {
            let q = i - s;
            for (g, map) in tables[q][s].iter().enumerate() {
                let dg = rk.generator_degrees(s)[g];
                for (&d, e) in &spans[q] {
                    for u in e.rows() {
                        let mut w: Vec<(usize, F)> = Vec::new();
                        for (h, c) in u.iter() {
                            for (&(h0, h2), v) in map.iter() {
                                if h0 == h {
                                    w.push((h2, c.clone() * v.clone()));
                                }
                            }
                        }
                        let w = SparseVec::from_pairs(w);
                        if !w.is_zero() {
                            cur.entry(d + dg).or_insert_with(|| Echelon::new(ni)).insert(&w);
                        }
                    }
                }
            }
        }
        let degrees = p.generator_degrees(i);
        for (d, range) in degree_groups(degrees) {
            let got = cur.get(&d).map_or(0, Echelon::rank);
            if got < range.len() {
                let witness = Witness {
                    note: format!("products reach {got} of {} classes of Ext^({i},{d})", range.len()),
                    rows: Vec::new(),
                };
                return Ok(Verdict::fails(check, bounds, i, d, witness));
            }
        }
        spans.push(cur);
    }
    Ok(Verdict::holds(check, bounds, p.is_conclusive()))
}

/// Chain map lifting the class dual to generator `h` of step `q` of `p`:
/// `lifts[s]` holds `φ_s(h′)` in step `s` of `rk` for generators `h′` of step `q + s`.
fn lift_class<F: Scalar>(
    p: &MinimalResolution<F>,
    rk: &MinimalResolution<F>,
    q: usize,
    h: usize,
    dh: usize,
    depth: usize,
) -> Vec<Vec<(usize, SparseVec<F>)>> {
    let top = rk.computed_through();
    let mut lifts: Vec<Vec<(usize, SparseVec<F>)>> = vec![Vec::new(); depth + 1];
    // φ_0 sends h to 1 and every other generator to 0
    lifts[0].push((h, SparseVec::unit(0)));
    for s in 1..=depth {
        if q + s >= p.num_steps() {
            break;
        }
        let mut out = Vec::new();
        for (h2, &d2) in p.generator_degrees(q + s).iter().enumerate() {
            if d2 <= dh || d2 - dh > top {
                continue;
            }
            let t = d2 - dh;
            let mut y = SparseVec::zero();
            for (h1, z) in &lifts[s - 1] {
                let d1 = p.generator_degrees(q + s - 1)[*h1];
                if d1 >= d2 {
                    continue;
                }
                let a = p.entry(q + s, h2, *h1);
                if a.is_zero() {
                    continue;
                }
                let prod = rk.mul_free(s - 1, d2 - d1, &a, d1 - dh, z);
                y.add_assign_scaled(&F::one(), &prod);
            }
            if y.is_zero() {
                continue;
            }
            let z = rk.solve(s, t, &y).expect("the resolution of k is exact through the bound");
            out.push((h2, z));
        }
        lifts[s] = out;
    }
    lifts
}

/// Whether right multiplication by each generator of `A` induces the zero map
/// on `Ext_A(B, k)` for `B = A/𝔍`, `𝔍` the two-sided ideal generated by `gens`.
/// Holds outright over a commutative algebra; inconclusive when right
/// multiplication is not well defined on the realization of `B`.
pub fn trivial_action_check<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    gens: Vec<(usize, SparseVec<F>)>,
    bounds: Bounds,
) -> Result<Verdict> {
    const CHECK: &str = "trivial_action_check";
    if alg.is_commutative() {
        return Ok(Verdict::holds(CHECK, bounds, true).with_note("the algebra is commutative"));
    }
    let b = Arc::new(Module::cyclic_quotient(alg.clone(), gens, true, bounds.max_deg)?);
    if !b.has_right_action() {
        return Ok(Verdict::inconclusive(CHECK, bounds, "right multiplication is not well defined on A/𝔍"));
    }
    let r = MinimalResolution::compute(b.clone(), ResolutionOptions::new(bounds).keep_differentials())?;
    let top = r.computed_through();
    for x in 0..alg.n() {
        // psi[s][h]: image of generator h of step s under the lift of m ↦ m·x
        let mut psi: Vec<Vec<Option<SparseVec<F>>>> = Vec::with_capacity(r.num_steps());
        for s in 0..r.num_steps() {
            let mut cur = Vec::with_capacity(r.generator_degrees(s).len());
            for (h, &d) in r.generator_degrees(s).iter().enumerate() {
                if d + 1 > top {
                    cur.push(None);
                    continue;
                }
                let y = if s == 0 {
                    match b.right_act(d, x, r.image(0, h)) {
                        Ok(v) => v,
                        Err(_) => return Ok(Verdict::inconclusive(CHECK, bounds, "right multiplication leaves A/𝔍")),
                    }
                } else {
                    let mut y = SparseVec::zero();
                    for (h1, &d1) in r.generator_degrees(s - 1).iter().enumerate() {
                        if d1 >= d {
                            continue;
                        }
                        let a = r.entry(s, h, h1);
                        if a.is_zero() {
                            continue;
                        }
                        let z = psi[s - 1][h1].as_ref().expect("lower generators lie below the bound");
                        y.add_assign_scaled(&F::one(), &r.mul_free(s - 1, d - d1, &a, d1 + 1, z));
                    }
                    y
                };
                let Some(z) = r.solve(s, d + 1, &y) else {
                    return Ok(Verdict::inconclusive(CHECK, bounds, "right multiplication does not lift"));
                };
                for (h2, &d2) in r.generator_degrees(s).iter().enumerate() {
                    if d2 == d + 1 && !z.get(r.generator_index(s, d + 1, h2)).is_zero() {
                        let var = &alg.vars()[x];
                        let witness = Witness {
                            note: format!("{var} acts nontrivially on Ext^{s}"),
                            rows: vec![format!(
                                "{var}: generator {} ↦ generator {}",
                                r.generator_label(s, h),
                                r.generator_label(s, h2)
                            )],
                        };
                        return Ok(Verdict::fails(CHECK, bounds, s, d + 1, witness));
                    }
                }
                cur.push(Some(z));
            }
            psi.push(cur);
        }
    }
    Ok(Verdict::holds(CHECK, bounds, r.is_conclusive()))
}

/// First degree `j` where `(−1)^j [t^j] 1/H(t)` is negative. A Koszul algebra
/// has `1/H(t) = P(−t)` with `P` the Poincaré series, so any such `j` rules
/// out Koszulity; the converse fails.
pub fn froberg_obstruction(h: &Series) -> Result<Option<usize>> {
    let inv = h.inverse()?;
    Ok(inv.coeffs().iter().enumerate().find(|(j, c)| if j % 2 == 0 { **c < 0 } else { **c > 0 }).map(|(j, _)| j))
}
