//! Cross-route property suites over squarefree monomial ideals.
//!
//! Every instance is pushed through the topological route (Alexander duals,
//! Cohen–Macaulay tests, Hochster's formula) and through the resolution engine,
//! and the known equivalences and implications between the two are asserted.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Algebra, Presentation};
use crate::criteria::{
    algebra_k2_check, componentwise_linear_check, k1_check, k2_check, koszul_check, strongly_k2_check,
    yoneda_generation_check, Verdict, YonedaSpan,
};
use crate::error::Result;
use crate::field::Scalar;
use crate::module::{monomial_elements, parse_elements, Module};
use crate::resolution::{Bounds, MinimalResolution, ResolutionOptions};
use crate::series::Series;
use crate::simplicial::Face;
use crate::stanley_reisner::{complex_from_ideal, face_ring_series, hilbert_series_quotient, hochster_table, MonomialIdeal};

pub const DUAL_INVOLUTION: &str = "dual involution";
pub const HOCHSTER: &str = "Hochster = resolution";
pub const EAGON_REINER: &str = "Eagon-Reiner";
pub const HERZOG_HIBI: &str = "Herzog-Hibi";
pub const K1_EQUALS_K2: &str = "K1 = K2 over a quadratic base";
pub const COMPONENTWISE_EQUALS_STRONG: &str = "componentwise linear = strongly K2";
pub const COMPONENTWISE_IMPLIES_K2: &str = "componentwise linear => K2";
pub const IDEAL_K2_IMPLIES_ALGEBRA_K2: &str = "K2 ideal => K2 quotient";
pub const SEQ_CM_IMPLIES_ALGEBRA_K2: &str = "seq-CM dual => K2 face ring";
pub const EULER_HILBERT: &str = "Euler/Hilbert";
pub const MATRIX_VS_YONEDA: &str = "matrix = Yoneda";
pub const QUADRATIC_KOSZUL: &str = "quadratic monomial => Koszul";

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub count: usize,
    pub max_vertices: usize,
    pub seed: u64,
    /// Bounds for checks on the quotient algebras `S/I`.
    pub algebra_bounds: Bounds,
    /// Also run the squarefree ideals and modules of the worked examples.
    pub worked_instances: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { count: 200, max_vertices: 6, seed: 20240607, algebra_bounds: Bounds::new(5, 8), worked_instances: true }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PropertyReport {
    pub instances: usize,
    /// How many instances exercised each property (implications count only
    /// when their hypothesis held).
    pub exercised: BTreeMap<&'static str, usize>,
    pub violations: Vec<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn expect(&mut self, property: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        *self.exercised.entry(property).or_default() += 1;
        if !ok {
            self.violations.push(format!("{property}: {}", detail()));
        }
    }
}

fn vertex_names(n: usize) -> Vec<String> {
    (0..n).map(|i| char::from(b'a' + i as u8).to_string()).collect()
}

/// `count` distinct squarefree ideals without linear generators on 3 to
/// `max_vertices` variables. About a third are generated in degree 2.
pub fn random_squarefree_ideals(count: usize, max_vertices: usize, seed: u64) -> Result<Vec<MonomialIdeal>> {
    let max_vertices = max_vertices.clamp(3, 26);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: BTreeSet<(usize, Vec<Face>)> = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count.max(1) {
        attempts += 1;
        let n = rng.gen_range(3..=max_vertices);
        let quadratic = rng.gen_ratio(1, 3);
        let k = rng.gen_range(1..=4);
        let mut masks: Vec<Face> = (0..k)
            .map(|_| {
                let size = if quadratic { 2 } else { rng.gen_range(2..=n.min(4)) };
                let mut m: Face = 0;
                while m.count_ones() < size as u32 {
                    m |= 1 << rng.gen_range(0..n);
                }
                m
            })
            .collect();
        masks.sort_unstable();
        masks.dedup();
        let minimal: Vec<Face> = masks.iter().copied().filter(|&m| !masks.iter().any(|&o| o != m && o & m == o)).collect();
        if seen.insert((n, minimal.clone())) {
            out.push(MonomialIdeal::from_masks(vertex_names(n), &minimal)?);
        }
    }
    Ok(out)
}

/// The squarefree ideals of the worked examples and of the two path-like
/// families of face rings on up to seven vertices.
pub fn worked_ideals() -> Result<Vec<MonomialIdeal>> {
    let six = ["a", "b", "c", "d", "e", "f"];
    let five = &six[..5];
    let mut out = vec![
        MonomialIdeal::from_strs(&six, &["abc", "cde"])?,
        MonomialIdeal::from_strs(&six, &["abc", "cde", "ae"])?,
        MonomialIdeal::from_strs(&six, &["abc", "def", "abef"])?,
        MonomialIdeal::from_strs(&six, &["abc", "abef"])?,
        MonomialIdeal::from_strs(five, &["abc", "cde", "abde"])?,
        MonomialIdeal::from_strs(five, &["abc", "cde"])?,
    ];
    let names = vertex_names(7);
    let path = |n: usize| -> Vec<Face> { (0..n - 2).map(|i| 0b111 << i).collect() };
    for n in 3..=7 {
        out.push(MonomialIdeal::from_masks(names[..n].to_vec(), &path(n))?);
        if (4..=6).contains(&n) {
            let mut masks = path(n);
            // x1 x2 xn and x1 x(n-1) xn close the path into a band
            masks.push(0b11 | 1 << (n - 1));
            masks.push(1 | 0b11 << (n - 2));
            out.push(MonomialIdeal::from_masks(names[..n].to_vec(), &masks)?);
        }
    }
    Ok(out)
}

fn resolve<F: Scalar>(m: &Arc<Module<F>>, b: Bounds) -> Result<MinimalResolution<F>> {
    MinimalResolution::compute(m.clone(), ResolutionOptions::new(b))
}

fn same_outcome(a: &Verdict, b: &Verdict) -> bool {
    a.outcome == b.outcome
}

/// `Σ_i (-1)^i β_{i,j}` as a series through `bound`.
fn euler_series(r: &MinimalResolution<impl Scalar>, bound: usize) -> Result<Series> {
    let table = r.betti_table();
    Series::new((0..=bound).map(|j| table.euler_at(j)).collect())
}

/// Run every property on one squarefree ideal of `S = k[vars]`.
///
/// Resolutions of `I` and `S/I` use `(N, D) = (n + 1, deg lcm)`: no Betti
/// number of a monomial ideal lives past the lcm degree, so those verdicts are
/// conclusive. Component checks use the default `D = max(deg lcm, 2N)`.
pub fn check_squarefree_ideal<F: Scalar>(
    ideal: &MonomialIdeal,
    algebra_bounds: Bounds,
    report: &mut PropertyReport,
) -> Result<()> {
    report.instances += 1;
    let n = ideal.n();
    let name = format!("{} in k[{}]", ideal, ideal.vars().join(","));
    let lcm = ideal.lcm_degree().max(2);
    let b = Bounds::new(n + 1, lcm);

    let delta = complex_from_ideal(ideal)?;
    let dual = delta.alexander_dual();
    report.expect(DUAL_INVOLUTION, dual.alexander_dual() == delta, || name.clone());
    let dual_cm = dual.is_cohen_macaulay::<F>();
    let dual_seq_cm = dual.is_sequentially_cm::<F>();

    let vars: Vec<&str> = ideal.vars().iter().map(String::as_str).collect();
    let wide = Bounds::new(n + 1, lcm.max(2 * (n + 1)));
    let s = Arc::new(Algebra::<F>::expand(&Presentation::polynomial_ring(&vars), wide.max_deg)?);
    let gens = monomial_elements(&s, ideal)?;
    let quotient = Arc::new(Module::cyclic_quotient(s.clone(), gens.clone(), false, lcm)?);
    let rq = resolve(&quotient, b)?;
    let hochster = hochster_table::<F>(&delta).nonzero_map();
    let engine = rq.betti_table().nonzero_map();
    report.expect(HOCHSTER, hochster == engine, || format!("{name}: Hochster {hochster:?}, resolution {engine:?}"));

    let ie = hilbert_series_quotient(ideal, lcm)?;
    let fv = face_ring_series(&delta, lcm);
    let dims: Vec<i64> = quotient.dims().iter().map(|&d| d as i64).collect();
    let from_betti = Series::polynomial_ring(n, lcm).mul(&euler_series(&rq, lcm)?);
    let consistent = ie == fv && ie.coeffs() == dims.as_slice() && from_betti == ie;
    report.expect(EULER_HILBERT, consistent, || {
        format!("{name}: inclusion-exclusion {ie}, f-vector {fv}, module dims {dims:?}, from Betti {from_betti}")
    });
    report.expect(K1_EQUALS_K2, same_outcome(&k1_check(&rq), &k2_check(&rq)), || format!("S/I for {name}"));

    let module = Arc::new(Module::ideal(s.clone(), gens.clone(), false, lcm)?);
    let ri = resolve(&module, b)?;
    let k1 = k1_check(&ri);
    let k2 = k2_check(&ri);
    report.expect(K1_EQUALS_K2, same_outcome(&k1, &k2), || format!("{name}: {k1}; {k2}"));

    let degs = ideal.generator_degrees();
    if let Some(&d) = degs.first().filter(|&&d| degs.iter().all(|&e| e == d)) {
        let linear = ri.betti_table().nonzero().all(|((i, j), _)| j == d + i);
        report.expect(EAGON_REINER, linear == dual_cm, || {
            format!("{name}: linear resolution {linear}, dual Cohen-Macaulay {dual_cm}")
        });
    }

    // the components A·I_i need not have small lcm, so these run with the
    // default bounds and a holding verdict may be bounded
    let module_wide = Arc::new(Module::ideal(s.clone(), gens, false, wide.max_deg)?);
    let cw = componentwise_linear_check(&module_wide, wide)?;
    let strong = strongly_k2_check(&module_wide, wide)?;
    report.expect(HERZOG_HIBI, cw.holds_outcome() == dual_seq_cm, || {
        format!("{name}: {cw}; dual sequentially CM {dual_seq_cm}")
    });
    report.expect(COMPONENTWISE_EQUALS_STRONG, same_outcome(&cw, &strong), || format!("{name}: {cw}; {strong}"));
    if cw.holds_outcome() {
        report.expect(COMPONENTWISE_IMPLIES_K2, k2.holds_outcome(), || format!("{name}: {cw}; {k2}"));
    }

    let y1 = yoneda_generation_check(&module, b, YonedaSpan::D1)?;
    let y2 = yoneda_generation_check(&module, b, YonedaSpan::D2)?;
    report.expect(MATRIX_VS_YONEDA, same_outcome(&y1, &k1) && same_outcome(&y2, &k2), || {
        format!("{name}: {k1} vs {y1}; {k2} vs {y2}")
    });

    let face_ring = Arc::new(Algebra::<F>::expand(&Presentation::monomial_quotient(ideal)?, algebra_bounds.max_deg)?);
    let alg = algebra_k2_check(&face_ring, algebra_bounds)?;
    if k2.holds_outcome() && k2.conclusive {
        report.expect(IDEAL_K2_IMPLIES_ALGEBRA_K2, !alg.fails_outcome(), || format!("{name}: {k2}; {alg}"));
    }
    if dual_seq_cm {
        report.expect(SEQ_CM_IMPLIES_ALGEBRA_K2, !alg.fails_outcome(), || format!("{name}: {alg}"));
    }
    if degs.iter().all(|&d| d == 2) {
        let kz = koszul_check(&face_ring, algebra_bounds)?;
        report.expect(QUADRATIC_KOSZUL, kz.holds_outcome(), || format!("{name}: {kz}"));
    }
    Ok(())
}

/// Properties that make sense beyond squarefree ideals, on the non-monomial
/// worked modules.
fn check_worked_modules<F: Scalar>(report: &mut PropertyReport) -> Result<()> {
    // a left ideal over a quadratic noncommutative algebra
    let q = Arc::new(Algebra::<F>::expand(&Presentation::from_strs(&["x", "y"], &["x^2 - x*y"], false)?, 6)?);
    let j = Arc::new(Module::ideal(q.clone(), parse_elements(&q, &["yx", "yxx"])?, false, 6)?);
    let b = Bounds::new(3, 6);
    let r = resolve(&j, b)?;
    report.instances += 1;
    let (k1, k2) = (k1_check(&r), k2_check(&r));
    report.expect(K1_EQUALS_K2, same_outcome(&k1, &k2), || format!("Ayx + Ayx^2: {k1}; {k2}"));
    let y1 = yoneda_generation_check(&j, b, YonedaSpan::D1)?;
    report.expect(MATRIX_VS_YONEDA, same_outcome(&y1, &k1), || format!("Ayx + Ayx^2: {k1} vs {y1}"));

    // a cyclic module over a face ring that is not quadratic
    let five = ["a", "b", "c", "d", "e"];
    let a = Arc::new(Algebra::<F>::expand(&Presentation::from_strs(&five, &["abc", "cde", "abde"], true)?, 7)?);
    let m = Arc::new(Module::cyclic_quotient(a.clone(), parse_elements(&a, &["c"])?, false, 7)?);
    let b = Bounds::new(4, 7);
    let r = resolve(&m, b)?;
    report.instances += 1;
    let k2 = k2_check(&r);
    let y2 = yoneda_generation_check(&m, b, YonedaSpan::D2)?;
    report.expect(MATRIX_VS_YONEDA, same_outcome(&y2, &k2), || format!("A/<c>: {k2} vs {y2}"));

    // k over a face ring: H_A(t) * Σ(-1)^i β_ij t^j = 1 while j ≤ N
    let c = Arc::new(Algebra::<F>::expand(&Presentation::from_strs(&five, &["abc", "cde"], true)?, 5)?);
    let b = Bounds::new(5, 5);
    let rk = resolve(&Arc::new(Module::trivial(c.clone(), 5)?), b)?;
    report.instances += 1;
    let product = c.hilbert_series().mul(&euler_series(&rk, 5)?);
    report.expect(EULER_HILBERT, product == Series::one(5), || format!("k over k[a..e]/<abc,cde>: {product}"));
    Ok(())
}

/// Random ideals plus, optionally, the worked instances.
pub fn run_property_suite<F: Scalar>(config: &SuiteConfig) -> Result<PropertyReport> {
    let mut report = PropertyReport::default();
    let mut ideals = random_squarefree_ideals(config.count, config.max_vertices, config.seed)?;
    if config.worked_instances {
        ideals.extend(worked_ideals()?);
    }
    for ideal in &ideals {
        check_squarefree_ideal::<F>(ideal, config.algebra_bounds, &mut report)?;
    }
    if config.worked_instances {
        check_worked_modules::<F>(&mut report)?;
    }
    Ok(report)
}
