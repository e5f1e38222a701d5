//! The worked-example corpus: expected values stored in `data/corpus.toml`,
//! recomputed and compared by a runner that is generic over the field.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Presentation};
use crate::betti::BettiTable;
use crate::criteria::{
    algebra_k2_check, componentwise_linear_check, froberg_obstruction, k1_check, k2_check, koszul_check,
    koszul_module_check, strongly_k2_check, trivial_action_check, yoneda_generation_check, Outcome, Verdict,
    YonedaSpan,
};
use crate::error::{input, Error, Result};
use crate::field::Scalar;
use crate::module::{Module, ModuleSpec};
use crate::properties::{run_property_suite, SuiteConfig};
use crate::resolution::{Bounds, MinimalResolution, ResolutionOptions};
use crate::series::Series;
use crate::stanley_reisner::{complex_from_ideal, hilbert_series_quotient, hochster_table, MonomialIdeal};

const BUILTIN: &str = include_str!("../data/corpus.toml");

#[derive(Clone, Debug, Deserialize)]
pub struct AlgebraDef {
    /// Whitespace-separated generator names.
    pub vars: String,
    #[serde(default)]
    pub commutative: bool,
    #[serde(default)]
    pub relations: Vec<String>,
}

impl AlgebraDef {
    pub fn presentation(&self) -> Result<Presentation> {
        let vars: Vec<&str> = self.vars.split_whitespace().collect();
        let rels: Vec<&str> = self.relations.iter().map(String::as_str).collect();
        Presentation::from_strs(&vars, &rels, self.commutative)
    }
}

#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
pub struct ExpectedVerdict {
    pub outcome: Option<Outcome>,
    pub conclusive: Option<bool>,
    pub step: Option<usize>,
    pub degree: Option<usize>,
    /// `[variable, source, target]` for a trivial-action witness.
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
pub struct ExpectedComplex {
    pub dual_cm: Option<bool>,
    pub dual_buchsbaum: Option<bool>,
    pub dual_sequentially_cm: Option<bool>,
    pub dual_pure: Option<bool>,
    /// Reduced homology dimensions of the dual, keyed by degree.
    pub dual_homology: Option<BTreeMap<String, usize>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CheckKind {
    /// Betti numbers of a module; keys `"i,j"`. Unless `exact`, only the
    /// listed entries are compared.
    Betti {
        algebra: String,
        module: ModuleSpec,
        bounds: Option<[usize; 2]>,
        #[serde(default)]
        exact: bool,
        expect: BTreeMap<String, usize>,
    },
    /// Internal degrees of the generators at steps `0, 1, …`.
    GeneratorDegrees { algebra: String, module: ModuleSpec, bounds: Option<[usize; 2]>, expect: Vec<Vec<usize>> },
    Verdict {
        check: String,
        algebra: String,
        module: Option<ModuleSpec>,
        /// Generators of the two-sided ideal for `trivial_action_check`.
        gens: Option<Vec<String>>,
        bounds: Option<[usize; 2]>,
        expect: ExpectedVerdict,
    },
    /// `dim A_d` for `d ≤ bound`.
    Dims { algebra: String, bound: usize, expect: Vec<usize> },
    ModuleDims { algebra: String, module: ModuleSpec, bound: usize, expect: Vec<usize> },
    /// Hilbert series of `S/I` by inclusion–exclusion, or its inverse.
    IdealSeries {
        vars: String,
        ideal: Vec<String>,
        bound: usize,
        #[serde(default)]
        inverse: bool,
        expect: Vec<i64>,
    },
    AlgebraSeries {
        algebra: String,
        bound: usize,
        #[serde(default)]
        inverse: bool,
        expect: Vec<i64>,
    },
    Froberg { algebra: String, bound: usize, expect: Option<usize> },
    /// `H_A(t) · Σ_i (−1)^i β_{i,j} t^j = H_M(t)` through `min(N, D)`.
    Euler { algebra: String, module: ModuleSpec, bounds: Option<[usize; 2]> },
    /// Hochster's formula for `S/I_Δ`, plus agreement with the resolution.
    Hochster { vars: String, ideal: Vec<String>, expect: BTreeMap<String, usize> },
    /// Properties of the Alexander dual of the complex with Stanley–Reisner ideal `ideal`.
    Complex { vars: String, ideal: Vec<String>, expect: ExpectedComplex },
    Properties { count: usize, max_vertices: usize, seed: u64 },
}

#[derive(Clone, Debug, Deserialize)]
pub struct Check {
    #[serde(flatten)]
    pub kind: CheckKind,
    /// A mismatch here is expected; the reason is printed instead of failing.
    pub known_failure: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Item {
    pub id: String,
    pub criterion: u8,
    pub title: String,
    #[serde(rename = "check")]
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Corpus {
    pub algebras: BTreeMap<String, AlgebraDef>,
    #[serde(rename = "item")]
    pub items: Vec<Item>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    KnownFailure,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::KnownFailure => "KNOWN-FAIL",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ItemReport {
    pub id: String,
    pub criterion: u8,
    pub title: String,
    pub status: Status,
    pub seconds: f64,
    pub checks: Vec<CheckReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub field: String,
    pub items: Vec<ItemReport>,
}

impl CorpusReport {
    /// No item failed or errored (known failures are allowed).
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| matches!(i.status, Status::Pass | Status::KnownFailure))
    }

    pub fn count(&self, status: Status) -> usize {
        self.items.iter().filter(|i| i.status == status).count()
    }
}

impl fmt::Display for CorpusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "corpus over {}", self.field)?;
        for item in &self.items {
            writeln!(f, "{:<10} {:<9} [{}] {} ({:.2} s)", item.status, item.id, item.criterion, item.title, item.seconds)?;
            for c in &item.checks {
                writeln!(f, "    {:<10} {}", c.status, c.description)?;
                if c.status != Status::Pass {
                    writeln!(f, "               expected: {}", c.expected)?;
                    writeln!(f, "               actual:   {}", c.actual)?;
                }
                if let Some(note) = &c.note {
                    writeln!(f, "               note:     {note}")?;
                }
            }
        }
        write!(
            f,
            "{} passed, {} known failures, {} failed, {} errors",
            self.count(Status::Pass),
            self.count(Status::KnownFailure),
            self.count(Status::Fail),
            self.count(Status::Error)
        )
    }
}

impl Corpus {
    pub fn builtin() -> Result<Self> {
        Self::parse(BUILTIN)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let corpus: Corpus = toml::from_str(text).map_err(|e| Error::Parse {
            line: e.span().map_or(0, |s| text[..s.start].lines().count().max(1)),
            msg: e.message().to_string(),
        })?;
        for item in &corpus.items {
            for name in item.checks.iter().flat_map(|c| c.kind.algebra()) {
                if !corpus.algebras.contains_key(name) {
                    return input(format!("item {}: unknown algebra '{name}'", item.id));
                }
            }
        }
        Ok(corpus)
    }

    pub fn item(&self, id: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn item_mut(&mut self, id: &str) -> Option<&mut Item> {
        self.items.iter_mut().find(|i| i.id == id)
    }

    /// Items whose id matches `pattern`, either in full or after dropping the
    /// leading letters (so `8.1` selects `L8.1`), ignoring case.
    pub fn select(&self, pattern: Option<&str>) -> Vec<&Item> {
        self.items.iter().filter(|i| pattern.is_none_or(|p| id_matches(&i.id, p))).collect()
    }

    pub fn run<F: Scalar>(&self, field: &str, pattern: Option<&str>) -> CorpusReport {
        let mut runner = Runner::<F> { algebras: &self.algebras, cache: HashMap::new() };
        let items = self.select(pattern).into_iter().map(|item| runner.item(item)).collect();
        CorpusReport { field: field.to_string(), items }
    }
}

pub fn id_matches(id: &str, pattern: &str) -> bool {
    let stripped = id.trim_start_matches(|c: char| c.is_ascii_alphabetic());
    id.eq_ignore_ascii_case(pattern) || stripped.eq_ignore_ascii_case(pattern)
}

impl CheckKind {
    fn algebra(&self) -> Option<&str> {
        match self {
            CheckKind::Betti { algebra, .. }
            | CheckKind::GeneratorDegrees { algebra, .. }
            | CheckKind::Verdict { algebra, .. }
            | CheckKind::Dims { algebra, .. }
            | CheckKind::ModuleDims { algebra, .. }
            | CheckKind::AlgebraSeries { algebra, .. }
            | CheckKind::Froberg { algebra, .. }
            | CheckKind::Euler { algebra, .. } => Some(algebra),
            _ => None,
        }
    }
}

fn betti_key(i: usize, j: usize) -> String {
    format!("{i},{j}")
}

fn render_map<V: fmt::Display>(m: &BTreeMap<String, V>) -> String {
    let body: Vec<String> = m.iter().map(|(k, v)| format!("({k}): {v}")).collect();
    format!("{{{}}}", body.join(", "))
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Holds => "holds",
        Outcome::Fails => "fails",
        Outcome::Inconclusive => "inconclusive",
    }
}

fn parse_bounds(b: Option<[usize; 2]>) -> Option<Bounds> {
    b.map(|[n, d]| Bounds::new(n, d))
}

/// What a single check computed: a rendering and whether it matched.
struct Comparison {
    expected: String,
    actual: String,
    ok: bool,
}

struct Runner<'a, F: Scalar> {
    algebras: &'a BTreeMap<String, AlgebraDef>,
    cache: HashMap<String, Arc<Algebra<F>>>,
}

impl<F: Scalar> Runner<'_, F> {
    fn algebra(&mut self, name: &str, degree: usize) -> Result<Arc<Algebra<F>>> {
        if let Some(a) = self.cache.get(name).filter(|a| a.bound() >= degree) {
            return Ok(a.clone());
        }
        let def = self.algebras.get(name).ok_or_else(|| Error::Input(format!("unknown algebra '{name}'")))?;
        let a = Arc::new(Algebra::expand(&def.presentation()?, degree)?);
        self.cache.insert(name.to_string(), a.clone());
        Ok(a)
    }

    fn default_bounds(&self, name: &str, module: Option<&ModuleSpec>) -> Result<Bounds> {
        let def = self.algebras.get(name).ok_or_else(|| Error::Input(format!("unknown algebra '{name}'")))?;
        let p = def.presentation()?;
        Ok(match module {
            Some(m) => m.default_bounds(p.vars(), p.is_polynomial_ring()),
            None => Bounds::quotient_algebra(),
        })
    }

    fn module(&mut self, algebra: &str, spec: &ModuleSpec, bound: usize) -> Result<Arc<Module<F>>> {
        let a = self.algebra(algebra, bound)?;
        Ok(Arc::new(spec.build(&a, bound)?))
    }

    fn resolution(
        &mut self,
        algebra: &str,
        spec: &ModuleSpec,
        bounds: Option<[usize; 2]>,
    ) -> Result<MinimalResolution<F>> {
        let b = match parse_bounds(bounds) {
            Some(b) => b,
            None => self.default_bounds(algebra, Some(spec))?,
        };
        let m = self.module(algebra, spec, b.max_deg)?;
        MinimalResolution::compute(m, ResolutionOptions::new(b))
    }

    fn item(&mut self, item: &Item) -> ItemReport {
        let start = Instant::now();
        let checks: Vec<CheckReport> = item.checks.iter().map(|c| self.check(c)).collect();
        let status = [Status::Error, Status::Fail, Status::KnownFailure]
            .into_iter()
            .find(|s| checks.iter().any(|c| c.status == *s))
            .unwrap_or(Status::Pass);
        ItemReport {
            id: item.id.clone(),
            criterion: item.criterion,
            title: item.title.clone(),
            status,
            seconds: start.elapsed().as_secs_f64(),
            checks,
        }
    }

    fn check(&mut self, check: &Check) -> CheckReport {
        let description = describe(&check.kind);
        match self.evaluate(&check.kind) {
            Ok(o) => {
                let (status, note) = match (o.ok, &check.known_failure) {
                    (true, None) => (Status::Pass, None),
                    (true, Some(_)) => (Status::Pass, Some("listed as a known failure but now matches".to_string())),
                    (false, None) => (Status::Fail, None),
                    (false, Some(reason)) => (Status::KnownFailure, Some(reason.clone())),
                };
                CheckReport { description, expected: o.expected, actual: o.actual, status, note }
            }
            Err(e) => CheckReport {
                description,
                expected: String::new(),
                actual: e.to_string(),
                status: Status::Error,
                note: check.known_failure.clone(),
            },
        }
    }

    fn evaluate(&mut self, kind: &CheckKind) -> Result<Comparison> {
        match kind {
            CheckKind::Betti { algebra, module, bounds, exact, expect } => {
                let table = self.resolution(algebra, module, *bounds)?.betti_table();
                let ok = if *exact {
                    *expect == table_map(&table)
                } else {
                    expect.iter().all(|(k, &v)| parse_key(k).is_some_and(|(i, j)| table.get(i, j) == v))
                };
                let actual = if *exact {
                    table_map(&table)
                } else {
                    expect
                        .keys()
                        .filter_map(|k| Some((k.clone(), parse_key(k).map(|(i, j)| table.get(i, j))?)))
                        .collect()
                };
                Ok(Comparison { expected: render_map(expect), actual: render_map(&actual), ok })
            }
            CheckKind::GeneratorDegrees { algebra, module, bounds, expect } => {
                let r = self.resolution(algebra, module, *bounds)?;
                let actual: Vec<Vec<usize>> = (0..expect.len()).map(|i| r.generator_degrees(i).to_vec()).collect();
                Ok(Comparison { expected: format!("{expect:?}"), actual: format!("{actual:?}"), ok: actual == *expect })
            }
            CheckKind::Verdict { check, algebra, module, gens, bounds, expect } => {
                let b = match parse_bounds(*bounds) {
                    Some(b) => b,
                    None => self.default_bounds(algebra, module.as_ref())?,
                };
                let v = self.verdict(check, algebra, module.as_ref(), gens.as_deref(), b)?;
                let witness = match &expect.witness {
                    Some(w) => Some(self.witness_row(algebra, w, b)?),
                    None => None,
                };
                Ok(compare_verdict(&v, expect, witness))
            }
            CheckKind::Dims { algebra, bound, expect } => {
                let a = self.algebra(algebra, *bound)?;
                let actual: Vec<usize> = (0..=*bound).map(|d| a.dim(d)).collect();
                Ok(Comparison { expected: format!("{expect:?}"), actual: format!("{actual:?}"), ok: actual == *expect })
            }
            CheckKind::ModuleDims { algebra, module, bound, expect } => {
                let actual = self.module(algebra, module, *bound)?.dims();
                Ok(Comparison { expected: format!("{expect:?}"), actual: format!("{actual:?}"), ok: actual == *expect })
            }
            CheckKind::IdealSeries { vars, ideal, bound, inverse, expect } => {
                let h = hilbert_series_quotient(&monomial_ideal(vars, ideal)?, *bound)?;
                let s = if *inverse { h.inverse()? } else { h };
                Ok(series_outcome(&s, expect))
            }
            CheckKind::AlgebraSeries { algebra, bound, inverse, expect } => {
                let h = self.algebra(algebra, *bound)?.hilbert_series().truncate(*bound);
                let s = if *inverse { h.inverse()? } else { h };
                Ok(series_outcome(&s, expect))
            }
            CheckKind::Froberg { algebra, bound, expect } => {
                let h = self.algebra(algebra, *bound)?.hilbert_series().truncate(*bound);
                let actual = froberg_obstruction(&h)?;
                let show = |o: Option<usize>| o.map_or("none".to_string(), |j| format!("j = {j}"));
                Ok(Comparison { expected: show(*expect), actual: show(actual), ok: actual == *expect })
            }
            CheckKind::Euler { algebra, module, bounds } => {
                let r = self.resolution(algebra, module, *bounds)?;
                let b = r.bounds();
                let top = b.max_hom.min(b.max_deg);
                let table = r.betti_table();
                let euler = Series::new((0..=top).map(|j| table.euler_at(j)).collect())?;
                let alg = r.module().algebra().hilbert_series().truncate(top);
                let lhs = alg.mul(&euler);
                let dims: Vec<i64> = r.module().dims().iter().take(top + 1).map(|&d| d as i64).collect();
                let rhs = Series::new(dims)?;
                Ok(Comparison { expected: rhs.to_string(), actual: lhs.to_string(), ok: lhs == rhs })
            }
            CheckKind::Hochster { vars, ideal, expect } => {
                let ideal = monomial_ideal(vars, ideal)?;
                let delta = complex_from_ideal(&ideal)?;
                let hochster = table_map(&hochster_table::<F>(&delta));
                let lcm = ideal.lcm_degree();
                let spec = ModuleSpec::Cyclic(ideal.gens().iter().map(|g| ideal.monomial_label(g)).collect());
                let names: Vec<&str> = ideal.vars().iter().map(String::as_str).collect();
                let s = Arc::new(Algebra::<F>::expand(&Presentation::polynomial_ring(&names), lcm)?);
                let m = Arc::new(spec.build(&s, lcm)?);
                let engine = table_map(
                    &MinimalResolution::compute(m, ResolutionOptions::new(Bounds::new(ideal.n() + 1, lcm)))?.betti_table(),
                );
                let mut actual = format!("Hochster {}", render_map(&hochster));
                if engine != hochster {
                    actual.push_str(&format!("; resolution {}", render_map(&engine)));
                }
                Ok(Comparison { expected: render_map(expect), actual, ok: *expect == hochster && engine == hochster })
            }
            CheckKind::Complex { vars, ideal, expect } => {
                let dual = complex_from_ideal(&monomial_ideal(vars, ideal)?)?.alexander_dual();
                let mut exp = Vec::new();
                let mut act = Vec::new();
                let mut ok = true;
                let mut flag = |name: &str, want: Option<bool>, got: bool| {
                    if let Some(w) = want {
                        exp.push(format!("{name} {w}"));
                        act.push(format!("{name} {got}"));
                        ok &= w == got;
                    }
                };
                flag("Cohen-Macaulay", expect.dual_cm, dual.is_cohen_macaulay::<F>());
                flag("Buchsbaum", expect.dual_buchsbaum, dual.is_buchsbaum::<F>());
                flag("sequentially CM", expect.dual_sequentially_cm, dual.is_sequentially_cm::<F>());
                flag("pure", expect.dual_pure, dual.is_pure());
                if let Some(h) = &expect.dual_homology {
                    let got = dual.reduced_homology::<F>();
                    for (k, &v) in h {
                        let i: i32 = k.parse().map_err(|_| Error::Input(format!("bad homology degree '{k}'")))?;
                        exp.push(format!("H~{i} = {v}"));
                        act.push(format!("H~{i} = {}", got.get(i)));
                        ok &= got.get(i) == v;
                    }
                }
                Ok(Comparison { expected: format!("dual: {}", exp.join(", ")), actual: format!("dual: {}", act.join(", ")), ok })
            }
            CheckKind::Properties { count, max_vertices, seed } => {
                let config = SuiteConfig { count: *count, max_vertices: *max_vertices, seed: *seed, ..SuiteConfig::default() };
                let report = run_property_suite::<F>(&config)?;
                let mut actual = format!(
                    "{} instances, {} property checks, {} violations",
                    report.instances,
                    report.exercised.values().sum::<usize>(),
                    report.violations.len()
                );
                for v in report.violations.iter().take(5) {
                    actual.push_str(&format!("; {v}"));
                }
                Ok(Comparison { expected: "0 violations".into(), actual, ok: report.passed() })
            }
        }
    }

    fn verdict(
        &mut self,
        check: &str,
        algebra: &str,
        module: Option<&ModuleSpec>,
        gens: Option<&[String]>,
        b: Bounds,
    ) -> Result<Verdict> {
        let need_module = || Error::Input(format!("{check} needs a module"));
        match check {
            "algebra_k2_check" => algebra_k2_check(&self.algebra(algebra, b.max_deg)?, b),
            "koszul_check" => koszul_check(&self.algebra(algebra, b.max_deg)?, b),
            "trivial_action_check" => {
                let a = self.algebra(algebra, b.max_deg)?;
                let gens = gens.ok_or_else(|| Error::Input("trivial_action_check needs gens".into()))?;
                let elems = gens.iter().map(|g| a.parse_element(g)).collect::<Result<Vec<_>>>()?;
                trivial_action_check(&a, elems, b)
            }
            "k1_check" | "k2_check" | "koszul_module_check" => {
                let m = self.module(algebra, module.ok_or_else(need_module)?, b.max_deg)?;
                let r = MinimalResolution::compute(m, ResolutionOptions::new(b))?;
                Ok(match check {
                    "k1_check" => k1_check(&r),
                    "k2_check" => k2_check(&r),
                    _ => koszul_module_check(&r),
                })
            }
            "componentwise_linear_check" | "strongly_k2_check" | "yoneda_d1" | "yoneda_d2" => {
                let m = self.module(algebra, module.ok_or_else(need_module)?, b.max_deg)?;
                match check {
                    "componentwise_linear_check" => componentwise_linear_check(&m, b),
                    "strongly_k2_check" => strongly_k2_check(&m, b),
                    "yoneda_d1" => yoneda_generation_check(&m, b, YonedaSpan::D1),
                    _ => yoneda_generation_check(&m, b, YonedaSpan::D2),
                }
            }
            other => input(format!("unknown check '{other}'")),
        }
    }

    /// The witness row a trivial-action failure prints for `[x, source, target]`.
    fn witness_row(&mut self, algebra: &str, w: &[String], b: Bounds) -> Result<String> {
        let [x, from, to] = w else {
            return input("a witness lists a variable, a source and a target");
        };
        let a = self.algebra(algebra, b.max_deg)?;
        let label = |s: &str| -> Result<String> {
            let (d, v) = a.parse_element(s)?;
            Ok(a.element_label(d, &v))
        };
        Ok(format!("{x}: generator {} ↦ generator {}", label(from)?, label(to)?))
    }
}

fn compare_verdict(v: &Verdict, expect: &ExpectedVerdict, witness: Option<String>) -> Comparison {
    let mut exp = Vec::new();
    let mut ok = true;
    if let Some(o) = expect.outcome {
        exp.push(outcome_name(o).to_string());
        ok &= v.outcome == o;
    }
    if let Some(c) = expect.conclusive {
        exp.push(if c { "conclusive" } else { "bounded" }.to_string());
        ok &= v.conclusive == c;
    }
    if let Some(s) = expect.step {
        exp.push(format!("step {s}"));
        ok &= v.step == Some(s);
    }
    if let Some(d) = expect.degree {
        exp.push(format!("degree {d}"));
        ok &= v.degree == Some(d);
    }
    let mut act = vec![outcome_name(v.outcome).to_string(), if v.conclusive { "conclusive" } else { "bounded" }.to_string()];
    act.extend(v.step.map(|s| format!("step {s}")));
    act.extend(v.degree.map(|d| format!("degree {d}")));
    let mut actual = format!("{}: {}", v.check, act.join(", "));
    if let Some(row) = witness {
        exp.push(format!("witness {row}"));
        let rows = v.witness.as_ref().map(|w| w.rows.as_slice()).unwrap_or_default();
        ok &= rows.contains(&row);
        if !rows.is_empty() {
            actual.push_str(&format!(" [{}]", rows.join("; ")));
        }
    }
    Comparison { expected: format!("{}: {}", v.check, exp.join(", ")), actual, ok }
}

fn series_outcome(s: &Series, expect: &[i64]) -> Comparison {
    Comparison { expected: format!("{expect:?}"), actual: format!("{:?}", s.coeffs()), ok: s.coeffs() == expect }
}

fn table_map(t: &BettiTable) -> BTreeMap<String, usize> {
    t.nonzero().map(|((i, j), v)| (betti_key(i, j), v)).collect()
}

fn parse_key(k: &str) -> Option<(usize, usize)> {
    let (i, j) = k.split_once(',')?;
    Some((i.trim().parse().ok()?, j.trim().parse().ok()?))
}

fn monomial_ideal(vars: &str, gens: &[String]) -> Result<MonomialIdeal> {
    let vars: Vec<&str> = vars.split_whitespace().collect();
    let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
    MonomialIdeal::from_strs(&vars, &gens)
}

fn describe(kind: &CheckKind) -> String {
    let bounds = |b: &Option<[usize; 2]>| b.map(|[n, d]| format!(" through (N={n}, D={d})")).unwrap_or_default();
    match kind {
        CheckKind::Betti { algebra, module, bounds: b, .. } => format!("Betti table of {module} over {algebra}{}", bounds(b)),
        CheckKind::GeneratorDegrees { algebra, module, bounds: b, .. } => {
            format!("generator degrees of {module} over {algebra}{}", bounds(b))
        }
        CheckKind::Verdict { check, algebra, module, gens, bounds: b, .. } => {
            let target = match (module, gens) {
                (Some(m), _) => format!("{m} over {algebra}"),
                (None, Some(g)) => format!("{algebra} with J = <{}>", g.join(", ")),
                (None, None) => algebra.clone(),
            };
            format!("{check} on {target}{}", bounds(b))
        }
        CheckKind::Dims { algebra, bound, .. } => format!("dim {algebra}_d for d <= {bound}"),
        CheckKind::ModuleDims { algebra, module, bound, .. } => format!("dims of {module} over {algebra} for d <= {bound}"),
        CheckKind::IdealSeries { vars, ideal, bound, inverse, .. } => format!(
            "{}Hilbert series of k[{}]/<{}> through {bound}",
            if *inverse { "inverse of the " } else { "" },
            vars.replace(' ', ","),
            ideal.join(", ")
        ),
        CheckKind::AlgebraSeries { algebra, bound, inverse, .. } => {
            format!("{}Hilbert series of {algebra} through {bound}", if *inverse { "inverse of the " } else { "" })
        }
        CheckKind::Froberg { algebra, bound, .. } => format!("Froberg sign test on {algebra} through {bound}"),
        CheckKind::Euler { algebra, module, bounds: b } => format!("Euler/Hilbert identity for {module} over {algebra}{}", bounds(b)),
        CheckKind::Hochster { vars, ideal, .. } => {
            format!("Hochster table of k[{}]/<{}> and the resolution route", vars.replace(' ', ","), ideal.join(", "))
        }
        CheckKind::Complex { ideal, .. } => format!("Alexander dual of the complex of <{}>", ideal.join(", ")),
        CheckKind::Properties { count, max_vertices, seed } => {
            format!("property suites on {count} random ideals (<= {max_vertices} vertices, seed {seed}) and the worked ideals")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_corpus_parses() {
        let c = Corpus::builtin().unwrap();
        assert!(c.item("Ex7.1").is_some());
        assert!((1..=8).all(|k| c.items.iter().any(|i| i.criterion == k)));
    }

    #[test]
    fn only_filter() {
        let c = Corpus::builtin().unwrap();
        let ids: Vec<&str> = c.select(Some("8.1")).iter().map(|i| i.id.as_str()).collect();
        assert_eq!(ids, ["L8.1"]);
        assert_eq!(c.select(Some("ex7.2")).len(), 1);
        assert_eq!(c.select(None).len(), c.items.len());
        assert!(c.select(Some("9.9")).is_empty());
    }

    #[test]
    fn unknown_algebra_is_rejected() {
        let text = "[algebras]\n[[item]]\nid = \"X\"\ncriterion = 1\ntitle = \"t\"\n[[item.check]]\nkind = \"dims\"\nalgebra = \"Q\"\nbound = 2\nexpect = [1]\n";
        assert!(matches!(Corpus::parse(text), Err(Error::Input(_))));
        assert!(matches!(Corpus::parse("[[item]]\nid = 3"), Err(Error::Parse { .. })));
    }
}
