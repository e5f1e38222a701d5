use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use k2res::algebra::{Algebra, Presentation};
use k2res::criteria::{algebra_k2_check, componentwise_linear_check, k1_check, k2_check};
use k2res::module::{monomial_elements, Module, ModuleSpec};
use k2res::resolution::{Bounds, MinimalResolution, ResolutionOptions};
use k2res::series::Series;
use k2res::simplicial::SimplicialComplex;
use k2res::stanley_reisner::{face_ring_series, hochster_table, ideal_from_complex};
use k2res::{Result, Scalar};

use crate::report::{Implication, Report, Section};

/// `--max-hom` / `--max-deg` overrides applied on top of each default.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub max_hom: Option<usize>,
    pub max_deg: Option<usize>,
}

impl Overrides {
    pub fn apply(self, b: Bounds) -> Bounds {
        Bounds::new(self.max_hom.unwrap_or(b.max_hom), self.max_deg.unwrap_or(b.max_deg))
    }
}

fn flags(complex: &SimplicialComplex, f: impl Fn(&SimplicialComplex) -> [(&'static str, bool); 4]) -> BTreeMap<String, bool> {
    f(complex).into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn cm_flags<F: Scalar>(c: &SimplicialComplex) -> [(&'static str, bool); 4] {
    [
        ("pure", c.is_pure()),
        ("cohen_macaulay", c.is_cohen_macaulay::<F>()),
        ("sequentially_cm", c.is_sequentially_cm::<F>()),
        ("buchsbaum", c.is_buchsbaum::<F>()),
    ]
}

fn facet_lines(c: &SimplicialComplex) -> Vec<String> {
    let facets: Vec<String> = c.facets().iter().map(|&f| c.face_label(f)).collect();
    vec![
        format!("vertices: {}", c.names().join(" ")),
        format!("facets: {}", facets.join(" ")),
        format!("f-vector: {:?}", c.f_vector()),
        format!("reduced homology: {}", c.reduced_homology::<k2res::Rational>()),
    ]
}

/// The complex, its dual, the face ring and every implication between the
/// topological and algebraic sides that the computation can test.
pub fn analyze_complex<F: Scalar>(path: &str, text: &str, field: &str, o: Overrides) -> Result<Report> {
    let start = Instant::now();
    let delta = SimplicialComplex::parse(text)?;
    let dual = delta.alexander_dual();
    let ideal = ideal_from_complex(&delta)?;
    let n = delta.n();
    let module_bounds = o.apply(Bounds::polynomial_module(n, ideal.lcm_degree()));
    let algebra_bounds = o.apply(Bounds::quotient_algebra());

    let mut sections = vec![
        Section::Lines { title: "complex".into(), lines: facet_lines(&delta) },
        Section::Flags { title: "complex properties".into(), flags: flags(&delta, cm_flags::<F>) },
        Section::Lines { title: "Alexander dual".into(), lines: facet_lines(&dual) },
        Section::Flags { title: "Alexander dual properties".into(), flags: flags(&dual, cm_flags::<F>) },
        Section::Lines { title: "Stanley-Reisner ideal".into(), lines: vec![ideal.to_string()] },
        Section::Betti {
            title: "Betti table of the face ring (Hochster)".into(),
            betti: (&hochster_table::<F>(&delta)).into(),
        },
        Section::Series {
            title: "Hilbert series of the face ring".into(),
            coeffs: face_ring_series(&delta, algebra_bounds.max_deg).coeffs().to_vec(),
        },
    ];

    let dual_cm = dual.is_cohen_macaulay::<F>();
    let dual_seq_cm = dual.is_sequentially_cm::<F>();
    let names: Vec<&str> = delta.names().iter().map(String::as_str).collect();
    let face_ring = Arc::new(Algebra::<F>::expand(&Presentation::monomial_quotient(&ideal)?, algebra_bounds.max_deg)?);
    let algebra_verdict = algebra_k2_check(&face_ring, algebra_bounds)?;
    let mut implications = Vec::new();
    if ideal.is_zero() {
        sections.push(Section::Lines { title: "ideal checks".into(), lines: vec!["the ideal is zero".into()] });
    } else {
        let s = Arc::new(Algebra::<F>::expand(&Presentation::polynomial_ring(&names), module_bounds.max_deg)?);
        let module = Arc::new(Module::ideal(s.clone(), monomial_elements(&s, &ideal)?, false, module_bounds.max_deg)?);
        let r = MinimalResolution::compute(module.clone(), ResolutionOptions::new(module_bounds))?;
        let k2 = k2_check(&r);
        let cw = componentwise_linear_check(&module, module_bounds)?;
        sections.push(Section::Betti { title: "Betti table of the ideal".into(), betti: (&r.betti_table()).into() });

        let degs = ideal.generator_degrees();
        let linear = degs.iter().all(|&d| d == degs[0])
            && r.betti_table().nonzero().all(|((i, j), _)| j == degs[0] + i);
        implications.push(Implication {
            name: "Eagon-Reiner".into(),
            statement: format!("dual Cohen-Macaulay ({dual_cm}) iff linear resolution ({linear})"),
            violated: dual_cm != linear,
        });
        implications.push(Implication {
            name: "Herzog-Hibi".into(),
            statement: format!(
                "dual sequentially CM ({dual_seq_cm}) iff componentwise linear ({})",
                cw.holds_outcome()
            ),
            violated: dual_seq_cm != cw.holds_outcome(),
        });
        implications.push(Implication {
            name: "K2 ideal => K2 face ring".into(),
            statement: format!("ideal {} / face ring {}", k2.outcome_label(), algebra_verdict.outcome_label()),
            violated: k2.holds_outcome() && k2.conclusive && algebra_verdict.fails_outcome(),
        });
        sections.push(Section::Verdict { title: "ideal as a module".into(), verdict: k2 });
        sections.push(Section::Verdict { title: "ideal components".into(), verdict: cw });
    }
    implications.push(Implication {
        name: "sequentially CM dual => K2 face ring".into(),
        statement: format!("dual sequentially CM ({dual_seq_cm}) / face ring {}", algebra_verdict.outcome_label()),
        violated: dual_seq_cm && algebra_verdict.fails_outcome(),
    });
    sections.push(Section::Verdict { title: "face ring".into(), verdict: algebra_verdict });
    sections.push(Section::Consistency { title: "implications".into(), implications });

    Ok(Report {
        command: "analyze-complex".into(),
        input: BTreeMap::from([("complex".to_string(), path.to_string())]),
        field: field.into(),
        bounds: Some(algebra_bounds),
        sections,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Extension trait for short verdict labels in implication statements.
trait OutcomeLabel {
    fn outcome_label(&self) -> String;
}

impl OutcomeLabel for k2res::criteria::Verdict {
    fn outcome_label(&self) -> String {
        match self.outcome {
            k2res::criteria::Outcome::Holds if self.conclusive => "K2".into(),
            k2res::criteria::Outcome::Holds => "no failure within bounds".into(),
            k2res::criteria::Outcome::Fails => "not K2".into(),
            k2res::criteria::Outcome::Inconclusive => "inconclusive".into(),
        }
    }
}

/// Minimal resolution of a module, its Betti table and the matrix criteria.
pub fn resolve<F: Scalar>(
    input: BTreeMap<String, String>,
    presentation: &Presentation,
    spec: &ModuleSpec,
    field: &str,
    o: Overrides,
) -> Result<Report> {
    let start = Instant::now();
    let bounds = o.apply(spec.default_bounds(presentation.vars(), presentation.is_polynomial_ring()));
    let alg = Arc::new(Algebra::<F>::expand(presentation, bounds.max_deg)?);
    let module = Arc::new(spec.build(&alg, bounds.max_deg)?);
    let r = MinimalResolution::compute(module.clone(), ResolutionOptions::new(bounds))?;
    let table = r.betti_table();

    let mut lines = vec![
        format!("module: {}", module.description()),
        format!("dims through degree {}: {:?}", bounds.max_deg, module.dims()),
        format!("computed through internal degree {}", r.computed_through()),
    ];
    lines.extend((0..r.num_steps()).map(|i| format!("step {i} generator degrees: {:?}", r.generator_degrees(i))));
    match r.projective_dimension() {
        _ if module.is_zero() => lines.push("the module is zero".into()),
        Some(p) => lines.push(format!("projective dimension: {p}")),
        None => lines.push("projective dimension: not determined within bounds".into()),
    }
    let mut sections = vec![
        Section::Lines { title: "resolution".into(), lines },
        Section::Betti { title: "Betti table".into(), betti: (&table).into() },
        Section::Verdict { title: "linear parts".into(), verdict: k1_check(&r) },
        Section::Verdict { title: "essential products".into(), verdict: k2_check(&r) },
    ];
    if *spec == ModuleSpec::Trivial {
        // H_A(t) · Σ_i (−1)^i β_{i,j} t^j = 1 through min(N, D)
        let top = bounds.max_hom.min(bounds.max_deg);
        let euler = Series::new((0..=top).map(|j| table.euler_at(j)).collect())?;
        let product = alg.hilbert_series().truncate(top).mul(&euler);
        sections.push(Section::Consistency {
            title: "Euler/Hilbert identity".into(),
            implications: vec![Implication {
                name: "H_A(t) * sum (-1)^i b_ij t^j = 1".into(),
                statement: format!("through degree {top}: coefficients {:?}", product.coeffs()),
                violated: product != Series::one(top),
            }],
        });
    }
    Ok(Report {
        command: "resolve".into(),
        input,
        field: field.into(),
        bounds: Some(bounds),
        sections,
        seconds: start.elapsed().as_secs_f64(),
    })
}
