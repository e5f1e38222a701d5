use std::sync::Arc;

use k2res::algebra::{Algebra, Presentation};
use k2res::criteria::{
    algebra_k2_check, componentwise_linear_check, froberg_obstruction, k1_check, k2_check, koszul_check,
    koszul_module_check, strongly_k2_check, trivial_action_check, yoneda_generation_check, Outcome, YonedaSpan,
};
use k2res::module::{parse_elements, Module};
use k2res::resolution::{Bounds, MinimalResolution, ResolutionOptions};
use k2res::series::Series;
use k2res::Gf32003;

type F = Gf32003;

const SIX: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

fn s_bounds(n: usize) -> Bounds {
    Bounds::new(n + 1, 2 * (n + 1))
}

fn algebra(vars: &[&str], rels: &[&str], commutative: bool, d: usize) -> Arc<Algebra<F>> {
    Arc::new(Algebra::expand(&Presentation::from_strs(vars, rels, commutative).unwrap(), d).unwrap())
}

fn ideal(a: &Arc<Algebra<F>>, gens: &[&str], d: usize) -> Arc<Module<F>> {
    Arc::new(Module::ideal(a.clone(), parse_elements(a, gens).unwrap(), false, d).unwrap())
}

fn resolve(m: &Arc<Module<F>>, b: Bounds) -> MinimalResolution<F> {
    MinimalResolution::compute(m.clone(), ResolutionOptions::new(b)).unwrap()
}

#[test]
fn cubics_sharing_a_variable_fail_both_tests() {
    let b = s_bounds(6);
    let a = algebra(&SIX, &[], true, b.max_deg);
    let j = ideal(&a, &["abc", "cde"], b.max_deg);
    let r = resolve(&j, b);
    let v1 = k1_check(&r);
    assert_eq!((v1.outcome, v1.step), (Outcome::Fails, Some(1)));
    let v2 = k2_check(&r);
    assert_eq!((v2.outcome, v2.step), (Outcome::Fails, Some(0)));
    assert_eq!(koszul_module_check(&r).outcome, Outcome::Fails);

    let i = ideal(&a, &["abc", "cde", "ae"], b.max_deg);
    let v = componentwise_linear_check(&i, b).unwrap();
    assert!(v.holds_outcome() && v.conclusive, "{v}");
    let v = k2_check(&resolve(&i, b));
    assert!(v.holds_outcome() && v.conclusive, "{v}");
    let v = strongly_k2_check(&i, b).unwrap();
    assert!(v.holds_outcome() && v.conclusive, "{v}");
    // mixed generator degrees rule out a Koszul module
    assert_eq!(koszul_module_check(&resolve(&i, b)).outcome, Outcome::Fails);
    assert!(koszul_module_check(&resolve(&ideal(&a, &["ae"], b.max_deg), b)).holds_outcome());
}

#[test]
fn k2_ideal_with_non_k2_quotient() {
    let b = s_bounds(6);
    let a = algebra(&SIX, &[], true, b.max_deg);
    let i = ideal(&a, &["abc", "def", "abef"], b.max_deg);
    let j = ideal(&a, &["abc", "abef"], b.max_deg);
    let v = k2_check(&resolve(&i, b));
    assert!(v.holds_outcome() && v.conclusive, "{v}");
    assert!(k2_check(&resolve(&j, b)).holds_outcome());
    let q = Arc::new(Module::quotient(&i, &j).unwrap());
    assert_eq!(k2_check(&resolve(&q, b)).outcome, Outcome::Fails);
    assert_eq!(strongly_k2_check(&i, b).unwrap().outcome, Outcome::Fails);
    assert_eq!(componentwise_linear_check(&i, b).unwrap().outcome, Outcome::Fails);
}

#[test]
fn dependent_linearizations() {
    let b = s_bounds(5);
    let s = algebra(&["a", "b", "c", "d", "e"], &[], true, b.max_deg);
    let i = ideal(&s, &["abc", "cde", "abde"], b.max_deg);
    let v = k2_check(&resolve(&i, b));
    assert_eq!(v.outcome, Outcome::Fails, "{v}");
    assert_eq!(k1_check(&resolve(&i, b)).outcome, Outcome::Fails);
}

/// `A/⟨c⟩` over `A = k[a..e]/⟨abc, cde, abde⟩`: the two degree-5 syzygies
/// `(de, 0)` and `(0, ab)` both have essential product `abde` and no linear
/// part, and `Ext^{3,5}` is 2-dimensional while only `E^{2,4} ⋆ Ext^{1,1}`
/// lands there. Both routes must report the same failure.
#[test]
fn cyclic_module_over_face_ring_fails_in_degree_5() {
    let a = algebra(&["a", "b", "c", "d", "e"], &["abc", "cde", "abde"], true, 7);
    let m = Arc::new(Module::cyclic_quotient(a.clone(), parse_elements(&a, &["c"]).unwrap(), false, 7).unwrap());
    let b = Bounds::new(4, 7);
    let r = resolve(&m, b);
    assert_eq!(r.betti_table().get(3, 5), 2);
    let v = k2_check(&r);
    assert_eq!((v.outcome, v.step, v.degree), (Outcome::Fails, Some(2), Some(5)), "{v}");
    let y = yoneda_generation_check(&m, b, YonedaSpan::D2).unwrap();
    assert_eq!((y.outcome, y.step, y.degree), (Outcome::Fails, Some(3), Some(5)), "{y}");
}

#[test]
fn non_k2_face_ring() {
    let c = algebra(&["a", "b", "c", "d", "e"], &["abc", "cde"], true, 5);
    let v = algebra_k2_check(&c, Bounds::new(5, 5)).unwrap();
    assert_eq!(v.outcome, Outcome::Fails, "{v}");
    assert!(v.degree.unwrap() <= 5);
}

#[test]
fn quadratic_example_with_a_left_ideal() {
    let a = algebra(&["x", "y"], &["x^2 - x*y"], false, 6);
    assert_eq!(a.dims(), vec![1, 2, 3, 4, 5, 6, 7]);
    let j = ideal(&a, &["yx", "yxx"], 6);
    let r = resolve(&j, Bounds::new(3, 6));
    assert_eq!(r.generator_degrees(0), &[2, 3]);
    assert_eq!(r.generator_degrees(1), &[4]);
    assert!(r.generator_degrees(2).is_empty());
    assert!(k1_check(&r).holds_outcome());

    let b = algebra(&["x", "y"], &["x^2 - x*y", "yx"], false, 6);
    let v = koszul_check(&b, Bounds::new(6, 6)).unwrap();
    assert_eq!((v.outcome, v.degree), (Outcome::Fails, Some(4)), "{v}");

    let gens = parse_elements(&a, &["yx"]).unwrap();
    let v = trivial_action_check(&a, gens, Bounds::new(3, 6)).unwrap();
    assert_eq!(v.outcome, Outcome::Fails, "{v}");
    let w = v.witness.unwrap();
    let yxx = a.element_label(3, &a.nf_word(&[1, 0, 0]).unwrap());
    assert_eq!(w.rows, vec![format!("x: generator yx ↦ generator {yxx}")]);
}

#[test]
fn trivial_action_over_commutative_rings() {
    let a = algebra(&["a", "b"], &[], true, 4);
    let gens = parse_elements(&a, &["ab"]).unwrap();
    let v = trivial_action_check(&a, gens, Bounds::new(3, 4)).unwrap();
    assert!(v.holds_outcome() && v.conclusive);
}

#[test]
fn koszul_purity() {
    let s = algebra(&["a", "b", "c"], &[], true, 4);
    let v = koszul_check(&s, Bounds::new(4, 4)).unwrap();
    assert!(v.holds_outcome() && v.conclusive, "{v}");
    let m = algebra(&["X", "Y"], &["XY"], false, 7);
    let v = koszul_check(&m, Bounds::new(6, 7)).unwrap();
    assert!(v.holds_outcome() && !v.conclusive, "{v}");
}

#[test]
fn froberg_sign_test() {
    let hb = Series::new(vec![1, 2, 2, 1, 1, 1]).unwrap();
    assert_eq!(hb.inverse().unwrap().coeffs()[..5], [1, -2, 2, -1, -1]);
    assert_eq!(froberg_obstruction(&hb).unwrap(), Some(4));
    assert_eq!(froberg_obstruction(&Series::polynomial_ring(4, 8)).unwrap(), None);
    let hc = Series::new(vec![1, 5, 15, 33, 60, 97]).unwrap();
    assert_eq!(froberg_obstruction(&hc).unwrap(), Some(4));
}

/// Matrix criteria and Yoneda spans are independent routes to the same predicate.
#[test]
fn matrix_and_yoneda_routes_agree() {
    let b = s_bounds(5);
    let s = algebra(&["a", "b", "c", "d", "e"], &[], true, b.max_deg);
    let cases: &[&[&str]] = &[
        &["abc", "cde"],
        &["abc", "cde", "ae"],
        &["abc", "cde", "abde"],
        &["ab", "bc", "cd"],
        &["abc", "bcd", "cde"],
        &["ab", "cde"],
        &["abc"],
    ];
    for gens in cases {
        let m = ideal(&s, gens, b.max_deg);
        let r = resolve(&m, b);
        let d1 = yoneda_generation_check(&m, b, YonedaSpan::D1).unwrap();
        let d2 = yoneda_generation_check(&m, b, YonedaSpan::D2).unwrap();
        assert_eq!(d1.outcome, k1_check(&r).outcome, "{gens:?}: {d1}");
        assert_eq!(d2.outcome, k2_check(&r).outcome, "{gens:?}: {d2}");
    }
    let a = algebra(&["x", "y"], &["x^2 - x*y"], false, 6);
    let j = ideal(&a, &["yx", "yxx"], 6);
    let b = Bounds::new(3, 6);
    let r = resolve(&j, b);
    assert_eq!(yoneda_generation_check(&j, b, YonedaSpan::D1).unwrap().outcome, k1_check(&r).outcome);
}

#[test]
fn yoneda_route_on_trivial_modules() {
    let cases: &[(&[&str], &[&str], bool)] = &[
        (&["a", "b", "c", "d", "e"], &["abc", "cde"], true),
        (&["a", "b", "d", "e"], &["abde"], true),
        (&["x", "y"], &["x^2 - x*y", "yx"], false),
        (&["x", "y"], &["x^2 - x*y"], false),
    ];
    for (vars, rels, comm) in cases {
        let a = algebra(vars, rels, *comm, 5);
        let b = Bounds::new(5, 5);
        let k = Arc::new(Module::trivial(a.clone(), 5).unwrap());
        let r = resolve(&k, b);
        let d2 = yoneda_generation_check(&k, b, YonedaSpan::D2).unwrap();
        assert_eq!(d2.outcome, k2_check(&r).outcome, "{rels:?}: {d2}");
        let d1 = yoneda_generation_check(&k, b, YonedaSpan::D1).unwrap();
        assert_eq!(d1.outcome, k1_check(&r).outcome, "{rels:?}: {d1}");
    }
}
