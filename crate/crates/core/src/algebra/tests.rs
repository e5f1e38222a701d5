use super::*;
use num_traits::{One, Zero};
use crate::field::{Fp, Rational};
use crate::linalg::ExactMatrix;
use crate::series::choose;
use crate::stanley_reisner::{hilbert_series_quotient, MonomialIdeal};

type F = Fp<32003>;

fn all_words(n: usize, d: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n as u8).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn word_index(n: usize, w: &[u8]) -> usize {
    w.iter().fold(0, |acc, &x| acc * n + x as usize)
}

/// Dense oracle: `dim I_d` as the rank of all `u·r·v` inside `T(V)_d`.
fn ideal_rank_oracle(p: &Presentation, d: usize) -> usize {
    let n = p.n();
    let rels = p.tensor_presentation();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for r in rels.relations() {
        let e = r.degree().unwrap();
        if e > d {
            continue;
        }
        for k in 0..=d - e {
            for u in all_words(n, k) {
                for v in all_words(n, d - e - k) {
                    let mut row = vec![Rational::zero(); n.pow(d as u32)];
                    for (c, w) in r.terms() {
                        let full: Vec<u8> = u.iter().chain(w).chain(&v).copied().collect();
                        row[word_index(n, &full)] += c.clone();
                    }
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return 0;
    }
    ExactMatrix::from_rows(rows).unwrap().rank()
}

/// Dense oracle: `dim I′_d` for `I′ = V ⊗ I_{d-1} + I_{d-1} ⊗ V`.
fn iprime_rank_oracle(p: &Presentation, d: usize) -> usize {
    let n = p.n();
    let rels = p.tensor_presentation();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for r in rels.relations() {
        let e = r.degree().unwrap();
        if e >= d {
            continue;
        }
        for k in 0..=d - e {
            for u in all_words(n, k) {
                for v in all_words(n, d - e - k) {
                    if u.is_empty() && v.is_empty() {
                        continue;
                    }
                    let mut row = vec![Rational::zero(); n.pow(d as u32)];
                    for (c, w) in r.terms() {
                        let full: Vec<u8> = u.iter().chain(w).chain(&v).copied().collect();
                        row[word_index(n, &full)] += c.clone();
                    }
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return 0;
    }
    ExactMatrix::from_rows(rows).unwrap().rank()
}

/// Words of length `d` over {X, Y} avoiding the factor `XY`.
fn monomial_algebra_dim(d: usize) -> usize {
    all_words(2, d).iter().filter(|w| !w.windows(2).any(|p| p == [0, 1])).count()
}

fn example_516() -> Presentation {
    Presentation::from_strs(&["x", "y"], &["x^2 - x*y"], false).unwrap()
}

#[test]
fn polynomial_ring_dimensions() {
    let p = Presentation::polynomial_ring(&["x1", "x2", "x3", "x4", "x5"]);
    let a = Algebra::<F>::expand(&p, 5).unwrap();
    let expected: Vec<usize> = (0..=5).map(|d| choose(d + 4, 4) as usize).collect();
    assert_eq!(a.dims(), expected);
    assert_eq!(a.dims(), vec![1, 5, 15, 35, 70, 126]);
}

#[test]
fn quadratic_example_dimensions_match_monomial_model() {
    let a = Algebra::<F>::expand(&example_516(), 6).unwrap();
    for d in 0..=6 {
        assert_eq!(a.dim(d), monomial_algebra_dim(d));
        assert_eq!(a.dim(d), d + 1);
    }
}

#[test]
fn dimension_complement_against_dense_oracle() {
    let cases = [
        example_516(),
        Presentation::from_strs(&["a", "b", "c"], &["ab - ba", "ac", "b^2 - c^2"], false).unwrap(),
        Presentation::from_strs(&["a", "b"], &["aba", "bb"], false).unwrap(),
        Presentation::from_strs(&["a", "b", "c"], &["abc", "bc"], true).unwrap(),
    ];
    for p in &cases {
        let a = Algebra::<Rational>::expand(p, 4).unwrap();
        let n = p.n();
        for d in 0..=4 {
            assert_eq!(a.tensor_expansion().dim(d) + ideal_rank_oracle(p, d), n.pow(d as u32), "{p} degree {d}");
            assert_eq!(a.iprime_codim(d).unwrap() + iprime_rank_oracle(p, d), n.pow(d as u32), "{p} degree {d}");
            if !p.is_commutative() {
                assert_eq!(a.dim(d), a.tensor_expansion().dim(d));
            }
        }
    }
}

#[test]
fn prop_74_quotient_dimensions() {
    let p = Presentation::from_strs(&["a", "b", "c", "d", "e"], &["abc", "cde"], true).unwrap();
    let a = Algebra::<F>::expand(&p, 5).unwrap();
    assert_eq!(a.dims(), vec![1, 5, 15, 33, 60, 97]);
    let ideal = MonomialIdeal::from_strs(&["a", "b", "c", "d", "e"], &["abc", "cde"]).unwrap();
    let h = hilbert_series_quotient(&ideal, 5).unwrap();
    assert_eq!(a.hilbert_series(), h);
    // the tensor presentation with commutators has the same Hilbert function
    for d in 0..=5 {
        assert_eq!(a.tensor_expansion().dim(d), a.dim(d));
    }
}

#[test]
fn multiplication_basics() {
    let p = Presentation::from_strs(&["a", "b", "c", "d", "e"], &["abc", "cde"], true).unwrap();
    let a = Algebra::<F>::expand(&p, 4).unwrap();
    let one = SparseVec::unit(0);
    let (_, x) = a.parse_element("b").unwrap();
    assert_eq!(a.multiply(0, &one, 1, &x).unwrap(), x);
    assert!(a.parse_element("abc").unwrap().1.is_zero());
    assert!(a.parse_element("cba").unwrap().1.is_zero());
    assert!(!a.parse_element("abd").unwrap().1.is_zero());
    let (_, ab) = a.parse_element("ab").unwrap();
    let (_, c) = a.parse_element("c").unwrap();
    assert!(a.multiply(2, &ab, 1, &c).unwrap().is_zero());
    assert!(a.multiply(4, &a.parse_element("abde").unwrap().1, 1, &c).is_err());

    let nc = Algebra::<F>::expand(&example_516(), 4).unwrap();
    let (_, x) = nc.parse_element("x").unwrap();
    let (_, y) = nc.parse_element("y").unwrap();
    assert_eq!(nc.multiply(1, &x, 1, &x).unwrap(), nc.multiply(1, &x, 1, &y).unwrap());
}

#[test]
fn lift_picks_normal_words() {
    let nc = Algebra::<F>::expand(&example_516(), 4).unwrap();
    let (d, xx) = nc.parse_element("x^2").unwrap();
    let lift = nc.lift(d, &xx);
    assert_eq!(lift.label(nc.vars()), "xy");
    assert_eq!(nc.reduce_tensor(&lift).unwrap(), xx);
    let p = Presentation::from_strs(&["a", "b", "c", "d", "e"], &["abc", "cde"], true).unwrap();
    let c = Algebra::<F>::expand(&p, 4).unwrap();
    let (d, abd) = c.parse_element("dba").unwrap();
    assert_eq!(c.lift(d, &abd).label(c.vars()), "abd");
}

#[test]
fn associativity_on_random_triples() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let cases = [
        example_516(),
        Presentation::from_strs(&["a", "b", "c"], &["ab - ba", "ac - 2ca", "b^2 - c^2"], false).unwrap(),
        Presentation::from_strs(&["a", "b", "c", "d", "e"], &["abc", "cde"], true).unwrap(),
    ];
    for p in &cases {
        let a = Algebra::<F>::expand(p, 6).unwrap();
        for _ in 0..40 {
            let degs: Vec<usize> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
            let elems: Vec<SparseVec<F>> = degs
                .iter()
                .map(|&d| {
                    SparseVec::from_pairs((0..a.dim(d)).map(|b| (b, F::from_i64(rng.gen_range(-3..=3)))))
                })
                .collect();
            let ab = a.multiply(degs[0], &elems[0], degs[1], &elems[1]).unwrap();
            let left = a.multiply(degs[0] + degs[1], &ab, degs[2], &elems[2]).unwrap();
            let bc = a.multiply(degs[1], &elems[1], degs[2], &elems[2]).unwrap();
            let right = a.multiply(degs[0], &elems[0], degs[1] + degs[2], &bc).unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn iprime_reduction() {
    let s = Presentation::polynomial_ring(&["a", "b", "c", "d", "e", "f"]);
    let a = Algebra::<F>::expand(&s, 5).unwrap();
    let vars = a.vars().to_vec();
    let rel = Relation::parse("deabc - abcde", &vars).unwrap();
    let t = TensorElement::from_terms(5, rel.terms().iter().map(|(c, w)| (w.clone(), F::from_ratio(c.numer(), c.denom()).unwrap())));
    assert!(a.reduce_mod_iprime(&t).unwrap().is_zero());
    // a relation times a generator lies in I′
    let t = TensorElement::from_terms(3, [(vec![0, 1, 2], F::one()), (vec![1, 0, 2], -F::one())]);
    assert!(a.reduce_mod_iprime(&t).unwrap().is_zero());
    // a bare commutator does not
    let t = TensorElement::from_terms(2, [(vec![0, 1], F::one()), (vec![1, 0], -F::one())]);
    assert!(!a.reduce_mod_iprime(&t).unwrap().is_zero());

    let nc = Algebra::<F>::expand(&example_516(), 4).unwrap();
    let t = TensorElement::from_terms(3, [(vec![1, 0, 1], F::one())]);
    assert!(!nc.reduce_mod_iprime(&t).unwrap().is_zero());
    // x·(x² − xy) ∈ I′
    let t = TensorElement::from_terms(3, [(vec![0, 0, 0], F::one()), (vec![0, 0, 1], -F::one())]);
    assert!(nc.reduce_mod_iprime(&t).unwrap().is_zero());
    assert_eq!(nc.iprime_codim(3).unwrap(), 8 - iprime_rank_oracle(&example_516(), 3));
}

#[test]
fn iprime_reduction_factors_full_reduction() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let p = Presentation::from_strs(&["a", "b", "c"], &["ab - ba", "ac", "abc - cca"], false).unwrap();
    let a = Algebra::<F>::expand(&p, 5).unwrap();
    for _ in 0..50 {
        let d = rng.gen_range(2..=5);
        let t = TensorElement::from_terms(
            d,
            (0..4).map(|_| ((0..d).map(|_| rng.gen_range(0..3u8)).collect(), F::from_i64(rng.gen_range(-2..=2)))),
        );
        let e = a.tensor_expansion();
        let coords = a.reduce_mod_iprime(&t).unwrap();
        // coset representatives of I′ still reduce to the same element of A
        assert_eq!(e.reduce_full(d, &coords), a.reduce_tensor(&t).unwrap());
    }
}

#[test]
fn minimal_relations_are_detected() {
    // a·(ab) and (ab)·b make abb redundant modulo V⊗I + I⊗V
    let p = Presentation::from_strs(&["a", "b"], &["ab", "abb", "bab"], false).unwrap();
    let a = Algebra::<F>::expand(&p, 3).unwrap();
    assert_eq!(a.minimal_relation_degrees(), vec![2]);
    let q = Presentation::from_strs(&["a", "b", "c", "d", "e"], &["abc", "cde"], true).unwrap();
    let c = Algebra::<F>::expand(&q, 4).unwrap();
    // ten commutators and two cubics
    assert_eq!(c.minimal_relation_degrees(), [vec![2; 10], vec![3; 2]].concat());
}

#[test]
fn queries_past_the_bound_fail() {
    let a = Algebra::<F>::expand(&example_516(), 3).unwrap();
    assert!(a.nf_word(&[0, 0, 0, 0]).is_err());
    assert!(a.parse_element("xxxx").is_err());
    assert!(a.iprime_codim(4).is_err());
}
