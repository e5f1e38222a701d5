//! Monomial ideals, the complex ↔ squarefree ideal dictionary, and Betti
//! numbers and Hilbert series computed combinatorially.

use std::collections::HashMap;
use std::fmt;

use crate::betti::BettiTable;
use crate::error::{input, Error, Result};
use crate::field::Scalar;
use crate::series::{choose, Series};
use crate::simplicial::{face_size, Face, HomologyProfile, SimplicialComplex};

/// A monomial ideal in a commutative polynomial ring, given by a minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    /// Exponent vectors, inclusion-minimal, sorted by degree then exponent order.
    gens: Vec<Vec<u32>>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

impl MonomialIdeal {
    /// The ideal generated by the given exponent vectors. Redundant generators
    /// are discarded; generators of degree below 2 are rejected.
    pub fn new(vars: Vec<String>, gens: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.len() != vars.len()) {
            return input(format!("exponent vector of length {} in {} variables", g.len(), vars.len()));
        }
        if let Some(g) = gens.iter().find(|g| degree(g) < 2) {
            return input(format!(
                "generator of degree {} (ideals must be generated in degree at least 2)",
                degree(g)
            ));
        }
        let mut gens = gens;
        gens.sort_by(|a, b| degree(a).cmp(&degree(b)).then_with(|| b.cmp(a)));
        gens.dedup();
        let mut minimal: Vec<Vec<u32>> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| divides(m, &g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { vars, gens: minimal })
    }

    /// Squarefree generators given as bitmasks over `vars`.
    pub fn from_masks(vars: Vec<String>, masks: &[Face]) -> Result<Self> {
        let n = vars.len();
        let gens = masks.iter().map(|&m| (0..n).map(|i| (m >> i & 1) as u32).collect()).collect();
        Self::new(vars, gens)
    }

    /// Generators written as juxtaposed variable names, e.g. `["abc", "cde"]`.
    /// With multi-character variable names, separate factors by `*`.
    pub fn from_strs(vars: &[&str], gens: &[&str]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let gens = gens.iter().map(|g| parse_monomial(g, &vars)).collect::<Result<Vec<_>>>()?;
        Self::new(vars, gens)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn gens(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.iter().all(|&e| e <= 1))
    }

    pub fn generator_degrees(&self) -> Vec<usize> {
        self.gens.iter().map(|g| degree(g)).collect()
    }

    /// Degree of the lcm of all generators (0 for the zero ideal).
    pub fn lcm_degree(&self) -> usize {
        let l = self.gens.iter().fold(vec![0; self.n()], |acc, g| lcm(&acc, g));
        degree(&l)
    }

    pub fn masks(&self) -> Result<Vec<Face>> {
        if !self.is_squarefree() {
            return input("ideal is not squarefree");
        }
        Ok(self
            .gens
            .iter()
            .map(|g| g.iter().enumerate().fold(0u64, |m, (i, &e)| if e > 0 { m | 1 << i } else { m }))
            .collect())
    }

    pub fn monomial_label(&self, g: &[u32]) -> String {
        monomial_label(&self.vars, g)
    }

    /// Parse the ideal text format: a `vars:` header, then one monomial per line.
    pub fn parse(text: &str) -> Result<Self> {
        let spec = IdealText::parse(text)?;
        let gens = spec
            .monomials
            .iter()
            .map(|(line, m)| {
                parse_monomial(m, &spec.vars).map_err(|e| Error::Parse { line: *line, msg: e.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(spec.vars, gens)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("vars: {}\n", self.vars.join(" "));
        for g in &self.gens {
            s.push_str(&self.monomial_label(g));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| self.monomial_label(g)).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

pub(crate) fn monomial_label(vars: &[String], g: &[u32]) -> String {
    let single = vars.iter().all(|v| v.chars().count() == 1);
    let mut parts = Vec::new();
    for (i, &e) in g.iter().enumerate() {
        for _ in 0..e {
            parts.push(vars[i].as_str());
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else if single {
        parts.concat()
    } else {
        parts.join("*")
    }
}

/// Raw content of an ideal file: variable names and monomial lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealText {
    pub vars: Vec<String>,
    /// `(line number, monomial text)`.
    pub monomials: Vec<(usize, String)>,
}

impl IdealText {
    pub fn parse(text: &str) -> Result<Self> {
        let mut vars: Option<Vec<String>> = None;
        let mut monomials = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vars:") {
                if vars.is_some() {
                    return Err(Error::Parse { line: k + 1, msg: "duplicate vars header".into() });
                }
                let vs: Vec<String> = rest
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(str::to_string)
                    .collect();
                if vs.is_empty() {
                    return Err(Error::Parse { line: k + 1, msg: "empty vars header".into() });
                }
                vars = Some(vs);
                continue;
            }
            if vars.is_none() {
                return Err(Error::Parse { line: k + 1, msg: "monomial before the vars header".into() });
            }
            monomials.push((k + 1, line.to_string()));
        }
        let vars = vars.ok_or(Error::Parse { line: 0, msg: "missing vars header".into() })?;
        Ok(IdealText { vars, monomials })
    }
}

/// Split a product written with juxtaposition, `*`, whitespace and `^` powers
/// into variable indices, matching the longest variable name first.
pub(crate) fn parse_word(s: &str, vars: &[String]) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    let mut order: Vec<usize> = (0..vars.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(vars[i].len()));
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let c = rest.chars().next().expect("nonempty");
        if c == '*' || c.is_whitespace() {
            rest = &rest[c.len_utf8()..];
            continue;
        }
        if c == '^' {
            let digits: String = rest[1..].chars().take_while(|d| d.is_ascii_digit()).collect();
            let p: usize = digits.parse().map_err(|_| Error::Input(format!("bad exponent in '{s}'")))?;
            let last = *out.last().ok_or_else(|| Error::Input(format!("exponent without base in '{s}'")))?;
            if p == 0 {
                return input(format!("zero exponent in '{s}'"));
            }
            for _ in 1..p {
                out.push(last);
            }
            rest = &rest[1 + digits.len()..];
            continue;
        }
        let i = order
            .iter()
            .copied()
            .find(|&i| rest.starts_with(vars[i].as_str()))
            .ok_or_else(|| Error::Input(format!("unknown variable at '{rest}' in '{s}'")))?;
        out.push(i);
        rest = &rest[vars[i].len()..];
    }
    Ok(out)
}

pub(crate) fn parse_monomial(s: &str, vars: &[String]) -> Result<Vec<u32>> {
    let mut e = vec![0u32; vars.len()];
    for i in parse_word(s, vars)? {
        e[i] += 1;
    }
    Ok(e)
}

/// `I_Δ`: the ideal generated by the minimal non-faces of `Δ`.
pub fn ideal_from_complex(delta: &SimplicialComplex) -> Result<MonomialIdeal> {
    if let Some(v) = (0..delta.n()).find(|&v| !delta.contains(1 << v)) {
        return input(format!("vertex {} is not a face, so I_Δ would contain a linear generator", delta.names()[v]));
    }
    MonomialIdeal::from_masks(delta.names().to_vec(), &delta.minimal_nonfaces())
}

/// The complex of squarefree monomials outside a squarefree ideal.
pub fn complex_from_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let masks = ideal.masks()?;
    let full = if ideal.n() == 64 { u64::MAX } else { (1u64 << ideal.n()) - 1 };
    // the generators are the minimal non-faces; complements are the facets of the dual
    let dual = SimplicialComplex::with_names(ideal.vars().to_vec(), &masks.iter().map(|m| full & !m).collect::<Vec<_>>())?;
    Ok(dual.alexander_dual())
}

/// Hochster / Eagon–Reiner Betti numbers `β_{i,j}(S/I_Δ)` over `F`:
/// for `i ≥ 1`, the sum over faces `σ` of `Δ*` with `|σ| = n − j` of `dim H̃_{i−2}(link σ)`.
pub fn hochster_table<F: Scalar>(delta: &SimplicialComplex) -> BettiTable {
    let n = delta.n();
    let dual = delta.alexander_dual();
    let mut table = BettiTable::new(n + 1, n, None);
    table.add(0, 0, 1);
    let mut memo: HashMap<Face, HomologyProfile> = HashMap::new();
    for sigma in dual.faces() {
        let h = memo
            .entry(sigma)
            .or_insert_with(|| dual.link(sigma).expect("face of the dual").reduced_homology::<F>());
        for (k, d) in h.iter() {
            let i = (k + 2) as usize;
            let j = n - face_size(sigma);
            table.add(i, j, d);
        }
    }
    table
}

pub fn betti_via_hochster<F: Scalar>(delta: &SimplicialComplex, i: usize, j: usize) -> usize {
    if i == 0 {
        return usize::from(j == 0);
    }
    hochster_table::<F>(delta).get(i, j)
}

/// Whether `I` has a linear resolution, read off the Hochster Betti numbers.
pub fn has_linear_resolution<F: Scalar>(ideal: &MonomialIdeal) -> Result<bool> {
    let degs = ideal.generator_degrees();
    let Some(&d) = degs.first() else {
        return Ok(true);
    };
    if degs.iter().any(|&e| e != d) {
        return input("generators of several degrees: use the componentwise check");
    }
    let delta = complex_from_ideal(ideal)?;
    let table = hochster_table::<F>(&delta);
    let linear = table.nonzero().all(|((i, j), _)| i == 0 || j == d + i - 1);
    Ok(linear)
}

/// Componentwise linearity through the topological route: `Δ*` sequentially Cohen–Macaulay.
pub fn is_componentwise_linear_ideal<F: Scalar>(ideal: &MonomialIdeal) -> Result<bool> {
    let delta = complex_from_ideal(ideal)?;
    Ok(delta.alexander_dual().is_sequentially_cm::<F>())
}

/// `dim (S/I)_d` for `d ≤ bound` by inclusion–exclusion over generator subsets.
pub fn hilbert_series_quotient(ideal: &MonomialIdeal, bound: usize) -> Result<Series> {
    let g = ideal.gens().len();
    if g > 25 {
        return input(format!("{g} generators: inclusion-exclusion over 2^{g} subsets refused; use the face-ring series"));
    }
    let n = ideal.n();
    let mut coeffs = vec![0i64; bound + 1];
    // depth-first over subsets, pruning once the lcm degree exceeds the bound
    fn walk(gens: &[Vec<u32>], start: usize, cur: &[u32], size: usize, n: usize, bound: usize, out: &mut [i64]) {
        let e = degree(cur);
        if e > bound {
            return;
        }
        let sign = if size.is_multiple_of(2) { 1 } else { -1 };
        for (d, c) in out.iter_mut().enumerate().skip(e) {
            *c += sign * free_dim(n, d - e);
        }
        for k in start..gens.len() {
            walk(gens, k + 1, &lcm(cur, &gens[k]), size + 1, n, bound, out);
        }
    }
    walk(ideal.gens(), 0, &vec![0; n], 0, n, bound, &mut coeffs);
    Series::new(coeffs)
}

/// `dim I_d` for `d ≤ bound`.
pub fn hilbert_series_ideal(ideal: &MonomialIdeal, bound: usize) -> Result<Series> {
    Ok(Series::polynomial_ring(ideal.n(), bound).sub(&hilbert_series_quotient(ideal, bound)?))
}

/// Hilbert series of a face ring from the f-vector: `Σ_σ t^{|σ|} / (1 − t)^{|σ|}`.
pub fn face_ring_series(delta: &SimplicialComplex, bound: usize) -> Series {
    let f = delta.f_vector();
    let coeffs = (0..=bound)
        .map(|d| {
            if delta.is_void() {
                return 0;
            }
            if d == 0 {
                return 1;
            }
            (1..f.len().min(d + 1)).map(|k| f[k] as i64 * choose(d - 1, k - 1)).sum()
        })
        .collect();
    Series::new(coeffs).expect("nonempty")
}

fn free_dim(n: usize, d: usize) -> i64 {
    if n == 0 {
        i64::from(d == 0)
    } else {
        choose(n + d - 1, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn minimal_generators() {
        let i = MonomialIdeal::from_strs(&["a", "b", "c"], &["abc", "ab", "ab"]).unwrap();
        assert_eq!(i.gens().len(), 1);
        assert!(MonomialIdeal::from_strs(&["a", "b"], &["a"]).is_err());
        let j = MonomialIdeal::from_strs(&["x1", "x2"], &["x1^2*x2", "x1 x2"]).unwrap();
        assert_eq!(j.to_string(), "<x1*x2>");
    }

    #[test]
    fn hollow_triangle_ideal() {
        let t = SimplicialComplex::from_masks(3, &[0b011, 0b110, 0b101]).unwrap();
        let i = ideal_from_complex(&t).unwrap();
        assert_eq!(i.gens(), &[vec![1, 1, 1]]);
        assert_eq!(complex_from_ideal(&i).unwrap(), t);
        let tab = hochster_table::<Rational>(&t);
        assert_eq!(tab.nonzero_map().into_iter().collect::<Vec<_>>(), vec![((0, 0), 1), ((1, 3), 1)]);
    }

    #[test]
    fn missing_vertex_rejected() {
        let c = SimplicialComplex::from_masks(3, &[0b011]).unwrap();
        assert!(ideal_from_complex(&c).is_err());
    }

    #[test]
    fn two_isolated_vertices() {
        let i = MonomialIdeal::from_strs(&["a", "b"], &["ab"]).unwrap();
        let c = complex_from_ideal(&i).unwrap();
        assert_eq!(c.facets(), &[0b01, 0b10]);
    }

    #[test]
    fn hilbert_of_zero_ideal() {
        let i = MonomialIdeal::new(vec!["a".into(), "b".into(), "c".into()], vec![]).unwrap();
        assert_eq!(hilbert_series_quotient(&i, 4).unwrap().coeffs(), &[1, 3, 6, 10, 15]);
    }

    #[test]
    fn full_simplex_has_no_higher_betti() {
        let s = SimplicialComplex::from_masks(4, &[0b1111]).unwrap();
        let tab = hochster_table::<Rational>(&s);
        assert_eq!(tab.nonzero_map().len(), 1);
    }

    #[test]
    fn ideal_text_format() {
        let i = MonomialIdeal::parse("# J\nvars: a b c d e\nabc\ncde\n").unwrap();
        assert_eq!(i.to_string(), "<abc, cde>");
        assert_eq!(MonomialIdeal::parse(&i.to_text()).unwrap(), i);
        assert!(MonomialIdeal::parse("abc\n").is_err());
        assert!(MonomialIdeal::parse("vars: a b\nabz\n").is_err());
    }
}
