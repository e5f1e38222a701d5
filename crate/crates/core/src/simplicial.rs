//! Finite simplicial complexes on at most 64 named vertices.
//!
//! Faces are bitmasks. The void complex (no faces) and the irrelevant complex
//! `{∅}` are different values: the first has no facets, the second has the
//! empty set as its only facet.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::field::Scalar;
use crate::linalg::{rank, SparseVec};

pub type Face = u64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    names: Vec<String>,
    /// Inclusion-maximal faces, sorted by bitmask.
    facets: Vec<Face>,
}

/// Dimensions of reduced homology groups, `i ↦ dim H̃_i`, nonzero entries only.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    dims: BTreeMap<i32, usize>,
}

impl HomologyProfile {
    pub fn get(&self, i: i32) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.dims.iter().map(|(&i, &d)| (i, d))
    }

    /// `Σ (-1)^i dim H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter().map(|(i, d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "acyclic");
        }
        let parts: Vec<String> = self.iter().map(|(i, d)| format!("H{i}={d}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub fn face_size(f: Face) -> usize {
    f.count_ones() as usize
}

fn is_subset(a: Face, b: Face) -> bool {
    a & !b == 0
}

fn maximal(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by_key(|f| std::cmp::Reverse(face_size(*f)));
    faces.dedup();
    let mut out: Vec<Face> = Vec::new();
    for f in faces {
        if !out.iter().any(|&g| is_subset(f, g)) {
            out.push(f);
        }
    }
    out.sort_unstable();
    out
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

impl SimplicialComplex {
    /// Complex on `names` generated by `facets` (lists of vertex names).
    pub fn from_facets<S: AsRef<str>>(names: &[S], facets: &[Vec<S>]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        check_names(&names)?;
        let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut masks = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut m: Face = 0;
            for v in facet {
                let i = *index
                    .get(v.as_ref())
                    .ok_or_else(|| Error::Input(format!("unknown vertex '{}'", v.as_ref())))?;
                m |= 1 << i;
            }
            masks.push(m);
        }
        Ok(SimplicialComplex { names, facets: maximal(masks) })
    }

    /// Complex on vertices `1..=n` generated by bitmask facets.
    pub fn from_masks(n: usize, facets: &[Face]) -> Result<Self> {
        Self::with_names(default_names(n), facets)
    }

    pub fn with_names(names: Vec<String>, facets: &[Face]) -> Result<Self> {
        check_names(&names)?;
        let full = full_mask(names.len());
        if facets.iter().any(|f| f & !full != 0) {
            return input("facet uses a vertex outside the declared vertex set");
        }
        Ok(SimplicialComplex { names, facets: maximal(facets.to_vec()) })
    }

    pub fn simplex(names: Vec<String>) -> Result<Self> {
        let full = full_mask(names.len());
        Self::with_names(names, &[full])
    }

    pub fn void(names: Vec<String>) -> Result<Self> {
        Self::with_names(names, &[])
    }

    pub fn irrelevant(names: Vec<String>) -> Result<Self> {
        Self::with_names(names, &[0])
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [0]
    }

    pub fn full_mask(&self) -> Face {
        full_mask(self.n())
    }

    /// Dimension; `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|&f| face_size(f) as i32 - 1).max()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|&f| is_subset(face, f))
    }

    /// All faces, sorted by bitmask.
    pub fn faces(&self) -> Vec<Face> {
        let mut set = BTreeSet::new();
        for &f in &self.facets {
            // enumerate submasks of f
            let mut s = f;
            loop {
                set.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        set.into_iter().collect()
    }

    /// Faces of each cardinality: `out[k]` holds the faces with `k` vertices.
    pub fn faces_by_size(&self) -> Vec<Vec<Face>> {
        let mut out = vec![Vec::new(); self.n() + 1];
        for f in self.faces() {
            out[face_size(f)].push(f);
        }
        while out.len() > 1 && out.last().is_some_and(Vec::is_empty) {
            out.pop();
        }
        if self.is_void() {
            out = vec![Vec::new()];
        }
        out
    }

    /// `f_k` = number of faces with `k` vertices, for `k = 0..=dim+1`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// Inclusion-minimal subsets of the vertex set that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![0];
        }
        let faces = self.faces();
        let mut out = BTreeSet::new();
        for &f in &faces {
            for v in 0..self.n() {
                let bit = 1u64 << v;
                if f & bit != 0 {
                    continue;
                }
                let s = f | bit;
                if self.contains(s) {
                    continue;
                }
                let minimal = (0..self.n()).all(|w| {
                    let b = 1u64 << w;
                    s & b == 0 || self.contains(s & !b)
                });
                if minimal {
                    out.insert(s);
                }
            }
        }
        out.into_iter().collect()
    }

    /// `Δ* = { [n] − τ : τ ∉ Δ }` on the same vertex set.
    pub fn alexander_dual(&self) -> Self {
        let full = self.full_mask();
        let facets: Vec<Face> = self.minimal_nonfaces().into_iter().map(|m| full & !m).collect();
        SimplicialComplex { names: self.names.clone(), facets: maximal(facets) }
    }

    /// `link_Δ τ = { σ ∈ Δ : σ ∩ τ = ∅, σ ∪ τ ∈ Δ }`.
    pub fn link(&self, tau: Face) -> Result<Self> {
        if !self.contains(tau) {
            return input(format!("{} is not a face", self.face_label(tau)));
        }
        let facets = self.facets.iter().filter(|&&f| is_subset(tau, f)).map(|&f| f & !tau).collect();
        Ok(SimplicialComplex { names: self.names.clone(), facets: maximal(facets) })
    }

    /// The subcomplex `Δ(q)` generated by the `q`-dimensional faces.
    pub fn skeleton_pure(&self, q: usize) -> Self {
        let facets = self.faces().into_iter().filter(|&f| face_size(f) == q + 1).collect();
        SimplicialComplex { names: self.names.clone(), facets: maximal(facets) }
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|&f| face_size(f));
        match sizes.next() {
            None => true,
            Some(s) => sizes.all(|t| t == s),
        }
    }

    /// Reduced simplicial homology over the field `F`.
    pub fn reduced_homology<F: Scalar>(&self) -> HomologyProfile {
        let by_size = self.faces_by_size();
        // chain groups C_{k-1} = span of faces with k vertices, k = 0..
        let ranks: Vec<usize> = (0..by_size.len())
            .map(|k| if k == 0 { 0 } else { boundary_rank::<F>(&by_size[k], &by_size[k - 1]) })
            .collect();
        let mut dims = BTreeMap::new();
        for k in 0..by_size.len() {
            let next = ranks.get(k + 1).copied().unwrap_or(0);
            let h = by_size[k].len() - ranks[k] - next;
            if h > 0 {
                dims.insert(k as i32 - 1, h);
            }
        }
        HomologyProfile { dims }
    }

    /// Vanishing of `H̃_i(link τ)` for `i < dim link τ`, over faces selected by `include`.
    fn links_acyclic_below_top<F: Scalar>(&self, include: impl Fn(Face) -> bool) -> bool {
        self.faces().into_iter().filter(|&t| include(t)).all(|tau| {
            let lk = self.link(tau).expect("face");
            let d = lk.dim().unwrap_or(-1);
            lk.reduced_homology::<F>().iter().all(|(i, _)| i >= d)
        })
    }

    pub fn is_cohen_macaulay<F: Scalar>(&self) -> bool {
        self.is_pure() && self.links_acyclic_below_top::<F>(|_| true)
    }

    pub fn is_buchsbaum<F: Scalar>(&self) -> bool {
        self.is_pure() && self.links_acyclic_below_top::<F>(|t| t != 0)
    }

    pub fn is_sequentially_cm<F: Scalar>(&self) -> bool {
        match self.dim() {
            None => true,
            Some(d) => (0..=d.max(-1)).all(|q| self.skeleton_pure(q as usize).is_cohen_macaulay::<F>()),
        }
    }

    /// Connected components of the 1-skeleton restricted to the vertices in use.
    pub fn connected_components(&self) -> usize {
        let verts: Face = self.facets.iter().fold(0, |a, &f| a | f);
        let mut seen: Face = 0;
        let mut count = 0;
        for v in 0..self.n() {
            let bit = 1u64 << v;
            if verts & bit == 0 || seen & bit != 0 {
                continue;
            }
            count += 1;
            let mut comp = bit;
            loop {
                let grown = self.facets.iter().filter(|&&f| f & comp != 0).fold(comp, |a, &f| a | f);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
        }
        count
    }

    pub fn face_label(&self, f: Face) -> String {
        if f == 0 {
            return "{}".to_string();
        }
        let single = self.names.iter().all(|s| s.chars().count() == 1);
        let parts: Vec<&str> = (0..self.n()).filter(|&i| f >> i & 1 == 1).map(|i| self.names[i].as_str()).collect();
        if single {
            parts.concat()
        } else {
            parts.join(",")
        }
    }

    /// Bitmask of a face given by vertex names.
    pub fn face_from_names<S: AsRef<str>>(&self, verts: &[S]) -> Result<Face> {
        verts.iter().try_fold(0u64, |m, v| {
            let i = self
                .names
                .iter()
                .position(|s| s == v.as_ref())
                .ok_or_else(|| Error::Input(format!("unknown vertex '{}'", v.as_ref())))?;
            Ok(m | 1 << i)
        })
    }

    /// Parse the text format: a `vertices:` header, then one facet per line.
    ///
    /// Vertices within a facet are separated by whitespace or commas; when all
    /// vertex names are single characters a facet may also be written
    /// juxtaposed (`abcd`). `{}` denotes the empty facet; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Option<Vec<String>> = None;
        let mut facets: Vec<Face> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line: lineno + 1, msg };
            if let Some(rest) = line.strip_prefix("vertices:") {
                if names.is_some() {
                    return Err(perr("duplicate vertices header".into()));
                }
                let ns: Vec<String> = tokens(rest).map(str::to_string).collect();
                check_names(&ns).map_err(|e| perr(e.to_string()))?;
                names = Some(ns);
                continue;
            }
            let ns = names.as_ref().ok_or_else(|| perr("facet before the vertices header".into()))?;
            let mask = parse_vertex_set(line, ns).map_err(perr)?;
            facets.push(mask);
        }
        let names = names.ok_or(Error::Parse { line: 0, msg: "missing vertices header".into() })?;
        Self::with_names(names, &facets)
    }

    /// Canonical text rendering, facets sorted by bitmask.
    pub fn to_text(&self) -> String {
        let mut s = format!("vertices: {}\n", self.names.join(" "));
        for &f in &self.facets {
            s.push_str(&self.face_label_spaced(f));
            s.push('\n');
        }
        s
    }

    fn face_label_spaced(&self, f: Face) -> String {
        if f == 0 {
            return "{}".to_string();
        }
        (0..self.n()).filter(|&i| f >> i & 1 == 1).map(|i| self.names[i].as_str()).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void");
        }
        let parts: Vec<String> = self.facets.iter().map(|&x| self.face_label(x)).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

fn full_mask(n: usize) -> Face {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_names(names: &[String]) -> Result<()> {
    if names.len() > 64 {
        return input("at most 64 vertices are supported");
    }
    let mut seen = BTreeSet::new();
    for n in names {
        if n.is_empty() || !seen.insert(n.as_str()) {
            return input(format!("bad or repeated vertex name '{n}'"));
        }
    }
    Ok(())
}

fn tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty())
}

/// Parse a whitespace/comma separated (or juxtaposed) vertex set.
pub(crate) fn parse_vertex_set(line: &str, names: &[String]) -> std::result::Result<Face, String> {
    if line == "{}" || line == "()" {
        return Ok(0);
    }
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let single = names.iter().all(|s| s.chars().count() == 1);
    let mut mask = 0u64;
    for tok in tokens(line) {
        if let Some(&i) = index.get(tok) {
            mask |= 1 << i;
        } else if single {
            for ch in tok.chars() {
                let mut buf = [0u8; 4];
                let i = *index
                    .get(&*ch.encode_utf8(&mut buf))
                    .ok_or_else(|| format!("unknown vertex '{ch}' in '{tok}'"))?;
                mask |= 1 << i;
            }
        } else {
            return Err(format!("unknown vertex '{tok}'"));
        }
    }
    Ok(mask)
}

/// Rank of the boundary map from faces in `top` to faces in `bottom` (one fewer vertex).
fn boundary_rank<F: Scalar>(top: &[Face], bottom: &[Face]) -> usize {
    if top.is_empty() || bottom.is_empty() {
        return 0;
    }
    let index: HashMap<Face, usize> = bottom.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let rows: Vec<SparseVec<F>> = top
        .iter()
        .map(|&f| {
            let mut k = 0;
            let mut pairs = Vec::new();
            for v in 0..64 {
                if f >> v & 1 == 1 {
                    let sign = if k % 2 == 0 { F::one() } else { -F::one() };
                    pairs.push((index[&(f & !(1u64 << v))], sign));
                    k += 1;
                }
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    rank(&rows, bottom.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    fn cx(names: &str, facets: &[&str]) -> SimplicialComplex {
        let ns: Vec<String> = names.chars().map(String::from).collect();
        let fs: Vec<Vec<String>> = facets.iter().map(|f| f.chars().map(String::from).collect()).collect();
        SimplicialComplex::from_facets(&ns, &fs).unwrap()
    }

    #[test]
    fn hollow_triangle() {
        let t = cx("123", &["12", "23", "13"]);
        assert_eq!(t.dim(), Some(1));
        let h = t.reduced_homology::<Rational>();
        assert_eq!(h.get(0), 0);
        assert_eq!(h.get(1), 1);
        assert!(t.is_pure());
    }

    #[test]
    fn maximality_of_facets() {
        let c = cx("12", &["12", "1"]);
        assert_eq!(c.facets(), &[0b11]);
    }

    #[test]
    fn void_and_irrelevant_differ() {
        let names: Vec<String> = vec!["a".into(), "b".into()];
        let v = SimplicialComplex::void(names.clone()).unwrap();
        let e = SimplicialComplex::irrelevant(names.clone()).unwrap();
        assert_ne!(v, e);
        assert!(v.reduced_homology::<Fp<2>>().is_zero());
        assert_eq!(e.reduced_homology::<Fp<2>>().get(-1), 1);
        let full = SimplicialComplex::simplex(names).unwrap();
        assert!(full.alexander_dual().is_void());
        assert_eq!(v.alexander_dual(), full);
    }

    #[test]
    fn two_points() {
        let c = cx("12", &["1", "2"]);
        assert_eq!(c.reduced_homology::<Fp<3>>().get(0), 1);
        assert_eq!(c.connected_components(), 2);
    }

    #[test]
    fn link_of_facet_is_irrelevant() {
        let c = cx("1234", &["123", "34"]);
        let lk = c.link(0b0111).unwrap();
        assert!(lk.is_irrelevant());
        assert_eq!(c.link(0).unwrap(), c);
        assert!(c.link(0b1001).is_err());
    }

    #[test]
    fn purity() {
        assert!(!cx("123", &["12", "3"]).is_pure());
        let s = cx("123", &["123"]);
        assert!(s.is_cohen_macaulay::<Rational>());
        assert_eq!(s.skeleton_pure(0).facets(), &[1, 2, 4]);
    }

    #[test]
    fn parse_round_trip() {
        let text = "# a square\nvertices: a b c d\na b\nb,c\ncd\nd a\n";
        let c = SimplicialComplex::parse(text).unwrap();
        assert_eq!(c.facets().len(), 4);
        let again = SimplicialComplex::parse(&c.to_text()).unwrap();
        assert_eq!(again, c);
        assert!(SimplicialComplex::parse("a b\n").is_err());
        assert!(SimplicialComplex::parse("vertices: a b\nac\n").is_err());
        let irr = SimplicialComplex::parse("vertices: a\n{}\n").unwrap();
        assert!(irr.is_irrelevant());
    }
}
