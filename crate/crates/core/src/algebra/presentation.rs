use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{input, Error, Result};
use crate::stanley_reisner::{parse_word, MonomialIdeal};

/// A word in the generators, as indices into the variable list.
pub type Word = Vec<u8>;

/// A homogeneous element of the free algebra with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    terms: Vec<(BigRational, Word)>,
}

impl Relation {
    /// Combines repeated words and drops zero terms.
    pub fn new(terms: Vec<(BigRational, Word)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        let mut out: Vec<(BigRational, Word)> = Vec::new();
        for (c, w) in terms {
            match out.last_mut() {
                Some(last) if last.1 == w => last.0 += c,
                _ => out.push((c, w)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Relation { terms: out }
    }

    /// A single word with coefficient 1.
    pub fn monomial(word: Word) -> Self {
        Relation { terms: vec![(BigRational::one(), word)] }
    }

    /// Parse `2*a*b - b*a + 1/2 c^2`: integer or fractional coefficients, products by
    /// juxtaposition or `*`, powers by `^`.
    pub fn parse(s: &str, vars: &[String]) -> Result<Self> {
        let mut terms = Vec::new();
        for (sign, body) in split_terms(s)? {
            let (coeff, rest) = split_coefficient(body)?;
            let word = parse_word(rest, vars)?;
            let word = word
                .into_iter()
                .map(|i| u8::try_from(i).map_err(|_| Error::Input("more than 256 generators".into())))
                .collect::<Result<Word>>()?;
            terms.push((if sign { -coeff } else { coeff }, word));
        }
        let rel = Relation::new(terms);
        if rel.terms.is_empty() {
            return input(format!("relation '{s}' is zero"));
        }
        Ok(rel)
    }

    pub fn terms(&self) -> &[(BigRational, Word)] {
        &self.terms
    }

    /// The common degree of all terms, or `None` if the relation is inhomogeneous or zero.
    pub fn degree(&self) -> Option<usize> {
        let d = self.terms.first()?.1.len();
        self.terms.iter().all(|(_, w)| w.len() == d).then_some(d)
    }

    pub fn label(&self, vars: &[String]) -> String {
        let mut s = String::new();
        for (k, (c, w)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                s.push_str(&a.to_string());
                s.push('*');
            }
            s.push_str(&word_label(vars, w));
        }
        s
    }
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut neg = false;
    let mut sign_seen = false;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if c != '+' && c != '-' {
            continue;
        }
        let body = s[start..i].trim();
        if !body.is_empty() {
            out.push((neg, body));
        } else if sign_seen || !out.is_empty() {
            return input(format!("dangling sign in '{s}'"));
        }
        neg = c == '-';
        sign_seen = true;
        start = i + 1;
    }
    let body = s[start..].trim();
    if body.is_empty() {
        return input(format!("expression '{s}' ends without a term"));
    }
    out.push((neg, body));
    Ok(out)
}

fn split_coefficient(body: &str) -> Result<(BigRational, &str)> {
    let digits = body.bytes().take_while(|b| b.is_ascii_digit()).count();
    if digits == 0 {
        return Ok((BigRational::one(), body));
    }
    let num: BigInt = body[..digits].parse().expect("digits");
    let mut rest = &body[digits..];
    let mut den = BigInt::one();
    if let Some(r) = rest.strip_prefix('/') {
        let d = r.bytes().take_while(|b| b.is_ascii_digit()).count();
        if d == 0 {
            return input(format!("bad fraction in '{body}'"));
        }
        den = r[..d].parse().expect("digits");
        if den.is_zero() {
            return input(format!("zero denominator in '{body}'"));
        }
        rest = &r[d..];
    }
    let rest = rest.trim_start();
    let rest = rest.strip_prefix('*').unwrap_or(rest);
    let rest = if rest.trim().is_empty() { "1" } else { rest };
    Ok((BigRational::new(num, den), rest))
}

pub(crate) fn word_label(vars: &[String], w: &[u8]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let single = vars.iter().all(|v| v.chars().count() == 1);
    // runs of a repeated letter print as powers
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let v = &vars[w[i] as usize];
        if j - i == 1 {
            parts.push(v.clone());
        } else {
            parts.push(format!("{v}^{}", j - i));
        }
        i = j;
    }
    if single && parts.iter().all(|p| !p.contains('^')) {
        parts.concat()
    } else {
        parts.join("*")
    }
}

/// Generators (all in degree 1) and homogeneous relations of degree at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    vars: Vec<String>,
    relations: Vec<Relation>,
    commutative: bool,
}

impl Presentation {
    pub fn new(vars: Vec<String>, relations: Vec<Relation>, commutative: bool) -> Result<Self> {
        if vars.is_empty() {
            return input("an algebra needs at least one generator");
        }
        if vars.len() > 255 {
            return input("at most 255 generators are supported");
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(v) = vars.iter().find(|v| !seen.insert(v.as_str())) {
            return input(format!("generator '{v}' declared twice"));
        }
        if let Some(v) = vars.iter().find(|v| v.is_empty() || v.starts_with(|c: char| c.is_ascii_digit())) {
            return input(format!("generator name '{v}' must be nonempty and not start with a digit"));
        }
        for r in &relations {
            if r.terms().iter().any(|(_, w)| w.iter().any(|&x| x as usize >= vars.len())) {
                return input("relation uses an undeclared generator");
            }
            match r.degree() {
                None => return input(format!("relation '{}' is not homogeneous", r.label(&vars))),
                Some(d) if d < 2 => {
                    return input(format!("relation '{}' has degree {d}; relations must have degree at least 2", r.label(&vars)))
                }
                Some(_) => {}
            }
        }
        Ok(Presentation { vars, relations, commutative })
    }

    /// `k[x_1..x_n]`.
    pub fn polynomial_ring(vars: &[&str]) -> Self {
        Self::new(vars.iter().map(|s| s.to_string()).collect(), Vec::new(), true).expect("valid generators")
    }

    /// `k⟨x_1..x_n⟩`.
    pub fn free_algebra(vars: &[&str]) -> Self {
        Self::new(vars.iter().map(|s| s.to_string()).collect(), Vec::new(), false).expect("valid generators")
    }

    /// `S/I` for a monomial ideal `I`.
    pub fn monomial_quotient(ideal: &MonomialIdeal) -> Result<Self> {
        let rels = ideal
            .gens()
            .iter()
            .map(|g| {
                let w: Word = g.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i as u8, e as usize)).collect();
                Relation::monomial(w)
            })
            .collect();
        Self::new(ideal.vars().to_vec(), rels, true)
    }

    /// Relations given as strings over the listed generators.
    pub fn from_strs(vars: &[&str], rels: &[&str], commutative: bool) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let rels = rels.iter().map(|r| Relation::parse(r, &vars)).collect::<Result<Vec<_>>>()?;
        Self::new(vars, rels, commutative)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.commutative && self.relations.is_empty()
    }

    /// Whether every relation is quadratic.
    pub fn is_quadratic(&self) -> bool {
        self.relations.iter().all(|r| r.degree() == Some(2))
    }

    /// The algebra cut out by the quadratic relations only.
    pub fn quadratic_part(&self) -> Self {
        Presentation {
            vars: self.vars.clone(),
            relations: self.relations.iter().filter(|r| r.degree() == Some(2)).cloned().collect(),
            commutative: self.commutative,
        }
    }

    /// The same algebra as a quotient of the tensor algebra: commutators are added
    /// explicitly when the presentation is commutative.
    pub fn tensor_presentation(&self) -> Self {
        if !self.commutative {
            return self.clone();
        }
        let mut relations = self.relations.clone();
        let n = self.n() as u8;
        for i in 0..n {
            for j in i + 1..n {
                relations.push(Relation::new(vec![
                    (BigRational::one(), vec![i, j]),
                    (-BigRational::one(), vec![j, i]),
                ]));
            }
        }
        Presentation { vars: self.vars.clone(), relations, commutative: false }
    }

    /// Parse the algebra text format.
    ///
    /// ```text
    /// vars: x y
    /// commutative: false
    /// rel: x^2 - x*y
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut vars: Option<Vec<String>> = None;
        let mut commutative: Option<bool> = None;
        let mut rels: Vec<(usize, String)> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let (key, value) = line.split_once(':').ok_or_else(|| err(format!("expected 'key: value', got '{line}'")))?;
            match key.trim() {
                "vars" => {
                    if vars.is_some() {
                        return Err(err("duplicate vars header".into()));
                    }
                    vars = Some(
                        value
                            .split(|c: char| c.is_whitespace() || c == ',')
                            .filter(|t| !t.is_empty())
                            .map(str::to_string)
                            .collect(),
                    );
                }
                "commutative" => {
                    commutative = Some(match value.trim() {
                        "true" | "yes" => true,
                        "false" | "no" => false,
                        other => return Err(err(format!("commutative must be true or false, got '{other}'"))),
                    });
                }
                "rel" => rels.push((line_no, value.trim().to_string())),
                other => return Err(err(format!("unknown key '{other}'"))),
            }
        }
        let vars = vars.ok_or(Error::Parse { line: 0, msg: "missing vars header".into() })?;
        let relations = rels
            .iter()
            .map(|(line, r)| Relation::parse(r, &vars).map_err(|e| Error::Parse { line: *line, msg: e.to_string() }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vars, relations, commutative.unwrap_or(false))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("vars: {}\ncommutative: {}\n", self.vars.join(" "), self.commutative);
        for r in &self.relations {
            s.push_str(&format!("rel: {}\n", r.label(&self.vars)));
        }
        s
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.commutative { "k[" } else { "k<" };
        let close = if self.commutative { "]" } else { ">" };
        write!(f, "{open}{}{close}", self.vars.join(","))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|r| r.label(&self.vars)).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn relation_parsing() {
        let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        let r = Relation::parse("x^2 - x*y", &vars).unwrap();
        assert_eq!(r.terms(), &[(q(1), vec![0, 0]), (q(-1), vec![0, 1])]);
        assert_eq!(r.label(&vars), "x^2 - xy");
        let r = Relation::parse("-2xy + 3 yx + 1/2*yy", &vars).unwrap();
        assert_eq!(r.terms().len(), 3);
        assert_eq!(r.terms()[2].0, BigRational::new(1.into(), 2.into()));
        assert!(Relation::parse("xy - xy", &vars).is_err());
        assert!(Relation::parse("xy -", &vars).is_err());
        assert!(Relation::parse("xz", &vars).is_err());
    }

    #[test]
    fn presentation_checks() {
        assert!(Presentation::from_strs(&["x", "y"], &["x^2 - y"], false).is_err());
        assert!(Presentation::from_strs(&["x", "y"], &["x"], false).is_err());
        assert!(Presentation::from_strs(&["x", "x"], &[], false).is_err());
        let p = Presentation::from_strs(&["a", "b", "c", "d", "e", "f", "g", "h", "k"], &["ag", "be - gh", "cd - ef", "dk", "abc"], false)
            .unwrap();
        assert!(!p.is_quadratic());
        assert_eq!(p.quadratic_part().relations().len(), 4);
    }

    #[test]
    fn text_round_trip() {
        let text = "# Example\nvars: x y\ncommutative: false\nrel: x^2 - x*y\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(Presentation::parse(&p.to_text()).unwrap(), p);
        assert!(Presentation::parse("vars: x\nrel: x\n").is_err());
        assert!(Presentation::parse("rel: xx\n").is_err());
        let err = Presentation::parse("vars: x y\nrel: xz\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn commutators_added() {
        let p = Presentation::polynomial_ring(&["a", "b", "c"]);
        let t = p.tensor_presentation();
        assert!(!t.is_commutative());
        assert_eq!(t.relations().len(), 3);
    }
}
