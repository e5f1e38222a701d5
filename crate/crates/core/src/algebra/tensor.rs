use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::field::Scalar;

use super::presentation::word_label;

/// A homogeneous element of the tensor algebra `T(V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement<F> {
    degree: usize,
    terms: BTreeMap<Vec<u8>, F>,
}

impl<F: Scalar> TensorElement<F> {
    pub fn zero(degree: usize) -> Self {
        TensorElement { degree, terms: BTreeMap::new() }
    }

    /// Words of the wrong length are rejected by a panic: callers build these from normal forms.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Vec<u8>, F)>) -> Self {
        let mut t = Self::zero(degree);
        for (w, c) in terms {
            t.add_term(w, c);
        }
        t
    }

    pub fn add_term(&mut self, w: Vec<u8>, c: F) {
        assert_eq!(w.len(), self.degree, "tensor element terms must share a degree");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &F)> + '_ {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x.clone() * y.clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn label(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        element_label(vars, self.terms.iter().map(|(w, c)| (w.as_slice(), c.clone())))
    }
}

/// `c_1 w_1 + c_2 w_2 ...`, with unit coefficients suppressed.
pub(crate) fn element_label<'a, F: Scalar>(vars: &[String], terms: impl Iterator<Item = (&'a [u8], F)>) -> String {
    let mut s = String::new();
    for (k, (w, c)) in terms.enumerate() {
        let text = c.to_string();
        let (neg, abs) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let word = word_label(vars, w);
        if abs == "1" {
            s.push_str(&word);
        } else if w.is_empty() {
            s.push_str(&abs);
        } else {
            s.push_str(&format!("{abs}*{word}"));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
