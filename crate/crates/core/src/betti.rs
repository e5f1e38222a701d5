//! Bigraded Betti tables `β_{i,j}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Counts of step-`i` generators of internal degree `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), usize>,
    max_hom: usize,
    max_deg: usize,
    /// Entries with `j` above this degree may be incomplete. `None`: everything is exact.
    exact_through: Option<usize>,
}

/// One machine-readable entry of a Betti table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRecord {
    pub i: usize,
    pub j: usize,
    pub dim: usize,
    pub complete: bool,
}

impl BettiTable {
    pub fn new(max_hom: usize, max_deg: usize, exact_through: Option<usize>) -> Self {
        BettiTable { entries: BTreeMap::new(), max_hom, max_deg, exact_through }
    }

    pub fn from_entries(
        entries: impl IntoIterator<Item = ((usize, usize), usize)>,
        max_hom: usize,
        max_deg: usize,
        exact_through: Option<usize>,
    ) -> Self {
        let mut t = Self::new(max_hom, max_deg, exact_through);
        for ((i, j), d) in entries {
            t.add(i, j, d);
        }
        t
    }

    pub fn add(&mut self, i: usize, j: usize, d: usize) {
        if d > 0 {
            *self.entries.entry((i, j)).or_insert(0) += d;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn max_hom(&self) -> usize {
        self.max_hom
    }

    pub fn max_deg(&self) -> usize {
        self.max_deg
    }

    pub fn exact_through(&self) -> Option<usize> {
        self.exact_through
    }

    pub fn is_exact_at(&self, j: usize) -> bool {
        self.exact_through.is_none_or(|d| j <= d)
    }

    /// Nonzero entries.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn nonzero_map(&self) -> BTreeMap<(usize, usize), usize> {
        self.entries.clone()
    }

    /// Total rank of step `i`.
    pub fn step_rank(&self, i: usize) -> usize {
        self.entries.range((i, 0)..=(i, usize::MAX)).map(|(_, &v)| v).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ_i (-1)^i β_{i,j}`.
    pub fn euler_at(&self, j: usize) -> i64 {
        self.entries
            .iter()
            .filter(|((_, jj), _)| *jj == j)
            .map(|(&(i, _), &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }

    /// Table with `i` shifted down by `k` (entries with `i < k` dropped).
    pub fn shift_hom(&self, k: usize) -> Self {
        BettiTable {
            entries: self.entries.iter().filter(|((i, _), _)| *i >= k).map(|(&(i, j), &v)| ((i - k, j), v)).collect(),
            max_hom: self.max_hom.saturating_sub(k),
            max_deg: self.max_deg,
            exact_through: self.exact_through,
        }
    }

    /// Records for every slot `(i, j)` within bounds, zeros included.
    pub fn records(&self) -> Vec<BettiRecord> {
        let mut out = Vec::new();
        for i in 0..=self.max_hom {
            for j in 0..=self.max_deg {
                out.push(BettiRecord { i, j, dim: self.get(i, j), complete: self.is_exact_at(j) });
            }
        }
        out
    }

    /// Nonzero records only.
    pub fn nonzero_records(&self) -> Vec<BettiRecord> {
        self.entries
            .iter()
            .map(|(&(i, j), &dim)| BettiRecord { i, j, dim, complete: self.is_exact_at(j) })
            .collect()
    }
}

impl fmt::Display for BettiTable {
    /// Aligned grid, one row per homological step `i`, one column per internal degree `j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<usize> = (0..=self.max_deg).collect();
        let cell = |i: usize, j: usize| -> String {
            match self.get(i, j) {
                0 if self.is_exact_at(j) => ".".to_string(),
                0 => "?".to_string(),
                v => v.to_string(),
            }
        };
        let width = cols
            .iter()
            .flat_map(|&j| (0..=self.max_hom).map(move |i| (i, j)))
            .map(|(i, j)| cell(i, j).len())
            .chain(cols.iter().map(|j| j.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = format!("i={}", self.max_hom).len().max(2);
        write!(f, "{:>label$}", "j", label = label)?;
        for j in &cols {
            write!(f, " {:>width$}", j, width = width)?;
        }
        writeln!(f)?;
        for i in 0..=self.max_hom {
            write!(f, "{:>label$}", format!("i={i}"), label = label)?;
            for &j in &cols {
                write!(f, " {:>width$}", cell(i, j), width = width)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_and_records_agree() {
        let t = BettiTable::from_entries([((0, 0), 1), ((1, 1), 2), ((2, 2), 1)], 2, 2, None);
        let text = t.to_string();
        assert!(text.contains("i=1"));
        let recs = t.records();
        assert_eq!(recs.len(), 9);
        assert_eq!(recs.iter().map(|r| r.dim).sum::<usize>(), 4);
        assert_eq!(t.euler_at(1), -2);
        assert_eq!(t.step_rank(1), 2);
    }

    #[test]
    fn incomplete_zeros_are_marked() {
        let t = BettiTable::from_entries([((0, 0), 1)], 1, 3, Some(1));
        assert!(t.to_string().contains('?'));
        assert!(!t.records().last().unwrap().complete);
    }
}
