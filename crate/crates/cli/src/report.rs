//! A report bundle with one JSON and one text rendering, both built from the
//! same fields.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use k2res::betti::{BettiRecord, BettiTable};
use k2res::criteria::Verdict;
use k2res::resolution::Bounds;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input: BTreeMap<String, String>,
    pub field: String,
    pub bounds: Option<Bounds>,
    pub sections: Vec<Section>,
    pub seconds: f64,
}

#[derive(Debug, Serialize)]
pub struct BettiSection {
    pub max_hom: usize,
    pub max_deg: usize,
    /// `None` when every entry is exact.
    pub exact_through: Option<usize>,
    pub entries: Vec<BettiRecord>,
}

impl From<&BettiTable> for BettiSection {
    fn from(t: &BettiTable) -> Self {
        BettiSection {
            max_hom: t.max_hom(),
            max_deg: t.max_deg(),
            exact_through: t.exact_through(),
            entries: t.nonzero_records(),
        }
    }
}

impl BettiSection {
    /// The table cut down to its last nonzero row and column.
    fn trimmed(&self) -> BettiTable {
        let rows = self.entries.iter().map(|r| r.i).max().unwrap_or(0);
        let cols = self.entries.iter().map(|r| r.j).max().unwrap_or(0);
        BettiTable::from_entries(self.entries.iter().map(|r| ((r.i, r.j), r.dim)), rows, cols, self.exact_through)
    }
}

#[derive(Debug, Serialize)]
pub struct Implication {
    pub name: String,
    pub statement: String,
    pub violated: bool,
}

#[derive(Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Section {
    Lines { title: String, lines: Vec<String> },
    Flags { title: String, flags: BTreeMap<String, bool> },
    Betti { title: String, betti: BettiSection },
    Series { title: String, coeffs: Vec<i64> },
    Verdict { title: String, verdict: Verdict },
    Consistency { title: String, implications: Vec<Implication> },
}

impl Report {
    pub fn violations(&self) -> usize {
        self.sections
            .iter()
            .map(|s| match s {
                Section::Consistency { implications, .. } => implications.iter().filter(|i| i.violated).count(),
                _ => 0,
            })
            .sum()
    }
}

fn series_text(c: &[i64]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(j, v)| match j {
            0 => v.to_string(),
            1 => format!("{v}t"),
            _ => format!("{v}t^{j}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.command)?;
        for (k, v) in &self.input {
            writeln!(f, "  {k}: {v}")?;
        }
        writeln!(f, "  field: {}", self.field)?;
        if let Some(b) = self.bounds {
            writeln!(f, "  bounds: N = {}, D = {}", b.max_hom, b.max_deg)?;
        }
        for s in &self.sections {
            writeln!(f)?;
            let mut body = String::new();
            let title = match s {
                Section::Lines { title, lines } => {
                    for l in lines {
                        writeln!(body, "  {l}")?;
                    }
                    title
                }
                Section::Flags { title, flags } => {
                    for (k, v) in flags {
                        writeln!(body, "  {k}: {v}")?;
                    }
                    title
                }
                Section::Betti { title, betti } => {
                    if betti.entries.is_empty() {
                        writeln!(body, "  zero")?;
                    } else {
                        for line in betti.trimmed().to_string().lines() {
                            writeln!(body, "  {line}")?;
                        }
                        writeln!(body, "  (all other entries with i <= {}, j <= {} vanish)", betti.max_hom, betti.max_deg)?;
                    }
                    if let Some(d) = betti.exact_through {
                        writeln!(body, "  (entries above degree {d} may be incomplete)")?;
                    }
                    title
                }
                Section::Series { title, coeffs } => {
                    writeln!(body, "  {} + O(t^{})", series_text(coeffs), coeffs.len())?;
                    title
                }
                Section::Verdict { title, verdict } => {
                    for line in verdict.to_string().lines() {
                        writeln!(body, "  {line}")?;
                    }
                    title
                }
                Section::Consistency { title, implications } => {
                    for i in implications {
                        let mark = if i.violated { "VIOLATED" } else { "ok" };
                        writeln!(body, "  {:<8} {}: {}", mark, i.name, i.statement)?;
                    }
                    title
                }
            };
            writeln!(f, "{title}")?;
            write!(f, "{body}")?;
        }
        write!(f, "\n({:.3} s)", self.seconds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_rendering() {
        assert_eq!(series_text(&[1, -5, 10, 0, -5]), "1 - 5t + 10t^2 - 5t^4");
        assert_eq!(series_text(&[0, 0]), "0");
    }
}
