//! Degree sequences: parsing, graphicality, Havel–Hakimi realization, and
//! exhaustive enumeration of realizations up to isomorphism.

mod bipartite;
mod realize;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub use bipartite::{
    bipartitions_of, enumerate_bipartite_realizations, is_bipartite_realizable, sided_realizations,
    BipartitionedPair,
};
pub use realize::{enumerate_realizations, visit_realizations, REALIZATION_LIMIT};

/// A degree sequence, kept in non-increasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut terms: Vec<usize>) -> DegreeSequence {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(terms)
    }

    pub fn of(g: &Graph) -> DegreeSequence {
        DegreeSequence::new(g.degrees())
    }

    pub fn terms(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_degree(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// `(value, multiplicity)` runs in order.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &t in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == t => *m += 1,
                _ => out.push((t, 1)),
            }
        }
        out
    }

    pub fn multiplicity(&self, value: usize) -> usize {
        self.0.iter().filter(|&&t| t == value).count()
    }

    pub fn without_zeros(&self) -> DegreeSequence {
        DegreeSequence(self.0.iter().copied().filter(|&t| t > 0).collect())
    }

    /// Erdős–Gallai test.
    pub fn is_graphic(&self) -> bool {
        is_graphic_sorted(&self.0)
    }

    /// One realization by Havel–Hakimi.
    pub fn realize(&self) -> Result<Graph> {
        let n = self.len();
        if n > MAX_VERTICES {
            return Err(Error::capacity("degree sequence", n, MAX_VERTICES));
        }
        if !self.is_graphic() {
            return Err(Error::NotGraphic(self.to_string()));
        }
        let mut residual: Vec<(usize, usize)> = self.0.iter().copied().zip(0..).collect();
        let mut edges = Vec::new();
        loop {
            residual.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let Some(&(d, v)) = residual.first().filter(|r| r.0 > 0) else {
                break;
            };
            residual[0].0 = 0;
            for slot in residual.iter_mut().skip(1).take(d) {
                // graphicality guarantees enough positive residuals
                slot.0 -= 1;
                edges.push((v, slot.1));
            }
        }
        Graph::from_edges(n, &edges)
    }
}

/// Erdős–Gallai on a non-increasing slice.
pub(crate) fn is_graphic_sorted(d: &[usize]) -> bool {
    let n = d.len();
    let total: usize = d.iter().sum();
    if total % 2 == 1 || d.first().is_some_and(|&m| m >= n) {
        return false;
    }
    let mut left = 0usize;
    for k in 1..=n {
        left += d[k - 1];
        let right: usize = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if left > right {
            return false;
        }
    }
    true
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .runs()
            .into_iter()
            .map(|(v, m)| if m == 1 { v.to_string() } else { format!("{v}^{m}") })
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Accepts `4,3,2^4,1`, optionally wrapped in parentheses. Terms are sorted.
    fn from_str(s: &str) -> Result<DegreeSequence> {
        parse_terms(s).map(DegreeSequence::new)
    }
}

pub(crate) fn parse_terms(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
        .trim();
    let mut terms = Vec::new();
    if s.is_empty() {
        return Ok(terms);
    }
    for tok in s.split(',') {
        let tok = tok.trim();
        let (value, mult) = match tok.split_once('^') {
            Some((v, m)) => (v.trim(), m.trim()),
            None => (tok, "1"),
        };
        let value: usize = value
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree {value:?} in {s:?}")))?;
        let mult: usize = mult
            .parse()
            .map_err(|_| Error::Parse(format!("bad multiplicity {mult:?} in {s:?}")))?;
        if terms.len() + mult > MAX_VERTICES {
            return Err(Error::capacity("degree sequence", terms.len() + mult, MAX_VERTICES));
        }
        terms.extend(std::iter::repeat_n(value, mult));
    }
    Ok(terms)
}

impl From<DegreeSequence> for String {
    fn from(d: DegreeSequence) -> String {
        d.to_string()
    }
}

impl TryFrom<String> for DegreeSequence {
    type Error = Error;

    fn try_from(s: String) -> Result<DegreeSequence> {
        s.parse()
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(v: Vec<usize>) -> DegreeSequence {
        DegreeSequence::new(v)
    }
}

/// Degree sequence of `g`.
pub fn degree_sequence(g: &Graph) -> DegreeSequence {
    DegreeSequence::of(g)
}
