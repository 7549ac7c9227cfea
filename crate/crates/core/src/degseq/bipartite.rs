//! Bipartitioned degree sequence pairs and their bipartite realizations.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{parse_terms, DegreeSequence, REALIZATION_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{canonical_labeling_colored, CanonicalKey, Graph, MAX_VERTICES};

/// Unordered pair `{d1, d2}` of side degree lists. Each side is kept
/// non-increasing and the lexicographically larger side is stored first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct BipartitionedPair {
    first: Vec<usize>,
    second: Vec<usize>,
}

impl BipartitionedPair {
    pub fn new(mut a: Vec<usize>, mut b: Vec<usize>) -> BipartitionedPair {
        a.sort_unstable_by(|x, y| y.cmp(x));
        b.sort_unstable_by(|x, y| y.cmp(x));
        if a < b {
            std::mem::swap(&mut a, &mut b);
        }
        BipartitionedPair { first: a, second: b }
    }

    /// Side degree lists of a bipartite graph with the given side mask.
    pub fn from_sides(g: &Graph, side: u32) -> BipartitionedPair {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for v in 0..g.order() {
            if side & (1 << v) != 0 {
                a.push(g.degree(v));
            } else {
                b.push(g.degree(v));
            }
        }
        BipartitionedPair::new(a, b)
    }

    pub fn first(&self) -> &[usize] {
        &self.first
    }

    pub fn second(&self) -> &[usize] {
        &self.second
    }

    /// Total number of vertices.
    pub fn order(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.first.iter().chain(&self.second).copied().collect())
    }

    /// Gale–Ryser.
    pub fn is_realizable(&self) -> bool {
        is_bipartite_realizable(&self.first, &self.second)
    }
}

/// Gale–Ryser test for side lists `a`, `b` (any order).
pub fn is_bipartite_realizable(a: &[usize], b: &[usize]) -> bool {
    let mut a = a.to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    let sa: usize = a.iter().sum();
    let sb: usize = b.iter().sum();
    if sa != sb {
        return false;
    }
    let mut left = 0;
    for (k, &x) in a.iter().enumerate() {
        left += x;
        let right: usize = b.iter().map(|&y| y.min(k + 1)).sum();
        if left > right {
            return false;
        }
    }
    true
}

impl fmt::Display for BipartitionedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.first), join(&self.second))
    }
}

impl fmt::Debug for BipartitionedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BipartitionedPair {
    type Err = Error;

    /// Accepts `(2,2|1,1,1,1)`; caret runs are allowed on either side.
    fn from_str(s: &str) -> Result<BipartitionedPair> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t);
        let (a, b) = t
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("pair {s:?} needs a '|' between sides")))?;
        let (a, b) = (parse_terms(a)?, parse_terms(b)?);
        if a.len() + b.len() > MAX_VERTICES {
            return Err(Error::capacity("bipartitioned pair", a.len() + b.len(), MAX_VERTICES));
        }
        Ok(BipartitionedPair::new(a, b))
    }
}

impl From<BipartitionedPair> for String {
    fn from(p: BipartitionedPair) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for BipartitionedPair {
    type Error = Error;

    fn try_from(s: String) -> Result<BipartitionedPair> {
        s.parse()
    }
}

/// Every realizable split of the terms of `d` into two sides, sorted.
pub fn bipartitions_of(d: &DegreeSequence) -> Vec<BipartitionedPair> {
    let runs = d.runs();
    let mut found = BTreeSet::new();
    let mut take = vec![0usize; runs.len()];
    fn rec(runs: &[(usize, usize)], take: &mut [usize], i: usize, found: &mut BTreeSet<BipartitionedPair>) {
        if i == runs.len() {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for (&(v, m), &k) in runs.iter().zip(take.iter()) {
                a.extend(std::iter::repeat_n(v, k));
                b.extend(std::iter::repeat_n(v, m - k));
            }
            if is_bipartite_realizable(&a, &b) {
                found.insert(BipartitionedPair::new(a, b));
            }
            return;
        }
        for k in 0..=runs[i].1 {
            take[i] = k;
            rec(runs, take, i + 1, found);
        }
    }
    rec(&runs, &mut take, 0, &mut found);
    found.into_iter().collect()
}

/// Bipartite realizations of `p` with the first side marked: pairs of a
/// graph and the vertex mask of the side realizing `p.first()`. One per
/// side-preserving isomorphism class.
pub fn sided_realizations(p: &BipartitionedPair) -> Result<Vec<(Graph, u32)>> {
    let mut out = Vec::new();
    visit_sided(p, |g, side| {
        out.push((g.clone(), side));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Bipartite graphs admitting a bipartition with side degrees `p`, one per
/// isomorphism class (sides forgotten). An unrealizable pair gives an empty
/// list. With `limit = Some(k)` stops after `k + 1` classes.
pub fn enumerate_bipartite_realizations(p: &BipartitionedPair, limit: Option<usize>) -> Result<Vec<Graph>> {
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let mut out = Vec::new();
    visit_sided(p, |g, _| {
        if seen.insert(g.canonical_key().clone()) {
            out.push(g.canonical_form());
            if limit.is_some_and(|k| out.len() > k) {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

fn visit_sided<F>(p: &BipartitionedPair, mut f: F) -> Result<()>
where
    F: FnMut(&Graph, u32) -> ControlFlow<()>,
{
    let n = p.order();
    if n > REALIZATION_LIMIT {
        return Err(Error::capacity("bipartite realization enumeration", n, REALIZATION_LIMIT));
    }
    if !p.is_realizable() {
        return Ok(());
    }
    let na = p.first.len();
    let mut residual = p.first.clone();
    residual.extend_from_slice(&p.second);
    let mut search = Sided {
        na,
        n,
        residual,
        rows: [0; MAX_VERTICES],
        seen: HashSet::new(),
        colors: (0..n).map(|v| (v >= na) as u32).collect(),
    };
    let _ = search.place(0, &mut f);
    Ok(())
}

struct Sided {
    na: usize,
    n: usize,
    residual: Vec<usize>,
    rows: [u32; MAX_VERTICES],
    seen: HashSet<CanonicalKey>,
    colors: Vec<u32>,
}

impl Sided {
    fn place<F>(&mut self, i: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Graph, u32) -> ControlFlow<()>,
    {
        if i == self.na {
            debug_assert!(self.residual[self.na..].iter().all(|&r| r == 0));
            let g = Graph::from_rows_unchecked(self.n, self.rows);
            let (_, key) = canonical_labeling_colored(&g, &self.colors);
            if self.seen.insert(key) {
                return f(&g, (1u32 << self.na) - 1);
            }
            return ControlFlow::Continue(());
        }
        let prefix = (1u32 << i) - 1;
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut keys: Vec<(usize, u32)> = Vec::new();
        for j in self.na..self.n {
            if self.residual[j] == 0 {
                continue;
            }
            let key = (self.residual[j], self.rows[j] & prefix);
            match keys.iter().position(|k| *k == key) {
                Some(c) => classes[c].push(j),
                None => {
                    keys.push(key);
                    classes.push(vec![j]);
                }
            }
        }
        let mut counts = vec![0; classes.len()];
        let need = self.residual[i];
        self.choose(i, need, 0, &classes, &mut counts, f)
    }

    fn choose<F>(
        &mut self,
        i: usize,
        left: usize,
        c: usize,
        classes: &[Vec<usize>],
        counts: &mut [usize],
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&Graph, u32) -> ControlFlow<()>,
    {
        if left == 0 {
            let chosen: Vec<usize> = classes
                .iter()
                .zip(counts.iter())
                .flat_map(|(cl, &k)| cl[..k].iter().copied())
                .collect();
            for &j in &chosen {
                self.residual[j] -= 1;
                self.rows[i] |= 1 << j;
                self.rows[j] |= 1 << i;
            }
            let saved = std::mem::replace(&mut self.residual[i], 0);
            let flow = if is_bipartite_realizable(&self.residual[i + 1..self.na], &self.residual[self.na..]) {
                self.place(i + 1, f)
            } else {
                ControlFlow::Continue(())
            };
            self.residual[i] = saved;
            for &j in &chosen {
                self.residual[j] += 1;
                self.rows[i] &= !(1 << j);
                self.rows[j] &= !(1 << i);
            }
            return flow;
        }
        if c == classes.len() || classes[c..].iter().map(Vec::len).sum::<usize>() < left {
            return ControlFlow::Continue(());
        }
        for take in (0..=classes[c].len().min(left)).rev() {
            counts[c] = take;
            self.choose(i, left - take, c + 1, classes, counts, f)?;
        }
        counts[c] = 0;
        ControlFlow::Continue(())
    }
}
