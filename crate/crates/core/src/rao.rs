//! Containment order on bipartitioned pairs and the pairs that force every
//! bipartite realization out of the hereditary bipartite-unigraphs.
//!
//! A pair `big` contains `small` when some bipartite realization of `big`
//! has an induced subgraph whose inherited side degrees form `small`.

use std::collections::BTreeSet;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{bipartition, ClassSpec};
use crate::degseq::{
    bipartitions_of, enumerate_bipartite_realizations, sided_realizations, BipartitionedPair, DegreeSequence,
};
use crate::error::Result;
use crate::graph::{all_graphs, bits, check_generation, compress, Graph};
use crate::unigraph::UnigraphOracle;

/// Default vertex bound for minimality checks.
pub const DEFAULT_UNIVERSE_BOUND: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenPairRecord {
    pub pair: BipartitionedPair,
    pub realizations: Vec<Graph>,
    pub minimal: bool,
}

/// Side pair induced on the vertex set `x` of `g` with side mask `side`.
fn induced_pair(g: &Graph, side: u32, x: u32) -> BipartitionedPair {
    BipartitionedPair::from_sides(&g.induced_by_mask(x), compress(side, x))
}

/// Subsets of `all` with exactly `k` elements.
fn subsets_of_size(all: u32, k: usize) -> impl Iterator<Item = u32> {
    let verts: Vec<usize> = bits(all).collect();
    let n = verts.len();
    (0u32..(1u32 << n))
        .filter(move |s| s.count_ones() as usize == k)
        .map(move |s| bits(s).fold(0u32, |m, i| m | 1 << verts[i]))
}

pub fn rao_contains(big: &BipartitionedPair, small: &BipartitionedPair) -> Result<bool> {
    if small.order() > big.order() {
        return Ok(false);
    }
    for (g, side) in sided_realizations(big)? {
        if subsets_of_size(g.vertex_mask(), small.order()).any(|x| induced_pair(&g, side, x) == *small) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether some bipartition of `d` contains `small`.
pub fn sequence_rao_contains(d: &DegreeSequence, small: &BipartitionedPair) -> Result<bool> {
    for p in bipartitions_of(d) {
        if rao_contains(&p, small)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Memoized forbidden/minimal decisions, sharing one hereditary
/// bipartite-unigraph oracle.
pub struct RaoOracle {
    hbu: UnigraphOracle,
    forbidden: DashMap<BipartitionedPair, bool>,
}

impl Default for RaoOracle {
    fn default() -> Self {
        RaoOracle::new()
    }
}

impl RaoOracle {
    pub fn new() -> RaoOracle {
        RaoOracle {
            hbu: UnigraphOracle::new(ClassSpec::Bipartite),
            forbidden: DashMap::new(),
        }
    }

    pub fn hereditary_bipartite(&self) -> &UnigraphOracle {
        &self.hbu
    }

    /// Realizable, and no bipartite realization is a hereditary
    /// bipartite-unigraph.
    pub fn is_forbidden(&self, p: &BipartitionedPair) -> Result<bool> {
        if let Some(hit) = self.forbidden.get(p) {
            return Ok(*hit);
        }
        let mut answer = p.is_realizable();
        if answer {
            for g in enumerate_bipartite_realizations(p, None)? {
                if self.hbu.is_hereditary(&g)? {
                    answer = false;
                    break;
                }
            }
        }
        self.forbidden.insert(p.clone(), answer);
        Ok(answer)
    }

    /// Forbidden, and no proper sub-pair on at most `bound` vertices is
    /// forbidden.
    pub fn is_minimal(&self, p: &BipartitionedPair, bound: usize) -> Result<bool> {
        if !self.is_forbidden(p)? {
            return Ok(false);
        }
        let mut seen = BTreeSet::new();
        for (g, side) in sided_realizations(p)? {
            let all = g.vertex_mask();
            for k in (0..g.order()).rev() {
                if k > bound {
                    continue;
                }
                for x in subsets_of_size(all, k) {
                    let q = induced_pair(&g, side, x);
                    if seen.insert(q.clone()) && self.is_forbidden(&q)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Every forbidden pair on at most `max_n` vertices, sorted by order
    /// and then by pair, with its realizations and minimality.
    pub fn forbidden_pairs(&self, max_n: usize) -> Result<Vec<ForbiddenPairRecord>> {
        let candidates = candidate_pairs(max_n)?;
        let mut records: Vec<ForbiddenPairRecord> = candidates
            .into_par_iter()
            .map(|pair| -> Result<Option<ForbiddenPairRecord>> {
                if !self.is_forbidden(&pair)? {
                    return Ok(None);
                }
                let minimal = self.is_minimal(&pair, max_n)?;
                let realizations = enumerate_bipartite_realizations(&pair, None)?;
                Ok(Some(ForbiddenPairRecord {
                    pair,
                    realizations,
                    minimal,
                }))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        records.sort_by(|a, b| (a.pair.order(), &a.pair).cmp(&(b.pair.order(), &b.pair)));
        Ok(records)
    }
}

/// Side pairs of every 2-coloring of every bipartite graph on at most
/// `max_n` vertices.
fn candidate_pairs(max_n: usize) -> Result<BTreeSet<BipartitionedPair>> {
    check_generation(max_n)?;
    let mut out = BTreeSet::new();
    for n in 0..=max_n {
        for g in all_graphs(n)? {
            let Some(side) = bipartition(&g) else {
                continue;
            };
            let comps = g.components();
            for flips in 0u32..(1 << comps.len().saturating_sub(1)) {
                let flip = bits(flips).fold(0u32, |m, i| m | comps[i + 1]);
                out.insert(BipartitionedPair::from_sides(&g, side ^ flip));
            }
        }
    }
    Ok(out)
}

/// Forbidden pairs that are minimal, on at most `max_n` vertices.
pub fn enumerate_minimal_pairs(max_n: usize) -> Result<Vec<ForbiddenPairRecord>> {
    Ok(RaoOracle::new()
        .forbidden_pairs(max_n)?
        .into_iter()
        .filter(|r| r.minimal)
        .collect())
}

pub fn is_forbidden_pair(p: &BipartitionedPair) -> Result<bool> {
    RaoOracle::new().is_forbidden(p)
}

pub fn is_rao_minimal(p: &BipartitionedPair, universe_bound: usize) -> Result<bool> {
    RaoOracle::new().is_minimal(p, universe_bound)
}
