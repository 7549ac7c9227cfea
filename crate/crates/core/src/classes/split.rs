//! Split graphs and their clique/stable partitions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::color::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Partition of the vertices into a clique `clique` and a stable set
/// `stable`, both as vertex masks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: u32,
    pub stable: u32,
}

impl SplitPartition {
    /// Check that the masks partition the vertices of `g` into a clique and a
    /// stable set.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let all = g.vertex_mask();
        if self.clique & self.stable != 0 || self.clique | self.stable != all {
            return Err(Error::InvalidPartition(format!(
                "masks {:#b}/{:#b} do not partition {} vertices",
                self.clique,
                self.stable,
                g.order()
            )));
        }
        if !is_clique(g, self.clique) {
            return Err(Error::InvalidPartition("K is not a clique".into()));
        }
        if !is_stable(g, self.stable) {
            return Err(Error::InvalidPartition("S is not a stable set".into()));
        }
        Ok(())
    }

    pub fn clique_vertices(&self) -> Vec<usize> {
        bits(self.clique).collect()
    }

    pub fn stable_vertices(&self) -> Vec<usize> {
        bits(self.stable).collect()
    }
}

pub(crate) fn is_clique(g: &Graph, mask: u32) -> bool {
    bits(mask).all(|v| (g.neighbors(v) | 1 << v) & mask == mask)
}

pub(crate) fn is_stable(g: &Graph, mask: u32) -> bool {
    bits(mask).all(|v| g.neighbors(v) & mask == 0)
}

/// Degree-sequence test: with degrees `d1 >= d2 >= ...` and `m` the largest
/// index with `d_m >= m - 1`, `g` is split iff
/// `d1 + ... + dm = m(m-1) + d(m+1) + ... + dn`.
pub fn is_split(g: &Graph) -> bool {
    let mut d = g.degrees();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let m = d.iter().enumerate().filter(|&(i, &x)| x >= i).count();
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}

/// Every clique/stable partition of `g`, sorted; empty when `g` is not split.
///
/// In any partition `(K, S)` either `K` is a maximal clique, or adding the
/// one vertex of `S` complete to `K` makes it maximal. So the candidates are
/// `(Q, V - Q)` and `(Q - x, V - Q + x)` over maximal cliques `Q`.
pub fn split_partitions(g: &Graph) -> Vec<SplitPartition> {
    let all = g.vertex_mask();
    let mut out = BTreeSet::new();
    for q in maximal_cliques(g) {
        let rest = all & !q;
        if !is_stable(g, rest) {
            continue;
        }
        out.insert(SplitPartition { clique: q, stable: rest });
        for x in bits(q) {
            if g.neighbors(x) & rest == 0 {
                out.insert(SplitPartition {
                    clique: q & !(1 << x),
                    stable: rest | 1 << x,
                });
            }
        }
    }
    out.into_iter().collect()
}
