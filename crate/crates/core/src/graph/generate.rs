//! Exhaustive generation of graphs up to isomorphism by canonical augmentation.
//!
//! A graph on `n` vertices is produced from exactly one parent: the canonical
//! form of itself minus its canonical deletion vertex, which is the
//! minimum-degree vertex with the largest canonical label. Children of one
//! parent are deduplicated locally, so no global table of graphs is kept.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{canonical_labeling, CanonicalKey, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by [`all_graphs`] and [`for_each_graph`].
pub const GENERATION_LIMIT: usize = 10;

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, in a deterministic order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    check(n)?;
    let mut level = vec![Graph::empty(0)?];
    for _ in 0..n {
        level = next_level(&level);
    }
    Ok(level)
}

/// Stream the graphs of [`all_graphs`] without holding the last level in memory.
pub fn for_each_graph<F: FnMut(&Graph)>(n: usize, mut f: F) -> Result<()> {
    check(n)?;
    if n == 0 {
        f(&Graph::empty(0)?);
        return Ok(());
    }
    let parents = all_graphs(n - 1)?;
    for chunk in parents.chunks(256) {
        let kids: Vec<Vec<Graph>> = chunk.par_iter().map(children).collect();
        for g in kids.iter().flatten() {
            f(g);
        }
    }
    Ok(())
}

pub(crate) fn check(n: usize) -> Result<()> {
    if n > GENERATION_LIMIT {
        return Err(Error::capacity("graph generation", n, GENERATION_LIMIT));
    }
    Ok(())
}

fn next_level(parents: &[Graph]) -> Vec<Graph> {
    parents.par_iter().flat_map_iter(children).collect()
}

fn children(parent: &Graph) -> Vec<Graph> {
    let m = parent.order();
    let parent_key = parent.canonical_key();
    let parent_degrees = sorted_degrees(parent);
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let mut out = Vec::new();

    for nb in 0..(1u32 << m) {
        let child = parent.add_vertex(nb).expect("generation limit below capacity");
        let new_deg = nb.count_ones() as usize;
        let degrees = child.degrees();
        let min_deg = *degrees.iter().min().unwrap();
        if new_deg > min_deg {
            continue;
        }

        let (labels, key) = canonical_labeling(&child);
        let del = (0..=m)
            .filter(|&v| degrees[v] == min_deg)
            .max_by_key(|&v| labels[v])
            .unwrap();
        if del != m {
            let rest = child.delete_vertex(del);
            if sorted_degrees(&rest) != parent_degrees || rest.canonical_key() != parent_key {
                continue;
            }
        }
        if seen.insert(key.clone()) {
            let g = key.to_graph();
            let _ = g.canon.set(key);
            out.push(g);
        }
    }
    out
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        // OEIS A000088
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn limit() {
        assert!(matches!(all_graphs(11), Err(Error::Capacity { .. })));
        assert!(for_each_graph(11, |_| {}).is_err());
    }

    #[test]
    fn streaming_matches_collected() {
        let mut streamed = Vec::new();
        for_each_graph(5, |g| streamed.push(g.clone())).unwrap();
        assert_eq!(streamed, all_graphs(5).unwrap());
    }
}
