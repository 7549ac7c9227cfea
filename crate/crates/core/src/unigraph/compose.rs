//! Composition of split graphs onto a graph, and the inverse decomposition.
//!
//! Composing `(G1, K, S)` with `G0` takes the disjoint union and joins every
//! vertex of `K` to every vertex of `G0`.

use serde::{Deserialize, Serialize};

use crate::classes::SplitPartition;
use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, Graph, MAX_VERTICES};

/// A split graph with a fixed clique/stable partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionTerm {
    pub graph: Graph,
    pub partition: SplitPartition,
}

impl CompositionTerm {
    pub fn new(graph: Graph, partition: SplitPartition) -> Result<CompositionTerm> {
        partition.validate(&graph)?;
        Ok(CompositionTerm { graph, partition })
    }

    /// Term whose clique is the listed vertices and whose stable set is the rest.
    pub fn with_clique(graph: Graph, clique: &[usize]) -> Result<CompositionTerm> {
        let mut mask = 0u32;
        for &v in clique {
            if v >= graph.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: graph.order(),
                });
            }
            mask |= 1 << v;
        }
        let partition = SplitPartition {
            clique: mask,
            stable: graph.vertex_mask() & !mask,
        };
        CompositionTerm::new(graph, partition)
    }
}

/// Terms listed outermost first, then the remaining graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub terms: Vec<CompositionTerm>,
    pub tail: Graph,
}

impl Decomposition {
    pub fn recompose(&self) -> Result<Graph> {
        compose(&self.terms, &self.tail)
    }
}

/// `terms[0] ∘ (terms[1] ∘ (... ∘ tail))`. Vertices of `terms[0]` come first
/// in the result, then those of `terms[1]`, and so on, with `tail` last.
pub fn compose(terms: &[CompositionTerm], tail: &Graph) -> Result<Graph> {
    let total = terms.iter().map(|t| t.graph.order()).sum::<usize>() + tail.order();
    if total > MAX_VERTICES {
        return Err(Error::capacity("composition", total, MAX_VERTICES));
    }
    let mut acc = tail.clone();
    for term in terms.iter().rev() {
        term.partition.validate(&term.graph)?;
        acc = compose_one(term, &acc);
    }
    Ok(acc)
}

fn compose_one(term: &CompositionTerm, base: &Graph) -> Graph {
    let m = term.graph.order();
    let n = m + base.order();
    let base_mask = full_mask(n) & !full_mask(m);
    let mut edges: Vec<(usize, usize)> = term.graph.edges().collect();
    edges.extend(base.edges().map(|(u, v)| (u + m, v + m)));
    for k in bits(term.partition.clique) {
        edges.extend(bits(base_mask).map(|v| (k, v)));
    }
    Graph::from_edges(n, &edges).expect("sizes checked by compose")
}

/// Peel split terms off `g` for as long as possible. The smallest split part
/// is removed at each step, so each term is indecomposable; the tail cannot
/// be decomposed further.
pub fn decompose(g: &Graph) -> Decomposition {
    let mut terms = Vec::new();
    let mut rest = g.clone();
    while let Some((clique, stable)) = smallest_split_part(&rest) {
        let part = clique | stable;
        let graph = rest.induced_by_mask(part);
        let partition = SplitPartition {
            clique: crate::graph::compress(clique, part),
            stable: crate::graph::compress(stable, part),
        };
        terms.push(CompositionTerm { graph, partition });
        rest = rest.induced_by_mask(rest.vertex_mask() & !part);
    }
    Decomposition { terms, tail: rest }
}

/// A split part `(K, S)` leaves a non-empty remainder `V0` such that `K` is a
/// clique complete to `V0` and `S` is a stable set anticomplete to `V0`. Then
/// every vertex of `K` has degree at least `n - |S| - 1`, every vertex of
/// `V0` has degree between `|K|` and `n - |S| - 1`, and every vertex of `S`
/// at most `|K|`. Equal degrees across a boundary only happen between twins,
/// so taking `K` as the top `p` and `S` as the bottom `q` vertices in degree
/// order finds a part of every size that exists.
fn smallest_split_part(g: &Graph) -> Option<(u32, u32)> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for size in 1..n {
        for p in 0..=size {
            let q = size - p;
            let clique = order[..p].iter().fold(0u32, |m, &v| m | 1 << v);
            let stable = order[n - q..].iter().fold(0u32, |m, &v| m | 1 << v);
            if is_split_part(g, clique, stable) {
                return Some((clique, stable));
            }
        }
    }
    None
}

pub(crate) fn is_split_part(g: &Graph, clique: u32, stable: u32) -> bool {
    let rest = g.vertex_mask() & !(clique | stable);
    if rest == 0 || clique | stable == 0 {
        return false;
    }
    bits(clique).all(|v| {
        let nv = g.neighbors(v) | 1 << v;
        nv & clique == clique && nv & rest == rest
    }) && bits(stable).all(|v| g.neighbors(v) & (stable | rest) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{chromatic_number, clique_number};

    fn k1_clique() -> CompositionTerm {
        CompositionTerm::with_clique(Graph::complete(1).unwrap(), &[0]).unwrap()
    }

    #[test]
    fn compose_basics() {
        let k2 = compose(&[k1_clique()], &Graph::complete(1).unwrap()).unwrap();
        assert!(k2.is_isomorphic(&Graph::complete(2).unwrap()));

        let p3 = Graph::path(3).unwrap();
        let term = CompositionTerm::with_clique(p3.clone(), &[1]).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        let g = compose(std::slice::from_ref(&term), &c5).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(clique_number(&g), 1 + clique_number(&c5));
        assert_eq!(chromatic_number(&g), 1 + chromatic_number(&c5));

        assert!(CompositionTerm::with_clique(p3.clone(), &[0, 2]).is_err());
        assert!(CompositionTerm::with_clique(p3, &[7]).is_err());
    }

    #[test]
    fn decompose_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let d = decompose(&c5);
        assert!(d.terms.is_empty());
        assert_eq!(d.tail, c5);

        let g = compose(&[k1_clique()], &c5).unwrap();
        let d = decompose(&g);
        assert_eq!(d.terms.len(), 1);
        assert!(d.tail.is_isomorphic(&c5));

        let k2 = Graph::complete(2).unwrap();
        let d = decompose(&k2);
        assert!(d.recompose().unwrap().is_isomorphic(&k2));
        assert_eq!(d.tail.order(), 1);
    }

    #[test]
    fn serde_uses_graph6() {
        let d = decompose(&Graph::complete(2).unwrap());
        let js = serde_json::to_string(&d).unwrap();
        assert!(js.contains("\"@\""));
        let back: Decomposition = serde_json::from_str(&js).unwrap();
        assert_eq!(back, d);
    }
}
