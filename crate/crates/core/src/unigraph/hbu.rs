//! Structural and degree-sequence descriptions of the hereditary
//! bipartite-unigraphs: complete bipartite graphs with at most one extra
//! vertex. Isolated vertices (zero terms) are discarded first.

use crate::classes::bipartition;
use crate::degseq::DegreeSequence;
use crate::graph::Graph;

/// `K_{a,b}` for some `a, b >= 0`; edgeless graphs count as `K_{a,0}`.
pub fn is_complete_bipartite(g: &Graph) -> bool {
    if g.size() == 0 {
        return true;
    }
    let Some(side) = bipartition(g) else {
        return false;
    };
    let a = (side & g.vertex_mask()).count_ones() as usize;
    let b = g.order() - a;
    g.is_connected() && g.size() == a * b
}

/// Bipartite after dropping isolated vertices, and either complete bipartite
/// or complete bipartite after deleting one vertex.
pub fn is_hbu_structural(g: &Graph) -> bool {
    let h = g.induced_by_mask(g.vertex_mask() & !g.isolated_mask());
    if bipartition(&h).is_none() {
        return false;
    }
    is_complete_bipartite(&h) || (0..h.order()).any(|v| is_complete_bipartite(&h.delete_vertex(v)))
}

/// Whether `d`, ignoring zeros, equals `(a^c, (a-1)^(b-c), b^(a-1), c)` for
/// some `a >= 1` and `b >= c >= 0`, again ignoring zero terms.
pub fn is_hbu_sequence(d: &DegreeSequence) -> bool {
    let target = d.without_zeros();
    if target.is_empty() {
        return true;
    }
    let len = target.len();
    for a in 1..=target.max_degree() + 1 {
        for b in 0..=len {
            for c in 0..=b {
                let mut terms = Vec::with_capacity(len + 1);
                terms.extend(std::iter::repeat_n(a, c));
                terms.extend(std::iter::repeat_n(a - 1, b - c));
                terms.extend(std::iter::repeat_n(b, a - 1));
                terms.push(c);
                if DegreeSequence::new(terms).without_zeros() == target {
                    return true;
                }
            }
        }
    }
    false
}
