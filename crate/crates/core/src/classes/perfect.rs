//! Chordality and perfection.

use crate::graph::{bits, Graph};

/// Maximum cardinality search followed by a perfect elimination check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut visited = 0u32;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = bits(g.vertex_mask() & !visited)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        for u in bits(g.neighbors(v) & !visited) {
            weight[u] += 1;
        }
        visited |= 1 << v;
        order.push(v);
    }
    // the earlier neighbors of each vertex, minus the latest of them, must
    // be adjacent to that latest one
    let mut before = 0u32;
    for &v in &order {
        let earlier = g.neighbors(v) & before;
        if let Some(&parent) = order.iter().rev().find(|&&u| earlier & (1 << u) != 0) {
            let rest = earlier & !(1 << parent);
            if rest & !g.neighbors(parent) != 0 {
                return false;
            }
        }
        before |= 1 << v;
    }
    true
}

/// Vertices of an induced odd cycle of length at least 5, in cycle order.
pub fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    for s in 0..g.order() {
        let allowed = g.vertex_mask() & !((2u32 << s) - 1);
        for p1 in bits(g.neighbors(s) & allowed) {
            let mut path = vec![s, p1];
            if extend_hole(g, allowed, &mut path, 0) {
                return Some(path);
            }
        }
    }
    None
}

/// `path` is an induced path starting at its lowest vertex `path[0]`;
/// `blocked` holds the closed neighborhoods of all interior vertices except
/// the last one.
fn extend_hole(g: &Graph, allowed: u32, path: &mut Vec<usize>, blocked: u32) -> bool {
    let s = path[0];
    let last = *path.last().unwrap();
    let prev_interior = if path.len() > 2 { path[path.len() - 2] } else { s };
    let blocked_here = if path.len() > 2 {
        blocked | g.neighbors(prev_interior) | 1 << prev_interior
    } else {
        blocked
    };
    let on_path: u32 = path.iter().fold(0, |m, &v| m | 1 << v);
    let cand = g.neighbors(last) & allowed & !on_path & !blocked_here;
    for w in bits(cand) {
        if g.has_edge(w, s) {
            // closes the induced cycle s .. last w
            let len = path.len() + 1;
            if path.len() >= 3 && len >= 5 && len % 2 == 1 {
                path.push(w);
                return true;
            }
            continue;
        }
        path.push(w);
        if extend_hole(g, allowed, path, blocked_here) {
            return true;
        }
        path.pop();
    }
    false
}

/// No odd hole and no odd antihole.
pub fn is_perfect(g: &Graph) -> bool {
    find_odd_hole(g).is_none() && find_odd_hole(&g.complement()).is_none()
}

/// Perfect, or perfect after deleting one vertex.
pub fn is_apex_perfect(g: &Graph) -> bool {
    is_perfect(g) || (0..g.order()).any(|v| is_perfect(&g.delete_vertex(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chordal() {
        assert!(is_chordal(&Graph::path(6).unwrap()));
        assert!(is_chordal(&Graph::complete(5).unwrap()));
        assert!(is_chordal(&Graph::star(4).unwrap()));
        assert!(!is_chordal(&Graph::cycle(4).unwrap()));
        assert!(!is_chordal(&Graph::cycle(6).unwrap()));
        assert!(is_chordal(&Graph::empty(0).unwrap()));
        // C4 plus a chord
        let diamond = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_chordal(&diamond));
    }

    #[test]
    fn odd_holes() {
        assert!(find_odd_hole(&Graph::cycle(5).unwrap()).is_some());
        assert_eq!(find_odd_hole(&Graph::cycle(7).unwrap()).unwrap().len(), 7);
        assert!(find_odd_hole(&Graph::cycle(6).unwrap()).is_none());
        assert!(find_odd_hole(&Graph::complete(3).unwrap()).is_none());
        // C5 with a pendant
        let g = Graph::cycle(5).unwrap().add_vertex(1).unwrap();
        assert_eq!(find_odd_hole(&g).unwrap().len(), 5);
    }

    #[test]
    fn perfection() {
        assert!(!is_perfect(&Graph::cycle(5).unwrap()));
        assert!(!is_perfect(&Graph::cycle(7).unwrap().complement()));
        assert!(is_perfect(&Graph::complete_bipartite(3, 3).unwrap()));
        assert!(is_perfect(&Graph::cycle(6).unwrap().complement()));
        assert!(is_apex_perfect(&Graph::cycle(5).unwrap()));
        assert!(is_apex_perfect(&Graph::cycle(7).unwrap()));
        assert!(is_apex_perfect(&Graph::complete(5).unwrap()));
        let two_c5 = Graph::cycle(5).unwrap().disjoint_union(&Graph::cycle(5).unwrap()).unwrap();
        assert!(!is_apex_perfect(&two_c5));
    }
}
