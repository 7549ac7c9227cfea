//! Induced subgraph search by backtracking over bitset candidate sets.

use super::{bits, Graph, MAX_VERTICES};

/// Does some vertex subset of `g` induce a copy of `h`?
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    find_induced(g, h).is_some()
}

/// An induced embedding of `h` into `g`: `map[u]` is the image of `h`'s vertex `u`.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let (n, m) = (g.order(), h.order());
    if m > n || h.size() > g.size() {
        return None;
    }
    let g_non = n * n.saturating_sub(1) / 2 - g.size();
    let h_non = m * m.saturating_sub(1) / 2 - h.size();
    if h_non > g_non {
        return None;
    }
    if m == 0 {
        return Some(Vec::new());
    }

    let order = search_order(h);
    let mut image = [0usize; MAX_VERTICES];
    let g_deg = g.degrees();
    let h_deg = h.degrees();
    let all = g.vertex_mask();

    // per-position static filter by degree and co-degree
    let static_cands: Vec<u32> = order
        .iter()
        .map(|&u| {
            (0..n)
                .filter(|&v| g_deg[v] >= h_deg[u] && n - 1 - g_deg[v] >= m - 1 - h_deg[u])
                .fold(0u32, |acc, v| acc | (1 << v))
        })
        .collect();

    fn extend(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        static_cands: &[u32],
        all: u32,
        pos: usize,
        used: u32,
        image: &mut [usize; MAX_VERTICES],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let u = order[pos];
        let mut cands = static_cands[pos] & !used;
        for &w in &order[..pos] {
            let gw = g.neighbors(image[w]);
            cands &= if h.has_edge(u, w) { gw } else { all & !gw };
            if cands == 0 {
                return false;
            }
        }
        for v in bits(cands) {
            image[u] = v;
            if extend(g, h, order, static_cands, all, pos + 1, used | (1 << v), image) {
                return true;
            }
        }
        false
    }

    if extend(g, h, &order, &static_cands, all, 0, 0, &mut image) {
        Some(image[..m].to_vec())
    } else {
        None
    }
}

/// Greedy order: each next vertex has the most neighbors among those already placed.
fn search_order(h: &Graph) -> Vec<usize> {
    let m = h.order();
    let mut placed = 0u32;
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let next = (0..m)
            .filter(|&v| placed & (1 << v) == 0)
            .max_by_key(|&v| ((h.neighbors(v) & placed).count_ones(), h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed |= 1 << next;
        order.push(next);
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_containment() {
        let c5 = Graph::cycle(5).unwrap();
        let p4 = Graph::path(4).unwrap();
        assert!(contains_induced(&c5, &p4));
        let k4 = Graph::complete(4).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        assert!(!contains_induced(&k4, &c4));
        assert!(contains_induced(&c4, &Graph::empty(0).unwrap()));
        assert!(!contains_induced(&c4, &c5));
        // C4 contains P3 but not K3, and 2K1 but not 3K1
        assert!(contains_induced(&c4, &Graph::path(3).unwrap()));
        assert!(!contains_induced(&c4, &Graph::complete(3).unwrap()));
        assert!(contains_induced(&c4, &Graph::empty(2).unwrap()));
        assert!(!contains_induced(&c4, &Graph::empty(3).unwrap()));
    }

    #[test]
    fn embedding_is_induced() {
        let g = Graph::cycle(7).unwrap();
        let h = Graph::path(5).unwrap();
        let map = find_induced(&g, &h).unwrap();
        for u in 0..5 {
            for w in 0..5 {
                if u != w {
                    assert_eq!(h.has_edge(u, w), g.has_edge(map[u], map[w]));
                }
            }
        }
    }
}
