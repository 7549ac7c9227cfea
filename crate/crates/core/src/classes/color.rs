//! Cliques and exact coloring.

use crate::graph::{bits, Graph};

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    grow_clique(g, 0, g.vertex_mask(), &mut best);
    best
}

fn grow_clique(g: &Graph, size: usize, mut cand: u32, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= !(1 << v);
        grow_clique(g, size + 1, cand & g.neighbors(v), best);
    }
    *best = (*best).max(size);
}

/// All maximal cliques as vertex masks (Bron–Kerbosch with pivoting), sorted.
pub fn maximal_cliques(g: &Graph) -> Vec<u32> {
    let mut out = Vec::new();
    bron_kerbosch(g, 0, g.vertex_mask(), 0, &mut out);
    out.sort_unstable();
    out
}

fn bron_kerbosch(g: &Graph, r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (p & g.neighbors(u)).count_ones())
        .unwrap();
    for v in bits(p & !g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r | 1 << v, p & nv, x & nv, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Exact chromatic number: the clique number is a lower bound, a greedy
/// coloring an upper bound, and each value in between is decided by
/// backtracking.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let lower = clique_number(g);
    let upper = greedy_colors(g);
    (lower..upper).find(|&k| colorable(g, k)).unwrap_or(upper)
}

/// Whether `g` has a proper coloring with at most `k` colors.
pub fn is_k_partite(g: &Graph, k: usize) -> bool {
    colorable(g, k)
}

fn greedy_colors(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut classes: Vec<u32> = Vec::new();
    for v in order {
        match classes.iter().position(|&c| c & g.neighbors(v) == 0) {
            Some(i) => classes[i] |= 1 << v,
            None => classes.push(1 << v),
        }
    }
    classes.len()
}

fn colorable(g: &Graph, k: usize) -> bool {
    if g.order() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut classes = vec![0u32; k];
    color_rest(g, g.vertex_mask(), &mut classes, 0)
}

/// DSATUR-style: color the uncolored vertex seeing the most colors next. A
/// fresh color is only ever tried once (`used` classes are non-empty).
fn color_rest(g: &Graph, uncolored: u32, classes: &mut [u32], used: usize) -> bool {
    if uncolored == 0 {
        return true;
    }
    let saturation = |v: usize| classes[..used].iter().filter(|&&c| c & g.neighbors(v) != 0).count();
    let v = bits(uncolored)
        .max_by_key(|&v| (saturation(v), (g.neighbors(v) & uncolored).count_ones(), std::cmp::Reverse(v)))
        .unwrap();
    let nv = g.neighbors(v);
    let rest = uncolored & !(1 << v);
    for c in 0..used {
        if classes[c] & nv == 0 {
            classes[c] |= 1 << v;
            let ok = color_rest(g, rest, classes, used);
            classes[c] &= !(1 << v);
            if ok {
                return true;
            }
        }
    }
    if used < classes.len() {
        classes[used] = 1 << v;
        let ok = color_rest(g, rest, classes, used + 1);
        classes[used] = 0;
        return ok;
    }
    false
}
