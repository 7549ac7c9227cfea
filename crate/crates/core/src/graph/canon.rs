//! Canonical labeling by equitable partition refinement and a search over
//! individualizations, with automorphism pruning.
//!
//! The certificate of a leaf (a discrete partition) is the adjacency matrix
//! relabeled by cell position. The canonical form is the lexicographically
//! largest certificate over the whole search tree. Subtrees that an already
//! discovered automorphism maps onto explored ones are skipped, which never
//! changes the maximum.

use std::cmp::Ordering;
use std::fmt;

use super::{bits, Graph, MAX_VERTICES};

/// Certificate of an isomorphism class: the canonically relabeled adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u8,
    rows: [u32; MAX_VERTICES],
}

impl CanonicalKey {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.order(), self.rows)
    }

    /// Upper-triangle bit string of the canonical graph, column order, packed
    /// big-endian into bytes and prefixed by the vertex count.
    pub fn certificate(&self) -> Vec<u8> {
        let n = self.order();
        let mut out = vec![self.n];
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | ((self.rows[i] >> j) & 1) as u8;
                filled += 1;
                if filled == 8 {
                    out.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(acc << (8 - filled));
        }
        out
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_graph().to_graph6())
    }
}

/// Canonical labeling of an uncolored graph. `labels[v]` is the canonical
/// position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, CanonicalKey) {
    canonical_labeling_colored(g, &vec![0; g.order()])
}

/// Canonical labeling respecting a vertex coloring. Color values are ordered:
/// vertices of smaller color get smaller labels. Two colored graphs are
/// color-preserving isomorphic iff their keys agree and their color
/// multisets agree.
pub fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> (Vec<usize>, CanonicalKey) {
    let n = g.order();
    assert_eq!(colors.len(), n, "one color per vertex");
    if n == 0 {
        return (
            Vec::new(),
            CanonicalKey {
                n: 0,
                rows: [0; MAX_VERTICES],
            },
        );
    }

    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut cells = [0u8; MAX_VERTICES];
    for v in 0..n {
        cells[v] = distinct.binary_search(&colors[v]).unwrap() as u8;
    }

    let mut search = Search {
        g,
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut prefix = Vec::with_capacity(n);
    search.visit(cells, &mut prefix);

    let best = search.best.expect("search reaches at least one leaf");
    let labels = best.labels[..n].iter().map(|&l| l as usize).collect();
    (
        labels,
        CanonicalKey {
            n: n as u8,
            rows: best.cert,
        },
    )
}

type Cells = [u8; MAX_VERTICES];

struct Leaf {
    prefix: Vec<u8>,
    labels: Cells,
    cert: [u32; MAX_VERTICES],
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Cells>,
}

impl Search<'_> {
    /// Returns `Some(depth)` when the caller chain should unwind to the node at
    /// `depth`, because an automorphism maps the current branch onto an
    /// explored one.
    fn visit(&mut self, mut cells: Cells, prefix: &mut Vec<u8>) -> Option<usize> {
        let k = refine(self.g, self.n, &mut cells);
        if k == self.n {
            return self.leaf(&cells, prefix);
        }

        let target = target_cell(&cells, self.n);
        let depth = prefix.len();
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(target) {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            let child = individualize(&cells, self.n, v);
            prefix.push(v as u8);
            let jump = self.visit(child, prefix);
            prefix.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, labels: &Cells, prefix: &[u8]) -> Option<usize> {
        let cert = certificate(self.g, self.n, labels);
        let leaf = Leaf {
            prefix: prefix.to_vec(),
            labels: *labels,
            cert,
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                prefix: leaf.prefix.clone(),
                labels: leaf.labels,
                cert: leaf.cert,
            });
            self.first = Some(leaf);
            return None;
        };

        if first.cert[..self.n] == cert[..self.n] {
            let auto = automorphism(labels, &first.labels, self.n);
            let level = common_prefix(prefix, &first.prefix);
            self.autos.push(auto);
            return Some(level);
        }
        let best = self.best.as_ref().unwrap();
        match cert[..self.n].cmp(&best.cert[..self.n]) {
            Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            Ordering::Equal => {
                let auto = automorphism(labels, &best.labels, self.n);
                let level = common_prefix(prefix, &best.prefix);
                self.autos.push(auto);
                Some(level)
            }
            Ordering::Less => None,
        }
    }

    /// Is `v` in the orbit of an explored vertex under the automorphisms
    /// found so far that fix the prefix pointwise?
    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[u8]) -> bool {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        fn find(p: &mut [u8], mut x: u8) -> u8 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        let mut any = false;
        for auto in &self.autos {
            if prefix.iter().any(|&p| auto[p as usize] != p) {
                continue;
            }
            any = true;
            for x in 0..self.n {
                let (a, b) = (find(&mut parent, x as u8), find(&mut parent, auto[x]));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v as u8);
        explored.iter().any(|&u| find(&mut parent, u as u8) == root)
    }
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Map sending each vertex to the vertex holding the same label in `to`.
fn automorphism(from: &Cells, to: &Cells, n: usize) -> Cells {
    let mut inv = [0u8; MAX_VERTICES];
    for v in 0..n {
        inv[to[v] as usize] = v as u8;
    }
    let mut auto = [0u8; MAX_VERTICES];
    for v in 0..n {
        auto[v] = inv[from[v] as usize];
    }
    auto
}

fn certificate(g: &Graph, n: usize, labels: &Cells) -> [u32; MAX_VERTICES] {
    let mut rows = [0u32; MAX_VERTICES];
    for v in 0..n {
        let mut r = 0u32;
        for u in bits(g.neighbors(v)) {
            r |= 1 << labels[u];
        }
        rows[labels[v] as usize] = r;
    }
    rows
}

/// Smallest-index non-singleton cell, as a vertex mask.
fn target_cell(cells: &Cells, n: usize) -> u32 {
    let mut sizes = [0u8; MAX_VERTICES];
    for &c in &cells[..n] {
        sizes[c as usize] += 1;
    }
    let c = sizes[..n].iter().position(|&s| s > 1).expect("partition not discrete") as u8;
    (0..n).filter(|&v| cells[v] == c).fold(0, |m, v| m | (1 << v))
}

/// Split `v` off the front of its cell.
fn individualize(cells: &Cells, n: usize, v: usize) -> Cells {
    let c = cells[v];
    let mut out = *cells;
    for u in 0..n {
        if cells[u] > c || (cells[u] == c && u != v) {
            out[u] += 1;
        }
    }
    out
}

/// Refine to the coarsest equitable partition finer than `cells`, keeping the
/// relative order of existing cells. Returns the number of cells.
fn refine(g: &Graph, n: usize, cells: &mut Cells) -> usize {
    let mut k = cells[..n].iter().max().map_or(0, |&m| m as usize + 1);
    loop {
        let mut masks = [0u32; MAX_VERTICES];
        for v in 0..n {
            masks[cells[v] as usize] |= 1 << v;
        }
        let mut sigs: Vec<([u8; MAX_VERTICES + 1], u8)> = (0..n)
            .map(|v| {
                let mut s = [0u8; MAX_VERTICES + 1];
                s[0] = cells[v];
                let row = g.neighbors(v);
                for c in 0..k {
                    s[c + 1] = (row & masks[c]).count_ones() as u8;
                }
                (s, v as u8)
            })
            .collect();
        sigs.sort_unstable();
        let mut rank = 0u8;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                rank += 1;
            }
            cells[sigs[i].1 as usize] = rank;
        }
        let new_k = rank as usize + 1;
        if new_k == k || new_k == n {
            return new_k;
        }
        k = new_k;
    }
}
