//! Small simple graphs stored as rows of `u32` neighbor bitsets.
//!
//! Every graph in this crate has at most [`MAX_VERTICES`] vertices, which
//! keeps a whole adjacency row in one machine word. Graphs are immutable once
//! built; operations return new graphs.

mod canon;
mod generate;
mod graph6;
mod induced;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub use canon::{canonical_labeling, canonical_labeling_colored, CanonicalKey};
pub(crate) use generate::check as check_generation;
pub use generate::{all_graphs, for_each_graph, GENERATION_LIMIT};
pub use induced::{contains_induced, find_induced};

/// Hard vertex capacity of [`Graph`].
pub const MAX_VERTICES: usize = 32;

/// Iterate over the set bits of a vertex mask, lowest first.
#[inline]
pub fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// An immutable simple graph on at most 32 vertices.
#[derive(Clone)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
    canon: OnceLock<CanonicalKey>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::capacity("graph", n, MAX_VERTICES));
        }
        Ok(Graph::from_rows_unchecked(n, [0; MAX_VERTICES]))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut rows = [0u32; MAX_VERTICES];
        if n > MAX_VERTICES {
            return Err(Error::capacity("graph", n, MAX_VERTICES));
        }
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::Parse(format!("self-loop at vertex {u}")));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph::from_rows_unchecked(n, rows))
    }

    /// Build from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(n: usize, rows: &[u32]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::capacity("graph", n, MAX_VERTICES));
        }
        if rows.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} adjacency rows, got {}",
                rows.len()
            )));
        }
        let mask = full_mask(n);
        let mut adj = [0u32; MAX_VERTICES];
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row & (1 << v) != 0 {
                return Err(Error::Parse(format!("row {v} has invalid bits")));
            }
            for u in bits(row) {
                if rows[u] & (1 << v) == 0 {
                    return Err(Error::Parse(format!("adjacency not symmetric at ({v},{u})")));
                }
            }
            adj[v] = row;
        }
        Ok(Graph::from_rows_unchecked(n, adj))
    }

    pub(crate) fn from_rows_unchecked(n: usize, adj: [u32; MAX_VERTICES]) -> Graph {
        debug_assert!(n <= MAX_VERTICES);
        Graph {
            n: n as u8,
            adj,
            canon: OnceLock::new(),
        }
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut rows = [0u32; MAX_VERTICES];
        if n > MAX_VERTICES {
            return Err(Error::capacity("graph", n, MAX_VERTICES));
        }
        let all = full_mask(n);
        for (v, row) in rows.iter_mut().enumerate().take(n) {
            *row = all & !(1 << v);
        }
        Ok(Graph::from_rows_unchecked(n, rows))
    }

    /// Path on `n` vertices, labeled in order.
    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Parse(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `K_{a,b}` with the `a` side first.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        let mut edges = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    /// Star `K_{1,k}`, center 0.
    pub fn star(k: usize) -> Result<Graph> {
        Graph::complete_bipartite(1, k)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n as usize]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows().iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        full_mask(self.order())
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |k| (u, u + 1 + k)))
    }

    pub fn isolated_mask(&self) -> u32 {
        self.rows()
            .iter()
            .enumerate()
            .filter(|(_, &r)| r == 0)
            .fold(0, |m, (v, _)| m | (1 << v))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let mut rows = [0u32; MAX_VERTICES];
        for v in 0..self.order() {
            rows[v] = all & !self.adj[v] & !(1 << v);
        }
        Graph::from_rows_unchecked(self.order(), rows)
    }

    /// `self` on vertices `0..n`, `other` shifted to `n..n+m`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let (n, m) = (self.order(), other.order());
        if n + m > MAX_VERTICES {
            return Err(Error::capacity("disjoint union", n + m, MAX_VERTICES));
        }
        let mut rows = self.adj;
        for v in 0..m {
            rows[n + v] = other.adj[v] << n;
        }
        Ok(Graph::from_rows_unchecked(n + m, rows))
    }

    /// Subgraph induced by the given vertices, relabeled `0..s.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut seen = 0u32;
        for &v in vertices {
            if v >= self.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order(),
                });
            }
            if seen & (1 << v) != 0 {
                return Err(Error::Parse(format!("vertex {v} repeated")));
            }
            seen |= 1 << v;
        }
        let mut rows = [0u32; MAX_VERTICES];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[i] |= 1 << j;
                }
            }
        }
        Ok(Graph::from_rows_unchecked(vertices.len(), rows))
    }

    /// Subgraph induced by a vertex mask, keeping vertices in increasing order.
    pub fn induced_by_mask(&self, mask: u32) -> Graph {
        let mask = mask & self.vertex_mask();
        let mut rows = [0u32; MAX_VERTICES];
        let verts: Vec<usize> = bits(mask).collect();
        for (i, &u) in verts.iter().enumerate() {
            let nb = self.adj[u] & mask;
            rows[i] = compress(nb, mask);
        }
        Graph::from_rows_unchecked(verts.len(), rows)
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced_by_mask(self.vertex_mask() & !(1 << v))
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut rows = [0u32; MAX_VERTICES];
        for v in 0..self.order() {
            let mut r = 0u32;
            for u in bits(self.adj[v]) {
                r |= 1 << perm[u];
            }
            rows[perm[v]] = r;
        }
        Graph::from_rows_unchecked(self.order(), rows)
    }

    /// Add a vertex adjacent to `neighbors`.
    pub fn add_vertex(&self, neighbors: u32) -> Result<Graph> {
        let n = self.order();
        if n + 1 > MAX_VERTICES {
            return Err(Error::capacity("graph", n + 1, MAX_VERTICES));
        }
        let neighbors = neighbors & self.vertex_mask();
        let mut rows = self.adj;
        for u in bits(neighbors) {
            rows[u] |= 1 << n;
        }
        rows[n] = neighbors;
        Ok(Graph::from_rows_unchecked(n + 1, rows))
    }

    /// Cached canonical certificate; equal exactly for isomorphic graphs.
    pub fn canonical_key(&self) -> &CanonicalKey {
        self.canon.get_or_init(|| canonical_labeling(self).1)
    }

    /// The canonical relabeling of this graph.
    pub fn canonical_form(&self) -> Graph {
        let key = self.canonical_key();
        let g = key.to_graph();
        let _ = g.canon.set(key.clone());
        g
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.order() != other.order() || self.size() != other.size() {
            return false;
        }
        let mut a = self.degrees();
        let mut b = other.degrees();
        a.sort_unstable();
        b.sort_unstable();
        a == b && self.canonical_key() == other.canonical_key()
    }

    pub fn is_connected(&self) -> bool {
        let all = self.vertex_mask();
        if all == 0 {
            return true;
        }
        self.component_of(0) == all
    }

    /// Vertex mask of the connected component containing `v`.
    pub fn component_of(&self, v: usize) -> u32 {
        let mut seen = 1u32 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn components(&self) -> Vec<u32> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_of(left.trailing_zeros() as usize);
            out.push(c);
            left &= !c;
        }
        out
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        graph6::decode(text)
    }
}

/// Pack the bits of `bits_in` selected by `mask` into the low bits.
#[inline]
pub(crate) fn compress(bits_in: u32, mask: u32) -> u32 {
    bits(mask)
        .enumerate()
        .filter(|&(_, v)| bits_in & (1 << v) != 0)
        .fold(0, |out, (k, _)| out | 1 << k)
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows() == other.rows()
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows().hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_graph6())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl std::str::FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        graph6::decode(s)
    }
}

/// Graphs serialize as their graph6 string.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        graph6::decode(&text).map_err(serde::de::Error::custom)
    }
}
