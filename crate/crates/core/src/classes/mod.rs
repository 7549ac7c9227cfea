//! Hereditary graph classes and the exact invariants used to decide them.

mod color;
mod perfect;
mod split;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub use color::{chromatic_number, clique_number, is_k_partite, maximal_cliques};
pub use perfect::{find_odd_hole, is_apex_perfect, is_chordal, is_perfect};
pub use split::{is_split, split_partitions, SplitPartition};

/// Identifier of one of the supported hereditary classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum ClassSpec {
    All,
    Bipartite,
    /// Graphs with chromatic number at most `k`, `k >= 2`.
    KPartite(usize),
    Chordal,
    Split,
    Perfect,
}

impl ClassSpec {
    pub fn kpartite(k: usize) -> Result<ClassSpec> {
        if k < 2 {
            return Err(Error::Parse(format!("kpartite needs k >= 2, got {k}")));
        }
        Ok(ClassSpec::KPartite(k))
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::All => f.write_str("all"),
            ClassSpec::Bipartite => f.write_str("bipartite"),
            ClassSpec::KPartite(k) => write!(f, "kpartite:{k}"),
            ClassSpec::Chordal => f.write_str("chordal"),
            ClassSpec::Split => f.write_str("split"),
            ClassSpec::Perfect => f.write_str("perfect"),
        }
    }
}

impl FromStr for ClassSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClassSpec> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "all" => Ok(ClassSpec::All),
            "bipartite" => Ok(ClassSpec::Bipartite),
            "chordal" => Ok(ClassSpec::Chordal),
            "split" => Ok(ClassSpec::Split),
            "perfect" => Ok(ClassSpec::Perfect),
            _ => {
                let k = s
                    .strip_prefix("kpartite:")
                    .ok_or_else(|| Error::Parse(format!("unknown class {s:?}")))?;
                let k = k
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad part count {k:?}")))?;
                ClassSpec::kpartite(k)
            }
        }
    }
}

impl From<ClassSpec> for String {
    fn from(c: ClassSpec) -> String {
        c.to_string()
    }
}

impl TryFrom<String> for ClassSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<ClassSpec> {
        s.parse()
    }
}

/// Class membership test.
pub fn member(g: &Graph, spec: ClassSpec) -> bool {
    match spec {
        ClassSpec::All => true,
        ClassSpec::Bipartite => is_bipartite(g),
        ClassSpec::KPartite(k) => is_k_partite(g, k),
        ClassSpec::Chordal => is_chordal(g),
        ClassSpec::Split => is_split(g),
        ClassSpec::Perfect => is_perfect(g),
    }
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// A 2-coloring as the mask of one color class, or `None` if `g` has an odd
/// cycle. In each component the lowest vertex gets the masked color.
pub fn bipartition(g: &Graph) -> Option<u32> {
    let mut side = 0u32;
    let mut seen = 0u32;
    for root in 0..g.order() {
        if seen & (1 << root) != 0 {
            continue;
        }
        side |= 1 << root;
        seen |= 1 << root;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let v_side = side & (1 << v) != 0;
            for u in bits(g.neighbors(v)) {
                if seen & (1 << u) == 0 {
                    seen |= 1 << u;
                    if !v_side {
                        side |= 1 << u;
                    }
                    stack.push(u);
                } else if (side & (1 << u) != 0) == v_side {
                    return None;
                }
            }
        }
    }
    Some(side)
}
