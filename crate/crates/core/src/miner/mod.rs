//! Minimal forbidden induced subgraphs of the hereditary unigraph classes,
//! found by sweeping all graphs up to a vertex bound.

mod verify;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{is_split, ClassSpec};
use crate::degseq::DegreeSequence;
use crate::error::Result;
use crate::graph::{all_graphs, check_generation, contains_induced, Graph};
use crate::unigraph::UnigraphOracle;

pub use verify::{verify_theorem, VerificationReport, THEOREMS};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenGraph {
    pub g6: String,
    pub degseq: DegreeSequence,
    pub n: usize,
    /// Name given to the split members of the unrestricted class.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl ForbiddenGraph {
    pub fn graph(&self) -> Graph {
        Graph::from_graph6(&self.g6).expect("report holds valid graph6")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiningReport {
    pub class: String,
    pub max_n: usize,
    pub forbidden: Vec<ForbiddenGraph>,
    pub counts: BTreeMap<usize, usize>,
    pub checked: usize,
    /// Graphs on which membership by the mined list disagrees with the
    /// membership oracle.
    pub counterexamples: Vec<String>,
}

impl MiningReport {
    pub fn graphs(&self) -> Vec<Graph> {
        self.forbidden.iter().map(ForbiddenGraph::graph).collect()
    }
}

/// Name of the hereditary class of `spec`-unigraphs.
pub fn class_name(spec: ClassSpec) -> String {
    format!("hereditary {spec}-unigraphs")
}

/// All minimal forbidden induced subgraphs of the hereditary
/// `spec`-unigraphs on at most `max_n` vertices: graphs outside the class
/// whose one-vertex deletions are all inside.
pub fn mine_forbidden(spec: ClassSpec, max_n: usize) -> Result<MiningReport> {
    let oracle = UnigraphOracle::new(spec);
    mine_with(&oracle, max_n)
}

pub(crate) fn mine_with(oracle: &UnigraphOracle, max_n: usize) -> Result<MiningReport> {
    check_generation(max_n)?;
    let mut found: Vec<Graph> = Vec::new();
    let mut counts = BTreeMap::new();
    let mut checked = 0;
    let mut levels = Vec::new();
    for n in 0..=max_n {
        let graphs = all_graphs(n)?;
        checked += graphs.len();
        let hits: Vec<Graph> = graphs
            .par_iter()
            .map(|g| -> Result<Option<Graph>> {
                if oracle.is_hereditary(g)? {
                    return Ok(None);
                }
                for v in 0..g.order() {
                    if !oracle.is_hereditary(&g.delete_vertex(v))? {
                        return Ok(None);
                    }
                }
                Ok(Some(g.clone()))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        counts.insert(n, hits.len());
        found.extend(hits);
        levels.push(graphs);
    }
    found.sort_by(|a, b| (a.order(), a.canonical_key()).cmp(&(b.order(), b.canonical_key())));

    let counterexamples: Vec<String> = levels
        .par_iter()
        .flatten()
        .map(|g| -> Result<Option<String>> {
            let by_list = !found.iter().any(|f| contains_induced(g, f));
            Ok((by_list != oracle.is_hereditary(g)?).then(|| g.to_graph6()))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let labels = if oracle.spec() == ClassSpec::All {
        split_labels(&found)
    } else {
        vec![None; found.len()]
    };
    let forbidden = found
        .iter()
        .zip(labels)
        .map(|(g, label)| ForbiddenGraph {
            g6: g.to_graph6(),
            degseq: DegreeSequence::of(g),
            n: g.order(),
            label,
        })
        .collect();
    Ok(MiningReport {
        class: class_name(oracle.spec()),
        max_n,
        forbidden,
        counts,
        checked,
        counterexamples,
    })
}

/// Names the split graphs of the list when they form exactly two
/// complementary pairs: within a pair the graph with fewer edges is `R` (or
/// `S`) and its complement `R̄` (or `S̄`); the pair whose sparser member comes
/// first in the list is `R`.
fn split_labels(found: &[Graph]) -> Vec<Option<String>> {
    let mut labels = vec![None; found.len()];
    let split: Vec<usize> = (0..found.len()).filter(|&i| is_split(&found[i])).collect();
    if split.len() != 4 {
        return labels;
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for &i in &split {
        let comp = found[i].complement();
        let j = split.iter().copied().find(|&j| found[j].is_isomorphic(&comp));
        match j {
            Some(j) if j != i => {
                let (lo, hi) = if found[i].size() <= found[j].size() { (i, j) } else { (j, i) };
                if !pairs.contains(&(lo, hi)) {
                    pairs.push((lo, hi));
                }
            }
            _ => return labels,
        }
    }
    if pairs.len() != 2 {
        return labels;
    }
    pairs.sort();
    for (&(lo, hi), name) in pairs.iter().zip(["R", "S"]) {
        labels[lo] = Some(name.to_string());
        labels[hi] = Some(format!("{name}\u{304}"));
    }
    labels
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds() {
        let r = mine_forbidden(ClassSpec::All, 4).unwrap();
        assert!(r.forbidden.is_empty());
        assert_eq!(r.checked, 1 + 1 + 2 + 4 + 11);
        assert!(r.counterexamples.is_empty());

        let r = mine_forbidden(ClassSpec::Bipartite, 5).unwrap();
        let names: Vec<&str> = r.forbidden.iter().map(|f| f.g6.as_str()).collect();
        assert_eq!(names.len(), 2);
        assert!(r.graphs().iter().any(|g| g.is_isomorphic(&Graph::complete(3).unwrap())));
        assert!(r.graphs().iter().any(|g| g.is_isomorphic(&Graph::cycle(5).unwrap())));
    }

    #[test]
    fn report_json_shape() {
        let r = mine_forbidden(ClassSpec::Bipartite, 3).unwrap();
        let js = serde_json::to_value(&r).unwrap();
        assert_eq!(js["class"], "hereditary bipartite-unigraphs");
        assert_eq!(js["forbidden"][0]["degseq"], "2^3");
        assert_eq!(js["counts"]["3"], 1);
    }
}
