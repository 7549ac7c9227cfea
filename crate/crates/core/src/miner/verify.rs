//! Exhaustive checks of the structural results about hereditary unigraph
//! classes. Each check evaluates both sides of a claimed equivalence by
//! separate code paths over every graph up to a vertex bound and collects
//! the graphs where they disagree.

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::mine_with;
use crate::classes::{
    chromatic_number, clique_number, is_apex_perfect, is_bipartite, is_chordal, is_k_partite, is_split,
    split_partitions, ClassSpec,
};
use crate::degseq::{enumerate_realizations, BipartitionedPair, DegreeSequence};
use crate::error::{Error, Result};
use crate::graph::{all_graphs, bits, check_generation, contains_induced, Graph};
use crate::rao::{sequence_rao_contains, RaoOracle};
use crate::unigraph::{decompose, is_hbu_sequence, is_hbu_structural, UnigraphOracle};

/// Identifiers accepted by [`verify_theorem`]. `kpartite-equivalence` and
/// `kpartite-corollary` take an optional `:k` suffix (default 3).
pub const THEOREMS: &[&str] = &[
    "kpartite-equivalence",
    "kpartite-corollary",
    "chi-bound",
    "split-forbidden",
    "split-degree",
    "hbu-equivalence",
    "tyshkevich",
    "composition-coloring",
    "perfect-forbidden",
    "chordal-forbidden",
    "fhu-closure",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub max_n: usize,
    pub checked: usize,
    pub counterexamples: Vec<String>,
    pub wall_clock_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

pub fn verify_theorem(id: &str, max_n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let (name, k) = match id.split_once(':') {
        Some((name, k)) => {
            let k: usize = k.parse().map_err(|_| Error::UnknownTheorem(id.to_string()))?;
            (name, Some(k))
        }
        None => (id, None),
    };
    if k.is_some() && !name.starts_with("kpartite-") {
        return Err(Error::UnknownTheorem(id.to_string()));
    }
    let k = k.unwrap_or(3);
    if k < 2 {
        return Err(Error::UnknownTheorem(id.to_string()));
    }
    check_generation(max_n)?;
    let (checked, counterexamples) = match name {
        "kpartite-equivalence" => kpartite_equivalence(k, max_n)?,
        "kpartite-corollary" => kpartite_corollary(k, max_n)?,
        "chi-bound" => chi_bound(max_n)?,
        "split-forbidden" => split_forbidden(max_n)?,
        "split-degree" => split_degree(max_n)?,
        "hbu-equivalence" => hbu_equivalence(max_n)?,
        "tyshkevich" => tyshkevich(max_n)?,
        "composition-coloring" => composition_coloring(max_n)?,
        "perfect-forbidden" => perfect_forbidden(max_n)?,
        "chordal-forbidden" => chordal_forbidden(max_n)?,
        "fhu-closure" => fhu_closure(max_n)?,
        _ => return Err(Error::UnknownTheorem(id.to_string())),
    };
    Ok(VerificationReport {
        theorem: id.to_string(),
        max_n,
        checked,
        counterexamples,
        wall_clock_ms: start.elapsed().as_millis(),
    })
}

/// Run `bad` on every graph with at most `max_n` vertices that passes
/// `keep`; returns the number kept and the graph6 of each graph where `bad`
/// is true, in generation order.
fn sweep<K, B>(max_n: usize, keep: K, bad: B) -> Result<(usize, Vec<String>)>
where
    K: Fn(&Graph) -> bool + Sync,
    B: Fn(&Graph) -> Result<bool> + Sync,
{
    let mut checked = 0;
    let mut out = Vec::new();
    for n in 0..=max_n {
        let graphs: Vec<Graph> = all_graphs(n)?.into_iter().filter(|g| keep(g)).collect();
        checked += graphs.len();
        let hits = graphs
            .par_iter()
            .map(|g| Ok(bad(g)?.then(|| g.to_graph6())))
            .collect::<Result<Vec<_>>>()?;
        out.extend(hits.into_iter().flatten());
    }
    Ok((checked, out))
}

fn any_induced(g: &Graph, list: &[Graph]) -> bool {
    list.iter().any(|f| f.order() <= g.order() && contains_induced(g, f))
}

fn mined(spec: ClassSpec, max_n: usize) -> Result<Vec<Graph>> {
    Ok(mine_with(&UnigraphOracle::new(spec), max_n)?.graphs())
}

fn kpartite_equivalence(k: usize, max_n: usize) -> Result<(usize, Vec<String>)> {
    let kpart = UnigraphOracle::new(ClassSpec::kpartite(k)?);
    let all = UnigraphOracle::new(ClassSpec::All);
    sweep(
        max_n,
        |_| true,
        |g| Ok(kpart.is_hereditary(g)? != (is_k_partite(g, k) && all.is_hereditary(g)?)),
    )
}

fn kpartite_corollary(k: usize, max_n: usize) -> Result<(usize, Vec<String>)> {
    let kpart = UnigraphOracle::new(ClassSpec::kpartite(k)?);
    let fhu = mined(ClassSpec::All, max_n)?;
    sweep(
        max_n,
        |_| true,
        |g| Ok(kpart.is_hereditary(g)? != (is_k_partite(g, k) && !any_induced(g, &fhu))),
    )
}

fn chi_bound(max_n: usize) -> Result<(usize, Vec<String>)> {
    let all = UnigraphOracle::new(ClassSpec::All);
    sweep(
        max_n,
        |_| true,
        |g| {
            if !all.is_unigraph(g)? {
                return Ok(false);
            }
            Ok(chromatic_number(g) > clique_number(g) + 1 || !is_apex_perfect(g))
        },
    )
}

fn split_forbidden(max_n: usize) -> Result<(usize, Vec<String>)> {
    let k2 = Graph::complete(2)?;
    let triple = [Graph::cycle(4)?, Graph::cycle(5)?, k2.disjoint_union(&k2)?];
    sweep(
        max_n,
        |_| true,
        |g| {
            let by_degrees = is_split(g);
            let by_partitions = !split_partitions(g).is_empty();
            let by_forbidden = !any_induced(g, &triple);
            Ok(by_degrees != by_forbidden || by_partitions != by_forbidden)
        },
    )
}

fn split_degree(max_n: usize) -> Result<(usize, Vec<String>)> {
    sweep(
        max_n,
        |g| !split_partitions(g).is_empty(),
        |g| {
            let others = enumerate_realizations(&DegreeSequence::of(g), None)?;
            Ok(others.iter().any(|h| split_partitions(h).is_empty()))
        },
    )
}

/// Over bipartite graphs without isolated vertices: the definition, the
/// mined forbidden list, the apex-complete-bipartite structure, the degree
/// pattern, and avoidance of the mined minimal forbidden pairs must agree.
fn hbu_equivalence(max_n: usize) -> Result<(usize, Vec<String>)> {
    let rao = RaoOracle::new();
    let forbidden = mined(ClassSpec::Bipartite, max_n)?;
    let pairs: Vec<BipartitionedPair> = rao
        .forbidden_pairs(max_n)?
        .into_iter()
        .filter(|r| r.minimal)
        .map(|r| r.pair)
        .collect();
    let avoids = SequenceMemo::default();
    sweep(
        max_n,
        |g| g.isolated_mask() == 0 && is_bipartite(g),
        |g| {
            let d = DegreeSequence::of(g);
            let definition = rao.hereditary_bipartite().is_hereditary(g)?;
            let by_list = !any_induced(g, &forbidden);
            let structural = is_hbu_structural(g);
            let pattern = is_hbu_sequence(&d);
            let by_pairs = avoids.get_or(&d, || {
                for p in &pairs {
                    if sequence_rao_contains(&d, p)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })?;
            Ok([by_list, structural, pattern, by_pairs].iter().any(|&x| x != definition))
        },
    )
}

#[derive(Default)]
struct SequenceMemo(Mutex<HashMap<DegreeSequence, bool>>);

impl SequenceMemo {
    fn get_or(&self, d: &DegreeSequence, f: impl FnOnce() -> Result<bool>) -> Result<bool> {
        if let Some(&hit) = self.0.lock().unwrap().get(d) {
            return Ok(hit);
        }
        let v = f()?;
        self.0.lock().unwrap().insert(d.clone(), v);
        Ok(v)
    }
}

fn tyshkevich(max_n: usize) -> Result<(usize, Vec<String>)> {
    let all = UnigraphOracle::new(ClassSpec::All);
    sweep(
        max_n,
        |_| true,
        |g| {
            let dec = decompose(g);
            let mut parts = vec![dec.tail.clone()];
            parts.extend(dec.terms.iter().map(|t| t.graph.clone()));
            let mut each = true;
            for p in &parts {
                if !all.is_unigraph(p)? {
                    each = false;
                    break;
                }
            }
            Ok(all.is_unigraph(g)? != each)
        },
    )
}

fn composition_coloring(max_n: usize) -> Result<(usize, Vec<String>)> {
    sweep(
        max_n,
        |g| g.order() > 0,
        |g| {
            let dec = decompose(g);
            let k: usize = dec.terms.iter().map(|t| bits(t.partition.clique).count()).sum();
            Ok(clique_number(g) != k + clique_number(&dec.tail)
                || chromatic_number(g) != k + chromatic_number(&dec.tail))
        },
    )
}

fn perfect_forbidden(max_n: usize) -> Result<(usize, Vec<String>)> {
    let perfect = UnigraphOracle::new(ClassSpec::Perfect);
    let mut list = mined(ClassSpec::All, max_n)?;
    list.push(Graph::cycle(5)?);
    sweep(max_n, |_| true, |g| Ok(perfect.is_hereditary(g)? == any_induced(g, &list)))
}

/// The chordal list is assembled from its description: the small graphs by
/// name, the four split graphs of the unrestricted list, both chordal
/// realizations of 4,3,2^3,1, and the chordal realization of 3^2,2^2,1^2
/// without an induced P5.
pub fn chordal_forbidden_list(max_n: usize) -> Result<Vec<Graph>> {
    let k2 = Graph::complete(2)?;
    let p3 = Graph::path(3)?;
    let mut list = vec![
        Graph::cycle(4)?,
        Graph::cycle(5)?,
        Graph::path(5)?,
        Graph::complete(3)?.disjoint_union(&k2)?,
        p3.disjoint_union(&p3)?,
        Graph::path(4)?.disjoint_union(&k2)?,
    ];
    list.extend(mined(ClassSpec::All, max_n)?.into_iter().filter(is_split));
    let chordal_realizations = |s: &str| -> Result<Vec<Graph>> {
        let d: DegreeSequence = s.parse()?;
        Ok(enumerate_realizations(&d, None)?.into_iter().filter(is_chordal).collect())
    };
    list.extend(chordal_realizations("4,3,2^3,1")?);
    let p5 = Graph::path(5)?;
    list.extend(
        chordal_realizations("3^2,2^2,1^2")?
            .into_iter()
            .filter(|g| !contains_induced(g, &p5)),
    );
    list.retain(|g| g.order() <= max_n);
    Ok(list)
}

fn chordal_forbidden(max_n: usize) -> Result<(usize, Vec<String>)> {
    let chordal = UnigraphOracle::new(ClassSpec::Chordal);
    let list = chordal_forbidden_list(max_n.max(6))?;
    sweep(max_n, |_| true, |g| Ok(chordal.is_hereditary(g)? == any_induced(g, &list)))
}

/// Every realization of the degree sequence of a graph in the unrestricted
/// list contains some graph of the list.
fn fhu_closure(max_n: usize) -> Result<(usize, Vec<String>)> {
    let list = mined(ClassSpec::All, max_n)?;
    let mut bad = Vec::new();
    for f in &list {
        for h in enumerate_realizations(&DegreeSequence::of(f), None)? {
            if !any_induced(&h, &list) {
                bad.push(h.to_graph6());
            }
        }
    }
    Ok((list.len(), bad))
}
