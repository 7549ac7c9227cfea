//! Library results checked against brute-force computations on small graphs.

use std::collections::{BTreeMap, BTreeSet};

use unigraphs::classes::{
    chromatic_number, clique_number, is_chordal, is_perfect, is_split, split_partitions, ClassSpec,
};
use unigraphs::degseq::{enumerate_realizations, is_bipartite_realizable};
use unigraphs::graph::{all_graphs, bits, contains_induced, full_mask};
use unigraphs::unigraph::{decompose, is_unigraph, UnigraphOracle};
use unigraphs::{DegreeSequence, Graph};

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn brute_canon(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let mut best: Option<Vec<bool>> = None;
    permute(&mut (0..n).collect(), 0, &mut |p| {
        let word: Vec<bool> = (0..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .map(|(i, j)| g.has_edge(p[i], p[j]))
            .collect();
        if best.as_ref().is_none_or(|b| word < *b) {
            best = Some(word);
        }
    });
    best.unwrap_or_default()
}

fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u32..(1 << slots.len())).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            slots.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn subsets(n: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << n)
}

fn brute_induced(g: &Graph, h: &Graph) -> bool {
    let target = brute_canon(h);
    subsets(g.order())
        .filter(|s| s.count_ones() as usize == h.order())
        .any(|s| brute_canon(&g.induced_by_mask(s)) == target)
}

fn brute_chromatic(g: &Graph) -> usize {
    let n = g.order();
    (0..=n)
        .find(|&k| {
            let mut colors = vec![0usize; n];
            fn go(g: &Graph, v: usize, k: usize, colors: &mut Vec<usize>) -> bool {
                if v == g.order() {
                    return true;
                }
                for c in 0..k {
                    if (0..v).all(|u| !g.has_edge(u, v) || colors[u] != c) {
                        colors[v] = c;
                        if go(g, v + 1, k, colors) {
                            return true;
                        }
                    }
                }
                false
            }
            go(g, 0, k, &mut colors)
        })
        .unwrap()
}

fn brute_clique(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|&s| bits(s).all(|v| (g.neighbors(v) | 1 << v) & s == s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[test]
fn isomorphism_agrees_with_permutation_search() {
    for n in 0..=5 {
        let mut by_key: BTreeMap<Vec<u8>, Vec<bool>> = BTreeMap::new();
        for g in labeled_graphs(n) {
            let brute = brute_canon(&g);
            let key = g.canonical_key().certificate();
            match by_key.get(&key) {
                Some(b) => assert_eq!(*b, brute, "{g}"),
                None => {
                    by_key.insert(key, brute.clone());
                }
            }
            assert_eq!(brute_canon(&g.canonical_form()), brute);
        }
        let distinct: BTreeSet<&Vec<bool>> = by_key.values().collect();
        assert_eq!(distinct.len(), by_key.len());
    }
}

#[test]
fn generation_matches_labeled_dedup() {
    for n in 0..=6 {
        let labeled: BTreeSet<Vec<bool>> = labeled_graphs(n).map(|g| brute_canon(&g)).collect();
        let generated: Vec<Vec<bool>> = all_graphs(n).unwrap().iter().map(brute_canon).collect();
        let set: BTreeSet<Vec<bool>> = generated.iter().cloned().collect();
        assert_eq!(set.len(), generated.len(), "duplicates at n = {n}");
        assert_eq!(set, labeled, "n = {n}");
    }
}

#[test]
fn realizations_match_labeled_dedup() {
    let mut expected: BTreeMap<DegreeSequence, BTreeSet<Vec<bool>>> = BTreeMap::new();
    for n in 0..=5 {
        for g in labeled_graphs(n) {
            expected.entry(DegreeSequence::of(&g)).or_default().insert(brute_canon(&g));
        }
    }
    for (d, want) in &expected {
        let got: BTreeSet<Vec<bool>> = enumerate_realizations(d, None).unwrap().iter().map(brute_canon).collect();
        assert_eq!(&got, want, "{d}");
        for g in enumerate_realizations(d, None).unwrap() {
            assert_eq!(is_unigraph(&g).unwrap(), want.len() == 1, "{g}");
        }
    }
}

#[test]
fn induced_containment_agrees_with_subset_search() {
    let small: Vec<Graph> = (1..=4).flat_map(|n| all_graphs(n).unwrap()).collect();
    for g in all_graphs(6).unwrap().iter().step_by(3) {
        for h in &small {
            assert_eq!(contains_induced(g, h), brute_induced(g, h), "{g} {h}");
        }
    }
}

#[test]
fn colouring_numbers_agree_with_brute_force() {
    for n in 0..=6 {
        for g in all_graphs(n).unwrap() {
            assert_eq!(chromatic_number(&g), brute_chromatic(&g), "{g}");
            assert_eq!(clique_number(&g), brute_clique(&g), "{g}");
        }
    }
}

#[test]
fn perfection_agrees_with_definition() {
    for n in 0..=7 {
        for g in all_graphs(n).unwrap() {
            let definition = subsets(n).all(|s| {
                let h = g.induced_by_mask(s);
                chromatic_number(&h) == clique_number(&h)
            });
            assert_eq!(is_perfect(&g), definition, "{g}");
        }
    }
}

#[test]
fn chordality_agrees_with_induced_cycles() {
    let cycles: Vec<Graph> = (4..=7).map(|k| Graph::cycle(k).unwrap()).collect();
    for n in 0..=7 {
        for g in all_graphs(n).unwrap() {
            let holes = cycles.iter().any(|c| c.order() <= n && contains_induced(&g, c));
            assert_eq!(is_chordal(&g), !holes, "{g}");
        }
    }
}

/// Every (clique, stable) pair covering the vertices.
fn brute_split_partitions(g: &Graph) -> BTreeSet<(u32, u32)> {
    let all = full_mask(g.order());
    subsets(g.order())
        .filter(|&k| bits(k).all(|v| (g.neighbors(v) | 1 << v) & k == k))
        .filter(|&k| bits(all & !k).all(|v| g.neighbors(v) & (all & !k) == 0))
        .map(|k| (k, all & !k))
        .collect()
}

#[test]
fn split_partitions_are_exhaustive() {
    for n in 0..=6 {
        for g in all_graphs(n).unwrap() {
            let got: BTreeSet<(u32, u32)> = split_partitions(&g).iter().map(|p| (p.clique, p.stable)).collect();
            let want = brute_split_partitions(&g);
            assert_eq!(got, want, "{g}");
            assert_eq!(is_split(&g), !want.is_empty(), "{g}");
        }
    }
}

/// Whether some split part (K, S) with a non-empty remainder peels off.
fn brute_decomposable(g: &Graph) -> bool {
    let n = g.order();
    let all = full_mask(n);
    subsets(n).any(|ks| {
        let rest = all & !ks;
        if ks == 0 || rest == 0 {
            return false;
        }
        let mut k = ks;
        loop {
            let s = ks & !k;
            let ok = bits(k).all(|v| (g.neighbors(v) | 1 << v) & k == k && g.neighbors(v) & rest == rest)
                && bits(s).all(|v| g.neighbors(v) & (s | rest) == 0);
            if ok {
                return true;
            }
            if k == 0 {
                return false;
            }
            k = (k - 1) & ks;
        }
    })
}

#[test]
fn decomposition_agrees_with_subset_search() {
    for n in 0..=7 {
        for g in all_graphs(n).unwrap() {
            let d = decompose(&g);
            assert_eq!(d.terms.is_empty(), !brute_decomposable(&g), "{g}");
            assert!(!brute_decomposable(&d.tail), "{g}: tail {} decomposes", d.tail);
            assert!(d.recompose().unwrap().is_isomorphic(&g), "{g}");
        }
    }
}

#[test]
fn gale_ryser_agrees_with_enumeration() {
    let mut realizable = BTreeSet::new();
    for p in 0..=3usize {
        for q in 0..=3usize {
            for mask in 0u32..(1 << (p * q)) {
                let mut a = vec![0; p];
                let mut b = vec![0; q];
                for i in 0..p {
                    for j in 0..q {
                        if mask >> (i * q + j) & 1 == 1 {
                            a[i] += 1;
                            b[j] += 1;
                        }
                    }
                }
                a.sort_unstable_by(|x, y| y.cmp(x));
                b.sort_unstable_by(|x, y| y.cmp(x));
                realizable.insert((a, b));
            }
        }
    }
    fn lists(len: usize, max: usize) -> Vec<Vec<usize>> {
        if len == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for rest in lists(len - 1, max) {
            for x in rest.first().copied().unwrap_or(0)..=max {
                let mut v = vec![x];
                v.extend(&rest);
                out.push(v);
            }
        }
        out
    }
    for p in 0..=3 {
        for q in 0..=3 {
            for a in lists(p, q) {
                for b in lists(q, p) {
                    let want = realizable.contains(&(a.clone(), b.clone()));
                    assert_eq!(is_bipartite_realizable(&a, &b), want, "{a:?} {b:?}");
                }
            }
        }
    }
}

#[test]
fn hereditary_unigraphs_are_closed_and_unigraphic() {
    let oracle = UnigraphOracle::new(ClassSpec::All);
    for n in 0..=6 {
        for g in all_graphs(n).unwrap() {
            let by_subsets = subsets(n).all(|s| is_unigraph(&g.induced_by_mask(s)).unwrap());
            assert_eq!(oracle.is_hereditary(&g).unwrap(), by_subsets, "{g}");
        }
    }
}
