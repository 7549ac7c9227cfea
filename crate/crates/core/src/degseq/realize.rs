//! Exhaustive realization enumeration.
//!
//! Vertices are processed in non-increasing degree order. Each vertex picks
//! its remaining neighbors among later vertices. Later vertices with the same
//! residual degree and the same adjacency to the processed prefix are
//! interchangeable, so only the number taken from each such class is branched
//! on. Since later vertices have no edges among themselves yet, Erdős–Gallai on
//! the residual degrees is an exact feasibility test, so the search never
//! enters a dead subtree.

use std::collections::HashSet;
use std::ops::ControlFlow;

use super::{is_graphic_sorted, DegreeSequence};
use crate::error::{Error, Result};
use crate::graph::{CanonicalKey, Graph, MAX_VERTICES};

/// Largest sequence length accepted by the enumerators.
pub const REALIZATION_LIMIT: usize = 10;

/// All realizations of `d`, one per isomorphism class, as canonical forms.
/// With `limit = Some(k)` the search stops once `k + 1` classes are found.
pub fn enumerate_realizations(d: &DegreeSequence, limit: Option<usize>) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    visit_realizations(d, |g| {
        out.push(g.clone());
        if limit.is_some_and(|k| out.len() > k) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(out)
}

/// Call `f` once per isomorphism class of realizations of `d`, until it breaks.
pub fn visit_realizations<F>(d: &DegreeSequence, mut f: F) -> Result<()>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    let n = d.len();
    if n > REALIZATION_LIMIT {
        return Err(Error::capacity("realization enumeration", n, REALIZATION_LIMIT));
    }
    if !d.is_graphic() {
        return Err(Error::NotGraphic(d.to_string()));
    }
    let mut state = State {
        n,
        residual: d.terms().to_vec(),
        rows: [0; MAX_VERTICES],
        seen: HashSet::new(),
    };
    let _ = state.place(0, &mut f);
    Ok(())
}

struct State {
    n: usize,
    residual: Vec<usize>,
    rows: [u32; MAX_VERTICES],
    seen: HashSet<CanonicalKey>,
}

impl State {
    fn place<F>(&mut self, i: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Graph) -> ControlFlow<()>,
    {
        if i == self.n {
            let g = Graph::from_rows_unchecked(self.n, self.rows);
            let key = g.canonical_key().clone();
            if self.seen.insert(key) {
                return f(&g.canonical_form());
            }
            return ControlFlow::Continue(());
        }
        let need = self.residual[i];
        if need == 0 {
            return self.place(i + 1, f);
        }

        // interchangeable later vertices
        let prefix_mask = (1u32 << i) - 1;
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_keys: Vec<(usize, u32)> = Vec::new();
        for j in i + 1..self.n {
            if self.residual[j] == 0 {
                continue;
            }
            let key = (self.residual[j], self.rows[j] & prefix_mask);
            match class_keys.iter().position(|k| *k == key) {
                Some(c) => classes[c].push(j),
                None => {
                    class_keys.push(key);
                    classes.push(vec![j]);
                }
            }
        }
        let mut counts = vec![0usize; classes.len()];
        self.choose(i, need, 0, &classes, &mut counts, f)
    }

    fn choose<F>(
        &mut self,
        i: usize,
        left: usize,
        c: usize,
        classes: &[Vec<usize>],
        counts: &mut [usize],
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&Graph) -> ControlFlow<()>,
    {
        if left == 0 {
            return self.commit(i, classes, counts, f);
        }
        if c == classes.len() {
            return ControlFlow::Continue(());
        }
        let room: usize = classes[c..].iter().map(Vec::len).sum();
        if room < left {
            return ControlFlow::Continue(());
        }
        let max_here = classes[c].len().min(left);
        for take in (0..=max_here).rev() {
            counts[c] = take;
            self.choose(i, left - take, c + 1, classes, counts, f)?;
        }
        counts[c] = 0;
        ControlFlow::Continue(())
    }

    fn commit<F>(&mut self, i: usize, classes: &[Vec<usize>], counts: &[usize], f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Graph) -> ControlFlow<()>,
    {
        let chosen: Vec<usize> = classes
            .iter()
            .zip(counts)
            .flat_map(|(cl, &k)| cl[..k].iter().copied())
            .collect();
        let saved = self.residual[i];
        for &j in &chosen {
            self.residual[j] -= 1;
            self.rows[i] |= 1 << j;
            self.rows[j] |= 1 << i;
        }
        self.residual[i] = 0;

        let mut rest: Vec<usize> = self.residual[i + 1..].to_vec();
        rest.sort_unstable_by(|a, b| b.cmp(a));
        let flow = if is_graphic_sorted(&rest) {
            self.place(i + 1, f)
        } else {
            ControlFlow::Continue(())
        };

        for &j in &chosen {
            self.residual[j] += 1;
            self.rows[i] &= !(1 << j);
            self.rows[j] &= !(1 << i);
        }
        self.residual[i] = saved;
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    #[test]
    fn p5_has_two_realizations() {
        let r = enumerate_realizations(&ds("2,2,2,1,1"), None).unwrap();
        assert_eq!(r.len(), 2);
        let p5 = Graph::path(5).unwrap();
        let k3k2 = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        assert!(r.iter().any(|g| g.is_isomorphic(&p5)));
        assert!(r.iter().any(|g| g.is_isomorphic(&k3k2)));
    }

    #[test]
    fn unigraphic_counterexample() {
        assert_eq!(enumerate_realizations(&ds("3^5,1"), None).unwrap().len(), 1);
    }

    #[test]
    fn k4_sequence() {
        let r = enumerate_realizations(&ds("3,3,3,3,1,1"), None).unwrap();
        assert_eq!(r.len(), 2);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(r.iter().filter(|g| crate::graph::contains_induced(g, &k4)).count(), 1);
    }

    #[test]
    fn limit_stops_early() {
        // C9, C3+C6, C4+C5, 3C3
        let d = ds("2^9");
        let all = enumerate_realizations(&d, None).unwrap();
        assert_eq!(all.len(), 4);
        assert_eq!(enumerate_realizations(&d, Some(1)).unwrap().len(), 2);
        assert_eq!(enumerate_realizations(&d, Some(0)).unwrap().len(), 1);
    }

    #[test]
    fn zeros_are_isolated() {
        let r = enumerate_realizations(&ds("1,1,0,0"), None).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].order(), 4);
        assert_eq!(r[0].size(), 1);
        assert_eq!(enumerate_realizations(&ds(""), None).unwrap().len(), 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(enumerate_realizations(&ds("3,1"), None), Err(Error::NotGraphic(_))));
        assert!(matches!(enumerate_realizations(&ds("1^12"), None), Err(Error::Capacity { .. })));
    }
}
