//! Unigraphs relative to a class: a graph in the class whose degree sequence
//! has exactly one realization in the class, up to isomorphism.

mod compose;
mod hbu;

use std::ops::ControlFlow;

use dashmap::DashMap;

use crate::classes::{member, ClassSpec};
use crate::degseq::{visit_realizations, DegreeSequence};
use crate::error::{Error, Result};
use crate::graph::{CanonicalKey, Graph};

pub use compose::{compose, decompose, CompositionTerm, Decomposition};
pub use hbu::{is_complete_bipartite, is_hbu_sequence, is_hbu_structural};

/// Memoizing oracle for unigraph questions relative to one class. Safe to
/// share between threads; answers are cached by degree sequence and by
/// canonical key.
pub struct UnigraphOracle {
    spec: ClassSpec,
    unique: DashMap<DegreeSequence, bool>,
    hereditary: DashMap<CanonicalKey, bool>,
}

impl UnigraphOracle {
    pub fn new(spec: ClassSpec) -> UnigraphOracle {
        UnigraphOracle {
            spec,
            unique: DashMap::new(),
            hereditary: DashMap::new(),
        }
    }

    pub fn spec(&self) -> ClassSpec {
        self.spec
    }

    /// Whether `g` is the only realization of its degree sequence inside the
    /// class. Fails with [`Error::NotMember`] when `g` is outside the class.
    pub fn is_unigraph(&self, g: &Graph) -> Result<bool> {
        if !member(g, self.spec) {
            return Err(Error::NotMember(self.spec.to_string()));
        }
        self.unique_in_class(&DegreeSequence::of(g))
    }

    /// Number of class members among the realizations of `d`, counting no
    /// further than `cap`.
    pub fn count_member_realizations(&self, d: &DegreeSequence, cap: usize) -> Result<usize> {
        let mut count = 0;
        visit_realizations(d, |h| {
            if member(h, self.spec) {
                count += 1;
                if count >= cap {
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        })?;
        Ok(count)
    }

    fn unique_in_class(&self, d: &DegreeSequence) -> Result<bool> {
        if let Some(hit) = self.unique.get(d) {
            return Ok(*hit);
        }
        let unique = self.count_member_realizations(d, 2)? == 1;
        self.unique.insert(d.clone(), unique);
        Ok(unique)
    }

    /// Whether `g` is in the class and every induced subgraph of `g`
    /// (including `g`) is a unigraph relative to the class.
    pub fn is_hereditary(&self, g: &Graph) -> Result<bool> {
        if !member(g, self.spec) {
            return Ok(false);
        }
        self.hereditary_member(g)
    }

    fn hereditary_member(&self, g: &Graph) -> Result<bool> {
        let key = g.canonical_key();
        if let Some(hit) = self.hereditary.get(key) {
            return Ok(*hit);
        }
        let mut answer = self.unique_in_class(&DegreeSequence::of(g))?;
        if answer {
            let mut done: Vec<CanonicalKey> = Vec::new();
            for v in 0..g.order() {
                let h = g.delete_vertex(v);
                if done.contains(h.canonical_key()) {
                    continue;
                }
                done.push(h.canonical_key().clone());
                if !self.hereditary_member(&h)? {
                    answer = false;
                    break;
                }
            }
        }
        self.hereditary.insert(key.clone(), answer);
        Ok(answer)
    }
}

/// See [`UnigraphOracle::is_unigraph`].
pub fn is_a_unigraph(g: &Graph, spec: ClassSpec) -> Result<bool> {
    UnigraphOracle::new(spec).is_unigraph(g)
}

/// Whether `g` is the only realization of its degree sequence.
pub fn is_unigraph(g: &Graph) -> Result<bool> {
    is_a_unigraph(g, ClassSpec::All)
}

/// See [`UnigraphOracle::is_hereditary`].
pub fn is_hereditary_a_unigraph(g: &Graph, spec: ClassSpec) -> Result<bool> {
    UnigraphOracle::new(spec).is_hereditary(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g6(s: &str) -> Graph {
        s.parse().unwrap()
    }

    #[test]
    fn p5_relative_to_classes() {
        let p5 = Graph::path(5).unwrap();
        assert!(is_a_unigraph(&p5, ClassSpec::Bipartite).unwrap());
        assert!(!is_a_unigraph(&p5, ClassSpec::KPartite(3)).unwrap());
        assert!(!is_unigraph(&p5).unwrap());
    }

    #[test]
    fn non_members_are_errors() {
        let k3 = Graph::complete(3).unwrap();
        assert!(matches!(is_a_unigraph(&k3, ClassSpec::Bipartite), Err(Error::NotMember(_))));
        assert!(!is_hereditary_a_unigraph(&k3, ClassSpec::Bipartite).unwrap());
    }

    #[test]
    fn plain_unigraphs() {
        let p3 = Graph::path(3).unwrap();
        let two_p3 = p3.disjoint_union(&p3).unwrap();
        assert!(!is_unigraph(&two_p3).unwrap());
        for n in 0..6 {
            assert!(is_unigraph(&Graph::complete(n).unwrap()).unwrap());
        }
        let d: DegreeSequence = "3^5,1".parse().unwrap();
        assert!(is_unigraph(&d.realize().unwrap()).unwrap());
    }

    #[test]
    fn hereditary() {
        for a in 0..=3 {
            for b in 0..=3 {
                let k = Graph::complete_bipartite(a, b).unwrap();
                assert!(is_hereditary_a_unigraph(&k, ClassSpec::Bipartite).unwrap(), "K{a},{b}");
            }
        }
        // the realization of 3^5,1 is a unigraph but not a hereditary one
        let d: DegreeSequence = "3^5,1".parse().unwrap();
        let g = d.realize().unwrap();
        assert!(!is_hereditary_a_unigraph(&g, ClassSpec::All).unwrap());
        assert!(is_hereditary_a_unigraph(&g6("?"), ClassSpec::All).unwrap());
    }

    #[test]
    fn oracle_counts() {
        let oracle = UnigraphOracle::new(ClassSpec::Bipartite);
        let d: DegreeSequence = "2,2,2,1,1".parse().unwrap();
        assert_eq!(oracle.count_member_realizations(&d, usize::MAX).unwrap(), 1);
        let all = UnigraphOracle::new(ClassSpec::All);
        assert_eq!(all.count_member_realizations(&d, usize::MAX).unwrap(), 2);
    }
}
