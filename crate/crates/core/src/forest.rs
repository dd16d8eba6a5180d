//! Rooted forests and their closures.
//!
//! The closure of a rooted forest joins every strict ancestor-descendant
//! pair; a graph has tree-depth at most `h` exactly when it is a subgraph of
//! the closure of a forest of height `h`.

use thiserror::Error;

use crate::graph::Graph;

/// A rooted forest on vertices `0..n`, stored as a parent mapping.
/// Roots have no parent. Height counts vertices, so a root has height 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedForest {
    parent: Vec<Option<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ForestError {
    #[error("parent of {vertex} is {parent}, out of range (n = {n})")]
    ParentOutOfRange { vertex: usize, parent: usize, n: usize },
    #[error("vertex {0} is its own parent")]
    SelfParent(usize),
    #[error("parent relation contains a cycle through vertex {0}")]
    Cycle(usize),
}

impl RootedForest {
    /// Validates a parent mapping: in-range, no self loops, acyclic.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self, ForestError> {
        let n = parent.len();
        for (v, p) in parent.iter().enumerate() {
            match p {
                Some(p) if *p >= n => {
                    return Err(ForestError::ParentOutOfRange { vertex: v, parent: *p, n })
                }
                Some(p) if *p == v => return Err(ForestError::SelfParent(v)),
                _ => {}
            }
        }
        // walk each chain; a chain longer than n vertices means a cycle
        for start in 0..n {
            let mut cur = start;
            let mut steps = 0;
            while let Some(p) = parent[cur] {
                cur = p;
                steps += 1;
                if steps > n {
                    return Err(ForestError::Cycle(start));
                }
            }
        }
        Ok(RootedForest { parent })
    }

    pub fn empty() -> Self {
        RootedForest { parent: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.parent.len()).filter(|&v| self.parent[v].is_none()).collect()
    }

    /// Number of vertices on the root-to-`v` path, including both ends.
    pub fn height_of(&self, v: usize) -> usize {
        let mut h = 1;
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            h += 1;
            cur = p;
        }
        h
    }

    /// Height of the forest: maximum vertex height, 0 if empty.
    pub fn height(&self) -> usize {
        (0..self.parent.len()).map(|v| self.height_of(v)).max().unwrap_or(0)
    }

    /// Strict ancestors of `v`, nearest first.
    pub fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            out.push(p);
            cur = p;
        }
        out
    }
}

/// The closure of a rooted forest: an edge for every strict
/// ancestor-descendant pair.
pub fn closure(forest: &RootedForest) -> Graph {
    let n = forest.vertex_count();
    let mut edges = Vec::new();
    for v in 0..n {
        for a in forest.ancestors(v) {
            edges.push((a, v));
        }
    }
    Graph::from_edges(n, edges).expect("ancestor pairs are loop-free")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_closure_is_complete() {
        // 0 -> 1 -> 2 rooted at 0
        let f = RootedForest::from_parents(vec![None, Some(0), Some(1)]).unwrap();
        let g = closure(&f);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(f.height(), 3);
    }

    #[test]
    fn star_closure_is_star() {
        let f = RootedForest::from_parents(vec![None, Some(0), Some(0), Some(0)]).unwrap();
        let g = closure(&f);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(0, 3));
        assert_eq!(f.height(), 2);
    }

    #[test]
    fn isolated_roots_have_empty_closure() {
        let f = RootedForest::from_parents(vec![None, None, None]).unwrap();
        assert_eq!(closure(&f).edge_count(), 0);
        assert_eq!(f.height(), 1);
        assert_eq!(f.roots(), vec![0, 1, 2]);
    }

    #[test]
    fn closure_edge_count_matches_heights() {
        let f = RootedForest::from_parents(vec![None, Some(0), Some(1), Some(1), None]).unwrap();
        let expected: usize = (0..5).map(|v| f.height_of(v) - 1).sum();
        assert_eq!(closure(&f).edge_count(), expected);
    }

    #[test]
    fn rejects_cycles_and_self_parents() {
        assert!(matches!(
            RootedForest::from_parents(vec![Some(1), Some(0)]),
            Err(ForestError::Cycle(_))
        ));
        assert_eq!(RootedForest::from_parents(vec![Some(0)]), Err(ForestError::SelfParent(0)));
    }
}
