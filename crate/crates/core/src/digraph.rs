//! Loopless directed graphs. Both arc directions may coexist between a pair
//! of vertices; at most one arc per ordered pair.

use std::collections::BTreeSet;

use crate::graph::{Graph, GraphError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
    out_adjacency: Vec<Vec<usize>>,
    in_adjacency: Vec<Vec<usize>>,
    indegree: Vec<usize>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            arcs: BTreeSet::new(),
            out_adjacency: vec![Vec::new(); n],
            in_adjacency: vec![Vec::new(); n],
            indegree: vec![0; n],
        }
    }

    /// Builds a digraph from arcs `(tail, head)`. Duplicates collapse; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            set.insert((u, v));
        }
        let mut out_adjacency = vec![Vec::new(); n];
        let mut in_adjacency = vec![Vec::new(); n];
        let mut indegree = vec![0; n];
        for &(u, v) in &set {
            out_adjacency[u].push(v);
            in_adjacency[v].push(u);
            indegree[v] += 1;
        }
        for list in out_adjacency.iter_mut().chain(in_adjacency.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Digraph { n, arcs: set, out_adjacency, in_adjacency, indegree })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Heads of arcs leaving `v`, ascending.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adjacency[v]
    }

    /// Tails of arcs entering `v`, ascending.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adjacency[v]
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.indegree[v]
    }

    /// Maximum indegree over all vertices (0 for the empty digraph).
    pub fn max_indegree(&self) -> usize {
        self.indegree.iter().copied().max().unwrap_or(0)
    }

    /// True if every arc of `self` is an arc of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &Digraph) -> bool {
        self.n == other.n && self.arcs.is_subset(&other.arcs)
    }

    /// The simple undirected graph obtained by forgetting directions.
    pub fn underlying_graph(&self) -> Graph {
        Graph::from_edges(self.n, self.arcs.iter().map(|&(u, v)| (u, v)))
            .expect("arcs are loop-free and in range")
    }
}
