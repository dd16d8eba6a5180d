//! Seeded randomness with a fixed, language-independent contract.
//!
//! Every randomized routine in this crate draws from the splitmix64 stream
//! below, so a run is reproducible from its seed alone and the stream can
//! be re-implemented anywhere from the recurrence:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output = z ^ (z >> 31)
//! ```
//!
//! all in wrapping 64-bit arithmetic. Bounded draws use `next() % bound`
//! and shuffles are Fisher-Yates from the last index down.

use crate::digraph::Digraph;
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..bound` (`bound > 0`).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Fisher-Yates shuffle, last index down.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }

    /// Bernoulli draw with probability `numer / denom`.
    pub fn chance(&mut self, numer: u64, denom: u64) -> bool {
        self.next_below(denom) < numer
    }
}

/// G(n, p) with p = `prob_permille`/1000, edges drawn in ascending order.
pub fn random_graph(n: usize, prob_permille: u64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.chance(prob_permille, 1000) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// Uniform graph with exactly `m` edges (capped at the maximum possible).
pub fn random_graph_with_edges(n: usize, m: usize, rng: &mut SplitMix64) -> Graph {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    rng.shuffle(&mut pairs);
    pairs.truncate(m.min(pairs.len()));
    Graph::from_edges(n, pairs).expect("generated edges are valid")
}

/// Random digraph: each ordered pair (u, v), u != v, becomes an arc with
/// probability `prob_permille`/1000.
pub fn random_digraph(n: usize, prob_permille: u64, rng: &mut SplitMix64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.chance(prob_permille, 1000) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("generated arcs are valid")
}
