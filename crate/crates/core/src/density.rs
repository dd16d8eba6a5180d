//! Exact maximum subgraph density, bounded-indegree orientations,
//! degeneracy orderings and greedy coloring.
//!
//! The density of a graph is `|E|/|V|`; the maximum over all nonempty
//! subgraphs equals the smallest `k` (fractionally) for which an
//! orientation with maximum indegree `k` exists. Everything here is exact
//! rational arithmetic — no floating point anywhere.

use thiserror::Error;

use crate::coloring::Coloring;
use crate::digraph::Digraph;
use crate::flow::{FlowNetwork, INF};
use crate::graph::Graph;
use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DensityError {
    #[error("density of an empty graph is undefined")]
    EmptyGraph,
    #[error("order is not a permutation of the vertex set")]
    NotAPermutation,
}

/// Exact maximum of `|E(H)|/|V(H)|` over nonempty subgraphs `H`.
///
/// The maximizer can always be taken induced, so this searches induced
/// subgraphs only. Implemented by iterated min-cut improvement: test
/// whether any subgraph beats the current candidate density via a flow
/// network, extract the maximizing vertex set from the cut, repeat until
/// no improvement exists. Every candidate is an achieved subgraph density,
/// so numerators and denominators stay small.
pub fn max_density(g: &Graph) -> Result<Rational, DensityError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(DensityError::EmptyGraph);
    }
    let m = g.edge_count();
    if m == 0 {
        return Ok(Rational::zero());
    }
    let mut best = Rational::new(m as i64, n as i64);
    loop {
        match denser_subgraph(g, &best) {
            Some(verts) => {
                let improved = subgraph_density(g, &verts);
                debug_assert!(improved > best);
                best = improved;
            }
            None => return Ok(best),
        }
    }
}

fn subgraph_density(g: &Graph, verts: &[usize]) -> Rational {
    let inside: std::collections::BTreeSet<usize> = verts.iter().copied().collect();
    let edges = g
        .edges()
        .filter(|(u, v)| inside.contains(u) && inside.contains(v))
        .count();
    Rational::new(edges as i64, verts.len() as i64)
}

/// Finds a vertex set inducing density strictly above `target`, if any.
///
/// Network (capacities scaled by the target's denominator q, target = a/q):
/// source -> one node per edge (cap q), edge node -> both endpoints
/// (cap inf), vertex -> sink (cap a). The min cut equals
/// `q*m - max_S (q*|E(S)| - a*|S|)`, so the max flow is below `q*m` exactly
/// when some set S has density above a/q; that S is the source side.
fn denser_subgraph(g: &Graph, target: &Rational) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let a = target.numerator();
    let q = target.denominator();
    // nodes: 0 = source, 1..=m edge nodes, m+1..=m+n vertex nodes, m+n+1 sink
    let source = 0;
    let sink = m + n + 1;
    let mut net = FlowNetwork::new(m + n + 2);
    for (i, (u, v)) in g.edges().enumerate() {
        net.add_edge(source, 1 + i, q);
        net.add_edge(1 + i, m + 1 + u, INF);
        net.add_edge(1 + i, m + 1 + v, INF);
    }
    for v in 0..n {
        net.add_edge(m + 1 + v, sink, a);
    }
    let flow = net.max_flow(source, sink);
    if flow >= q * m as i64 {
        return None;
    }
    let side = net.source_side(source);
    let verts: Vec<usize> = (0..n).filter(|&v| side[m + 1 + v]).collect();
    debug_assert!(!verts.is_empty());
    Some(verts)
}

/// Orients every edge so that the maximum indegree equals
/// `ceil(max_density(g))`, the smallest feasible value.
///
/// Edges are assigned to heads through a flow network with per-vertex
/// capacity `k`; construction order is ascending edge order, which makes
/// the result deterministic.
pub fn orient_min_indegree(g: &Graph) -> Digraph {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return Digraph::new(n);
    }
    let k = max_density(g).expect("graph has edges, hence vertices").ceil();
    let source = 0;
    let sink = m + n + 1;
    let mut net = FlowNetwork::new(m + n + 2);
    let mut choice_edges = Vec::with_capacity(m);
    for (i, (u, v)) in g.edges().enumerate() {
        net.add_edge(source, 1 + i, 1);
        // lower endpoint first, so ties in the augmenting search lean low
        let to_min = net.add_edge(1 + i, m + 1 + u.min(v), 1);
        let to_max = net.add_edge(1 + i, m + 1 + u.max(v), 1);
        choice_edges.push((u.min(v), u.max(v), to_min, to_max));
    }
    for v in 0..n {
        net.add_edge(m + 1 + v, sink, k);
    }
    let flow = net.max_flow(source, sink);
    assert_eq!(flow, m as i64, "orientation with indegree {k} must exist");
    let mut arcs = Vec::with_capacity(m);
    for &(lo, hi, to_lo, _to_hi) in &choice_edges {
        if net.residual(to_lo) == 0 {
            arcs.push((hi, lo)); // head = lo
        } else {
            arcs.push((lo, hi)); // head = hi
        }
    }
    let oriented = Digraph::from_arcs(n, arcs).expect("one arc per edge");
    // the flow caps indegrees at k, and some vertex must reach the ceiling
    debug_assert_eq!(oriented.max_indegree() as i64, k);
    oriented
}

/// Degeneracy ordering by repeated minimum-degree removal (lowest id on
/// ties), together with the degeneracy. Each vertex has at most
/// `degeneracy` neighbors among the vertices that come later in the order.
pub fn degeneracy_order(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        degeneracy = degeneracy.max(degree[v]);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    (order, degeneracy)
}

/// First-fit coloring along `order`: each vertex receives the smallest
/// color not used by an already-colored neighbor.
pub fn greedy_color(g: &Graph, order: &[usize]) -> Result<Coloring, DensityError> {
    let n = g.vertex_count();
    if order.len() != n {
        return Err(DensityError::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(DensityError::NotAPermutation);
        }
        seen[v] = true;
    }
    let mut colors = vec![usize::MAX; n];
    for &v in order {
        let mut used: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| colors[w] != usize::MAX)
            .map(|&w| colors[w])
            .collect();
        used.sort_unstable();
        used.dedup();
        let mut c = 0;
        for u in used {
            if u == c {
                c += 1;
            } else if u > c {
                break;
            }
        }
        colors[v] = c;
    }
    Ok(Coloring::new(colors))
}

/// Greedy coloring along the reverse of a degeneracy order, which keeps the
/// palette within `degeneracy + 1 <= floor(2 * max_density) + 1` colors:
/// when a vertex is colored, only its at-most-`degeneracy` later-order
/// neighbors are colored already.
pub fn color_by_degeneracy(g: &Graph) -> Coloring {
    let (mut order, _) = degeneracy_order(g);
    order.reverse();
    greedy_color(g, &order).expect("order is a permutation")
}

/// True if no two adjacent vertices share a color.
pub fn is_proper_coloring(g: &Graph, coloring: &Coloring) -> bool {
    g.edges().all(|(u, v)| coloring.color(u) != coloring.color(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn density_of_small_graphs() {
        assert_eq!(max_density(&complete(4)).unwrap(), Rational::new(3, 2));
        assert_eq!(max_density(&cycle(5)).unwrap(), Rational::new(1, 1));
        assert_eq!(max_density(&path(4)).unwrap(), Rational::new(3, 4));
        assert_eq!(max_density(&Graph::new(3)).unwrap(), Rational::zero());
        assert_eq!(max_density(&Graph::new(0)), Err(DensityError::EmptyGraph));
    }

    #[test]
    fn density_sees_dense_induced_part() {
        // K_4 with a long pendant path: the whole graph is sparser than K_4
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for i in 3..9 {
            edges.push((i, i + 1));
        }
        let g = Graph::from_edges(10, edges).unwrap();
        assert_eq!(max_density(&g).unwrap(), Rational::new(3, 2));
    }

    #[test]
    fn petersen_density() {
        let outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        let spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)];
        let inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)];
        let g = Graph::from_edges(10, outer.into_iter().chain(spokes).chain(inner)).unwrap();
        // frozen from the exhaustive induced-subgraph oracle
        assert_eq!(max_density(&g).unwrap(), Rational::new(3, 2));
    }

    #[test]
    fn orientation_meets_ceiling() {
        let tree = path(6);
        let d = orient_min_indegree(&tree);
        assert_eq!(d.max_indegree(), 1);
        assert_eq!(d.underlying_graph(), tree);

        let k4 = complete(4);
        let d = orient_min_indegree(&k4);
        assert_eq!(d.max_indegree(), 2);
        assert_eq!(d.underlying_graph(), k4);

        let c6 = cycle(6);
        let d = orient_min_indegree(&c6);
        assert_eq!(d.max_indegree(), 1);
        assert_eq!(d.underlying_graph(), c6);
    }

    #[test]
    fn orientation_of_edgeless_graph() {
        let d = orient_min_indegree(&Graph::new(4));
        assert_eq!(d.arc_count(), 0);
        assert_eq!(d.max_indegree(), 0);
    }

    #[test]
    fn degeneracy_of_small_graphs() {
        assert_eq!(degeneracy_order(&path(4)).1, 1);
        assert_eq!(degeneracy_order(&complete(4)).1, 3);
        assert_eq!(degeneracy_order(&cycle(4)).1, 2);
    }

    #[test]
    fn degeneracy_order_bounds_later_neighbors() {
        let g = complete(4);
        let (order, d) = degeneracy_order(&g);
        let pos: Vec<usize> = {
            let mut p = vec![0; 4];
            for (i, &v) in order.iter().enumerate() {
                p[v] = i;
            }
            p
        };
        for &v in &order {
            let later = g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count();
            assert!(later <= d);
        }
    }

    #[test]
    fn greedy_coloring_basics() {
        let edgeless = Graph::new(5);
        let c = greedy_color(&edgeless, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.palette_size(), 1);

        let k4 = complete(4);
        let c = greedy_color(&k4, &[3, 1, 0, 2]).unwrap();
        assert_eq!(c.palette_size(), 4);
        assert!(is_proper_coloring(&k4, &c));

        let c5 = cycle(5);
        let c = color_by_degeneracy(&c5);
        assert!(is_proper_coloring(&c5, &c));
        assert!(c.palette_size() <= 3);
    }

    #[test]
    fn greedy_rejects_non_permutations() {
        let g = path(3);
        assert_eq!(greedy_color(&g, &[0, 1]), Err(DensityError::NotAPermutation));
        assert_eq!(greedy_color(&g, &[0, 1, 1]), Err(DensityError::NotAPermutation));
        assert_eq!(greedy_color(&g, &[0, 1, 5]), Err(DensityError::NotAPermutation));
    }

    #[test]
    fn degeneracy_pairing_respects_density_bound() {
        // double star: greedy along the *reverse* removal order stays within
        // floor(2 * density) + 1; the forward order would not
        let g = Graph::from_edges(
            8,
            [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)],
        )
        .unwrap();
        let c = color_by_degeneracy(&g);
        assert!(is_proper_coloring(&g, &c));
        let bound = (max_density(&g).unwrap().mul(&Rational::from_integer(2))).floor() as usize + 1;
        assert!(c.palette_size() <= bound, "palette {} > bound {}", c.palette_size(), bound);
    }
}
