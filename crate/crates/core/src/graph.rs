//! Simple undirected graphs: construction, parsing, products, traversal.
//!
//! Vertices are dense 0-based integers. Graphs are immutable after
//! construction, so they can be shared freely between verifiers and
//! worker threads.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

/// A loopless simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge {0}-{0} is not allowed")]
    Loop(usize),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("lexicographic product requires a factor of at least 1")]
    EmptyProductFactor,
    #[error("ball is empty")]
    EmptyBall,
    #[error("ball does not induce a connected subgraph")]
    DisconnectedBall,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed input: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: loop edge {vertex}-{vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of declared range (n = {n})")]
    OutOfRange { line: usize, vertex: usize, n: usize },
}

/// Supported input encodings for [`parse_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// `# comment`, optional `n <count>` header, then `u v` per line, 0-based.
    EdgeList,
    /// DIMACS `.col`: `c` comments, `p edge <n> <m>` header, `e u v` lines, 1-based.
    Dimacs,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new(), adjacency: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &set {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: set, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Per-vertex neighbor bitmasks; only valid for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    /// The subgraph induced by `vertices` (deduplicated), relabeled to
    /// `0..k` in ascending order of original id. Returns the graph and the
    /// map from new ids back to original ids.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let keep: BTreeSet<usize> = vertices.iter().copied().collect();
        let back: Vec<usize> = keep.iter().copied().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in back.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| keep.contains(u) && keep.contains(v))
            .map(|&(u, v)| (index[u], index[v]));
        let g = Graph::from_edges(back.len(), edges).expect("induced subgraph is valid");
        (g, back)
    }

    /// Canonical edge-list serialization; `parse_graph` of the output
    /// reproduces the graph exactly, isolated vertices included.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u, v);
        }
        out
    }
}

/// Parses a graph from text in the given format.
///
/// Edge lists take `#` comments, an optional leading `n <count>` declaration
/// (for isolated vertices), and `u v` data lines with 0-based ids. DIMACS
/// input is 1-based and shifted down on ingest.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut max_seen: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let first = parts.next().unwrap();
        if first == "n" {
            let count = parts
                .next()
                .ok_or_else(|| malformed(line_no, "expected a count after 'n'"))?
                .parse::<usize>()
                .map_err(|_| malformed(line_no, "count is not a non-negative integer"))?;
            if parts.next().is_some() {
                return Err(malformed(line_no, "trailing tokens after vertex count"));
            }
            declared = Some(count);
            continue;
        }
        let u = first
            .parse::<usize>()
            .map_err(|_| malformed(line_no, "endpoint is not a non-negative integer"))?;
        let v = parts
            .next()
            .ok_or_else(|| malformed(line_no, "expected two endpoints"))?
            .parse::<usize>()
            .map_err(|_| malformed(line_no, "endpoint is not a non-negative integer"))?;
        if parts.next().is_some() {
            return Err(malformed(line_no, "trailing tokens after edge"));
        }
        if u == v {
            return Err(ParseError::Loop { line: line_no, vertex: u });
        }
        max_seen = Some(max_seen.map_or(u.max(v), |m| m.max(u.max(v))));
        edges.push((u, v, line_no));
    }
    let n = match declared {
        Some(n) => n,
        None => max_seen.map_or(0, |m| m + 1),
    };
    for &(u, v, line) in &edges {
        let w = u.max(v);
        if w >= n {
            return Err(ParseError::OutOfRange { line, vertex: w, n });
        }
    }
    Ok(Graph::from_edges(n, edges.iter().map(|&(u, v, _)| (u, v))).expect("validated above"))
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts[0] {
            "p" => {
                if parts.len() < 4 || parts[1] != "edge" {
                    return Err(malformed(line_no, "expected 'p edge <n> <m>'"));
                }
                let count = parts[2]
                    .parse::<usize>()
                    .map_err(|_| malformed(line_no, "vertex count is not an integer"))?;
                n = Some(count);
            }
            "e" => {
                if parts.len() != 3 {
                    return Err(malformed(line_no, "expected 'e <u> <v>'"));
                }
                let n = n.ok_or_else(|| malformed(line_no, "edge before 'p' header"))?;
                let u = parse_dimacs_vertex(parts[1], line_no, n)?;
                let v = parse_dimacs_vertex(parts[2], line_no, n)?;
                if u == v {
                    return Err(ParseError::Loop { line: line_no, vertex: u });
                }
                edges.push((u, v));
            }
            _ => return Err(malformed(line_no, "unknown record type")),
        }
    }
    let n = n.ok_or_else(|| malformed(0, "missing 'p edge' header"))?;
    Ok(Graph::from_edges(n, edges).expect("validated above"))
}

fn parse_dimacs_vertex(token: &str, line: usize, n: usize) -> Result<usize, ParseError> {
    let id = token
        .parse::<usize>()
        .map_err(|_| malformed(line, "endpoint is not a positive integer"))?;
    if id == 0 || id > n {
        return Err(ParseError::OutOfRange { line, vertex: id, n });
    }
    Ok(id - 1)
}

fn malformed(line: usize, message: &str) -> ParseError {
    ParseError::Malformed { line, message: message.to_string() }
}

/// Lexicographic product with a complete graph: every vertex of `g` becomes
/// a clique of size `c`, adjacency inherited between all copies. Vertex
/// `(x, i)` is flattened to id `x * c + i`.
pub fn lex_product(g: &Graph, c: usize) -> Result<Graph, GraphError> {
    if c == 0 {
        return Err(GraphError::EmptyProductFactor);
    }
    let n = g.vertex_count() * c;
    let mut edges = Vec::new();
    for (x, y) in g.edges() {
        for i in 0..c {
            for j in 0..c {
                edges.push((x * c + i, y * c + j));
            }
        }
    }
    for x in 0..g.vertex_count() {
        for i in 0..c {
            for j in (i + 1)..c {
                edges.push((x * c + i, x * c + j));
            }
        }
    }
    Ok(Graph::from_edges(n, edges).expect("product edges are valid"))
}

/// Connected components as sorted vertex lists, ordered by minimum vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.vertex_count()];
    let mut components = Vec::new();
    for start in 0..g.vertex_count() {
        if seen[start] {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([start]);
        seen[start] = true;
        let mut comp = vec![start];
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// Radius of the subgraph induced by `ball`, together with a center
/// attaining it (lowest id on ties). Distances are measured inside the
/// induced subgraph.
pub fn radius_and_center(g: &Graph, ball: &[usize]) -> Result<(usize, usize), GraphError> {
    if ball.is_empty() {
        return Err(GraphError::EmptyBall);
    }
    let members: BTreeSet<usize> = ball.iter().copied().collect();
    for &v in &members {
        if v >= g.vertex_count() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.vertex_count() });
        }
    }
    let mut best: Option<(usize, usize)> = None;
    for &r in &members {
        let mut dist = std::collections::BTreeMap::new();
        dist.insert(r, 0usize);
        let mut queue = std::collections::VecDeque::from([r]);
        let mut ecc = 0;
        while let Some(u) = queue.pop_front() {
            let d = dist[&u];
            ecc = ecc.max(d);
            for &v in g.neighbors(u) {
                if members.contains(&v) && !dist.contains_key(&v) {
                    dist.insert(v, d + 1);
                    queue.push_back(v);
                }
            }
        }
        if dist.len() != members.len() {
            return Err(GraphError::DisconnectedBall);
        }
        if best.map_or(true, |(r0, _)| ecc < r0) {
            best = Some((ecc, r));
        }
    }
    Ok(best.expect("ball is nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_edge_list() {
        let g = parse_graph("0 1\n1 2", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn parses_dimacs_one_based() {
        let g = parse_graph("p edge 4 3\ne 1 2\ne 2 3\ne 3 4", GraphFormat::Dimacs).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(2, 3));
    }

    #[test]
    fn rejects_loops() {
        assert!(matches!(
            parse_graph("0 0", GraphFormat::EdgeList),
            Err(ParseError::Loop { line: 1, vertex: 0 })
        ));
    }

    #[test]
    fn rejects_out_of_range_with_declared_count() {
        let err = parse_graph("n 2\n0 5", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, ParseError::OutOfRange { vertex: 5, n: 2, .. }));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = parse_graph("0 1\n1 0\n0 1", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn comments_and_isolated_vertices() {
        let g = parse_graph("# a path plus a spare vertex\nn 4\n0 1 # inline\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn serialization_round_trips() {
        let g = parse_graph("n 5\n0 1\n1 2\n3 4", GraphFormat::EdgeList).unwrap();
        let text = g.to_edge_list();
        let h = parse_graph(&text, GraphFormat::EdgeList).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn lex_product_of_k2_and_two_is_k4() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let g = lex_product(&k2, 2).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn lex_product_with_one_is_identity() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let g = lex_product(&p3, 1).unwrap();
        assert_eq!(g, p3);
    }

    #[test]
    fn lex_product_edge_count_matches_formula() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let g = lex_product(&p3, 2).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 4 * 2 + 3 * 1);
    }

    #[test]
    fn lex_product_rejects_zero() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(lex_product(&p3, 0), Err(GraphError::EmptyProductFactor));
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(connected_components(&g), vec![vec![0, 1, 2], vec![3, 4]]);
        let edgeless = Graph::new(3);
        assert_eq!(connected_components(&edgeless).len(), 3);
    }

    #[test]
    fn radius_of_cycle_and_path() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(radius_and_center(&c4, &[0, 1, 2, 3]).unwrap().0, 2);
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(radius_and_center(&p5, &[0, 1, 2, 3, 4]).unwrap(), (2, 2));
        assert_eq!(radius_and_center(&p5, &[3]).unwrap(), (0, 3));
    }

    #[test]
    fn radius_rejects_bad_balls() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(radius_and_center(&p3, &[]), Err(GraphError::EmptyBall));
        assert_eq!(radius_and_center(&p3, &[0, 2]), Err(GraphError::DisconnectedBall));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (sub, back) = p4.induced(&[1, 3, 2]);
        assert_eq!(back, vec![1, 2, 3]);
        assert_eq!(sub.edge_count(), 2);
        assert!(sub.has_edge(0, 1) && sub.has_edge(1, 2));
    }
}
