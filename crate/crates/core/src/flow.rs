//! Dinic max-flow over small integer-capacity networks.
//!
//! Used by the exact density and orientation routines. Deterministic:
//! augmenting order follows edge insertion order.

pub(crate) const INF: i64 = i64::MAX / 4;

pub(crate) struct FlowNetwork {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<i64>,
    n: usize,
}

const NONE: usize = usize::MAX;

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork { head: vec![NONE; n], next: Vec::new(), to: Vec::new(), cap: Vec::new(), n }
    }

    /// Adds a directed edge `u -> v` with capacity `cap` and returns its id.
    /// A reverse edge with capacity 0 is stored at `id ^ 1`.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64) -> usize {
        let id = self.to.len();
        self.to.push(v);
        self.cap.push(cap);
        self.next.push(self.head[u]);
        self.head[u] = id;
        self.to.push(u);
        self.cap.push(0);
        self.next.push(self.head[v]);
        self.head[v] = id + 1;
        id
    }

    /// Remaining capacity of edge `id` (flow sent = original cap - remaining).
    pub fn residual(&self, id: usize) -> i64 {
        self.cap[id]
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0i64;
        loop {
            let level = self.bfs_levels(s, t);
            if level[t] == usize::MAX {
                return flow;
            }
            let mut iter = self.head.clone();
            loop {
                let pushed = self.dfs(s, t, INF, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
    }

    fn bfs_levels(&self, s: usize, t: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        level[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if u == t {
                continue;
            }
            let mut e = self.head[u];
            while e != NONE {
                let v = self.to[e];
                if self.cap[e] > 0 && level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
                e = self.next[e];
            }
        }
        level
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i64, level: &[usize], iter: &mut [usize]) -> i64 {
        if u == t {
            return limit;
        }
        while iter[u] != NONE {
            let e = iter[u];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[e]), level, iter);
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            iter[u] = self.next[e];
        }
        0
    }

    /// Vertices reachable from `s` in the residual network (the source side
    /// of a minimum cut, once `max_flow` has run).
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            let mut e = self.head[u];
            while e != NONE {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
                e = self.next[e];
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let mut net = FlowNetwork::new(2);
        net.add_edge(0, 1, 5);
        assert_eq!(net.max_flow(0, 1), 5);
    }

    #[test]
    fn diamond() {
        // s=0, t=3; two disjoint paths of capacity 3 and 2
        let mut net = FlowNetwork::new(4);
        net.add_edge(0, 1, 3);
        net.add_edge(1, 3, 3);
        net.add_edge(0, 2, 2);
        net.add_edge(2, 3, 2);
        assert_eq!(net.max_flow(0, 3), 5);
    }

    #[test]
    fn bottleneck_with_cross_edge() {
        let mut net = FlowNetwork::new(4);
        net.add_edge(0, 1, 1);
        net.add_edge(0, 2, 1);
        net.add_edge(1, 2, 1);
        net.add_edge(1, 3, 1);
        net.add_edge(2, 3, 1);
        assert_eq!(net.max_flow(0, 3), 2);
        let side = net.source_side(0);
        assert!(side[0]);
        assert!(!side[3]);
    }
}
