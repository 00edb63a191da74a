//! Exact integral max-flow (Dinic) with deterministic minimum cuts.
//!
//! Two cuts are exposed: the source side reachable in the final residual
//! graph, which is the unique inclusion-minimal minimum cut, and its
//! dual, the complement of the set that can still reach the sink, which is
//! the unique inclusion-maximal one. Callers needing an "infinite"
//! capacity should pass a sentinel exceeding the sum of their finite
//! capacities; integrality keeps such arcs out of every minimum cut.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i128,
}

/// Directed flow network with integer capacities.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
}

impl FlowNetwork {
    pub fn new(n: usize, source: usize, sink: usize) -> Self {
        assert!(source < n && sink < n && source != sink);
        FlowNetwork { arcs: Vec::new(), adj: vec![Vec::new(); n], source, sink }
    }

    /// Adds an arc and its zero-capacity reverse.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i128) {
        assert!(cap >= 0, "capacities must be nonnegative");
        assert!(from < self.adj.len() && to < self.adj.len());
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.adj[from].push(id);
        self.adj[to].push(id ^ 1);
    }

    /// Runs Dinic to completion and returns the max-flow value.
    pub fn max_flow(&mut self) -> i128 {
        let n = self.adj.len();
        let mut total = 0;
        let mut level = vec![usize::MAX; n];
        let mut iter = vec![0usize; n];
        loop {
            level.fill(usize::MAX);
            level[self.source] = 0;
            let mut queue = VecDeque::from([self.source]);
            while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let arc = &self.arcs[a];
                    if arc.cap > 0 && level[arc.to] == usize::MAX {
                        level[arc.to] = level[u] + 1;
                        queue.push_back(arc.to);
                    }
                }
            }
            if level[self.sink] == usize::MAX {
                return total;
            }
            iter.fill(0);
            loop {
                let pushed = self.dfs(self.source, i128::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn dfs(&mut self, u: usize, limit: i128, level: &[usize], iter: &mut [usize]) -> i128 {
        if u == self.sink {
            return limit;
        }
        while iter[u] < self.adj[u].len() {
            let a = self.adj[u][iter[u]];
            let (to, cap) = (self.arcs[a].to, self.arcs[a].cap);
            if cap > 0 && level[to] == level[u] + 1 {
                let pushed = self.dfs(to, limit.min(cap), level, iter);
                if pushed > 0 {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
            iter[u] += 1;
        }
        0
    }

    /// Nodes reachable from the source in the residual graph. Call after
    /// `max_flow`; this is the canonical (inclusion-minimal) minimum cut.
    pub fn min_cut_source_side(&self) -> Vec<bool> {
        let n = self.adj.len();
        let mut side = vec![false; n];
        side[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && !side[arc.to] {
                    side[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        side
    }

    /// Complement of the nodes that can reach the sink in the residual
    /// graph: the inclusion-maximal minimum cut's source side.
    pub fn max_cut_source_side(&self) -> Vec<bool> {
        let n = self.adj.len();
        let mut to_sink = vec![false; n];
        to_sink[self.sink] = true;
        // u reaches the sink iff some residual arc u->v has v reaching it;
        // walk arcs backward from the sink.
        let mut queue = VecDeque::from([self.sink]);
        while let Some(v) = queue.pop_front() {
            for &a in &self.adj[v] {
                // a^1 is an arc u->v; it is residual iff its cap > 0
                let u = self.arcs[a].to;
                if self.arcs[a ^ 1].cap > 0 && !to_sink[u] {
                    to_sink[u] = true;
                    queue.push_back(u);
                }
            }
        }
        to_sink.iter().map(|&r| !r).collect()
    }
}
