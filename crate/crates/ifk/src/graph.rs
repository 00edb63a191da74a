//! Simple undirected graphs with dense 0-based vertex ids, plus the
//! per-vertex precoloring states and the text file format.
//!
//! Graphs are immutable after construction; every edit returns a new value,
//! together with an id remapping where vertices are renumbered.

use std::collections::VecDeque;
use std::fmt;

use crate::error::Error;

/// Simple undirected graph. No self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Rejects loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        if u >= self.n {
            return Err(Error::BadVertex(u));
        }
        if v >= self.n {
            return Err(Error::BadVertex(v));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        match self.edges.binary_search(&(a, b)) {
            Ok(_) => return Err(Error::DuplicateEdge(a, b)),
            Err(pos) => self.edges.insert(pos, (a, b)),
        }
        let pos = self.adj[a].binary_search(&b).unwrap_err();
        self.adj[a].insert(pos, b);
        let pos = self.adj[b].binary_search(&a).unwrap_err();
        self.adj[b].insert(pos, a);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as (u, v) pairs with u < v, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&(a, b)).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Subgraph induced by `r` (duplicates ignored), plus the list of old
    /// ids: entry `i` of the returned vector is the old id of new vertex `i`.
    pub fn induced_subgraph(&self, r: &[usize]) -> Result<(Graph, Vec<usize>), Error> {
        let mut keep = vec![false; self.n];
        for &v in r {
            if v >= self.n {
                return Err(Error::BadVertex(v));
            }
            keep[v] = true;
        }
        let old_ids: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::new(old_ids.len());
        for &(u, v) in &self.edges {
            if keep[u] && keep[v] {
                g.add_edge(new_id[u], new_id[v]).expect("edges of a simple graph stay simple");
            }
        }
        Ok((g, old_ids))
    }

    /// Number of edges with both endpoints in `r` (duplicates in `r` ignored).
    pub fn induced_edge_count(&self, r: &[usize]) -> Result<usize, Error> {
        let mut keep = vec![false; self.n];
        for &v in r {
            if v >= self.n {
                return Err(Error::BadVertex(v));
            }
            keep[v] = true;
        }
        Ok(self.edges.iter().filter(|&&(u, v)| keep[u] && keep[v]).count())
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, Error> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let edges: Vec<_> = self.edges.iter().copied().filter(|&e| e != (a, b)).collect();
        Graph::from_edges(self.n, &edges)
    }

    /// Deletes `v` and its incident edges. Remaining vertices are renumbered
    /// densely; entry `i` of the returned vector is the old id of new vertex `i`.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>), Error> {
        if v >= self.n {
            return Err(Error::BadVertex(v));
        }
        let r: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&r)
    }

    /// Length of a shortest cycle, or None for forests.
    ///
    /// BFS from every vertex; the cycle through any vertex of a shortest
    /// cycle is found exactly when that vertex is the BFS root.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::new();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if w != parent[u] {
                        let cycle = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// Connected components, each sorted ascending, ordered by smallest
    /// contained id.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// Precoloring state of a vertex: uncolored with j fake F-neighbors,
/// colored F with weight j (itself plus j-1 fakes), or colored I.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexState {
    U(usize),
    F(usize),
    I,
}

impl VertexState {
    /// Bounds for a given k: U(j) needs j <= k-1, F(j) needs 1 <= j <= k.
    pub fn check(self, k: usize) -> Result<(), Error> {
        let ok = match self {
            VertexState::U(j) => j < k,
            VertexState::F(j) => 1 <= j && j <= k,
            VertexState::I => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadState(self.to_string(), k))
        }
    }

    pub fn is_uncolored(self) -> bool {
        matches!(self, VertexState::U(_))
    }
}

impl fmt::Display for VertexState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexState::U(j) => write!(f, "U{j}"),
            VertexState::F(j) => write!(f, "F{j}"),
            VertexState::I => write!(f, "I"),
        }
    }
}

/// A graph together with k and a per-vertex precoloring state.
///
/// The default state is U(0); a graph where every vertex is U(0) is called
/// trivially precolored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecoloredGraph {
    graph: Graph,
    states: Vec<VertexState>,
    k: usize,
}

impl PrecoloredGraph {
    pub fn new(graph: Graph, states: Vec<VertexState>, k: usize) -> Result<Self, Error> {
        if k < 2 {
            return Err(Error::InvalidK(k));
        }
        assert_eq!(states.len(), graph.vertex_count(), "one state per vertex");
        for &s in &states {
            s.check(k)?;
        }
        Ok(PrecoloredGraph { graph, states, k })
    }

    /// All vertices U(0).
    pub fn trivial(graph: Graph, k: usize) -> Result<Self, Error> {
        let states = vec![VertexState::U(0); graph.vertex_count()];
        PrecoloredGraph::new(graph, states, k)
    }

    /// Skips the state bounds check. The criticality checker uses this to
    /// build the F(0) pseudo-state when decrementing an F(1) vertex.
    pub(crate) fn new_unchecked(graph: Graph, states: Vec<VertexState>, k: usize) -> Self {
        assert_eq!(states.len(), graph.vertex_count());
        PrecoloredGraph { graph, states, k }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn state(&self, v: usize) -> VertexState {
        self.states[v]
    }

    pub fn states(&self) -> &[VertexState] {
        &self.states
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Copy with the state of `v` replaced.
    pub fn with_state(&self, v: usize, s: VertexState) -> Result<Self, Error> {
        if v >= self.vertex_count() {
            return Err(Error::BadVertex(v));
        }
        s.check(self.k)?;
        let mut states = self.states.clone();
        states[v] = s;
        Ok(PrecoloredGraph { graph: self.graph.clone(), states, k: self.k })
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, Error> {
        let graph = self.graph.delete_edge(u, v)?;
        Ok(PrecoloredGraph { graph, states: self.states.clone(), k: self.k })
    }

    /// Deletes a vertex; states of the survivors are transported through the
    /// renumbering, which is returned as in [`Graph::delete_vertex`].
    pub fn delete_vertex(&self, v: usize) -> Result<(Self, Vec<usize>), Error> {
        let (graph, old_ids) = self.graph.delete_vertex(v)?;
        let states = old_ids.iter().map(|&o| self.states[o]).collect();
        Ok((PrecoloredGraph { graph, states, k: self.k }, old_ids))
    }

    pub fn induced_subgraph(&self, r: &[usize]) -> Result<(Self, Vec<usize>), Error> {
        let (graph, old_ids) = self.graph.induced_subgraph(r)?;
        let states = old_ids.iter().map(|&o| self.states[o]).collect();
        Ok((PrecoloredGraph { graph, states, k: self.k }, old_ids))
    }

    /// Parses the line-oriented text format.
    ///
    /// `#` starts a comment. The first directive must be `k <int>`, then
    /// `n <int>`, then `e <u> <v>` per edge and optional `pre <v> U <j>`,
    /// `pre <v> F <j>`, `pre <v> I` lines. Unknown directives are errors.
    /// Two adjacent vertices both precolored I are rejected here, so every
    /// parsed graph is expandable.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut k: Option<usize> = None;
        let mut n: Option<usize> = None;
        let mut graph: Option<Graph> = None;
        let mut states: Vec<VertexState> = Vec::new();
        let mut pre_lines: Vec<usize> = Vec::new();
        let mut last_line = 0;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let directive = parts.next().expect("nonempty line has a token");
            let args: Vec<&str> = parts.collect();
            let int = |s: &str| -> Result<usize, Error> {
                s.parse::<usize>().map_err(|_| Error::parse(line_no, format!("expected a nonnegative integer, got `{s}`")))
            };
            match directive {
                "k" => {
                    if k.is_some() {
                        return Err(Error::parse(line_no, "duplicate k directive"));
                    }
                    if args.len() != 1 {
                        return Err(Error::parse(line_no, "usage: k <int>"));
                    }
                    let val = int(args[0])?;
                    if val < 2 {
                        return Err(Error::parse(line_no, format!("k must be at least 2, got {val}")));
                    }
                    k = Some(val);
                }
                "n" => {
                    if k.is_none() {
                        return Err(Error::parse(line_no, "k must come first"));
                    }
                    if n.is_some() {
                        return Err(Error::parse(line_no, "duplicate n directive"));
                    }
                    if args.len() != 1 {
                        return Err(Error::parse(line_no, "usage: n <int>"));
                    }
                    let val = int(args[0])?;
                    n = Some(val);
                    graph = Some(Graph::new(val));
                    states = vec![VertexState::U(0); val];
                    pre_lines = vec![0; val];
                }
                "e" => {
                    let g = graph.as_mut().ok_or_else(|| Error::parse(line_no, "n must come before e"))?;
                    if args.len() != 2 {
                        return Err(Error::parse(line_no, "usage: e <u> <v>"));
                    }
                    let u = int(args[0])?;
                    let v = int(args[1])?;
                    g.add_edge(u, v).map_err(|e| Error::parse(line_no, e.to_string()))?;
                }
                "pre" => {
                    let nn = n.ok_or_else(|| Error::parse(line_no, "n must come before pre"))?;
                    if args.len() < 2 {
                        return Err(Error::parse(line_no, "usage: pre <v> U <j> | pre <v> F <j> | pre <v> I"));
                    }
                    let v = int(args[0])?;
                    if v >= nn {
                        return Err(Error::parse(line_no, format!("vertex {v} out of range (n={nn})")));
                    }
                    if pre_lines[v] != 0 {
                        return Err(Error::parse(line_no, format!("duplicate pre directive for vertex {v}")));
                    }
                    let state = match (args[1], args.len()) {
                        ("I", 2) => VertexState::I,
                        ("U", 3) => VertexState::U(int(args[2])?),
                        ("F", 3) => VertexState::F(int(args[2])?),
                        _ => return Err(Error::parse(line_no, "usage: pre <v> U <j> | pre <v> F <j> | pre <v> I")),
                    };
                    state
                        .check(k.expect("k parsed before n"))
                        .map_err(|e| Error::parse(line_no, e.to_string()))?;
                    states[v] = state;
                    pre_lines[v] = line_no;
                }
                other => {
                    return Err(Error::parse(line_no, format!("unknown directive `{other}`")));
                }
            }
        }

        let k = k.ok_or_else(|| Error::parse(last_line + 1, "missing k directive"))?;
        let graph = graph.ok_or_else(|| Error::parse(last_line + 1, "missing n directive"))?;

        for &(u, v) in graph.edges() {
            if states[u] == VertexState::I && states[v] == VertexState::I {
                let line = pre_lines[u].max(pre_lines[v]);
                return Err(Error::parse(line, format!("vertices {u} and {v} are adjacent and both precolored I")));
            }
        }

        Ok(PrecoloredGraph { graph, states, k })
    }

    /// Canonical serialization: k line, n line, sorted e lines, sorted pre
    /// lines (U(0) states are implicit and omitted).
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("k {}\n", self.k));
        out.push_str(&format!("n {}\n", self.graph.vertex_count()));
        for &(u, v) in self.graph.edges() {
            out.push_str(&format!("e {u} {v}\n"));
        }
        for v in 0..self.graph.vertex_count() {
            match self.states[v] {
                VertexState::U(0) => {}
                VertexState::U(j) => out.push_str(&format!("pre {v} U {j}\n")),
                VertexState::F(j) => out.push_str(&format!("pre {v} F {j}\n")),
                VertexState::I => out.push_str(&format!("pre {v} I\n")),
            }
        }
        out
    }
}
