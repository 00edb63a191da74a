//! Shared brute-force oracles and generators for the integration tests.
//!
//! Everything here recomputes answers from first principles (bitmask
//! enumeration, DFS) so that the optimized library code is checked against an
//! independent implementation, not against itself.

use ifk::{CoefficientTable, Graph, Label, MinMode, PrecoloredGraph, Rational, VertexState};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Adjacency bitmasks for subset enumeration; requires n <= 31.
pub fn adjacency_masks(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    assert!(n <= 31, "bitmask oracle limited to 31 vertices");
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Number of edges inside the subset described by `mask`.
pub fn edges_in_mask(adj: &[u32], mask: u32) -> u32 {
    let mut doubled = 0;
    for (v, &a) in adj.iter().enumerate() {
        if mask & (1 << v) != 0 {
            doubled += (a & mask).count_ones();
        }
    }
    doubled / 2
}

/// Potential of one subset, recomputed directly from the coefficient table.
pub fn mask_potential(table: &CoefficientTable, g: &PrecoloredGraph, adj: &[u32], mask: u32) -> i64 {
    let mut total = 0i64;
    for v in 0..g.vertex_count() {
        if mask & (1 << v) != 0 {
            total += table.state_coefficient(g.state(v));
        }
    }
    total - table.c_e() * i64::from(edges_in_mask(adj, mask))
}

/// Minimum potential over all subsets admitted by `mode`, by exhaustive
/// enumeration. Returns the value only; witnesses are checked separately.
pub fn brute_min_potential(g: &PrecoloredGraph, mode: MinMode) -> i64 {
    let n = g.vertex_count();
    let table = CoefficientTable::new(g.k()).unwrap();
    let adj = adjacency_masks(g.graph());
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = i64::MAX;
    for mask in 0..=full {
        let admitted = match mode {
            MinMode::All => true,
            MinMode::Nonempty => mask != 0,
            MinMode::NonemptyProper => mask != 0 && mask != full,
        };
        if admitted {
            best = best.min(mask_potential(&table, g, &adj, mask));
        }
    }
    best
}

/// Maximum average degree by exhaustive subset enumeration.
pub fn brute_mad(g: &Graph) -> Rational {
    let n = g.vertex_count();
    assert!(n >= 1);
    let adj = adjacency_masks(g);
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = Rational::from_integer(0);
    for mask in 1..=full {
        let e = i128::from(edges_in_mask(&adj, mask));
        let d = Rational::new(2 * e, i128::from(mask.count_ones()));
        if d > best {
            best = d;
        }
    }
    best
}

/// Independent validity check for a full labeling: precolored states are
/// respected, no two I vertices are adjacent, the F part is acyclic, and every
/// F component weighs at most k once fake neighbors are counted.
pub fn labels_valid(g: &PrecoloredGraph, labels: &[Label]) -> bool {
    let n = g.vertex_count();
    if labels.len() != n {
        return false;
    }
    for v in 0..n {
        match g.state(v) {
            VertexState::I if labels[v] != Label::I => return false,
            VertexState::F(_) if labels[v] != Label::F => return false,
            _ => {}
        }
    }
    for &(u, v) in g.graph().edges() {
        if labels[u] == Label::I && labels[v] == Label::I {
            return false;
        }
    }
    // Walk each F component once: cycle check via edge/vertex counts, weight
    // check via per-state contributions.
    let weight = |v: usize| match g.state(v) {
        VertexState::U(j) => j + 1,
        VertexState::F(j) => j,
        VertexState::I => unreachable!("I vertex labeled F"),
    };
    let mut seen = vec![false; n];
    for start in 0..n {
        if labels[start] != Label::F || seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut vertices = 0usize;
        let mut doubled_edges = 0usize;
        let mut total_weight = 0usize;
        while let Some(v) = stack.pop() {
            vertices += 1;
            total_weight += weight(v);
            for &w in g.graph().neighbors(v) {
                if labels[w] == Label::F {
                    doubled_edges += 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        if doubled_edges / 2 >= vertices || total_weight > g.k() {
            return false;
        }
    }
    true
}

/// Exhaustive feasibility check over all 2^u assignments of the uncolored
/// vertices.
pub fn brute_feasible(g: &PrecoloredGraph) -> bool {
    brute_solution(g).is_some()
}

/// First valid labeling in enumeration order, if any.
pub fn brute_solution(g: &PrecoloredGraph) -> Option<Vec<Label>> {
    let n = g.vertex_count();
    let free: Vec<usize> = (0..n).filter(|&v| g.state(v).is_uncolored()).collect();
    assert!(free.len() <= 24, "brute force limited to 24 uncolored vertices");
    let mut labels: Vec<Label> = (0..n)
        .map(|v| match g.state(v) {
            VertexState::I => Label::I,
            _ => Label::F,
        })
        .collect();
    for bits in 0..(1u32 << free.len()) {
        for (i, &v) in free.iter().enumerate() {
            labels[v] = if bits & (1 << i) != 0 { Label::I } else { Label::F };
        }
        if labels_valid(g, &labels) {
            return Some(labels.clone());
        }
    }
    None
}

/// Erdos-Renyi style random graph.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random instance: random graph plus independent random states. `i_allowed`
/// controls whether I appears among the precolored states.
pub fn random_instance(
    rng: &mut ChaCha8Rng,
    n: usize,
    p: f64,
    k: usize,
    uncolored_bias: f64,
    i_allowed: bool,
) -> PrecoloredGraph {
    let g = random_graph(rng, n, p);
    let states: Vec<VertexState> = (0..n)
        .map(|_| {
            if rng.random_bool(uncolored_bias) {
                VertexState::U(rng.random_range(0..k))
            } else if i_allowed && rng.random_bool(0.3) {
                VertexState::I
            } else {
                VertexState::F(rng.random_range(1..=k))
            }
        })
        .collect();
    PrecoloredGraph::new(g, states, k).unwrap()
}

/// All graphs on exactly `n` vertices, one representative per isomorphism
/// class, found by canonicalizing the edge bitmask over all permutations.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n >= 1 && n <= 6);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let pair_index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    let mut reps: Vec<u64> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let canon = perms
            .iter()
            .map(|perm| {
                let mut out = 0u64;
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        out |= 1 << pair_index(perm[u], perm[v]);
                    }
                }
                out
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            reps.push(canon);
        }
    }
    reps.sort_unstable();
    reps.into_iter()
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, size: usize, out: &mut Vec<Vec<usize>>) {
    if size == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..size {
        heap_permute(items, size - 1, out);
        if size % 2 == 0 {
            items.swap(i, size - 1);
        } else {
            items.swap(0, size - 1);
        }
    }
}

/// All state assignments for an n-vertex graph with parameter k, in a fixed
/// order: U(0..k-1), F(1..=k), then I when allowed.
pub fn all_states(k: usize, i_allowed: bool) -> Vec<VertexState> {
    let mut states: Vec<VertexState> = (0..k).map(VertexState::U).collect();
    states.extend((1..=k).map(VertexState::F));
    if i_allowed {
        states.push(VertexState::I);
    }
    states
}

/// Iterate every assignment of `palette` states to n vertices.
pub fn for_each_assignment<F: FnMut(&[VertexState])>(
    n: usize,
    palette: &[VertexState],
    mut f: F,
) {
    let mut idx = vec![0usize; n];
    loop {
        let states: Vec<VertexState> = idx.iter().map(|&i| palette[i]).collect();
        f(&states);
        let mut pos = 0;
        loop {
            if pos == n {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < palette.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Brute-force girth: for each edge, remove it and BFS between its endpoints.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for &(u, v) in g.edges() {
        let h = g.delete_edge(u, v).unwrap();
        if let Some(d) = bfs_distance(&h, u, v) {
            let cycle = d + 1;
            if best.map_or(true, |b| cycle < b) {
                best = Some(cycle);
            }
        }
    }
    best
}

fn bfs_distance(g: &Graph, from: usize, to: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = std::collections::VecDeque::new();
    dist[from] = 0;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            return Some(dist[v]);
        }
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    None
}
