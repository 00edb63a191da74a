//! Generators: the sharpness family, the precoloring gadgets, and the
//! expansion that replaces every precolored vertex by its gadget.

use crate::error::Error;
use crate::graph::{Graph, PrecoloredGraph, VertexState};
use crate::solver::{self, Label};

/// Appends `count` new triangles, each sharing exactly the vertex `v` with
/// the rest of the graph. New vertices are numbered in creation order.
pub fn add_pendent_triangles(g: &Graph, v: usize, count: usize) -> Result<Graph, Error> {
    if v >= g.vertex_count() {
        return Err(Error::BadVertex(v));
    }
    let n = g.vertex_count();
    let mut edges = g.edges().to_vec();
    for i in 0..count {
        let (a, b) = (n + 2 * i, n + 2 * i + 1);
        edges.extend([(v, a), (v, b), (a, b)]);
    }
    Graph::from_edges(n + 2 * count, &edges)
}

/// Appends `count` internally disjoint paths y - y' - z' - z through fresh
/// degree-2 vertices.
pub fn add_two_threads(g: &Graph, y: usize, z: usize, count: usize) -> Result<Graph, Error> {
    if y == z {
        return Err(Error::ThreadEndpointsEqual);
    }
    if y >= g.vertex_count() || z >= g.vertex_count() {
        return Err(Error::BadVertex(y.max(z)));
    }
    let n = g.vertex_count();
    let mut edges = g.edges().to_vec();
    for i in 0..count {
        let (a, b) = (n + 2 * i, n + 2 * i + 1);
        edges.extend([(y, a), (a, b), (b, z)]);
    }
    Graph::from_edges(n + 2 * count, &edges)
}

/// The tight family G_{k,t}: a spine of t+1 triangles {v_j, w_j, x_j}
/// joined by 2-threads, with pendent triangles whose counts are chosen so
/// that each step of the family adds exactly C_E vertices and C_{U,0} edges.
///
/// Vertex numbering is deterministic: spine triangles (v_j, w_j, x_j as
/// 3j, 3j+1, 3j+2), then the pendent triangles at v_0, w_0, x_0 and the
/// single one at v_t, then the thread vertices for j = 1..t, each group in
/// construction order.
pub fn sharpness_graph(k: usize, t: usize) -> Result<PrecoloredGraph, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let (pv, pw, px) = ((k - 2) / 2, (k - 1) / 2, k / 2);
    let spine = |j: usize| (3 * j, 3 * j + 1, 3 * j + 2);

    let mut edges = Vec::new();
    for j in 0..=t {
        let (v, w, x) = spine(j);
        edges.extend([(v, w), (v, x), (w, x)]);
    }
    let mut g = Graph::from_edges(3 * (t + 1), &edges)?;
    let (v0, w0, x0) = spine(0);
    g = add_pendent_triangles(&g, v0, pv)?;
    g = add_pendent_triangles(&g, w0, pw)?;
    g = add_pendent_triangles(&g, x0, px)?;
    g = add_pendent_triangles(&g, spine(t).0, 1)?;
    for j in 1..=t {
        let (v, w, x) = spine(j);
        let prev = spine(j - 1).0;
        g = add_two_threads(&g, prev, v, pv)?;
        g = add_two_threads(&g, prev, w, pw)?;
        g = add_two_threads(&g, prev, x, px)?;
    }
    PrecoloredGraph::trivial(g, k)
}

/// Which precoloring a gadget stands in for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    U(usize),
    F(usize),
    I,
}

impl std::fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GadgetKind::U(j) => write!(f, "U({j})"),
            GadgetKind::F(j) => write!(f, "F({j})"),
            GadgetKind::I => write!(f, "I"),
        }
    }
}

impl GadgetKind {
    fn check(self, k: usize) -> Result<(), Error> {
        let ok = match self {
            GadgetKind::U(j) => (1..k).contains(&j),
            GadgetKind::F(j) => (1..=k).contains(&j),
            GadgetKind::I => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadGadgetKind(self.to_string(), k))
        }
    }
}

/// A graph with a designated attachment vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: usize,
}

/// New root vertex 0 joined by an edge to the root of `inner`, whose
/// vertices shift up by one.
fn attach_root_edge(inner: &RootedGraph) -> RootedGraph {
    let mut edges: Vec<(usize, usize)> = inner.graph.edges().iter().map(|&(a, b)| (a + 1, b + 1)).collect();
    edges.push((0, inner.root + 1));
    let graph = Graph::from_edges(inner.graph.vertex_count() + 1, &edges).expect("shifted edges stay valid");
    RootedGraph { graph, root: 0 }
}

/// Triangle with pendent triangles: `at_root` of them at the root vertex,
/// then ⌊(k−1)/2⌋ and ⌊k/2⌋ at the other two corners.
fn heavy_triangle(k: usize, at_root: usize) -> RootedGraph {
    let mut g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).expect("triangle");
    g = add_pendent_triangles(&g, 0, at_root).expect("vertex 0 exists");
    g = add_pendent_triangles(&g, 1, (k - 1) / 2).expect("vertex 1 exists");
    g = add_pendent_triangles(&g, 2, k / 2).expect("vertex 2 exists");
    RootedGraph { graph: g, root: 0 }
}

/// Builds the all-uncolored gadget whose colorings behave at the root
/// exactly like the given precoloring. Its potential equals the state's
/// coefficient.
pub fn gadget(kind: GadgetKind, k: usize) -> Result<RootedGraph, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    kind.check(k)?;
    let built = match kind {
        GadgetKind::U(j) => {
            let g = add_pendent_triangles(&Graph::new(1), 0, j).expect("vertex 0 exists");
            RootedGraph { graph: g, root: 0 }
        }
        GadgetKind::I => attach_root_edge(&heavy_triangle(k, (k - 2) / 2)),
        GadgetKind::F(j) if j >= (k + 3) / 2 => heavy_triangle(k, (k - 2) / 2 - (k - j)),
        GadgetKind::F(j) => {
            let f1 = attach_root_edge(&gadget(GadgetKind::I, k)?);
            let g = add_pendent_triangles(&f1.graph, f1.root, j - 1).expect("root exists");
            RootedGraph { graph: g, root: f1.root }
        }
    };
    Ok(built)
}

/// Root behavior of one coloring: `None` for I, otherwise the order of the
/// root's F-component (the gadget is all-U(0), so weight equals order).
fn root_profile(g: &Graph, root: usize, labels: &[Label]) -> Option<usize> {
    if labels[root] == Label::I {
        return None;
    }
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![root];
    seen[root] = true;
    let mut size = 0;
    while let Some(v) = stack.pop() {
        size += 1;
        for &w in g.neighbors(v) {
            if labels[w] == Label::F && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    Some(size)
}

fn profiles(g: &Graph, root: usize, k: usize) -> std::collections::BTreeSet<Option<usize>> {
    let pg = PrecoloredGraph::trivial(g.clone(), k).expect("k already validated");
    let mut out = std::collections::BTreeSet::new();
    solver::for_each_coloring(&pg, &mut |labels| {
        out.insert(root_profile(g, root, labels));
    });
    out
}

/// Exhaustively checks that a gadget simulates its precoloring, and that
/// the simulation is edge-tight: a U(j) gadget must force the root, when in
/// F, to carry j extra weight, with both extremes attained, and deleting
/// any single edge must break the forcing. F(j) and I analogously.
pub fn verify_gadget(kind: GadgetKind, k: usize) -> Result<(), Error> {
    let rooted = gadget(kind, k)?;
    let n = rooted.graph.vertex_count();
    if n > 40 {
        return Err(Error::EnumerationTooLarge(n));
    }
    let fail = |msg: String| Err(Error::GadgetCheckFailed(format!("{kind} for k={k}: {msg}")));

    let full = profiles(&rooted.graph, rooted.root, k);
    match kind {
        GadgetKind::U(j) => {
            if let Some(&Some(w)) = full.iter().find(|p| matches!(p, Some(w) if *w < j + 1)) {
                return fail(format!("a coloring puts the root in F with weight only {w}"));
            }
            if !full.contains(&None) {
                return fail("no coloring puts the root in I".into());
            }
            if !full.contains(&Some(j + 1)) {
                return fail(format!("no coloring attains root weight exactly {}", j + 1));
            }
        }
        GadgetKind::F(j) => {
            if full.contains(&None) {
                return fail("a coloring puts the root in I".into());
            }
            if let Some(&Some(w)) = full.iter().find(|p| matches!(p, Some(w) if *w < j)) {
                return fail(format!("a coloring puts the root in F with weight only {w}"));
            }
            if !full.contains(&Some(j)) {
                return fail(format!("no coloring attains root weight exactly {j}"));
            }
        }
        GadgetKind::I => {
            if full.is_empty() {
                return fail("gadget has no valid coloring at all".into());
            }
            if full.iter().any(|p| p.is_some()) {
                return fail("a coloring puts the root in F".into());
            }
        }
    }

    for &(u, v) in rooted.graph.edges() {
        let deleted = rooted.graph.delete_edge(u, v).expect("edge from this graph");
        let reduced = profiles(&deleted, rooted.root, k);
        let relaxed = match kind {
            GadgetKind::U(j) => reduced.iter().any(|p| matches!(p, Some(w) if *w <= j)),
            GadgetKind::F(j) => reduced.iter().any(|p| match p {
                None => true,
                Some(w) => *w <= j - 1,
            }),
            GadgetKind::I => reduced.iter().any(|p| p.is_some()),
        };
        if !relaxed {
            return fail(format!("deleting edge {u}-{v} does not relax the root constraint"));
        }
    }
    Ok(())
}

/// Replaces every non-U(0) vertex by its gadget, the original vertex taking
/// the root's place. Original vertices keep their ids (the returned map is
/// that embedding); gadget interiors are appended in vertex order. The
/// result is trivially precolored, has the same total potential, and is
/// colorable iff the input is.
pub fn expand_precoloring(g: &PrecoloredGraph) -> (PrecoloredGraph, Vec<usize>) {
    let n = g.vertex_count();
    let mut edges = g.graph().edges().to_vec();
    let mut total = n;
    for v in 0..n {
        let kind = match g.state(v) {
            VertexState::U(0) => continue,
            VertexState::U(j) => GadgetKind::U(j),
            VertexState::F(j) => GadgetKind::F(j),
            VertexState::I => GadgetKind::I,
        };
        let rooted = gadget(kind, g.k()).expect("every valid state has a gadget");
        let place = |u: usize| {
            if u == rooted.root {
                v
            } else {
                total + u - usize::from(u > rooted.root)
            }
        };
        edges.extend(rooted.graph.edges().iter().map(|&(a, b)| (place(a), place(b))));
        total += rooted.graph.vertex_count() - 1;
    }
    let graph = Graph::from_edges(total, &edges).expect("gadget edges are fresh");
    let expanded = PrecoloredGraph::trivial(graph, g.k()).expect("same k");
    (expanded, (0..n).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{f_threshold, CoefficientTable};
    use crate::mad::mad;
    use crate::potential::potential;

    fn counts(g: &PrecoloredGraph) -> (usize, usize) {
        (g.vertex_count(), g.graph().edge_count())
    }

    #[test]
    fn pendent_triangles_and_threads() {
        let one = Graph::new(1);
        let tri = add_pendent_triangles(&one, 0, 1).unwrap();
        assert_eq!((tri.vertex_count(), tri.edge_count()), (3, 3));
        let bowtie = add_pendent_triangles(&one, 0, 2).unwrap();
        assert_eq!((bowtie.vertex_count(), bowtie.edge_count()), (5, 6));
        assert_eq!(bowtie.degree(0), 4);
        let same = add_pendent_triangles(&tri, 1, 0).unwrap();
        assert_eq!(same.edges(), tri.edges());
        assert!(add_pendent_triangles(&one, 1, 1).is_err());

        let two = Graph::new(2);
        let p4 = add_two_threads(&two, 0, 1, 1).unwrap();
        assert_eq!((p4.vertex_count(), p4.edge_count()), (4, 3));
        assert_eq!(p4.degree(0), 1);
        let theta = add_two_threads(&two, 0, 1, 2).unwrap();
        assert_eq!((theta.vertex_count(), theta.edge_count()), (6, 6));
        assert!(add_two_threads(&two, 1, 1, 1).is_err());
        assert_eq!(add_two_threads(&two, 0, 1, 0).unwrap().edge_count(), 0);
    }

    #[test]
    fn sharpness_sizes() {
        assert_eq!(counts(&sharpness_graph(2, 0).unwrap()), (7, 9));
        assert_eq!(counts(&sharpness_graph(3, 0).unwrap()), (9, 12));
        assert_eq!(counts(&sharpness_graph(2, 1).unwrap()), (12, 15));
        assert_eq!(counts(&sharpness_graph(4, 0).unwrap()), (13, 18));
        assert!(sharpness_graph(1, 0).is_err());
    }

    #[test]
    fn sharpness_growth_matches_coefficients() {
        for k in 2..=8 {
            let table = CoefficientTable::new(k).unwrap();
            for t in 0..3 {
                let (v0, e0) = counts(&sharpness_graph(k, t).unwrap());
                let (v1, e1) = counts(&sharpness_graph(k, t + 1).unwrap());
                assert_eq!(v1 - v0, table.c_e() as usize);
                assert_eq!(e1 - e0, table.c_u(0) as usize);
            }
        }
    }

    #[test]
    fn sharpness_g20_exact_edges() {
        let g = sharpness_graph(2, 0).unwrap();
        assert_eq!(
            g.graph().edges(),
            &[(0, 1), (0, 2), (0, 5), (0, 6), (1, 2), (2, 3), (2, 4), (3, 4), (5, 6)]
        );
        assert_eq!(potential(&g, &(0..7).collect::<Vec<_>>()).unwrap(), -3);
    }

    #[test]
    fn sharpness_mad_exceeds_threshold() {
        let g = sharpness_graph(2, 0).unwrap();
        let (value, _) = mad(g.graph()).unwrap();
        assert_eq!(value, crate::coeffs::Rational::new(18, 7));
        assert!(value > f_threshold(2).unwrap());
    }

    #[test]
    fn gadget_sizes_and_potentials() {
        let expect = [
            (GadgetKind::F(2), 2, 5, 6),
            (GadgetKind::I, 2, 6, 7),
            (GadgetKind::F(1), 2, 7, 8),
            (GadgetKind::U(1), 2, 3, 3),
            (GadgetKind::F(3), 3, 7, 9),
            (GadgetKind::I, 3, 8, 10),
            (GadgetKind::F(1), 3, 9, 11),
            (GadgetKind::F(2), 3, 11, 14),
            (GadgetKind::F(4), 4, 11, 15),
            (GadgetKind::F(3), 4, 9, 12),
            (GadgetKind::I, 4, 12, 16),
            (GadgetKind::F(1), 4, 13, 17),
            (GadgetKind::F(2), 4, 15, 20),
        ];
        for (kind, k, v, e) in expect {
            let rooted = gadget(kind, k).unwrap();
            assert_eq!((rooted.graph.vertex_count(), rooted.graph.edge_count()), (v, e), "{kind} k={k}");
        }
        // potential of a gadget equals its state's coefficient
        for k in 2..=6 {
            let table = CoefficientTable::new(k).unwrap();
            let mut cases: Vec<(GadgetKind, i64)> = (1..k).map(|j| (GadgetKind::U(j), table.c_u(j))).collect();
            cases.extend((1..=k).map(|j| (GadgetKind::F(j), table.c_f(j))));
            cases.push((GadgetKind::I, table.c_i()));
            for (kind, coeff) in cases {
                let rooted = gadget(kind, k).unwrap();
                let pg = PrecoloredGraph::trivial(rooted.graph.clone(), k).unwrap();
                let all: Vec<usize> = (0..pg.vertex_count()).collect();
                assert_eq!(potential(&pg, &all).unwrap(), coeff, "{kind} k={k}");
            }
        }
    }

    #[test]
    fn gadget_kind_bounds() {
        assert!(gadget(GadgetKind::U(0), 2).is_err());
        assert!(gadget(GadgetKind::U(2), 2).is_err());
        assert!(gadget(GadgetKind::F(0), 2).is_err());
        assert!(gadget(GadgetKind::F(3), 2).is_err());
        assert!(gadget(GadgetKind::I, 1).is_err());
    }

    #[test]
    fn small_gadgets_verify() {
        verify_gadget(GadgetKind::U(1), 2).unwrap();
        verify_gadget(GadgetKind::F(2), 2).unwrap();
        verify_gadget(GadgetKind::F(1), 3).unwrap();
        verify_gadget(GadgetKind::I, 2).unwrap();
    }

    #[test]
    fn expansion_identity_on_uncolored() {
        let g = sharpness_graph(2, 0).unwrap();
        let (expanded, map) = expand_precoloring(&g);
        assert_eq!(expanded.graph().edges(), g.graph().edges());
        assert_eq!(map, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn expansion_preserves_potential() {
        let base = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        for k in [2, 3] {
            let g = PrecoloredGraph::trivial(base.clone(), k)
                .unwrap()
                .with_state(0, VertexState::F(1))
                .unwrap()
                .with_state(2, VertexState::I)
                .unwrap();
            let (expanded, _) = expand_precoloring(&g);
            let all_g: Vec<usize> = (0..g.vertex_count()).collect();
            let all_e: Vec<usize> = (0..expanded.vertex_count()).collect();
            assert_eq!(potential(&g, &all_g).unwrap(), potential(&expanded, &all_e).unwrap());
        }
    }

    #[test]
    fn expansion_preserves_feasibility_both_ways() {
        // single F(2) vertex on a triangle is infeasible for k=2 and its
        // expansion must be too; flipping to F(1) makes both feasible
        let tri = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let hard = PrecoloredGraph::trivial(tri.clone(), 2).unwrap().with_state(0, VertexState::F(2)).unwrap();
        let easy = PrecoloredGraph::trivial(tri, 2).unwrap().with_state(0, VertexState::F(1)).unwrap();
        let infeasible = |g: &PrecoloredGraph| matches!(solver::solve(g), solver::SolveOutcome::Infeasible);
        assert!(infeasible(&hard));
        assert!(infeasible(&expand_precoloring(&hard).0));
        assert!(!infeasible(&easy));
        assert!(!infeasible(&expand_precoloring(&easy).0));
    }
}
