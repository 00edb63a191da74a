//! Exact feasibility search and criticality certification.
//!
//! The solver backtracks over the uncolored vertices (highest degree first),
//! branching F before I. Forest and weight constraints are maintained
//! incrementally by a union-find with rollback: each F-component is a set
//! whose stored weight counts every member's own contribution, so a cycle
//! shows up as a union of two already-joined vertices and an overweight
//! component shows up at the merge.

use crate::graph::{PrecoloredGraph, VertexState};
use crate::par;

/// Final color of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    I,
    F,
}

/// A full assignment of labels, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub labels: Vec<Label>,
}

/// One F-component of a verified coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FComponent {
    /// Smallest vertex id in the component, used as its name.
    pub root: usize,
    /// Sorted member ids.
    pub vertices: Vec<usize>,
    /// Member count plus fake-neighbor contributions: a U(j) member adds
    /// j + 1, a precolored F(j) member adds j.
    pub weight: usize,
}

/// Why a proposed coloring is invalid. Checks run in a fixed order, so the
/// reported violation is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("coloring has {got} labels for a graph on {expected} vertices")]
    LabelCountMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} contradicts its precoloring")]
    PrecoloredMismatch { vertex: usize },
    #[error("adjacent vertices {u} and {v} are both I")]
    AdjacentI { u: usize, v: usize },
    #[error("edge {u}-{v} closes a cycle in F")]
    FCycle { u: usize, v: usize },
    #[error("F-component rooted at {root} has weight {weight}")]
    Overweight { root: usize, weight: usize },
}

/// Weight a vertex contributes to its F-component when labeled F.
fn f_weight(state: VertexState) -> usize {
    match state {
        VertexState::U(j) => j + 1,
        VertexState::F(j) => j,
        VertexState::I => 0,
    }
}

/// Checks a coloring against the instance and returns the F-components
/// (sorted by root) on success.
pub fn verify(g: &PrecoloredGraph, coloring: &Coloring) -> Result<Vec<FComponent>, Violation> {
    let n = g.vertex_count();
    if coloring.labels.len() != n {
        return Err(Violation::LabelCountMismatch { expected: n, got: coloring.labels.len() });
    }
    let labels = &coloring.labels;
    for v in 0..n {
        let ok = match g.state(v) {
            VertexState::U(_) => true,
            VertexState::F(_) => labels[v] == Label::F,
            VertexState::I => labels[v] == Label::I,
        };
        if !ok {
            return Err(Violation::PrecoloredMismatch { vertex: v });
        }
    }
    let mut dsu = RollbackDsu::new(&(0..n).map(|v| f_weight(g.state(v))).collect::<Vec<_>>());
    for &(u, v) in g.graph().edges() {
        match (labels[u], labels[v]) {
            (Label::I, Label::I) => return Err(Violation::AdjacentI { u, v }),
            (Label::F, Label::F) => {
                if !dsu.union(u, v) {
                    return Err(Violation::FCycle { u, v });
                }
            }
            _ => {}
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
    for v in 0..n {
        if labels[v] == Label::F {
            groups.entry(dsu.find(v)).or_default().push(v);
        }
    }
    let mut components = Vec::with_capacity(groups.len());
    for (rep, vertices) in groups {
        let weight = dsu.weight(rep);
        let root = vertices[0];
        if weight > g.k() {
            return Err(Violation::Overweight { root, weight });
        }
        components.push(FComponent { root, vertices, weight });
    }
    components.sort_by_key(|c| c.root);
    Ok(components)
}

/// Result of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Colored(Coloring),
    Infeasible,
    /// The node budget ran out before the search space was exhausted.
    BudgetExceeded,
}

/// Union-find with union by size and no path compression, so unions can be
/// undone in reverse order. Weights live at the representatives.
pub(crate) struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    weight: Vec<usize>,
    trail: Vec<(usize, usize)>,
}

impl RollbackDsu {
    pub fn new(weights: &[usize]) -> Self {
        let n = weights.len();
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            weight: weights.to_vec(),
            trail: Vec::new(),
        }
    }

    pub fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    pub fn weight(&self, v: usize) -> usize {
        self.weight[self.find(v)]
    }

    /// False if the two vertices were already joined (a cycle).
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] > self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[ra] = rb;
        self.size[rb] += self.size[ra];
        self.weight[rb] += self.weight[ra];
        self.trail.push((ra, rb));
        true
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn rollback_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (child, parent) = self.trail.pop().expect("trail is longer than mark");
            self.parent[child] = child;
            self.size[parent] -= self.size[child];
            self.weight[parent] -= self.weight[child];
        }
    }
}

enum ComponentOutcome {
    Sat(Vec<Label>),
    Unsat,
    Budget,
}

struct Search<'a> {
    g: &'a PrecoloredGraph,
    labels: Vec<Option<Label>>,
    dsu: RollbackDsu,
    order: Vec<usize>,
    budget: u64,
}

impl<'a> Search<'a> {
    /// None if the precoloring alone is contradictory.
    fn new(g: &'a PrecoloredGraph) -> Option<Self> {
        let n = g.vertex_count();
        let labels: Vec<Option<Label>> = (0..n)
            .map(|v| match g.state(v) {
                VertexState::U(_) => None,
                VertexState::F(_) => Some(Label::F),
                VertexState::I => Some(Label::I),
            })
            .collect();
        let mut dsu = RollbackDsu::new(&(0..n).map(|v| f_weight(g.state(v))).collect::<Vec<_>>());
        for &(u, v) in g.graph().edges() {
            match (labels[u], labels[v]) {
                (Some(Label::I), Some(Label::I)) => return None,
                (Some(Label::F), Some(Label::F)) => {
                    if !dsu.union(u, v) || dsu.weight(u) > g.k() {
                        return None;
                    }
                }
                _ => {}
            }
        }
        let mut order: Vec<usize> = (0..n).filter(|&v| g.state(v).is_uncolored()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.graph().degree(v)), v));
        Some(Search { g, labels, dsu, order, budget: 0 })
    }

    fn place_f(&mut self, v: usize) -> Option<usize> {
        let mark = self.dsu.mark();
        for &w in self.g.graph().neighbors(v) {
            if self.labels[w] == Some(Label::F) && !self.dsu.union(v, w) {
                self.dsu.rollback_to(mark);
                return None;
            }
        }
        if self.dsu.weight(v) > self.g.k() {
            self.dsu.rollback_to(mark);
            return None;
        }
        self.labels[v] = Some(Label::F);
        Some(mark)
    }

    fn unplace_f(&mut self, v: usize, mark: usize) {
        self.labels[v] = None;
        self.dsu.rollback_to(mark);
    }

    fn can_place_i(&self, v: usize) -> bool {
        self.g.graph().neighbors(v).iter().all(|&w| self.labels[w] != Some(Label::I))
    }

    fn first_solution(&mut self, depth: usize) -> ComponentOutcome {
        if self.budget == 0 {
            return ComponentOutcome::Budget;
        }
        self.budget -= 1;
        let Some(&v) = self.order.get(depth) else {
            return ComponentOutcome::Sat(self.labels.iter().map(|l| l.expect("full assignment at leaf")).collect());
        };
        if let Some(mark) = self.place_f(v) {
            match self.first_solution(depth + 1) {
                ComponentOutcome::Unsat => self.unplace_f(v, mark),
                done => return done,
            }
        }
        if self.can_place_i(v) {
            self.labels[v] = Some(Label::I);
            match self.first_solution(depth + 1) {
                ComponentOutcome::Unsat => self.labels[v] = None,
                done => return done,
            }
        }
        ComponentOutcome::Unsat
    }

    fn enumerate(&mut self, depth: usize, f: &mut impl FnMut(&[Label])) {
        let Some(&v) = self.order.get(depth) else {
            let full: Vec<Label> = self.labels.iter().map(|l| l.expect("full assignment at leaf")).collect();
            f(&full);
            return;
        };
        if let Some(mark) = self.place_f(v) {
            self.enumerate(depth + 1, f);
            self.unplace_f(v, mark);
        }
        if self.can_place_i(v) {
            self.labels[v] = Some(Label::I);
            self.enumerate(depth + 1, f);
            self.labels[v] = None;
        }
    }
}

/// Finds any valid coloring, searching connected components independently.
pub fn solve(g: &PrecoloredGraph) -> SolveOutcome {
    solve_with_budget(g, u64::MAX)
}

/// Like [`solve`], but gives up with [`SolveOutcome::BudgetExceeded`] after
/// visiting `max_nodes` search-tree nodes in total.
pub fn solve_with_budget(g: &PrecoloredGraph, max_nodes: u64) -> SolveOutcome {
    let mut labels = vec![Label::I; g.vertex_count()];
    let mut budget = max_nodes;
    for comp in g.graph().connected_components() {
        let (sub, old_ids) = g.induced_subgraph(&comp).expect("components are in range");
        let Some(mut search) = Search::new(&sub) else {
            return SolveOutcome::Infeasible;
        };
        search.budget = budget;
        match search.first_solution(0) {
            ComponentOutcome::Sat(part) => {
                for (new_id, &old_id) in old_ids.iter().enumerate() {
                    labels[old_id] = part[new_id];
                }
            }
            ComponentOutcome::Unsat => return SolveOutcome::Infeasible,
            ComponentOutcome::Budget => return SolveOutcome::BudgetExceeded,
        }
        budget = search.budget;
    }
    let coloring = Coloring { labels };
    debug_assert!(verify(g, &coloring).is_ok());
    SolveOutcome::Colored(coloring)
}

/// Calls `f` for every valid coloring of `g`, in a fixed search order.
pub(crate) fn for_each_coloring(g: &PrecoloredGraph, f: &mut impl FnMut(&[Label])) {
    let Some(mut search) = Search::new(g) else {
        return;
    };
    search.enumerate(0, f);
}

/// One unit of slack removed from an instance: criticality means the
/// instance is infeasible but every such weakening is feasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subinstance {
    DeleteEdge(usize, usize),
    DeleteVertex(usize),
    /// U(j) to U(j-1), or F(j) to F(j-1); F(1) drops to an internal
    /// weight-0 F state that no longer counts toward its component.
    Decrement(usize),
}

impl std::fmt::Display for Subinstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Subinstance::DeleteEdge(u, v) => write!(f, "delete edge {u}-{v}"),
            Subinstance::DeleteVertex(v) => write!(f, "delete vertex {v}"),
            Subinstance::Decrement(v) => write!(f, "decrement vertex {v}"),
        }
    }
}

fn apply_subinstance(g: &PrecoloredGraph, sub: Subinstance) -> PrecoloredGraph {
    match sub {
        Subinstance::DeleteEdge(u, v) => g.delete_edge(u, v).expect("edge from this graph"),
        Subinstance::DeleteVertex(v) => g.delete_vertex(v).expect("vertex from this graph").0,
        Subinstance::Decrement(v) => {
            let mut states = g.states().to_vec();
            states[v] = match states[v] {
                VertexState::U(j) => VertexState::U(j - 1),
                VertexState::F(j) => VertexState::F(j - 1),
                VertexState::I => unreachable!("I states are never decremented"),
            };
            PrecoloredGraph::new_unchecked(g.graph().clone(), states, g.k())
        }
    }
}

/// Outcome of a criticality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriticalityVerdict {
    Critical,
    /// The instance itself is feasible.
    Colorable(Coloring),
    /// This weakening is still infeasible, so the instance is not minimal.
    NotMinimal(Subinstance),
}

/// Certifies criticality by full search: the instance must be infeasible
/// while every edge deletion, vertex deletion, and precoloring decrement is
/// feasible. Uses unbounded solves.
pub fn is_critical(g: &PrecoloredGraph) -> CriticalityVerdict {
    is_critical_impl(g, par::Exec::Auto)
}

/// Sequential variant of [`is_critical`]; same verdict.
pub fn is_critical_seq(g: &PrecoloredGraph) -> CriticalityVerdict {
    is_critical_impl(g, par::Exec::Seq)
}

fn is_critical_impl(g: &PrecoloredGraph, exec: par::Exec) -> CriticalityVerdict {
    if let SolveOutcome::Colored(c) = solve(g) {
        return CriticalityVerdict::Colorable(c);
    }
    let mut subs: Vec<Subinstance> = g.graph().edges().iter().map(|&(u, v)| Subinstance::DeleteEdge(u, v)).collect();
    subs.extend((0..g.vertex_count()).map(Subinstance::DeleteVertex));
    subs.extend((0..g.vertex_count()).filter_map(|v| match g.state(v) {
        VertexState::U(j) if j >= 1 => Some(Subinstance::Decrement(v)),
        VertexState::F(_) => Some(Subinstance::Decrement(v)),
        _ => None,
    }));
    let feasible = par::map(&subs, exec, |&sub| !matches!(solve(&apply_subinstance(g, sub)), SolveOutcome::Infeasible));
    match subs.iter().zip(&feasible).find(|(_, &ok)| !ok) {
        Some((&sub, _)) => CriticalityVerdict::NotMinimal(sub),
        None => CriticalityVerdict::Critical,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn pg(n: usize, edges: &[(usize, usize)], k: usize) -> PrecoloredGraph {
        PrecoloredGraph::trivial(Graph::from_edges(n, edges).unwrap(), k).unwrap()
    }

    fn labels_of(outcome: SolveOutcome) -> Vec<Label> {
        match outcome {
            SolveOutcome::Colored(c) => c.labels,
            other => panic!("expected a coloring, got {other:?}"),
        }
    }

    #[test]
    fn triangle_k2_solves() {
        let g = pg(3, &[(0, 1), (0, 2), (1, 2)], 2);
        let labels = labels_of(solve(&g));
        let coloring = Coloring { labels };
        verify(&g, &coloring).unwrap();
    }

    #[test]
    fn k4_is_infeasible_for_k2() {
        // any (I,F)-split of K_4 has an F-triangle or adjacent I's or weight 3
        let g = pg(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 2);
        assert_eq!(solve(&g), SolveOutcome::Infeasible);
        assert!(matches!(solve(&g.delete_edge(0, 1).unwrap()), SolveOutcome::Colored(_)));
    }

    #[test]
    fn k4_is_critical_for_k2_and_k3() {
        let g4 = pg(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 2);
        assert_eq!(is_critical(&g4), CriticalityVerdict::Critical);
        let g4 = pg(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 3);
        assert_eq!(is_critical(&g4), CriticalityVerdict::Critical);
    }

    #[test]
    fn four_cycle_is_merely_colorable() {
        let g = pg(4, &[(0, 1), (0, 3), (1, 2), (2, 3)], 2);
        assert!(matches!(is_critical(&g), CriticalityVerdict::Colorable(_)));
    }

    #[test]
    fn k4_plus_pendant_is_not_minimal() {
        let g = pg(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)], 2);
        assert_eq!(is_critical(&g), CriticalityVerdict::NotMinimal(Subinstance::DeleteEdge(3, 4)));
    }

    #[test]
    fn precolored_f_edges_union_at_init() {
        // F(1)-F(1) edge: component weight 2, fine for k=2; adding a third
        // F(1) in a triangle is a cycle
        let g = pg(2, &[(0, 1)], 2)
            .with_state(0, VertexState::F(1))
            .unwrap()
            .with_state(1, VertexState::F(1))
            .unwrap();
        assert!(matches!(solve(&g), SolveOutcome::Colored(_)));
        let tri = pg(3, &[(0, 1), (0, 2), (1, 2)], 2)
            .with_state(0, VertexState::F(1))
            .unwrap()
            .with_state(1, VertexState::F(1))
            .unwrap()
            .with_state(2, VertexState::F(1))
            .unwrap();
        assert_eq!(solve(&tri), SolveOutcome::Infeasible);
    }

    #[test]
    fn precolored_weights_block_merges() {
        // F(2)-F(1) edge has weight 3 > 2
        let g = pg(2, &[(0, 1)], 2)
            .with_state(0, VertexState::F(2))
            .unwrap()
            .with_state(1, VertexState::F(1))
            .unwrap();
        assert_eq!(solve(&g), SolveOutcome::Infeasible);
    }

    #[test]
    fn fake_neighbors_count_toward_weight() {
        // U(1)-U(1) edge, k=2: both F would weigh 4; one must be I
        let g = pg(2, &[(0, 1)], 2)
            .with_state(0, VertexState::U(1))
            .unwrap()
            .with_state(1, VertexState::U(1))
            .unwrap();
        let labels = labels_of(solve(&g));
        assert_eq!(labels.iter().filter(|&&l| l == Label::I).count(), 1);
    }

    #[test]
    fn adjacent_precolored_i_is_infeasible() {
        let g = pg(2, &[(0, 1)], 2)
            .with_state(0, VertexState::I)
            .unwrap()
            .with_state(1, VertexState::I)
            .unwrap();
        assert_eq!(solve(&g), SolveOutcome::Infeasible);
    }

    #[test]
    fn budget_is_reported() {
        let g = pg(12, &(0..11).map(|i| (i, i + 1)).collect::<Vec<_>>(), 2);
        assert_eq!(solve_with_budget(&g, 1), SolveOutcome::BudgetExceeded);
        assert!(matches!(solve_with_budget(&g, 1 << 40), SolveOutcome::Colored(_)));
    }

    #[test]
    fn verify_reports_first_violation() {
        let g = pg(3, &[(0, 1), (1, 2)], 2);
        let bad = Coloring { labels: vec![Label::I, Label::I, Label::F] };
        assert_eq!(verify(&g, &bad), Err(Violation::AdjacentI { u: 0, v: 1 }));
        let heavy = Coloring { labels: vec![Label::F, Label::F, Label::F] };
        assert_eq!(verify(&g, &heavy), Err(Violation::Overweight { root: 0, weight: 3 }));
        let short = Coloring { labels: vec![Label::F] };
        assert!(matches!(verify(&g, &short), Err(Violation::LabelCountMismatch { .. })));
        let tri = pg(3, &[(0, 1), (0, 2), (1, 2)], 3);
        let cyc = Coloring { labels: vec![Label::F, Label::F, Label::F] };
        assert_eq!(verify(&tri, &cyc), Err(Violation::FCycle { u: 1, v: 2 }));
    }

    #[test]
    fn verify_components_and_weights() {
        let g = pg(4, &[(0, 1), (1, 2), (2, 3)], 3).with_state(1, VertexState::U(1)).unwrap();
        let c = Coloring { labels: vec![Label::F, Label::F, Label::I, Label::F] };
        let comps = verify(&g, &c).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!((comps[0].root, comps[0].weight, comps[0].vertices.clone()), (0, 3, vec![0, 1]));
        assert_eq!((comps[1].root, comps[1].weight, comps[1].vertices.clone()), (3, 1, vec![3]));
    }

    #[test]
    fn enumerator_counts_path_colorings() {
        // P_3, k=2: 2^3 = 8 labelings; invalid are FFF (weight 3) and
        // those with adjacent I's (IIF, FII, III, III..) = {IIF, FII, III}
        let g = pg(3, &[(0, 1), (1, 2)], 2);
        let mut count = 0;
        for_each_coloring(&g, &mut |_| count += 1);
        assert_eq!(count, 4);
    }

    #[test]
    fn decrement_reaches_weight_zero() {
        // lone F(1) triangle-mate: decrementing the F(1) in an F(1)-F(2)
        // edge (k=2) makes it feasible since the F(0) stops counting
        let g = pg(2, &[(0, 1)], 2)
            .with_state(0, VertexState::F(2))
            .unwrap()
            .with_state(1, VertexState::F(1))
            .unwrap();
        assert_eq!(is_critical(&g), CriticalityVerdict::Critical);
    }

    #[test]
    fn triangle_with_one_f2_vertex_is_critical_for_k2() {
        let g = pg(3, &[(0, 1), (0, 2), (1, 2)], 2).with_state(0, VertexState::F(2)).unwrap();
        assert_eq!(is_critical(&g), CriticalityVerdict::Critical);
        assert_eq!(is_critical_seq(&g), CriticalityVerdict::Critical);
    }
}
