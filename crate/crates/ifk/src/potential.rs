//! The potential function and minimum-potential subset search.
//!
//! Minimizing the potential over subsets is a project-selection problem:
//! rho(R) = sum of vertex coefficients over R minus C_E per induced edge,
//! so -rho(R) is "edge profit minus vertex cost", maximized by one min-cut
//! computation on the network with a node per edge (source arc of capacity
//! C_E), infinite arcs to the endpoint nodes and a sink arc of capacity
//! c(v) per vertex.

use crate::coeffs::CoefficientTable;
use crate::error::Error;
use crate::flow::FlowNetwork;
use crate::graph::{Graph, PrecoloredGraph};
use crate::par;

/// rho of the subset `r` (duplicates ignored), as an exact integer.
pub fn potential(g: &PrecoloredGraph, r: &[usize]) -> Result<i64, Error> {
    let table = CoefficientTable::new(g.k()).expect("k validated at construction");
    let mut keep = vec![false; g.vertex_count()];
    for &v in r {
        if v >= g.vertex_count() {
            return Err(Error::BadVertex(v));
        }
        keep[v] = true;
    }
    let vertex_part: i64 = (0..g.vertex_count())
        .filter(|&v| keep[v])
        .map(|v| table.state_coefficient(g.state(v)))
        .sum();
    let edges = g.graph().edges().iter().filter(|&&(u, v)| keep[u] && keep[v]).count() as i64;
    Ok(vertex_part - table.c_e() * edges)
}

/// Which subsets a minimum-potential search ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinMode {
    All,
    Nonempty,
    NonemptyProper,
}

/// One project-selection instance: maximize profit*e(R) - sum of costs over
/// R, subject to force-in/force-out constraints. Costs must be nonnegative.
pub(crate) struct ProjectSelection<'a> {
    pub graph: &'a Graph,
    pub costs: &'a [i128],
    pub edge_profit: i128,
    pub forced_in: Option<usize>,
    pub forced_out: Option<usize>,
}

pub(crate) struct SelectionResult {
    pub value: i128,
    /// Optimal sets come in a lattice; these are its extremes.
    pub min_set: Vec<usize>,
    pub max_set: Vec<usize>,
}

impl ProjectSelection<'_> {
    pub fn solve(&self) -> SelectionResult {
        let n = self.graph.vertex_count();
        debug_assert_eq!(self.costs.len(), n);
        debug_assert!(self.costs.iter().all(|&c| c >= 0));
        debug_assert!(self.edge_profit >= 0);

        let in_play = |v: usize| self.forced_in != Some(v) && self.forced_out != Some(v);
        let candidate = |&&(u, v): &&(usize, usize)| self.forced_out != Some(u) && self.forced_out != Some(v);

        // node layout: 0..n vertex nodes (forced ones unused), then one per
        // candidate edge, then source, sink
        let cand_edges: Vec<(usize, usize)> = self.graph.edges().iter().filter(candidate).copied().collect();
        let source = n + cand_edges.len();
        let sink = source + 1;
        let mut net = FlowNetwork::new(sink + 1, source, sink);

        let mut offset: i128 = 0;
        if let Some(v) = self.forced_in {
            offset -= self.costs[v];
        }
        let mut total_profit: i128 = 0;
        let mut infinite: i128 = 1 + self.edge_profit * cand_edges.len() as i128;
        for v in 0..n {
            if in_play(v) {
                infinite += self.costs[v];
            }
        }
        for (i, &(u, v)) in cand_edges.iter().enumerate() {
            let free: Vec<usize> = [u, v].into_iter().filter(|&w| in_play(w)).collect();
            if free.is_empty() {
                // both endpoints forced in: profit is unconditional
                offset += self.edge_profit;
                continue;
            }
            net.add_arc(source, n + i, self.edge_profit);
            total_profit += self.edge_profit;
            for w in free {
                net.add_arc(n + i, w, infinite);
            }
        }
        for v in 0..n {
            if in_play(v) {
                net.add_arc(v, sink, self.costs[v]);
            }
        }

        let cut = net.max_flow();
        let value = offset + total_profit - cut;
        let min_side = net.min_cut_source_side();
        let max_side = net.max_cut_source_side();
        let collect = |side: &[bool]| {
            let mut set: Vec<usize> = (0..n).filter(|&v| in_play(v) && side[v]).collect();
            if let Some(v) = self.forced_in {
                set.push(v);
                set.sort_unstable();
            }
            set
        };
        SelectionResult { value, min_set: collect(&min_side), max_set: collect(&max_side) }
    }
}

fn run_min(g: &PrecoloredGraph, costs: &[i128], forced_in: Option<usize>, forced_out: Option<usize>) -> (i64, Vec<usize>) {
    let table = CoefficientTable::new(g.k()).expect("k validated at construction");
    let sel = ProjectSelection {
        graph: g.graph(),
        costs,
        edge_profit: table.c_e() as i128,
        forced_in,
        forced_out,
    };
    let res = sel.solve();
    // minimizing rho is maximizing C_E e(R) - cost(R)
    ((-res.value) as i64, res.min_set)
}

/// Minimum of rho over subsets in the requested mode, with a minimizing
/// subset. The witness is deterministic: each flow run returns the unique
/// inclusion-minimal optimum, and runs are compared in a fixed order.
pub fn min_potential_subset(g: &PrecoloredGraph, mode: MinMode) -> Result<(i64, Vec<usize>), Error> {
    min_potential_subset_impl(g, mode, par::Exec::Auto)
}

/// Sequential variant of [`min_potential_subset`]; same result.
pub fn min_potential_subset_seq(g: &PrecoloredGraph, mode: MinMode) -> Result<(i64, Vec<usize>), Error> {
    min_potential_subset_impl(g, mode, par::Exec::Seq)
}

fn min_potential_subset_impl(g: &PrecoloredGraph, mode: MinMode, exec: par::Exec) -> Result<(i64, Vec<usize>), Error> {
    let table = CoefficientTable::new(g.k())?;
    let n = g.vertex_count();
    let costs: Vec<i128> = (0..n).map(|v| table.state_coefficient(g.state(v)) as i128).collect();

    // one (forced_in, forced_out) pair per flow run
    let runs: Vec<(Option<usize>, Option<usize>)> = match mode {
        MinMode::All => vec![(None, None)],
        MinMode::Nonempty => {
            if n == 0 {
                return Err(Error::EmptyGraph);
            }
            (0..n).map(|v| (Some(v), None)).collect()
        }
        MinMode::NonemptyProper => {
            if n < 2 {
                return Err(Error::NoProperSubset);
            }
            // every nonempty proper R either contains vertex 0 and misses
            // some w, or misses 0 and contains some u
            let mut runs: Vec<_> = (1..n).map(|w| (Some(0), Some(w))).collect();
            runs.extend((1..n).map(|u| (Some(u), Some(0))));
            runs
        }
    };

    let results = par::map(&runs, exec, |&(fin, fout)| run_min(g, &costs, fin, fout));
    let best = results
        .into_iter()
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
        .expect("at least one run");
    Ok(best)
}
