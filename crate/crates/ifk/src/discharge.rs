//! Charge bookkeeping for the structural argument that bounds the density
//! of a critical instance.
//!
//! Every vertex starts with ch(v) = C_E d(v) - 2 c(v), where c(v) is the
//! coefficient of v's state, so the total is exactly -2 rho(V(G)) by
//! construction. The rules then move charge between neighbors; which rules
//! apply depends on the parity of k. All transfers are computed from the
//! initial classification and applied at once.

use crate::coeffs::CoefficientTable;
use crate::error::Error;
use crate::graph::{PrecoloredGraph, VertexState};

/// Per-vertex charges before and after the rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeReport {
    pub initial: Vec<i64>,
    pub post: Vec<i64>,
}

impl ChargeReport {
    pub fn total_initial(&self) -> i64 {
        self.initial.iter().sum()
    }

    pub fn total_post(&self) -> i64 {
        self.post.iter().sum()
    }
}

/// Charges with no rules applied. Rejects instances with I-precolored
/// vertices: no charge is defined for them.
pub fn initial_charges(g: &PrecoloredGraph) -> Result<ChargeReport, Error> {
    let table = CoefficientTable::new(g.k())?;
    let mut initial = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        if g.state(v) == VertexState::I {
            return Err(Error::IVertexInCharge(v));
        }
        initial.push(table.c_e() * g.graph().degree(v) as i64 - 2 * table.state_coefficient(g.state(v)));
    }
    Ok(ChargeReport { post: initial.clone(), initial })
}

/// Applies the discharging rules for g's parity of k.
///
/// Even k, with l = k/2 - 1: every degree-2 U(l) vertex takes 1 from each
/// neighbor. Odd k, with l = (k-3)/2: every degree-2 U(l) vertex takes 2
/// from each neighbor, and every needy vertex (a degree-3 U(0) vertex with
/// exactly two degree-2 U(l) neighbors) takes 1 from its remaining
/// neighbor.
pub fn discharge(g: &PrecoloredGraph) -> Result<ChargeReport, Error> {
    let mut report = initial_charges(g)?;
    let k = g.k();
    let ell = if k % 2 == 0 { k / 2 - 1 } else { (k - 3) / 2 };
    let in_u2l = |v: usize| g.state(v) == VertexState::U(ell) && g.graph().degree(v) == 2;
    let take = if k % 2 == 0 { 1 } else { 2 };

    for v in 0..g.vertex_count() {
        if in_u2l(v) {
            for &w in g.graph().neighbors(v) {
                report.post[v] += take;
                report.post[w] -= take;
            }
        }
    }
    if k % 2 == 1 {
        for v in 0..g.vertex_count() {
            if g.state(v) != VertexState::U(0) || g.graph().degree(v) != 3 {
                continue;
            }
            let (helpers, others): (Vec<usize>, Vec<usize>) = g.graph().neighbors(v).iter().partition(|&&w| in_u2l(w));
            if helpers.len() == 2 {
                report.post[v] += 1;
                report.post[others[0]] -= 1;
            }
        }
    }
    Ok(report)
}
