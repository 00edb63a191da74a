//! Exact maximum average degree.
//!
//! mad(G) = max over nonempty R of 2 e(R) / |R|, a rational with denominator
//! at most n. The decision "mad > a/b" is a project-selection question
//! (does some R earn 2b per edge and pay a per vertex with positive total),
//! so binary search over dyadic rationals narrows mad to an interval shorter
//! than 1/n^2, which pins down the unique candidate fraction. One more flow
//! run at the exact value recovers a maximizing set.

use crate::coeffs::Rational;
use crate::error::Error;
use crate::graph::Graph;
use crate::potential::ProjectSelection;

fn best_set_at(g: &Graph, profit_per_edge: i128, cost_per_vertex: i128) -> (i128, Vec<usize>) {
    let costs = vec![cost_per_vertex; g.vertex_count()];
    let sel = ProjectSelection {
        graph: g,
        costs: &costs,
        edge_profit: profit_per_edge,
        forced_in: None,
        forced_out: None,
    };
    let res = sel.solve();
    (res.value, res.max_set)
}

/// mad(G) with a densest subset as witness (sorted vertex ids).
///
/// Errors on the empty graph. Edgeless graphs have mad 0 with a single
/// vertex as witness.
pub fn mad(g: &Graph) -> Result<(Rational, Vec<usize>), Error> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.edge_count() == 0 {
        return Ok((Rational::from_integer(0), vec![0]));
    }

    let nn = n as i128;
    let exceeds = |q: Rational| -> bool {
        let (value, _) = best_set_at(g, 2 * *q.denom(), *q.numer());
        value > 0
    };

    // invariant: mad > lo and mad <= hi
    let mut lo = Rational::from_integer(0);
    let mut hi = Rational::from_integer(nn - 1);
    let gap = Rational::new(1, nn * nn);
    while hi - lo >= gap {
        let mid = (lo + hi) / 2;
        if exceeds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // unique fraction with denominator <= n in (lo, hi]
    let value = (1..=nn)
        .find_map(|den| {
            let num = (lo * Rational::from_integer(den)).floor().to_integer() + 1;
            let cand = Rational::new(num, den);
            (cand <= hi).then_some(cand)
        })
        .expect("interval contains mad, whose denominator is at most n");

    let (opt, witness) = best_set_at(g, 2 * *value.denom(), *value.numer());
    assert_eq!(opt, 0, "exact mad value must make the best set break even");
    assert!(!witness.is_empty());
    let induced = g.edges().iter().filter(|&&(u, v)| witness.binary_search(&u).is_ok() && witness.binary_search(&v).is_ok()).count() as i128;
    assert_eq!(2 * induced * *value.denom(), *value.numer() * witness.len() as i128);
    Ok((value, witness))
}
