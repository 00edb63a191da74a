//! Exact tools for partitions of a sparse graph into an independent set and
//! a bounded forest.
//!
//! An (I, F_k) instance asks for a split of the vertices into a set I with
//! no internal edges and a set F inducing a forest whose components each
//! weigh at most k. Vertices may be constrained in advance: a vertex in
//! state U(j) is free but drags j fake neighbors into any F-component that
//! absorbs it (so it weighs j + 1 there), a vertex in state F(j) must go to
//! F and weighs j, and a vertex in state I must go to I. Fake neighbors add
//! weight but never close cycles.
//!
//! The crate provides:
//!
//! - parsing and editing of precolored graphs ([`graph`]);
//! - the coefficient tables and the density threshold f(k) = 2 C_{U,0} /
//!   C_E under which every trivially precolored graph is colorable
//!   ([`coeffs`]);
//! - the potential function rho and exact minimum-potential search via
//!   max-flow ([`potential`]), plus exact maximum average degree ([`mad`]);
//! - a backtracking solver, coloring verification, and criticality
//!   certification ([`solver`]);
//! - generators for the tight examples G_{k,t}, the precoloring gadgets,
//!   and the gadget expansion ([`construct`]);
//! - the charge bookkeeping used in the density argument ([`discharge`]).
//!
//! Batch operations ([`min_potential_subset`], [`is_critical`]) run on a
//! rayon pool when the default `parallel` feature is enabled; the `_seq`
//! variants and a `--no-default-features` build are sequential with
//! identical results.

pub mod coeffs;
pub mod construct;
pub mod discharge;
pub mod error;
mod flow;
pub mod graph;
pub mod mad;
mod par;
pub mod potential;
pub mod solver;

pub use coeffs::{f_threshold, CoefficientTable, Rational};
pub use construct::{
    add_pendent_triangles, add_two_threads, expand_precoloring, gadget, sharpness_graph, verify_gadget, GadgetKind,
    RootedGraph,
};
pub use discharge::{discharge, initial_charges, ChargeReport};
pub use error::Error;
pub use graph::{Graph, PrecoloredGraph, VertexState};
pub use mad::mad;
pub use potential::{min_potential_subset, min_potential_subset_seq, potential, MinMode};
pub use solver::{
    is_critical, is_critical_seq, solve, solve_with_budget, verify, Coloring, CriticalityVerdict, FComponent, Label,
    SolveOutcome, Subinstance, Violation,
};
