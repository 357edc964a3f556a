//! Clique vectors of k-connected chordal graphs.
//!
//! A clique vector `(c_1, ..., c_d)` belongs to some k-connected chordal graph
//! exactly when its binomial transform `(b_1, ..., b_d)` is positive with
//! `b_1 = ... = b_k = 1`. This crate provides the transform and its validator,
//! a threshold-graph realizer for valid vectors, chordality and connectivity
//! algorithms, graded Betti numbers of clique complexes via Hochster's formula,
//! and exhaustive sweeps that check all of these against each other.

pub mod chordal;
pub mod connectivity;
mod error;
pub mod graph;
pub mod stanley_reisner;
pub mod threshold;
pub mod transform;
pub mod verify;

pub use chordal::{check_peo, check_peo_pairwise, clique_vector_chordal, is_chordal, mcs_order, EliminationOrder};
pub use connectivity::{connectivity, connectivity_bruteforce, connectivity_with, Convention};
pub use error::{Error, Result};
pub use graph::io::{format_graph, parse_graph, GraphFormat};
pub use graph::{enumerate_graphs, Graph, MAX_VERTICES};
pub use stanley_reisner::{
    betti_linear_strand, betti_table_full, connectivity_from_betti, reduced_homology_ranks, BettiTable,
    HomologyProfile, LinearStrand,
};
pub use threshold::{
    bvector_to_word, enumerate_bvectors, graph_to_word, realize, word_is_k_connected, word_to_bvector, word_to_graph,
    Letter, Realization, SdWord,
};
pub use transform::{b_to_c, binomial, c_to_b, validate, BVector, CliqueVector, Validation, Violation};
pub use verify::{Theorem, VerificationReport};
