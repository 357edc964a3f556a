//! Graded Betti numbers of the face ring of a clique complex.
//!
//! Nothing here builds polynomials. Hochster's formula expresses every
//! `beta_(i,j)` of `k[Delta(G)]` as a sum of reduced homology ranks of
//! induced subcomplexes,
//!
//! ```text
//! beta_(i,j) = sum over |W| = j of dim H~_(j-i-1)(Delta(G)_W),
//! ```
//!
//! and induced subcomplexes of a clique complex are the clique complexes of
//! induced subgraphs. On the linear strand `j = i + 1` only `H~_0` appears,
//! so those entries reduce to counting components.

mod betti;
mod homology;

pub use betti::{
    betti_linear_strand, betti_table_full, connectivity_from_betti, BettiTable, LinearStrand, MAX_FULL_TABLE_VERTICES,
    MAX_STRAND_VERTICES,
};
pub use homology::{rank, reduced_homology_ranks, HomologyProfile, MAX_HOMOLOGY_VERTICES};
