//! Exact combinatorics of the free group F_n: reduced words, big-integer
//! walk counts on Cayley trees, growth estimators, and the trace-moment
//! absorption check.

pub mod absorption;
pub mod growth;
pub mod lattice;
pub mod letters;

pub use absorption::{moment_absorption_check, AbsorptionMoment};
pub use growth::{growth_estimate, root_estimate};
pub use lattice::{
    brute_force_identity_patterns, closed_walk_counts, count_identity_patterns,
    count_identity_patterns_upto, tree_return_count, tree_return_counts_upto, WalkLattice,
};
pub use letters::{check_alphabet, reduce_word, Letter, ReducedWord, Sign};
