//! Minimum dominating set toolkit.
//!
//! The crate bundles everything needed to study dominating-set heuristics on
//! synthetic benchmarks:
//!
//! - [`graph`]: immutable simple undirected graphs, domination predicates,
//!   and the DIMACS / edge-list formats ([`io`]);
//! - [`solution`]: 0-1 solution encoding, the coverage-weighted fitness, and
//!   the filtering/reparation intensification passes;
//! - [`levy`]: heavy-tailed step sampling driving bit-range inversions;
//! - [`hcsa`]: the hybrid cuckoo search driver with one-point crossover;
//! - [`generators`]: connected random geometric graphs and
//!   planted-domination-number graphs;
//! - [`exact`]: a branch-and-bound oracle certifying optimality at desk
//!   scale, plus the brute-force cross-check;
//! - [`greedy`]: the classical covering greedy baseline;
//! - [`stats`]: Wilcoxon signed-rank, Friedman mean ranks, and Holm-adjusted
//!   pairwise comparisons.
//!
//! Graphs are immutable after construction and safe to share across threads;
//! all solver state is confined to explicitly passed RNGs, so identical
//! seeds reproduce identical results.

pub mod bits;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod hcsa;
pub mod io;
pub mod levy;
pub mod solution;
pub mod stats;

pub use error::{Error, Result};
pub use exact::{brute_force_mds, exact_mds, ExactResult};
pub use generators::{gen_geometric, gen_planted, GeometricSpec, PlantedSpec};
pub use graph::{dominated_count, is_dominating, Graph};
pub use greedy::greedy_mds;
pub use hcsa::{
    abandon_worst, best_offspring, init_population, one_point_crossover, run_hcsa,
    run_hcsa_observed, HcsaParams, Population, RunResult,
};
pub use io::{load_graph, load_graph_path, parse_graph, write_dimacs, write_edgelist, GraphFormat};
pub use levy::{
    i_inversion, levy_perturb, sample_levy_magnitude, step_length, theta_from_magnitude, LevyParams,
};
pub use solution::{filter, fitness, repair, CandidateSolution};
pub use stats::{
    friedman_mean_ranks, holm_adjust, pairwise_wilcoxon_holm, sign_summary, wilcoxon_signed_rank,
    FriedmanResult, PairedSamples, PairwiseComparison, RankSummary,
};
