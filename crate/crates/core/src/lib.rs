//! The random greedy `F`-free process on `k`-uniform hypergraphs.
//!
//! Edges of `K_n^k` arrive in a seeded random order and each is kept unless it
//! completes a copy of a fixed pattern `F`. Alongside the process the crate
//! provides exact pattern analysis (densities, balance, predicted exponents), a
//! backtracking embedder, the coupled binomial hypergraph `H_{n,p}` with its
//! pattern-free reduction, and sweep/fit tooling for measuring growth exponents.
//!
//! ```
//! use hyperfree::{analyze, make_clique, run_process, verify_f_free};
//!
//! let triangle = make_clique(3, 2).unwrap();
//! let r = run_process(20, 1.0, &triangle, 7).unwrap();
//! assert!(verify_f_free(&r.final_graph, &triangle));
//! assert_eq!(analyze(&triangle).unwrap().codeg, 2);
//! ```

pub mod analysis;
pub mod combinatorics;
pub mod embed;
pub mod error;
pub mod gnp;
pub mod harness;
pub mod hypergraph;
pub mod pattern;
pub mod process;
pub mod rng;

pub use analysis::{
    analyze, conjectured_cycle_exponent, predicted_exponents, select_root, ExponentSet,
    PatternProfile, Prediction, Rational, RootedPattern,
};
pub use combinatorics::{binomial, colex_rank, colex_unrank, Ranker};
pub use embed::{
    automorphisms, contains_copy, count_copies_containing, count_embeddings,
    creates_copy_with_anchor, distinct_extension_copies, enumerate_rooted_extensions, EmbedOptions,
    Embedder,
};
pub use error::{Error, Result};
pub use gnp::{
    cluster_report, count_extensions, default_p, default_t, sample_gnp, ClusterReport,
    ExtensionCounts, GnpSample,
};
pub use harness::{fit, sweep, Aggregate, FitResult, Quantity, SweepOptions, SweepRecord};
pub use hypergraph::{edge_rank, edge_unrank, Edge, Hypergraph};
pub use pattern::{builtin, make_clique, make_complete_multipartite, make_ell_cycle, Pattern};
pub use process::{
    run_process, run_process_with, verify_f_free, verify_maximal, BirthOrder, ProcessOptions,
    ProcessResult,
};
