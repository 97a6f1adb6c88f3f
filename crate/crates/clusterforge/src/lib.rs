//! Exact combinatorics of word-parameterized snake graphs, polygon
//! triangulations and their cluster expansions.
//!
//! Every word `w` over `{a, b}` determines a triangulated polygon, a snake
//! graph, a continued fraction and six expansion posets whose weighted sums
//! all equal the cluster variable of the arc `gamma_w`. The modules below
//! build these objects exactly, compare them against an independent Ptolemy
//! oracle, and analyse their rank generating functions.

pub mod cluster_engine;
pub mod core;
pub mod expansions;
pub mod par;
pub mod poset;
pub mod rank_analysis;
pub mod sl3;
pub mod snakegraph;
pub mod triangulation;
