//! Competition graphs of digraphs, with a focus on multipartite tournaments.
//!
//! Two vertices are adjacent in the competition graph `C(D)` of a digraph `D`
//! when they share an out-neighbor (a common prey). The m-step variant `C^m(D)`
//! uses common m-step prey, i.e. walks of length exactly m. This crate computes
//! those graphs through a Boolean-matrix kernel, analyzes how the sequence
//! `C^1(D), C^2(D), ...` settles into its eventual cycle (competition index and
//! period), strips sinks layer by layer (sink elimination), classifies the
//! walks that feed eliminated vertices, and ships generators plus a claim
//! verification suite over generated corpora.
//!
//! Entry points:
//! - [`Digraph`]: validated loop-free, digon-free digraphs, optionally flagged
//!   as complete multipartite orientations (k-partite tournaments).
//! - [`competition::competition_profile`]: index/period data of the graph
//!   sequence, via eventually periodic powers of the adjacency matrix.
//! - [`sink::sink_sequence`]: the layers `W_0, W_1, ...` of repeated sink
//!   removal and what remains when the process stalls.
//! - [`structure`]: directed triangles, induced 4-cycles, typed walks, score
//!   sequences, Frobenius numbers.
//! - [`generate`]: deterministic and seeded instance families.
//! - [`verify`]: per-instance claim checkers and the corpus suite runner.
//!
//! The `compidx` binary exposes the same machinery as a CLI (`analyze`, `gen`,
//! `verify`, `power`); the `examples/` directory walks through each capability.

pub mod cli;
pub mod competition;
pub mod connectivity;
pub mod digraph;
pub mod generate;
pub mod graph;
pub mod matrix;
pub mod sink;
pub mod structure;
pub mod verify;

mod util;

pub use competition::{competition_graph, competition_profile, m_step_competition_graph, CompetitionProfile, PowerWindow};
pub use connectivity::{cycle_gcd, primitivity, strongly_connected_components, PrimitivityReport};
pub use digraph::{Digraph, DigraphError};
pub use generate::Seed;
pub use graph::SimpleGraph;
pub use matrix::BoolMatrix;
pub use sink::{sink_sequence, SinkSequence, TerminalKind};
pub use verify::{check_claim, check_instance, run_suite, Caps, ClaimId, ClaimResult, CorpusSpec, SuiteConfig, SuiteReport};
