//! Exact Staller-Maker-Breaker domination numbers.
//!
//! The Maker-Breaker domination game on a graph `G` is the Maker-Breaker
//! game on the closed neighborhood hypergraph `H_G`: Staller (Maker) wins by
//! claiming a whole `N[v]`, Dominator (Breaker) wins by claiming a dominating
//! set. `γ_SMB(G)` and `γ'_SMB(G)` count the moves Staller needs to win when
//! Dominator, respectively Staller, moves first.
//!
//! * [`graph`]: graphs, graph6 and edge-list parsing, residual graphs,
//!   matchings, tree enumeration.
//! * [`hypergraph`]: bitmask set systems with the delete/shrink operators.
//! * [`solver`]: memoized exact search for the winning numbers.
//! * [`families`]: the once-subdivided trees, their ranks, and the
//!   substructure search that decides `γ'_SMB` on trees.
//! * [`formula`]: closed forms for paths, subdivided stars and caterpillars.
//! * [`play`]: executable strategies, a match runner and strategy checking.
//! * [`harness`]: result records and the exhaustive verification sweeps.

pub mod count;
pub mod error;
pub mod families;
pub mod formula;
pub mod graph;
pub mod harness;
pub mod hypergraph;
pub mod play;
pub mod solver;

pub use count::ExtendedCount;
pub use error::{Error, Result};
pub use graph::{Game, Graph};
pub use hypergraph::Hypergraph;
pub use solver::{SolveResult, Solver, SolverConfig};
