//! Cops and Robbers on graphs: the capture relation of finite graphs, optimal pursuit, and
//! ordinal-valued invariants of infinite families.
//!
//! - [`ordinal`]: Cantor-normal-form ordinals below ε₀.
//! - [`graph`]: labeled simple graphs, BFS metrics, rooted sums and family generators.
//! - [`capture`]: the capture relation, `η`, `ρ`, `θ` and the cop-win test.
//! - [`game`]: strategies, simulation and a brute-force game solver.
//! - [`symbolic`]: closed forms for infinite families and ordinal class membership.
//! - [`cli`]: the `copwin` command line.

pub mod capture;
pub mod cli;
pub mod game;
pub mod graph;
pub mod ordinal;
pub mod symbolic;

pub use capture::{CaptureTable, CaptureValue};
pub use graph::{GenSpec, Graph, RootedGraph, VertexId};
pub use ordinal::Ordinal;
