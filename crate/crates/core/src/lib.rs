//! Minimum hub cover toolkit.
//!
//! A *hub* is a vertex together with its incident edges and the edges among
//! its neighbours. A hub cover is a vertex set whose hubs together contain
//! every edge. This crate provides exact and heuristic solvers for the
//! minimum hub cover problem, seeded benchmark generators, a performance
//! harness, and a graphlet-based subgraph matcher that uses hub covers as
//! query plans.

pub mod bench;
pub mod cover;
pub mod error;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod io;
pub mod ip;
pub mod lp;
pub mod matcher;
pub mod oracle;
pub mod solvers;

pub use cover::{hub_covered_edges, is_hub_cover, is_triangle_free, is_vertex_cover, verify_solution};
pub use cover::{HubCoverSolution, SolveStatus};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Graphlet, Vertex};
pub use ip::{build_ip, IpModel};
pub use solvers::{Algorithm, SolverConfig};
