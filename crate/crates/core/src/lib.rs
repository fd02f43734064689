//! Maximum degree- and diameter-bounded subgraphs of the k-dimensional mesh.
//!
//! The crate builds the recursive lattice constructions (`E`, `E'`, `O`, `O'`,
//! the degree-3 family `G`, and the small-degree edge, path and cycle graphs),
//! machine-checks their degree and distance conditions, counts lattice points
//! in `l1` balls exactly, and solves tiny instances exhaustively.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod formulas;
pub mod graph_io;
pub mod lattice;
pub mod solver;
pub mod verification;

pub use error::{Error, Result};
pub use exec::Parallelism;
pub use lattice::{l1_distance, CenteredGraph, Family, Hops, LatticeParity, MeshGraph, Point};
