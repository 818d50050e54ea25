//! Exact chromatic index and chromatic edge stability computations for
//! small simple graphs.
//!
//! The chromatic edge stability index `es(G)` is the least number of edges
//! whose removal lowers the chromatic index; such an edge set is a
//! mitigating set. This crate computes it exactly, enumerates minimum
//! mitigating sets, implements the recolouring constructions that turn
//! mitigating sets into matchings, and checks known characterisations
//! against exhaustive sweeps of small graphs.

pub mod coloring;
pub mod error;
pub mod graph;
pub mod stability;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, FamilySpec, Graph, Matching};
