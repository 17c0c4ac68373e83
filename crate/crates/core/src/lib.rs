//! Exact verification toolkit for the g-extra connectivity of graph products.
//!
//! The crate builds simple undirected graphs and their strong/Cartesian
//! products, computes structural invariants (girth, vertex connectivity,
//! hypothesis reports), determines the g-extra connectivity κ_g exactly by
//! two independent methods (a subset-enumeration oracle and a connected-set
//! branch-and-bound), evaluates the closed-form predictions those values are
//! compared against, and checks the PMC-model diagnosability consequences.
//!
//! All solvers are deterministic: repeated runs return the same values and
//! witnesses, including under the default rayon parallelism (`parallel`
//! feature). Building with `--no-default-features` yields a fully sequential
//! crate with no rayon dependency.

#![forbid(unsafe_code)]

pub mod error;
pub mod extra;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod named;
pub mod pmc;
pub mod product;
pub mod set;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use set::VertexSet;

/// True when a caller-requested parallel run can actually use rayon.
///
/// With the `parallel` feature disabled this is always false and every
/// algorithm takes its sequential path.
#[must_use]
pub fn effective_parallel(requested: bool) -> bool {
    cfg!(feature = "parallel") && requested
}
