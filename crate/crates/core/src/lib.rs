//! Decides, for a finite simple graph, whether the toric ideal of the graph
//! is a complete intersection and whether its edge ring is normal.
//!
//! Two independent routes are always available and cross-checked:
//!
//! * a combinatorial route built on even closed walks, chord classification,
//!   block structure and the structural theorems about minimal generators;
//! * a brute-force algebraic route ([`fiber`]) that computes the Graver
//!   basis by conformal minimality and the exact minimal generator count mu
//!   by graded fiber connectivity.
//!
//! The [`analyzer`] module combines both into verdicts; the CLI in
//! `src/main.rs` exposes them as subcommands.

pub mod analyzer;
pub mod blocks;
pub mod budget;
pub mod corpus;
pub mod cycles;
pub mod error;
pub mod families;
pub mod fiber;
pub mod graph;
pub mod report;
pub mod walks;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{EdgeMonomial, GDegree, Graph};
pub use walks::{Binomial, ClosedWalk};
