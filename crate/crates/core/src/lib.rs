//! Minimum vector rank (`mvr`) and minimum semidefinite rank (`mr+`) of simple
//! graphs, exact rational orthogonal representations of complements of sparse
//! graphs, vector/complement criticality, and a desk-scale checker for the
//! inequality `mvr(G) + mvr(complement G) <= n + 2`.

pub mod cli;
pub mod corpus;
pub mod criticality;
pub mod error;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod rank;
pub mod rational;
pub mod rep;

pub use error::{Error, Result};
pub use graph::Graph;
