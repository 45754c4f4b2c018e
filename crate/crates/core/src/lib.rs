//! Exact solvers, constructive move schedules and certificate checking for
//! mobile general position and mobile mutual visibility on small graphs.

pub mod corpus;
pub mod graph;
pub mod mobility;
pub mod numbers;
pub mod position;
pub mod reproduce;
pub mod scan;
pub mod strategies;
pub mod theory;
pub mod vertex_set;

pub use graph::{Graph, GraphError};
pub use vertex_set::{VertexSet, MAX_VERTICES};
