//! Decide whether the maximal homogeneous ideal `m = (x_1, ..., x_n)` is an
//! associated prime of `S / NI(G)^2`, where `NI(G)` is the closed
//! neighborhood ideal of a simple graph `G`.
//!
//! Two independent routes are provided and cross-checked:
//!
//! * [`engine`] searches for a witness monomial `f` with `NI(G)^2 : f = m`
//!   directly from ideal membership.
//! * [`criteria`] decides the same question combinatorially: vertex
//!   diameter-2-criticality when `diam(G) <= 2`, and a vertex-cover
//!   certificate on the distance-3 hypergraph when `diam(G) >= 3`.

pub mod commands;
pub mod criteria;
pub mod engine;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph_spec;
pub mod monomial;
pub mod report;
pub mod subset_search;
pub mod vertex_set;

pub use graph::{Distance, Graph, GraphError, Subgraph};
pub use monomial::{closed_neighborhood_ideal, edge_ideal, graph_from_edge_ideal, IdealBudget, IdealError, Monomial, MonomialIdeal};
pub use vertex_set::VertexSet;
