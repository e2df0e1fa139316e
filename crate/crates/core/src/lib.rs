//! Power graphs of finite groups.
//!
//! The crate builds finite groups as Cayley tables ([`group`]), derives their
//! directed and undirected power graphs together with prime and commuting
//! graphs ([`power_graph`]), runs the graph algorithms needed to classify
//! those graphs ([`algorithms`]), and checks the known structural results
//! over a catalog of concrete groups ([`theorems`]).

pub mod algorithms;
pub mod graph;
pub mod group;
pub mod number_theory;
pub mod power_graph;
pub mod theorems;
