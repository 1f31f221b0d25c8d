//! Betweenness structures of finite metric spaces and the graphs that
//! represent them.
//!
//! The crate is organised around four kinds of objects and the maps
//! between them:
//!
//! * [`Graph`] and [`WeightedGraph`] induce a [`MetricSpace`] through
//!   shortest-path distances;
//! * a [`MetricSpace`] induces a [`BetweennessStructure`], the set of
//!   collinear triples `(x y z)` with `d(x, z) = d(x, y) + d(y, z)`;
//! * a [`BetweennessStructure`] has an adjacency graph, whose edges are the
//!   pairs with no third point between them.
//!
//! On top of that sit graph-class recognizers ([`recognition`]), geodesics
//! ([`geodesic`]), an exact metrizability test ([`metrizability`]), the
//! weighted constructions that produce alternative representations
//! ([`constructions`]) and an exhaustive representation search
//! ([`enumeration`]).
//!
//! All arithmetic is exact: distances are [`Rational`]s.

pub mod cli;
pub mod constructions;
pub mod enumeration;
mod error;
pub mod geodesic;
pub mod graph;
pub mod io;
pub mod lp;
pub mod metric;
pub mod metrizability;
pub mod rational;
pub mod recognition;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Graph, Path, WeightedGraph};
pub use metric::MetricSpace;
pub use rational::Rational;
pub use structure::{BetweennessStructure, Triple};
