//! Combinatorial rigidity of planar graphs and configurations of lines in
//! three-space.
//!
//! The crate pairs the combinatorial side (Laman and Hendrickson graphs,
//! pebble-game sparsity, Henneberg and Jackson–Jordán construction
//! sequences) with the geometric side (lines in the `(a, b, c, d)` chart,
//! their intersection graphs and the Elekes–Sharir transform), and provides
//! Jacobian-rank machinery that certifies local dimensions of the associated
//! line and point-pair systems at sampled configurations.

#![forbid(unsafe_code)]

pub mod connectivity;
pub mod elekes_sharir;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod henneberg;
pub mod numeric;
pub mod report;
pub mod sampler;
pub mod sparsity;
pub mod verify;

pub(crate) mod linalg;
pub(crate) mod seed;

pub use error::{Error, Result};
pub use geometry::{Line, LineConfig, Plane};
pub use graph::Graph;
