//! Enumeration and analysis of principal graph pairs (PGPs).
//!
//! A PGP is a pair of depth-graded bipartite graphs with a duality
//! involution and a working depth. This crate enumerates them
//! isomorph-free up to an index bound via canonical construction paths,
//! and provides the obstruction, spectral, number-theoretic and
//! fusion-ring machinery used to classify the survivors.

pub mod bivar;
pub mod canonical;
pub mod codec;
pub mod enumerate;
pub mod fixtures;
pub mod fusion;
pub mod graph;
pub mod invariants;
pub mod ocneanu;
pub mod oracle;
pub mod poly;
pub mod spectra;
pub mod weeds;

pub use graph::{Bigraph, Pgp, Side, Vertex};
