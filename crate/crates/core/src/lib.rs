//! Cycle packing versus cycle covering in undirected, directed and
//! bidirected graphs.
//!
//! For a prescribed vertex set `S` (or edge set `F`) the engines in
//! [`duality`] produce a family of disjoint cycles together with a set of
//! vertices (or edges) meeting every cycle through `S` (or `F`), such that the
//! packing meets the target at least as often as the hitting set is large.
//! The directed engines read both sides off an exact rational simplex over
//! totally unimodular constraint matrices. The bidirected vertex engine runs
//! the same LP on the vertex split, but that matrix is not 1-regular in
//! general; when the optimum is fractional it falls back to the exhaustive
//! oracles and says so in the report. The undirected edge engine works in
//! the cycle space over GF(2).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, generators and
//! the command line live in the `cyclepack` crate.

#![no_std]

extern crate alloc;

pub mod bitset;
pub mod cycles;
pub mod duality;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod lp;
pub mod matrix;
pub mod oracles;
pub mod rational;
pub mod widths;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use graph::{
    BidirectedGraph, CycleGraph, DirectedGraph, EdgeCut, GraphKind, Sign, SignedCycle,
    UndirectedGraph,
};
pub use rational::Rational;
