//! Exact computation with binary dot product representations of graphs.
//!
//! A graph `G` has a binary dot product representation of dimension `d` with
//! threshold `p` when every vertex can be assigned a 0/1 vector of length `d`
//! so that two distinct vertices are adjacent if and only if the dot product
//! of their vectors is at least `p` (equivalently: sets over a `d`-element
//! ground set meeting in at least `p` points). The least such `d` is the
//! p-intersection number `theta_p(G)`.
//!
//! The crate provides:
//!
//! * a compact bit-row graph type with graph6 / edge-list I/O, canonical
//!   forms, induced-subgraph search, twin reductions and blow-ups
//!   ([`graph`], [`graph6`], [`canon`], [`induced`], [`twins`], [`blowup`]);
//! * an exact, budgeted decision procedure for `theta_p(G) <= d` producing
//!   verifiable certificates, plus an edge clique cover oracle for `p = 1`
//!   ([`solver`], [`rep`], [`ecc`]);
//! * executable forms of the explicit characterizations of the classes with
//!   `theta_{d-1} <= d` and `theta_{d-2} <= d`: forbidden-family builders,
//!   three-way condition checkers and a constructive representation builder
//!   ([`family`], [`recognize`], [`builder`], [`star`]);
//! * enumeration of minimal forbidden induced subgraphs for small parameters
//!   with persistent, diff-friendly catalogs ([`enumerate`], [`mfis`]);
//! * the verification suite wiring everything together ([`suite`]).

pub mod bits;
pub mod bitset;
pub mod blowup;
pub mod builder;
pub mod canon;
pub mod clique;
pub mod ecc;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod induced;
pub mod mfis;
pub mod named;
pub mod patterns;
pub mod recognize;
pub mod rep;
pub mod solver;
pub mod star;
pub mod suite;
pub mod twins;

pub use bits::BitVector;
pub use blowup::{BlowUpPattern, Part};
pub use error::{Error, Result};
pub use graph::Graph;
pub use named::NamedGraphSpec;
pub use rep::BinaryRepresentation;
pub use solver::{decide_theta_leq, theta_p, Decision, SearchConfig, ThetaResult};
