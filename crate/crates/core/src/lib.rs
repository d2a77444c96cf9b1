//! Verification toolkit for sums of the largest signless Laplacian eigenvalues.
//!
//! For a finite simple graph G with e(G) edges, let q_1 >= ... >= q_n be the
//! eigenvalues of Q(G) = D(G) + A(G) and S_k^+(G) the sum of the k largest
//! (with S_k^+ = S_n^+ for k > n).  The central claim under test everywhere in
//! this crate is
//!
//! ```text
//!     S_k^+(G)  <=  e(G) + k(k+1)/2
//! ```
//!
//! The crate provides two independent evaluation paths — a dense float
//! eigensolver and an exact certification pipeline built on integer
//! characteristic polynomials with Sturm-sequence root isolation — plus the
//! graph machinery to exercise them: structured family generators, exhaustive
//! small-graph enumeration up to isomorphism, the classical eigenvalue-sum
//! bounds, and sweep drivers that escalate near-ties to the exact path.

pub mod bounds;
pub mod charpoly;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod spectral;
pub mod verify;

pub use bounds::{best_applicable, BoundReport};
pub use charpoly::{Relation, RootInterval, RootIntervals, Verdict, VerdictOutcome};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Graph, GraphClass};
pub use poly::IntPoly;
pub use spectral::{Spectrum, SpectrumSource, SymMatrix};
pub use verify::{Mode, SweepReport};
