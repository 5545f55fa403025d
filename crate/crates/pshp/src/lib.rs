//! Discrete Helly-type machinery for pseudohalfplane hypergraphs.
//!
//! The library revolves around ordered hypergraphs (vertices `0..n` in a
//! fixed order) and the ABA-free property. On top of that sit:
//!
//! - [`extremal`]: top/bottom labeled families, unskippable and extremal
//!   vertices, and the circular slot order every edge meets in an arc;
//! - [`helly`]: constructive small hitting sets and covers for intersecting
//!   families (bounds 2, 3 and 4 depending on the class), with certificates;
//! - [`coloring`]: proper colorings with 3 or 4 colors for the same classes;
//! - [`generators`]: halfplane families over exact rational points, wiring
//!   diagrams, tightness families and seeded random instances;
//! - [`oracle`]: budgeted exhaustive baselines (minimum hitting set, minimum
//!   cover, chromatic number, realizability searches, degeneracy);
//! - [`instance`]: a canonical JSON interchange format;
//! - [`suite`]: the differential checker that runs algorithms against
//!   oracles and the structure lemmas over generated instance streams.

pub mod coloring;
pub mod delta;
pub mod extremal;
pub mod generators;
pub mod geometry;
pub mod helly;
pub mod hypergraph;
pub mod instance;
pub mod oracle;
pub mod suite;
pub mod wiring;

pub use extremal::{ExtremalProfile, PshpHypergraph, Side};
pub use hypergraph::{AbaFree, AbaWitness, Hyperedge, OrderedHypergraph};
