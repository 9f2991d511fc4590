//! Exact verification engine for two Old Babylonian geometry tablets.
//!
//! * [`geometry`] executes the BM 15285 problem xii figure (a square cut into
//!   sixteen equal wedges) and the YBC 7289 square with diagonals, over exact
//!   rational coordinates, and checks the isosceles Pythagoras identities.
//! * [`proofs`] mechanises the descent argument that √2 is irrational and the
//!   general perfect-square decision for √n.
//! * [`sexagesimal`] reproduces the base-60 constants `1;24,51,10` and
//!   `0;42,25,35`.
//! * [`construction`] is a small line-oriented DSL for straightedge-style
//!   scripts, interpreted against the geometry kernel.
//! * [`svg`] renders figures deterministically.

pub mod construction;
pub mod geometry;
pub mod numeric;
pub mod proofs;
pub mod sexagesimal;
pub mod svg;

pub use numeric::{QuadValue, Rational};
