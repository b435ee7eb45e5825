//! Competition graphs of d-partial orders.
//!
//! A d-partial order is the digraph `D_S` on a finite point set `S` in R^d
//! with an arc `(x, v)` whenever `x` strictly dominates `v` in every
//! coordinate. Its competition graph joins two vertices that share a common
//! prey. For d = 3 the competition structure is
//! governed by a family of homothetic equilateral triangles in the plane
//! `x1 + x2 + x3 = 0`, and this crate implements that calculus exactly over
//! arbitrary-precision rationals:
//!
//! * [`exactgeom`] — apexes, triangle corners, regions, crossing, the
//!   type-k arrow relation, and tail-biting sequences;
//! * [`graphs`] — a labelled graph type plus recognition (chordal,
//!   diamond-free, block, interval, caterpillar) and generators;
//! * [`poset`] — point sets, the induced digraph, and competition graphs;
//! * [`builder`] — constructive triangle representations for block graphs
//!   and their conversion into verified 3-partial orders;
//! * [`analysis`] — the dimension classifier, executable lemma checkers,
//!   the monochromatic-clique extraction pipeline, and sampling harnesses;
//! * [`oracle`] — independent brute-force reference implementations used to
//!   cross-check everything above.
//!
//! All predicates are decided exactly; floating point appears only when
//! rendering SVG in the companion CLI.

pub mod analysis;
pub mod builder;
pub mod error;
pub mod exactgeom;
pub mod graphs;
pub mod oracle;
pub mod poset;
pub mod rational;

pub use error::Error;
pub use rational::Rational;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
