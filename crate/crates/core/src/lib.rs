//! Markov triples and the geometry behind them.
//!
//! The crate is organised bottom-up:
//!
//! * [`triples`]: exact arithmetic on solutions of `x² + y² + z² = 3xyz`,
//!   Vieta flips, reduction to the root and enumeration of the Markov tree.
//! * [`indexing`]: the correspondence between reduced fractions `p/q` in
//!   `[0, 1]` and Markov numbers, computed by Stern–Brocot descent and,
//!   independently, by traces of Christoffel words.
//! * [`norm`]: the stable norm on `ℤ²` (and its convex extension to `ℝ²`)
//!   with certified interval evaluation.
//! * [`conjectures`]: exhaustive checks of the three monotonicity
//!   conjectures, the real-valued monotonicity theorem and a duplicate scan.
//! * [`counting`]: the counting function `M(R)` and its `(log R)²` growth.

pub mod conjectures;
pub mod counting;
mod error;
pub mod indexing;
pub mod interval;
pub mod norm;
pub mod triples;

pub use error::{Error, Result};

pub use conjectures::{Family, TheoremPart, VerificationReport};
pub use indexing::{ChristoffelWord, FreeWord, IntMatrix2, Slope};
pub use norm::{LatticeVector, NormInterval, SymmetryElement};
pub use triples::{Dir, KappaTriple, MarkovTriple, OrderedTriple, TreePath};
