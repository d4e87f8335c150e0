//! Sensitivity analysis of Boolean functions, with a focus on monotone
//! functions.
//!
//! * [`bfcore`] holds the bit-packed [`TruthTable`] and exact measures:
//!   partial derivatives, activities, pointwise and average sensitivity,
//!   monotonicity, minimal ones / maximal zeros and layer profiles.
//! * [`asymptotics`] evaluates the closed-form estimates of the expected
//!   average sensitivity of a typical monotone function, the parameter
//!   triples describing the typical layer structure and the density of
//!   functions around them.
//! * [`enumeration`] walks every monotone function for `n <= 6` and
//!   aggregates exact statistics.
//! * [`sampler`] draws approximately uniform monotone functions with a
//!   single-flip Markov chain for sizes beyond enumeration.
//! * [`report`] renders the analysis, curve and verification tables used by
//!   the command-line tool.

pub mod asymptotics;
pub mod bfcore;
pub mod enumeration;
mod error;
pub mod report;
pub mod sampler;

pub use bfcore::{ExactFraction, TruthTable};
pub use error::{Error, Result};
