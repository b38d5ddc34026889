//! Discrete maximal operators and their commutators with BMO symbols on
//! uniformly sampled 1-D functions, plus a harness that checks pointwise and
//! weak-type inequalities numerically.
//!
//! Cubes are modelled by contiguous index windows of a midpoint grid; every
//! operator takes, at each sample point, a maximum over the windows that
//! contain it.

// NaN-rejecting comparisons are written as negations on purpose.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod corpus;
mod density;
pub mod error;
pub mod grid;
pub mod maximal;
pub mod norms;
mod oscillation;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{Grid1D, SampledFn, Window};
