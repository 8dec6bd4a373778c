//! Regional-change calculus for knot diagrams and related objects.

pub mod calculus;
pub mod cli;
pub mod complex;
pub mod diagram;
pub mod invariants;
