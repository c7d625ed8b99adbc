//! Exhaustive reference computations for small graphs.

mod brute;
mod chordal;
mod widths;

pub use brute::*;
pub use chordal::{chordality_test, recognize_imtw_at_most_1, Chordality};
pub use widths::{elimination_bags, exact_width_parameters, exact_width_parameters_capped, ExactWidths, DEFAULT_WIDTH_CAP};
