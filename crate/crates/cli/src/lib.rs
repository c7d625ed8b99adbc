//! Command-line front end for the `imtw` library: corpus generation, decompositions, solvers,
//! transforms, and the verification harness.

pub mod app;
pub mod report;
pub mod verify;

pub use app::run;
