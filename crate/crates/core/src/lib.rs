//! Algorithms for graphs with a tree decomposition of small induced matching width.
//!
//! The crate covers maximum weight independent set and maximum weight induced
//! forest dynamic programs whose state families stay polynomial when every bag
//! touches only few pairwise far-apart edges, packing reductions built on blob
//! graphs and graph powers, a boundaried-type DP engine, and exhaustive oracles
//! used to check all of the above on small inputs.

pub mod boundaried;
pub mod corpus;
pub mod decomp;
pub mod error;
pub mod forest_dp;
pub mod graph;
pub mod mis_traces;
pub mod oracles;
pub mod packing;
pub mod search;
pub mod vertex_set;
pub(crate) mod util;
pub mod weights;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
pub use weights::{Ratio, WeightMap};
