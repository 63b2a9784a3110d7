//! Truncated power series with big-integer coefficients and the generating
//! function iterations for `x(t)` and its Euclidean variant `x_E(t)`.

mod generating;
mod power;
mod trees;

pub use generating::{iterate_x, iterate_x_euclidean};
pub use power::{BiSeries, IntSeries};
pub use trees::{binary_free_trees, euler_transform, free_trees, rooted_trees};
