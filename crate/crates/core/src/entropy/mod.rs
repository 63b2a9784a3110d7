//! Numerical dynamics of `φ(x, y) = (x + y, y (x + y))` started at `(0, t^2)`.
//!
//! The `x`-coordinate of the fixed point reached from `(0, t^2)` is `x(t)`.
//! The entropy of the Lie algebra is `1/α`, where `α` is the zero of
//! `1 - t - x(t)` on `[0, β)` and `β` is the first real point where the
//! orbit stops converging.

mod asymptotics;
mod grid;
mod orbit;
mod roots;

pub use asymptotics::{fit_asymptotics, AsymptoticFit, FittedConstant};
pub use grid::{scan_grid, scan_grid_sequential, GridCell, GridScan, Window};
pub use orbit::{
    eval_orbit, in_divergence_region, trapping_check, trapping_function, OrbitResult, OrbitStatus,
    TrappingReport, DEFAULT_MAX_ITER, DEFAULT_TOL,
};
pub use roots::{
    estimate_beta, estimate_beta_euclidean, estimate_beta_with, solve_alpha, solve_alpha_euclidean,
    AlphaResult, EuclideanAlpha, ALPHA_E_ORDERS, BETA_MAX_ITER,
};
