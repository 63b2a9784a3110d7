//! Structure, graded dimensions and entropy of the Lie algebra of classical
//! mechanics: the Lie algebra free in the class of polynomially graded Lie
//! algebras on a generator `A` of degree 2 (kinetic energy) and a generator
//! `B` of degree 0 (potential energy).
//!
//! The crate is organised bottom-up:
//!
//! * [`lie`]: bracket expressions, the degree/order grading and the Lazard
//!   elimination that produces the generating sets `Z` and `X = [Z, A]`.
//! * [`series`]: truncated power series over big integers, the generating
//!   function iteration for `x(t)`, its Euclidean capped variant and tree counts.
//! * [`dims`]: Witt-type dimension formulas and the assembled order/degree tables.
//! * [`entropy`]: complex dynamics of `(x, y) -> (x + y, y (x + y))`, root
//!   finding for the entropy constants, grid scans and asymptotic fits.
//! * [`poisson`]: an exact canonical Poisson bracket on phase-space polynomials
//!   used as an independent oracle for the grading laws.
//! * [`refdata`]: published reference values, and [`cli`]: the command line.

pub mod cli;
pub mod dims;
pub mod entropy;
mod error;
pub mod lie;
mod par;
pub mod poisson;
pub mod refdata;
pub mod series;

pub use error::{Error, Result};
