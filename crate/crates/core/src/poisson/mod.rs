//! Exact canonical Poisson brackets on polynomials in `(q, p)`.
//!
//! Used as an oracle: bracket words in `A` and `B` are evaluated on concrete
//! simple mechanical systems `T = ½ pᵀ M(q) p`, `V = V(q)`.

mod checks;
mod poly;
mod rank;
mod system;

pub use checks::{check_identities, random_word, IdentityReport};
pub use poly::{poisson, PhasePolynomial};
pub use rank::{independence_rank, rank_until_stable, RankHistory, RankReport};
pub use system::{random_polynomial, MechanicalSystem, MetricKind, DEFAULT_MONOMIAL_BUDGET};
