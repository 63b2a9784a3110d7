use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{poisson, PhasePolynomial};
use crate::lie::BracketExpr;
use crate::{Error, Result};

/// Default cap on the number of monomials in any intermediate polynomial.
pub const DEFAULT_MONOMIAL_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricKind {
    /// `M = I`.
    Euclidean,
    /// `M = I + S(q)` with `S` symmetric, entries of degree ≤ 2.
    General,
}

/// `A ↦ T = ½ pᵀ M(q) p`, `B ↦ V(q)`.
#[derive(Clone, Debug)]
pub struct MechanicalSystem {
    pub t: PhasePolynomial,
    pub v: PhasePolynomial,
}

fn exponents(n: usize, max_total: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                let used: u32 = e.iter().sum();
                (0..=max_total - used).map(move |k| {
                    let mut e = e.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    out
}

fn small_int(rng: &mut impl Rng, bound: i64) -> BigRational {
    BigRational::from_integer(rng.gen_range(-bound..=bound).into())
}

/// Dense polynomial in `q` of total degree ≤ `degree` with integer
/// coefficients in `[-bound, bound]`.
fn random_q_polynomial(rng: &mut impl Rng, n: usize, degree: u32, bound: i64) -> PhasePolynomial {
    let zero_p = vec![0; n];
    exponents(n, degree)
        .iter()
        .fold(PhasePolynomial::zero(n), |acc, e| {
            &acc + &PhasePolynomial::monomial(n, e, &zero_p, small_int(rng, bound))
        })
}

/// Sparse random polynomial in `(q, p)`: up to `terms` monomials with each
/// exponent ≤ `max_exp` and coefficients `a/b`, `|a| ≤ 5`, `1 ≤ b ≤ 3`.
pub fn random_polynomial(
    rng: &mut impl Rng,
    n: usize,
    max_exp: u32,
    terms: usize,
) -> PhasePolynomial {
    (0..terms).fold(PhasePolynomial::zero(n), |acc, _| {
        let e: Vec<u32> = (0..2 * n).map(|_| rng.gen_range(0..=max_exp)).collect();
        let c = BigRational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into());
        &acc + &PhasePolynomial::monomial(n, &e[..n], &e[n..], c)
    })
}

impl MechanicalSystem {
    /// `T = ½ Σ M_ij(q) p_i p_j` for a symmetric matrix of `q`-polynomials.
    pub fn with_metric(metric: &[Vec<PhasePolynomial>], v: PhasePolynomial) -> Result<Self> {
        let n = v.n();
        if metric.len() != n || metric.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument(format!("metric must be {n}x{n}")));
        }
        if !v.is_p_free() || metric.iter().flatten().any(|m| !m.is_p_free()) {
            return Err(Error::InvalidArgument(
                "potential and metric must not depend on p".into(),
            ));
        }
        let half = BigRational::new(1.into(), 2.into());
        let mut t = PhasePolynomial::zero(n);
        for i in 0..n {
            for j in 0..n {
                if metric[i][j] != metric[j][i] {
                    return Err(Error::InvalidArgument("metric must be symmetric".into()));
                }
                let pp = PhasePolynomial::p(n, i).try_mul(&PhasePolynomial::p(n, j))?;
                t = t.try_add(&metric[i][j].try_mul(&pp)?.scale(&half))?;
            }
        }
        Ok(MechanicalSystem { t, v })
    }

    /// `T = ½ |p|²`.
    pub fn euclidean(v: PhasePolynomial) -> Result<Self> {
        let n = v.n();
        let metric = identity(n);
        Self::with_metric(&metric, v)
    }

    /// Random system with a dense potential of total degree ≤ `v_degree`.
    pub fn random(rng: &mut impl Rng, n: usize, kind: MetricKind, v_degree: u32) -> Self {
        let v = random_q_polynomial(rng, n, v_degree, 9);
        let mut metric = identity(n);
        if kind == MetricKind::General {
            for i in 0..n {
                for j in i..n {
                    let s = random_q_polynomial(rng, n, 2, 3)
                        .scale(&BigRational::new(1.into(), 10.into()));
                    metric[i][j] = &metric[i][j] + &s;
                    metric[j][i] = metric[i][j].clone();
                }
            }
        }
        Self::with_metric(&metric, v).expect("well-formed random system")
    }

    /// `count` systems drawn from a ChaCha stream seeded with `seed`.
    pub fn random_samples(
        seed: u64,
        count: usize,
        n: usize,
        kind: MetricKind,
        v_degree: u32,
    ) -> Vec<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| Self::random(&mut rng, n, kind, v_degree))
            .collect()
    }

    /// Evaluates a bracket word with `A ↦ T`, `B ↦ V`.
    pub fn eval(&self, word: &BracketExpr) -> Result<PhasePolynomial> {
        self.eval_memo(word, &mut HashMap::new(), DEFAULT_MONOMIAL_BUDGET)
    }

    /// As `eval`, reusing `memo` across words and failing once a polynomial
    /// exceeds `budget` monomials.
    pub fn eval_memo(
        &self,
        word: &BracketExpr,
        memo: &mut HashMap<BracketExpr, PhasePolynomial>,
        budget: usize,
    ) -> Result<PhasePolynomial> {
        if let Some(hit) = memo.get(word) {
            return Ok(hit.clone());
        }
        let value = match (word.as_leaf(), word.children()) {
            (Some(crate::lie::Symbol::A), _) => self.t.clone(),
            (Some(crate::lie::Symbol::B), _) => self.v.clone(),
            (None, Some((l, r))) => {
                let l = self.eval_memo(l, memo, budget)?;
                let r = self.eval_memo(r, memo, budget)?;
                poisson(&l, &r)?
            }
            (None, None) => unreachable!("bracket without children"),
        };
        if value.len() > budget {
            return Err(Error::ResourceLimit {
                what: "polynomial monomials",
                needed: value.len(),
                limit: budget,
            });
        }
        memo.insert(word.clone(), value.clone());
        Ok(value)
    }
}

fn identity(n: usize) -> Vec<Vec<PhasePolynomial>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        PhasePolynomial::constant(n, BigRational::one())
                    } else {
                        PhasePolynomial::zero(n)
                    }
                })
                .collect()
        })
        .collect()
}
