use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::poly::poisson;
use super::system::{random_polynomial, MechanicalSystem, MetricKind};
use crate::lie::BracketExpr;
use crate::Result;

/// Random bracket word of exactly `order` letters.
pub fn random_word(rng: &mut impl Rng, order: usize) -> BracketExpr {
    assert!(order >= 1, "words have at least one letter");
    if order == 1 {
        return if rng.gen_bool(0.5) {
            BracketExpr::a()
        } else {
            BracketExpr::b()
        };
    }
    let left = rng.gen_range(1..order);
    BracketExpr::bracket(&random_word(rng, left), &random_word(rng, order - left))
}

/// Pass counts of the bracket identities; `failures` lists what broke.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct IdentityReport {
    pub seed: u64,
    pub antisymmetry: usize,
    pub jacobi: usize,
    pub leibniz: usize,
    /// Systems on which `{V,{V,{V,T}}} = 0`.
    pub vvvt: usize,
    /// Nonzero words whose value is homogeneous in `p` of the predicted degree.
    pub graded_words: usize,
    /// Words predicted to vanish that evaluated to zero.
    pub vanishing_words: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks antisymmetry, Jacobi and Leibniz on `triples` random polynomial
/// triples in 2 degrees of freedom, `{V,{V,{V,T}}} = 0` on `systems` random
/// general metrics, and the `p`-degree law on `words` random words of order
/// at most `max_word_order`.
pub fn check_identities(
    seed: u64,
    triples: usize,
    systems: usize,
    words: usize,
    max_word_order: usize,
) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = IdentityReport {
        seed,
        ..Default::default()
    };
    for k in 0..triples {
        let f = random_polynomial(&mut rng, 2, 2, 4);
        let g = random_polynomial(&mut rng, 2, 2, 4);
        let h = random_polynomial(&mut rng, 2, 2, 4);
        let fg = poisson(&f, &g)?;
        if (&fg + &poisson(&g, &f)?).is_zero() {
            report.antisymmetry += 1;
        } else {
            report.failures.push(format!("antisymmetry, triple {k}"));
        }
        let jac = &(&poisson(&f, &poisson(&g, &h)?)? + &poisson(&g, &poisson(&h, &f)?)?)
            + &poisson(&h, &fg)?;
        if jac.is_zero() {
            report.jacobi += 1;
        } else {
            report.failures.push(format!("jacobi, triple {k}"));
        }
        let lhs = poisson(&f, &(&g * &h))?;
        let rhs = &(&fg * &h) + &(&g * &poisson(&f, &h)?);
        if lhs == rhs {
            report.leibniz += 1;
        } else {
            report.failures.push(format!("leibniz, triple {k}"));
        }
    }

    let bbba = BracketExpr::parse("[BBBA]")?;
    let samples: Vec<MechanicalSystem> = (0..systems)
        .map(|_| MechanicalSystem::random(&mut rng, 2, MetricKind::General, 4))
        .collect();
    for (k, sys) in samples.iter().enumerate() {
        if sys.eval(&bbba)?.is_zero() {
            report.vvvt += 1;
        } else {
            report
                .failures
                .push(format!("{{V,{{V,{{V,T}}}}}} nonzero on system {k}"));
        }
    }

    for k in 0..words {
        let order = rng.gen_range(1..=max_word_order);
        let word = random_word(&mut rng, order);
        let sys = &samples[k % samples.len().max(1)];
        let value = sys.eval(&word)?;
        match word.degree() {
            None if value.is_zero() => report.vanishing_words += 1,
            None => report.failures.push(format!("{word} should vanish")),
            Some(_) if value.is_zero() => {}
            Some(d) => {
                let degrees = value.p_degrees();
                if degrees.len() == 1 && degrees.contains(&d) {
                    report.graded_words += 1;
                } else {
                    report
                        .failures
                        .push(format!("{word}: p-degrees {degrees:?}, expected {d}"));
                }
            }
        }
    }
    Ok(report)
}
