use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Polynomial with rational coefficients in `q_1..q_n, p_1..p_n`.
///
/// Monomials are keyed by their exponent vector `[q_1..q_n, p_1..p_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhasePolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl PhasePolynomial {
    pub fn zero(n: usize) -> Self {
        PhasePolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        Self::monomial(n, &vec![0; n], &vec![0; n], c)
    }

    pub fn monomial(n: usize, q: &[u32], p: &[u32], c: BigRational) -> Self {
        assert!(
            q.len() == n && p.len() == n,
            "exponent vectors must have length n"
        );
        let mut out = Self::zero(n);
        if !c.is_zero() {
            out.terms.insert([q, p].concat(), c);
        }
        out
    }

    /// The coordinate `q_i` (0-based `i`).
    pub fn q(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(n, &e, &vec![0; n], BigRational::one())
    }

    /// The momentum `p_i` (0-based `i`).
    pub fn p(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(n, &vec![0; n], &e, BigRational::one())
    }

    /// Degrees of freedom.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &[u32], &BigRational)> {
        self.terms
            .iter()
            .map(|(e, c)| (&e[..self.n], &e[self.n..], c))
    }

    pub fn coeff(&self, q: &[u32], p: &[u32]) -> BigRational {
        self.terms
            .get(&[q, p].concat())
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Total degrees in `p` of the monomials present.
    pub fn p_degrees(&self) -> BTreeSet<u32> {
        self.terms
            .keys()
            .map(|e| e[self.n..].iter().sum())
            .collect()
    }

    /// True if no monomial involves a momentum.
    pub fn is_p_free(&self) -> bool {
        self.p_degrees().iter().all(|&d| d == 0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        PhasePolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut d = e.clone();
                d[var] -= 1;
                out.add_term(d, c * BigRational::from_integer(BigInt::from(e[var])));
            }
        }
        out
    }

    /// `∂/∂q_i`.
    pub fn dq(&self, i: usize) -> Self {
        self.derivative(i)
    }

    /// `∂/∂p_i`.
    pub fn dp(&self, i: usize) -> Self {
        self.derivative(self.n + i)
    }
}

/// `{f, g} = Σ_i ∂f/∂q_i ∂g/∂p_i − ∂f/∂p_i ∂g/∂q_i`.
pub fn poisson(f: &PhasePolynomial, g: &PhasePolynomial) -> Result<PhasePolynomial> {
    f.check_same(g)?;
    let mut out = PhasePolynomial::zero(f.n);
    for i in 0..f.n {
        out = out.try_add(&f.dq(i).try_mul(&g.dp(i))?)?;
        out = out.try_add(&-f.dp(i).try_mul(&g.dq(i))?)?;
    }
    Ok(out)
}

impl Neg for PhasePolynomial {
    type Output = PhasePolynomial;
    fn neg(self) -> PhasePolynomial {
        self.scale(&-BigRational::one())
    }
}

impl Add for &PhasePolynomial {
    type Output = PhasePolynomial;
    /// Panics on mismatched dimensions; see `try_add`.
    fn add(self, rhs: &PhasePolynomial) -> PhasePolynomial {
        self.try_add(rhs).expect("dimension mismatch")
    }
}

impl Sub for &PhasePolynomial {
    type Output = PhasePolynomial;
    fn sub(self, rhs: &PhasePolynomial) -> PhasePolynomial {
        self.try_add(&-rhs.clone()).expect("dimension mismatch")
    }
}

impl Mul for &PhasePolynomial {
    type Output = PhasePolynomial;
    fn mul(self, rhs: &PhasePolynomial) -> PhasePolynomial {
        self.try_mul(rhs).expect("dimension mismatch")
    }
}

impl fmt::Display for PhasePolynomial {
    /// Terms in descending exponent order, e.g. `q1^2 p2 + 2 q1 q2 p1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut vars = Vec::new();
            for (j, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let name = if j < self.n {
                    format!("q{}", j + 1)
                } else {
                    format!("p{}", j - self.n + 1)
                };
                vars.push(if x == 1 { name } else { format!("{name}^{x}") });
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag} ")?;
                }
                f.write_str(&vars.join(" "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn canonical_pair() {
        let b = poisson(&PhasePolynomial::q(1, 0), &PhasePolynomial::p(1, 0)).unwrap();
        assert_eq!(b, PhasePolynomial::constant(1, r(1, 1)));
        assert_eq!(b.to_string(), "1");
    }

    #[test]
    fn mismatched_dimensions() {
        let e = poisson(&PhasePolynomial::q(1, 0), &PhasePolynomial::p(2, 0));
        assert!(matches!(e, Err(Error::DimensionMismatch(1, 2))));
    }

    #[test]
    fn display_is_sorted_and_signed() {
        let q1 = PhasePolynomial::q(2, 0);
        let p2 = PhasePolynomial::p(2, 1);
        let f = &(&q1 * &q1) - &(&p2.scale(&r(3, 2)));
        assert_eq!(f.to_string(), "q1^2 - 3/2 p2");
        assert_eq!(f.p_degrees().into_iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    // Small polynomials in 2 degrees of freedom, exponents ≤ 2.
    fn small_poly() -> impl Strategy<Value = PhasePolynomial> {
        prop::collection::vec((prop::array::uniform4(0u32..3), -4i64..5, 1i64..4), 0..5).prop_map(
            |terms| {
                terms
                    .into_iter()
                    .fold(PhasePolynomial::zero(2), |acc, (e, a, b)| {
                        &acc + &PhasePolynomial::monomial(2, &e[..2], &e[2..], r(a, b))
                    })
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn antisymmetric(f in small_poly(), g in small_poly()) {
            let fg = poisson(&f, &g).unwrap();
            let gf = poisson(&g, &f).unwrap();
            prop_assert!((&fg + &gf).is_zero());
        }

        #[test]
        fn jacobi(f in small_poly(), g in small_poly(), h in small_poly()) {
            let a = poisson(&f, &poisson(&g, &h).unwrap()).unwrap();
            let b = poisson(&g, &poisson(&h, &f).unwrap()).unwrap();
            let c = poisson(&h, &poisson(&f, &g).unwrap()).unwrap();
            prop_assert!((&(&a + &b) + &c).is_zero());
        }

        #[test]
        fn leibniz(f in small_poly(), g in small_poly(), h in small_poly()) {
            let lhs = poisson(&f, &(&g * &h)).unwrap();
            let rhs = &(&poisson(&f, &g).unwrap() * &h) + &(&g * &poisson(&f, &h).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
