use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Power series in one variable truncated after `t^N`.
///
/// Coefficient `k` of any sum or product depends only on coefficients `<= k`
/// of the operands, so truncation commutes with arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeries {
    var: String,
    coeffs: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct IntSeriesJson {
    var: String,
    #[serde(rename = "N")]
    n: usize,
    coeffs: Vec<String>,
}

impl IntSeries {
    pub fn zero(truncation: usize) -> Self {
        Self::with_var("t", truncation)
    }

    pub fn with_var(var: &str, truncation: usize) -> Self {
        IntSeries {
            var: var.to_string(),
            coeffs: vec![BigInt::zero(); truncation + 1],
        }
    }

    /// Builds from leading coefficients, padding with zeros or dropping terms above `t^truncation`.
    pub fn from_coeffs<I, T>(truncation: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(truncation);
        for (c, v) in s.coeffs.iter_mut().zip(coeffs) {
            *c = v.into();
        }
        s
    }

    /// `c * t^power`.
    pub fn monomial(truncation: usize, power: usize, c: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(truncation);
        if power <= truncation {
            s.coeffs[power] = c.into();
        }
        s
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `[t^k]`; zero above the truncation order.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [BigInt] {
        &mut self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        !self.coeffs.iter().any(Signed::is_negative)
    }

    pub fn truncate(&self, truncation: usize) -> Self {
        let mut s = Self::with_var(&self.var, truncation);
        for (dst, src) in s.coeffs.iter_mut().zip(&self.coeffs) {
            *dst = src.clone();
        }
        s
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntSeries {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let n = self.truncation().min(other.truncation());
        IntSeries {
            var: self.var.clone(),
            coeffs: (0..=n)
                .map(|k| f(&self.coeffs[k], &other.coeffs[k]))
                .collect(),
        }
    }

    /// Truncated product; skips zero coefficients of `self`.
    pub fn mul_truncated(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let mut out = Self::with_var(&self.var, n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Evaluates the polynomial at a real point.
    pub fn eval_f64(&self, t: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&IntSeriesJson {
            var: self.var.clone(),
            n: self.truncation(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        })?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: IntSeriesJson = serde_json::from_str(s)?;
        if raw.coeffs.len() != raw.n + 1 {
            return Err(Error::InvalidArgument(format!(
                "series with N = {} needs {} coefficients, got {}",
                raw.n,
                raw.n + 1,
                raw.coeffs.len()
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| {
                c.parse::<BigInt>()
                    .map_err(|e| Error::InvalidArgument(format!("coefficient {c:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        Ok(IntSeries {
            var: raw.var,
            coeffs,
        })
    }
}

impl Add for &IntSeries {
    type Output = IntSeries;
    fn add(self, rhs: &IntSeries) -> IntSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &IntSeries {
    type Output = IntSeries;
    fn sub(self, rhs: &IntSeries) -> IntSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &IntSeries {
    type Output = IntSeries;
    fn mul(self, rhs: &IntSeries) -> IntSeries {
        self.mul_truncated(rhs)
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != BigInt::from(1) {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "{}", self.var)?;
                    } else {
                        write!(f, "{}^{k}", self.var)?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.truncation() + 1)
    }
}

/// Power series in `(t, u)` truncated after `t^N` and `u^M`; `coeff(n, m)` is `[t^n u^m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    coeffs: Vec<Vec<BigInt>>,
}

impl BiSeries {
    pub fn zero(max_t: usize, max_u: usize) -> Self {
        BiSeries {
            coeffs: vec![vec![BigInt::zero(); max_u + 1]; max_t + 1],
        }
    }

    /// Embeds a series in `t` as a `u`-free bivariate series.
    pub fn from_t_series(s: &IntSeries, max_u: usize) -> Self {
        let mut out = Self::zero(s.truncation(), max_u);
        for (n, c) in s.coeffs().iter().enumerate() {
            out.coeffs[n][0] = c.clone();
        }
        out
    }

    pub fn max_t(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn max_u(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn coeff(&self, n: usize, m: usize) -> BigInt {
        self.coeffs
            .get(n)
            .and_then(|row| row.get(m))
            .cloned()
            .unwrap_or_default()
    }

    pub fn set(&mut self, n: usize, m: usize, c: impl Into<BigInt>) {
        if n <= self.max_t() && m <= self.max_u() {
            self.coeffs[n][m] = c.into();
        }
    }

    pub fn add_to(&mut self, n: usize, m: usize, c: &BigInt) {
        if n <= self.max_t() && m <= self.max_u() {
            self.coeffs[n][m] += c;
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().flatten().all(|c| !c.is_negative())
    }

    pub fn mul_truncated(&self, other: &Self) -> Self {
        let nt = self.max_t().min(other.max_t());
        let nu = self.max_u().min(other.max_u());
        let mut out = Self::zero(nt, nu);
        for i in 0..=nt {
            for j in 0..=nu {
                let a = &self.coeffs[i][j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..=(nt - i) {
                    for l in 0..=(nu - j) {
                        let b = &other.coeffs[k][l];
                        if !b.is_zero() {
                            out.coeffs[i + k][j + l] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &BiSeries) -> BiSeries {
        let nt = self.max_t().min(rhs.max_t());
        let nu = self.max_u().min(rhs.max_u());
        let mut out = BiSeries::zero(nt, nu);
        for n in 0..=nt {
            for m in 0..=nu {
                out.coeffs[n][m] = &self.coeffs[n][m] + &rhs.coeffs[n][m];
            }
        }
        out
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &BiSeries) -> BiSeries {
        self.mul_truncated(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn series(v: &[i64]) -> IntSeries {
        IntSeries::from_coeffs(v.len() - 1, v.iter().copied())
    }

    #[test]
    fn product_truncates() {
        let a = series(&[1, 1, 0, 0]);
        let p = &(&a * &a) * &a;
        assert_eq!(p, series(&[1, 3, 3, 1]));
        let b = series(&[1, 1]);
        assert_eq!(&a * &b, series(&[1, 2]));
    }

    #[test]
    fn json_uses_decimal_strings() {
        let s = IntSeries::from_coeffs(
            2,
            [BigInt::from(0), BigInt::from(1), BigInt::from(10).pow(30)],
        );
        let j = s.to_json().unwrap();
        assert_eq!(
            j,
            r#"{"var":"t","N":2,"coeffs":["0","1","1000000000000000000000000000000"]}"#
        );
        assert_eq!(IntSeries::from_json(&j).unwrap(), s);
        assert!(IntSeries::from_json(r#"{"var":"t","N":3,"coeffs":["1"]}"#).is_err());
        assert!(IntSeries::from_json(r#"{"var":"t","N":0,"coeffs":["x"]}"#).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(series(&[0, 0, 1, 0, 2]).to_string(), "t^2 + 2t^4 + O(t^5)");
        assert_eq!(series(&[-1, 1]).to_string(), "-1 + t + O(t^2)");
        assert_eq!(IntSeries::zero(1).to_string(), "0 + O(t^2)");
    }

    #[test]
    fn bivariate_product() {
        // (1 + u t)^2 = 1 + 2ut + u^2 t^2
        let mut a = BiSeries::zero(2, 2);
        a.set(0, 0, 1);
        a.set(1, 1, 1);
        let sq = &a * &a;
        assert_eq!(sq.coeff(1, 1), BigInt::from(2));
        assert_eq!(sq.coeff(2, 2), BigInt::from(1));
        assert_eq!(sq.coeff(2, 1), BigInt::from(0));
        assert_eq!(sq.coeff(5, 5), BigInt::from(0));
    }

    proptest! {
        #[test]
        fn truncation_commutes_with_product(
            a in proptest::collection::vec(-50i64..50, 1..12),
            b in proptest::collection::vec(-50i64..50, 1..12),
            cut in 0usize..12,
        ) {
            let n = a.len().max(b.len()) - 1;
            let sa = IntSeries::from_coeffs(n, a.iter().copied());
            let sb = IntSeries::from_coeffs(n, b.iter().copied());
            let cut = cut.min(n);
            prop_assert_eq!(
                (&sa * &sb).truncate(cut),
                &sa.truncate(cut) * &sb.truncate(cut)
            );
            prop_assert_eq!(&(&sa + &sb) - &sb, sa.clone());
        }
    }
}
