//! Dimensions of free Lie algebras over graded alphabets, and the order and
//! order-by-degree tables of the Lie algebra of classical mechanics.
//!
//! The primary path solves `Π (1 - t^n)^{c_n} = 1 - a(t)` for the `c_n` one
//! order at a time in integers. The Möbius form over `-log(1 - a)` is kept as
//! an independent check in exact rationals; both must agree.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::series::{iterate_x, iterate_x_euclidean, BiSeries, IntSeries};
use crate::{Error, Result};

/// Möbius function by trial division.
pub fn moebius(d: u64) -> i8 {
    assert!(d >= 1, "moebius is defined for d >= 1");
    let mut n = d;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Dimension of the order-`n` component of the free Lie algebra on `k` generators.
pub fn witt_rank_k(n: usize, k: u64) -> BigInt {
    assert!(n >= 1);
    let k = BigInt::from(k);
    let sum: BigInt = divisors(n)
        .map(|d| BigInt::from(moebius(d as u64)) * num_traits::pow(k.clone(), n / d))
        .sum();
    sum / BigInt::from(n)
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n % d == 0)
}

/// Graded dimensions, indexed by order `n` (row `n - 1`) and optionally by a
/// second degree `m` (column `m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTable {
    /// Which alphabet or construction produced the table.
    pub source: String,
    pub max_degree: Option<usize>,
    rows: Vec<Vec<BigInt>>,
}

#[derive(Serialize)]
struct DimTableJson<'a> {
    source: &'a str,
    max_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_degree: Option<usize>,
    rows: Vec<DimRowJson>,
}

#[derive(Serialize)]
struct DimRowJson {
    n: usize,
    dim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    by_degree: Option<Vec<String>>,
}

impl DimTable {
    fn univariate(source: impl Into<String>, dims: Vec<BigInt>) -> Self {
        DimTable {
            source: source.into(),
            max_degree: None,
            rows: dims.into_iter().map(|d| vec![d]).collect(),
        }
    }

    fn bivariate(source: impl Into<String>, max_degree: usize, rows: Vec<Vec<BigInt>>) -> Self {
        DimTable {
            source: source.into(),
            max_degree: Some(max_degree),
            rows,
        }
    }

    pub fn max_order(&self) -> usize {
        self.rows.len()
    }

    /// Total dimension at order `n` (row sum for bigraded tables).
    pub fn dim(&self, n: usize) -> BigInt {
        self.rows[n - 1].iter().sum()
    }

    pub fn dims(&self) -> Vec<BigInt> {
        (1..=self.max_order()).map(|n| self.dim(n)).collect()
    }

    /// Entry at order `n`, degree `m`; zero outside the computed range.
    pub fn cell(&self, n: usize, m: usize) -> BigInt {
        match self.max_degree {
            None => {
                assert_eq!(m, 0, "univariate table has a single column");
                self.dim(n)
            }
            Some(_) => self.rows[n - 1].get(m).cloned().unwrap_or_default(),
        }
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n - 1]
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match self.max_degree {
            None => {
                w.write_record(["n", "dim"])?;
                for n in 1..=self.max_order() {
                    w.write_record([n.to_string(), self.dim(n).to_string()])?;
                }
            }
            Some(md) => {
                w.write_record(["n", "m", "dim"])?;
                for n in 1..=self.max_order() {
                    for m in 0..=md {
                        w.write_record([
                            n.to_string(),
                            m.to_string(),
                            self.cell(n, m).to_string(),
                        ])?;
                    }
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> Result<String> {
        let rows = (1..=self.max_order())
            .map(|n| DimRowJson {
                n,
                dim: self.dim(n).to_string(),
                by_degree: self
                    .max_degree
                    .map(|_| self.row(n).iter().map(ToString::to_string).collect()),
            })
            .collect();
        Ok(serde_json::to_string_pretty(&DimTableJson {
            source: &self.source,
            max_order: self.max_order(),
            max_degree: self.max_degree,
            rows,
        })?)
    }
}

impl fmt::Display for DimTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max_degree {
            None => {
                writeln!(f, "{:>4} {:>14}", "n", "dim")?;
                for n in 1..=self.max_order() {
                    writeln!(f, "{:>4} {:>14}", n, self.dim(n))?;
                }
            }
            Some(md) => {
                write!(f, "{:>4} {:>7} |", "n", "total")?;
                for m in 0..=md {
                    write!(f, "{m:>5}")?;
                }
                writeln!(f)?;
                for n in 1..=self.max_order() {
                    write!(f, "{:>4} {:>7} |", n, self.dim(n))?;
                    // trailing zeros above the top degree are left blank
                    let last = self.row(n).iter().rposition(|c| !c.is_zero()).unwrap_or(0);
                    for m in 0..=last {
                        write!(f, "{:>5}", self.cell(n, m))?;
                    }
                    writeln!(f)?;
                }
            }
        }
        Ok(())
    }
}

fn check_alphabet(constant_zero: bool, nonnegative: bool) -> Result<()> {
    if !constant_zero {
        return Err(Error::InvalidArgument(
            "alphabet must have zero constant term".into(),
        ));
    }
    if !nonnegative {
        return Err(Error::InvalidArgument(
            "alphabet coefficients must be non-negative".into(),
        ));
    }
    Ok(())
}

/// `(1 - x)^c` coefficients `(-1)^j C(c, j)` for `j <= j_max`.
fn signed_binomials(c: &BigInt, j_max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(j_max + 1);
    let mut b = BigInt::one();
    for j in 0..=j_max {
        out.push(if j % 2 == 0 { b.clone() } else { -b.clone() });
        b = b * (c - BigInt::from(j)) / BigInt::from(j + 1);
    }
    out
}

/// Integer-only path: dimensions `c_1..c_N` from the product identity.
pub fn graded_dims_product_form(alphabet: &IntSeries, max_order: usize) -> Result<Vec<BigInt>> {
    check_alphabet(
        alphabet.coeff(0).is_zero(),
        alphabet.has_nonnegative_coeffs(),
    )?;
    let n_max = max_order;
    let mut prod = vec![BigInt::zero(); n_max + 1];
    prod[0] = BigInt::one();
    let mut dims = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let c = &prod[n] + alphabet.coeff(n);
        if c.is_negative() {
            return Err(Error::Inconsistent(format!(
                "negative dimension {c} at order {n}"
            )));
        }
        if !c.is_zero() {
            let factor = signed_binomials(&c, n_max / n);
            for k in (n..=n_max).rev() {
                let mut acc = BigInt::zero();
                for (j, f) in factor.iter().enumerate().skip(1) {
                    if j * n > k {
                        break;
                    }
                    acc += f * &prod[k - j * n];
                }
                prod[k] += acc;
            }
        }
        dims.push(c);
    }
    Ok(dims)
}

fn as_integer(q: BigRational, what: impl FnOnce() -> String) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::Inconsistent(format!(
            "non-integer dimension {q} at {}",
            what()
        )))
    }
}

/// Exact-rational path: `c_n = Σ_{d | n} μ(d)/d b_{n/d}`, `Σ b_n t^n = -log(1 - a(t))`.
pub fn graded_dims_moebius(alphabet: &IntSeries, max_order: usize) -> Result<Vec<BigInt>> {
    check_alphabet(
        alphabet.coeff(0).is_zero(),
        alphabet.has_nonnegative_coeffs(),
    )?;
    let a = alphabet.truncate(max_order);
    let mut b = vec![BigRational::zero(); max_order + 1];
    let mut power = a.clone();
    for k in 1..=max_order {
        let inv_k = BigRational::new(BigInt::one(), BigInt::from(k));
        for (n, c) in power.coeffs().iter().enumerate() {
            if !c.is_zero() {
                b[n] += BigRational::from_integer(c.clone()) * &inv_k;
            }
        }
        if power.is_zero() {
            break;
        }
        power = &power * &a;
    }
    (1..=max_order)
        .map(|n| {
            let q: BigRational = divisors(n)
                .map(|d| {
                    BigRational::new(BigInt::from(moebius(d as u64)), BigInt::from(d)) * &b[n / d]
                })
                .sum();
            as_integer(q, || format!("order {n}"))
        })
        .collect()
}

/// Dimensions `c_1..c_N` of the free Lie algebra on an alphabet with order
/// generating function `alphabet`, computed on both paths.
pub fn graded_dims(alphabet: &IntSeries, max_order: usize) -> Result<DimTable> {
    let primary = graded_dims_product_form(alphabet, max_order)?;
    let check = graded_dims_moebius(alphabet, max_order)?;
    if let Some(n) = (0..max_order).find(|&i| primary[i] != check[i]) {
        return Err(Error::Inconsistent(format!(
            "order {}: product form {} vs Möbius {}",
            n + 1,
            primary[n],
            check[n]
        )));
    }
    Ok(DimTable::univariate(
        format!("free Lie algebra on a(t) = {alphabet}"),
        primary,
    ))
}

pub fn bigraded_dims_product_form(
    alphabet: &BiSeries,
    max_order: usize,
    max_degree: usize,
) -> Result<Vec<Vec<BigInt>>> {
    check_alphabet(
        alphabet.coeff(0, 0).is_zero(),
        alphabet.has_nonnegative_coeffs(),
    )?;
    let mut prod = BiSeries::zero(max_order, max_degree);
    prod.set(0, 0, 1);
    let mut rows = Vec::with_capacity(max_order);
    for n in 1..=max_order {
        let row: Vec<BigInt> = (0..=max_degree)
            .map(|m| prod.coeff(n, m) + alphabet.coeff(n, m))
            .collect();
        for (m, c) in row.iter().enumerate() {
            if c.is_negative() {
                return Err(Error::Inconsistent(format!(
                    "negative dimension {c} at ({n}, {m})"
                )));
            }
            if c.is_zero() {
                continue;
            }
            let mut factor = BiSeries::zero(max_order, max_degree);
            for (j, f) in signed_binomials(c, max_order / n).into_iter().enumerate() {
                factor.set(j * n, j * m, f);
            }
            prod = &prod * &factor;
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn bigraded_dims_moebius(
    alphabet: &BiSeries,
    max_order: usize,
    max_degree: usize,
) -> Result<Vec<Vec<BigInt>>> {
    check_alphabet(
        alphabet.coeff(0, 0).is_zero(),
        alphabet.has_nonnegative_coeffs(),
    )?;
    let mut a = BiSeries::zero(max_order, max_degree);
    for n in 0..=max_order {
        for m in 0..=max_degree {
            a.set(n, m, alphabet.coeff(n, m));
        }
    }
    let mut b = vec![vec![BigRational::zero(); max_degree + 1]; max_order + 1];
    let mut power = a.clone();
    for k in 1..=max_order {
        let inv_k = BigRational::new(BigInt::one(), BigInt::from(k));
        for (n, row) in b.iter_mut().enumerate() {
            for (m, cell) in row.iter_mut().enumerate() {
                let c = power.coeff(n, m);
                if !c.is_zero() {
                    *cell += BigRational::from_integer(c) * &inv_k;
                }
            }
        }
        power = &power * &a;
    }
    (1..=max_order)
        .map(|n| {
            (0..=max_degree)
                .map(|m| {
                    // d | (n, m) componentwise; every d divides m = 0
                    let q: BigRational = divisors(n)
                        .filter(|d| m % d == 0)
                        .map(|d| {
                            BigRational::new(BigInt::from(moebius(d as u64)), BigInt::from(d))
                                * &b[n / d][m / d]
                        })
                        .sum();
                    as_integer(q, || format!("({n}, {m})"))
                })
                .collect()
        })
        .collect()
}

/// Dimensions of the free Lie algebra bigraded by order `n` and a second
/// additive degree `m >= 0`, from the alphabet's bivariate generating function.
pub fn bigraded_dims(alphabet: &BiSeries, max_order: usize, max_degree: usize) -> Result<DimTable> {
    let primary = bigraded_dims_product_form(alphabet, max_order, max_degree)?;
    let check = bigraded_dims_moebius(alphabet, max_order, max_degree)?;
    for (n, (p, c)) in primary.iter().zip(&check).enumerate() {
        if let Some(m) = (0..=max_degree).find(|&m| p[m] != c[m]) {
            return Err(Error::Inconsistent(format!(
                "cell ({}, {m}): product form {} vs Möbius {}",
                n + 1,
                p[m],
                c[m]
            )));
        }
    }
    Ok(DimTable::bivariate(
        "free Lie algebra, bigraded alphabet",
        max_degree,
        primary,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    General,
    Euclidean,
}

impl Variant {
    fn x_series(self, max_order: usize) -> IntSeries {
        match self {
            Variant::General => iterate_x(max_order),
            Variant::Euclidean => iterate_x_euclidean(max_order),
        }
    }
}

/// Order-graded dimensions of `Z ⊕ L(A, X)`.
#[derive(Clone, Debug)]
pub struct OrderTable {
    pub variant: Variant,
    /// Dimensions of the free part `L(A, X)`, index `n - 1`.
    pub free: Vec<BigInt>,
    /// `[t^{n+1}] x(t)`: modified potentials of order `n`.
    pub modified_potentials: Vec<BigInt>,
    pub total: DimTable,
}

impl OrderTable {
    pub fn total(&self, n: usize) -> BigInt {
        self.total.dim(n)
    }
}

pub fn assemble_order_table(max_order: usize, variant: Variant) -> Result<OrderTable> {
    if max_order == 0 {
        return Err(Error::InvalidArgument(
            "max_order must be at least 1".into(),
        ));
    }
    let x = variant.x_series(max_order + 1);
    let alphabet = &IntSeries::monomial(max_order, 1, 1) + &x.truncate(max_order);
    let free = graded_dims(&alphabet, max_order)?.dims();
    let modified_potentials: Vec<BigInt> = (1..=max_order).map(|n| x.coeff(n + 1)).collect();
    let total = free
        .iter()
        .zip(&modified_potentials)
        .map(|(a, b)| a + b)
        .collect();
    let source = match variant {
        Variant::General => "Z + L(A, X), a(t) = t + x(t)",
        Variant::Euclidean => "Z_E + L(A, X_E), a(t) = t + x_E(t)",
    };
    Ok(OrderTable {
        variant,
        free,
        modified_potentials,
        total: DimTable::univariate(source, total),
    })
}

/// Dimensions by order `n` and degree `m` (in `p`), for `m <= max_degree`.
pub fn assemble_bidegree_table(max_order: usize, max_degree: usize) -> Result<DimTable> {
    if max_order == 0 || max_degree == 0 {
        return Err(Error::InvalidArgument("bounds must be at least 1".into()));
    }
    let x = iterate_x(max_order + 1);
    // A has order 1 and shifted degree 1; every X has shifted degree 0
    let mut alphabet = BiSeries::from_t_series(&x.truncate(max_order), max_degree - 1);
    alphabet.set(1, 1, 1);
    let free = bigraded_dims(&alphabet, max_order, max_degree - 1)?;
    let rows = (1..=max_order)
        .map(|n| {
            let mut row = Vec::with_capacity(max_degree + 1);
            row.push(x.coeff(n + 1));
            row.extend((0..max_degree).map(|m| free.cell(n, m)));
            row
        })
        .collect();
    Ok(DimTable::bivariate(
        "Z + L(A, X) by order and degree",
        max_degree,
        rows,
    ))
}

/// Lossy conversion used by the numerical fits.
pub(crate) fn to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(2), -1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(49), 0);
        assert_eq!(moebius(97), -1);
    }

    #[test]
    fn moebius_matches_factorization_oracle() {
        for d in 1u64..500 {
            let mut n = d;
            let mut primes = Vec::new();
            for p in 2..=d {
                while n % p == 0 {
                    primes.push(p);
                    n /= p;
                }
            }
            let mut uniq = primes.clone();
            uniq.dedup();
            let expect = if uniq.len() != primes.len() {
                0
            } else if primes.len() % 2 == 0 {
                1
            } else {
                -1
            };
            assert_eq!(moebius(d), expect, "d = {d}");
        }
    }

    #[test]
    fn witt_values() {
        assert_eq!(witt_rank_k(5, 2), BigInt::from(6));
        assert_eq!(witt_rank_k(12, 2), BigInt::from(335));
        for k in 1..6 {
            assert_eq!(witt_rank_k(1, k), BigInt::from(k));
        }
    }

    #[test]
    fn two_letters_reproduce_witt() {
        let a = IntSeries::monomial(40, 1, 2);
        let t = graded_dims(&a, 40).unwrap();
        for n in 1..=40 {
            assert_eq!(t.dim(n), witt_rank_k(n, 2), "n = {n}");
        }
    }

    #[test]
    fn one_letter_is_abelian() {
        let t = graded_dims(&IntSeries::monomial(10, 1, 1), 10).unwrap();
        assert_eq!(t.dims(), big(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn rejects_bad_alphabets() {
        let mut a = IntSeries::monomial(5, 0, 1);
        assert!(graded_dims(&a, 5).is_err());
        a = IntSeries::monomial(5, 2, -1);
        assert!(graded_dims(&a, 5).is_err());
    }

    #[test]
    fn free_part_at_order_seven() {
        let x = iterate_x(8);
        let a = &IntSeries::monomial(7, 1, 1) + &x.truncate(7);
        assert_eq!(graded_dims(&a, 7).unwrap().dim(7), BigInt::from(8));
    }

    #[test]
    fn order_table_examples() {
        let t = assemble_order_table(13, Variant::General).unwrap();
        assert_eq!(t.total(12), BigInt::from(110));
        assert_eq!(t.total(1), BigInt::from(2));
        let sum: BigInt = (1..=12).map(|n| t.total(n)).sum();
        assert_eq!(sum, BigInt::from(283));
        let e = assemble_order_table(13, Variant::Euclidean).unwrap();
        assert_eq!(e.total(13), BigInt::from(193));
        assert_eq!(e.total(12), BigInt::from(110));
    }

    #[test]
    fn bidegree_rows() {
        let t = assemble_bidegree_table(16, 15).unwrap();
        assert_eq!(t.row(7)[..7].to_vec(), big(&[2, 0, 4, 0, 3, 0, 1]));
        assert_eq!(t.row(2)[..2].to_vec(), big(&[0, 1]));
        assert_eq!(t.cell(1, 2), BigInt::from(1));
        assert_eq!(t.cell(16, 5), BigInt::from(274));
        assert_eq!(t.dim(16), BigInt::from(941));
        let o = assemble_order_table(16, Variant::General).unwrap();
        for n in 1..=16 {
            assert_eq!(t.dim(n), o.total(n), "n = {n}");
        }
    }

    #[test]
    fn csv_and_json() {
        let t = assemble_order_table(12, Variant::General).unwrap();
        let csv = t.total.to_csv().unwrap();
        assert!(csv.starts_with("n,dim\n1,2\n"));
        assert!(csv.ends_with("12,110\n"));
        let v: serde_json::Value = serde_json::from_str(&t.total.to_json().unwrap()).unwrap();
        assert_eq!(v["rows"][11]["dim"], "110");
        let b = assemble_bidegree_table(2, 2).unwrap();
        assert_eq!(
            b.to_csv().unwrap(),
            "n,m,dim\n1,0,1\n1,1,0\n1,2,1\n2,0,0\n2,1,1\n2,2,0\n"
        );
    }
}
