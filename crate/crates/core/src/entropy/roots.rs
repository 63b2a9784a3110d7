use num_complex::Complex64;
use serde::Serialize;

use super::orbit::{eval_orbit, OrbitStatus, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::dims::to_f64;
use crate::series::{iterate_x, iterate_x_euclidean, IntSeries};
use crate::{Error, Result};

/// Budget for orbits close to `β`, where convergence is slow.
pub const BETA_MAX_ITER: usize = 20_000_000;

/// Truncation orders used for the Euclidean root extrapolation.
pub const ALPHA_E_ORDERS: [usize; 5] = [40, 60, 80, 100, 120];

const NEWTON_SWITCH_WIDTH: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AlphaResult {
    pub alpha: f64,
    pub entropy: f64,
    /// `1 - α - x(α)` at the returned root.
    pub residual: f64,
}

/// Value and derivative of `f` at a point, or `None` if undefined there.
type Eval<'a> = dyn Fn(f64) -> Result<(f64, f64)> + 'a;

/// Bisection down to a narrow bracket, then Newton steps that fall back to
/// bisection whenever they leave the bracket.
fn bracketed_newton(f: &Eval, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let (f_lo, _) = f(lo)?;
    let (f_hi, _) = f(hi)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoBracket { lo, hi });
    }
    let lo_sign = f_lo.signum();
    while hi - lo > NEWTON_SWITCH_WIDTH.max(tol) {
        let mid = 0.5 * (lo + hi);
        let (fm, _) = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut t = 0.5 * (lo + hi);
    for _ in 0..200 {
        let (ft, dft) = f(t)?;
        if ft == 0.0 {
            return Ok(t);
        }
        if ft.signum() == lo_sign {
            lo = t;
        } else {
            hi = t;
        }
        let newton = t - ft / dft;
        let next = if dft != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let step = (next - t).abs();
        t = next;
        if step < tol || hi - lo < tol {
            return Ok(t);
        }
    }
    Ok(t)
}

fn g_alpha(t: f64) -> Result<(f64, f64)> {
    let r = eval_orbit(Complex64::new(t, 0.0), DEFAULT_TOL, DEFAULT_MAX_ITER, true);
    match r.status {
        OrbitStatus::Converged => Ok((1.0 - t - r.x.re, -1.0 - r.dx.expect("derivative").re)),
        status => Err(Error::BudgetExhausted(format!(
            "orbit at t = {t} ended as {status:?} while solving for alpha"
        ))),
    }
}

/// The zero `α` of `1 - t - x(t)` on `[0, β)` and the entropy `1/α`.
pub fn solve_alpha(tol: f64) -> Result<AlphaResult> {
    if !(tol >= f64::EPSILON * 0.5) {
        return Err(Error::InvalidArgument(format!(
            "tolerance {tol:e} is below f64 resolution"
        )));
    }
    let alpha = bracketed_newton(&g_alpha, 0.5, 0.6, tol)?;
    Ok(AlphaResult {
        alpha,
        entropy: 1.0 / alpha,
        residual: g_alpha(alpha)?.0,
    })
}

/// `β = inf {t > 0 : x_k(t) -> ∞}` by bisection on certified orbit statuses,
/// starting from the analytic bracket `(0.51, 0.79)`.
pub fn estimate_beta(tol: f64) -> Result<f64> {
    estimate_beta_with(tol, BETA_MAX_ITER)
}

pub fn estimate_beta_with(tol: f64, max_iter: usize) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let classify = |t: f64| eval_orbit(Complex64::new(t, 0.0), DEFAULT_TOL, max_iter, false).status;
    let (mut lo, mut hi) = (0.51, 0.79);
    if classify(lo) != OrbitStatus::Converged || classify(hi) != OrbitStatus::Diverged {
        return Err(Error::NoBracket { lo, hi });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        match classify(mid) {
            OrbitStatus::Converged => lo = mid,
            OrbitStatus::Diverged => hi = mid,
            OrbitStatus::BudgetExhausted => {
                return Err(Error::BudgetExhausted(format!(
                    "orbit at t = {mid} neither converged nor entered D in {max_iter} steps"
                )))
            }
        }
    }
    Ok(0.5 * (lo + hi))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EuclideanAlpha {
    pub orders: Vec<usize>,
    /// Smallest positive root of `1 - t - x_E(t)` truncated at each order.
    pub roots: Vec<f64>,
    pub extrapolated: f64,
    pub entropy: f64,
    pub method: String,
}

fn polynomial_root(x: &IntSeries, order: usize) -> Result<f64> {
    let coeffs: Vec<f64> = (0..=order).map(|k| to_f64(&x.coeff(k))).collect();
    let f = |t: f64| -> Result<(f64, f64)> {
        // Horner for p(t) = 1 - t - Σ c_k t^k and p'(t)
        let (mut p, mut dp) = (0.0, 0.0);
        for c in coeffs.iter().rev() {
            dp = dp * t + p;
            p = p * t + c;
        }
        Ok((1.0 - t - p, -1.0 - dp))
    };
    // p(0) = 1 and p decreases on t > 0, so the positive root is unique
    bracketed_newton(&f, 0.0, 1.0, 1e-15)
}

/// Roots of successive truncations of `1 - t - x_E(t)`, extrapolated by
/// Aitken's Δ² on the last three.
pub fn solve_alpha_euclidean(orders: &[usize]) -> Result<EuclideanAlpha> {
    if orders.len() < 3 {
        return Err(Error::InvalidArgument(
            "need at least three truncation orders".into(),
        ));
    }
    if orders.windows(2).any(|w| w[0] >= w[1]) || orders[0] < 14 {
        return Err(Error::InvalidArgument(
            "truncation orders must be increasing and at least 14".into(),
        ));
    }
    let x = iterate_x_euclidean(*orders.last().expect("nonempty"));
    let roots = orders
        .iter()
        .map(|&n| polynomial_root(&x, n))
        .collect::<Result<Vec<_>>>()?;
    let extrapolated = aitken(&roots[roots.len() - 3..]);
    Ok(EuclideanAlpha {
        orders: orders.to_vec(),
        entropy: 1.0 / extrapolated,
        extrapolated,
        roots,
        method: format!("aitken-delta2 on truncation roots at orders {orders:?}"),
    })
}

fn aitken(r: &[f64]) -> f64 {
    let (a, b, c) = (r[0], r[1], r[2]);
    let denom = (c - b) - (b - a);
    if denom == 0.0 {
        c
    } else {
        c - (c - b) * (c - b) / denom
    }
}

/// Growth rate `1/β_E` of the Euclidean modified-potential counts from
/// successive coefficient ratios of `x_E`, extrapolated by Aitken's Δ².
pub fn estimate_beta_euclidean(max_order: usize) -> Result<f64> {
    estimate_growth(&iterate_x_euclidean(max_order), max_order)
}

pub(crate) fn estimate_growth(x: &IntSeries, max_order: usize) -> Result<f64> {
    if max_order < 40 {
        return Err(Error::InsufficientData(format!(
            "growth estimate needs order >= 40, got {max_order}"
        )));
    }
    let top = max_order - max_order % 2;
    // root of the ratio of consecutive even coefficients estimates the growth per unit order
    let ratio = |k: usize| (to_f64(&x.coeff(k)) / to_f64(&x.coeff(k - 2))).sqrt();
    Ok(aitken(&[ratio(top - 4), ratio(top - 2), ratio(top)]))
}

#[allow(dead_code)]
pub(crate) fn growth_of_x(max_order: usize) -> Result<f64> {
    estimate_growth(&iterate_x(max_order), max_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_value() {
        let r = solve_alpha(1e-13).unwrap();
        assert!(
            (r.entropy - 1.82542377420108).abs() < 1e-12,
            "{}",
            r.entropy
        );
        assert!(r.alpha > 0.5 && r.alpha < 0.6);
        assert!(r.residual.abs() < 1e-12);
    }

    #[test]
    fn alpha_bracket_signs() {
        assert!(g_alpha(0.5).unwrap().0 > 0.0);
        assert!(g_alpha(0.6).unwrap().0 < 0.0);
        assert_eq!(g_alpha(0.0).unwrap().0, 1.0);
    }

    #[test]
    fn rejects_tiny_tolerance() {
        assert!(solve_alpha(1e-20).is_err());
        assert!(estimate_beta(0.0).is_err());
    }

    #[test]
    fn no_bracket_is_reported() {
        let f = |t: f64| Ok((t * t + 1.0, 2.0 * t));
        assert!(matches!(
            bracketed_newton(&f, -1.0, 1.0, 1e-12),
            Err(Error::NoBracket { .. })
        ));
    }

    #[test]
    fn aitken_is_exact_on_geometric() {
        let r: Vec<f64> = (0..3).map(|k| 2.0 + 0.5f64.powi(k)).collect();
        assert!((aitken(&r) - 2.0).abs() < 1e-14);
    }

    #[test]
    fn euclidean_roots_decrease() {
        let e = solve_alpha_euclidean(&[20, 30, 40, 50]).unwrap();
        assert!(e.roots.windows(2).all(|w| w[0] > w[1]));
        assert!(solve_alpha_euclidean(&[10, 20, 30]).is_err());
        assert!(solve_alpha_euclidean(&[40, 30, 50]).is_err());
    }
}
