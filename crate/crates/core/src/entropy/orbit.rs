use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result};

/// Convergence threshold on `|y_k|`.
pub const DEFAULT_TOL: f64 = 1e-16;
pub const DEFAULT_MAX_ITER: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OrbitStatus {
    Converged,
    /// Certified by entering `D = {|y| > 2|x| > 2}`, which is forward invariant.
    Diverged,
    BudgetExhausted,
}

impl OrbitStatus {
    pub fn code(self) -> char {
        match self {
            OrbitStatus::Converged => 'C',
            OrbitStatus::Diverged => 'D',
            OrbitStatus::BudgetExhausted => 'B',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitResult {
    pub status: OrbitStatus,
    /// Last iterate `x_k`; equals `x(t)` up to `tol` when converged.
    pub x: Complex64,
    pub dx: Option<Complex64>,
    pub iterations: usize,
    /// Iteration index at which the orbit was seen in `D`.
    pub certificate: Option<usize>,
}

impl OrbitResult {
    pub fn converged(&self) -> bool {
        self.status == OrbitStatus::Converged
    }
}

pub fn in_divergence_region(x: Complex64, y: Complex64) -> bool {
    let ax = x.norm();
    y.norm() > 2.0 * ax && ax > 1.0
}

/// Iterates from `(0, t^2)` until `|y| < tol`, the orbit enters `D`, or
/// `max_iter` steps are spent. With `with_derivative`, `dx/dt` is carried along.
pub fn eval_orbit(t: Complex64, tol: f64, max_iter: usize, with_derivative: bool) -> OrbitResult {
    let mut x = Complex64::new(0.0, 0.0);
    let mut y = t * t;
    let mut dx = Complex64::new(0.0, 0.0);
    let mut dy = 2.0 * t;
    let finish = |status, x, dx, k, certificate| OrbitResult {
        status,
        x,
        dx: with_derivative.then_some(dx),
        iterations: k,
        certificate,
    };
    for k in 0..=max_iter {
        if y.norm() < tol {
            return finish(OrbitStatus::Converged, x, dx, k, None);
        }
        if in_divergence_region(x, y) {
            return finish(OrbitStatus::Diverged, x, dx, k, Some(k));
        }
        if k == max_iter || !(x.is_finite() && y.is_finite()) {
            return finish(OrbitStatus::BudgetExhausted, x, dx, k, None);
        }
        let x_next = x + y;
        if with_derivative {
            let dx_next = dx + dy;
            dy = dy * x_next + y * dx_next;
            dx = dx_next;
        }
        y *= x_next;
        x = x_next;
    }
    unreachable!("loop returns at k == max_iter")
}

/// `I(x, y) = y + x - 1 + sqrt(2y)`; the set `x, y > 0, I < 0` traps real orbits.
pub fn trapping_function(x: f64, y: f64) -> f64 {
    y + x - 1.0 + (2.0 * y).sqrt()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrappingReport {
    pub t: f64,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    /// `I(x_k, y_k)` along the orbit.
    pub values: Vec<f64>,
}

/// Follows the real orbit for `steps` steps and checks that it stays in the
/// trapping region with `x` non-decreasing and `y` non-increasing.
///
/// Requires `t > 0` and `I(0, t^2) < 0` strictly, i.e. `t^2 < 2 - sqrt(3)`.
pub fn trapping_check(t: f64, steps: usize) -> Result<TrappingReport> {
    if !(t > 0.0) {
        return Err(Error::InvalidArgument(format!("t = {t} must be positive")));
    }
    let i0 = trapping_function(0.0, t * t);
    // rounding at the boundary t^2 = 2 - sqrt(3) must not pass for interior
    if i0 >= -4.0 * f64::EPSILON {
        return Err(Error::InvalidArgument(format!(
            "I(0, t^2) = {i0:e} is not negative at t = {t}"
        )));
    }
    let (mut x, mut y) = (0.0f64, t * t);
    let mut report = TrappingReport {
        t,
        x: vec![x],
        y: vec![y],
        values: vec![i0],
    };
    for step in 1..=steps {
        let x_next = x + y;
        let y_next = y * x_next;
        let i = trapping_function(x_next, y_next);
        if !(i < 0.0) {
            return Err(Error::TrappingViolation {
                step,
                reason: format!("I = {i:e} at ({x_next}, {y_next})"),
            });
        }
        if x_next < x || y_next > y || y_next < 0.0 {
            return Err(Error::TrappingViolation {
                step,
                reason: format!("monotonicity lost: ({x}, {y}) -> ({x_next}, {y_next})"),
            });
        }
        x = x_next;
        y = y_next;
        report.x.push(x);
        report.y.push(y);
        report.values.push(i);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::iterate_x;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn origin_converges_immediately() {
        let r = eval_orbit(c(0.0), DEFAULT_TOL, DEFAULT_MAX_ITER, true);
        assert_eq!(r.status, OrbitStatus::Converged);
        assert_eq!(r.x, c(0.0));
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn large_real_t_diverges_by_second_iterate() {
        let r = eval_orbit(c(1.3), DEFAULT_TOL, DEFAULT_MAX_ITER, false);
        assert_eq!(r.status, OrbitStatus::Diverged);
        assert!(r.certificate.unwrap() <= 2);
        // first iterate already in D beyond sqrt 2
        let r = eval_orbit(Complex64::new(1.0, 1.0) * 1.01, DEFAULT_TOL, 10, false);
        assert_eq!(r.certificate, Some(1));
    }

    #[test]
    fn half_agrees_with_series() {
        let x = iterate_x(60);
        let r = eval_orbit(c(0.5), DEFAULT_TOL, DEFAULT_MAX_ITER, false);
        assert!(r.converged());
        let poly = x.eval_f64(0.5);
        // first omitted term is [t^62] x (0.5)^62; coefficients stay below 2^62 there
        let bound = num_traits::ToPrimitive::to_f64(&iterate_x(62).coeff(62)).unwrap()
            * 0.5f64.powi(62)
            * 4.0;
        assert!(
            (r.x.re - poly).abs() <= bound + 1e-15,
            "{} vs {poly}",
            r.x.re
        );
    }

    #[test]
    fn budget_is_distinct_from_divergence() {
        let r = eval_orbit(c(0.63), DEFAULT_TOL, 5, false);
        assert_eq!(r.status, OrbitStatus::BudgetExhausted);
        assert_eq!(r.certificate, None);
    }

    #[test]
    fn derivative_matches_central_differences() {
        for &t in &[0.1, 0.3, 0.5, 0.55, 0.6] {
            let h = 1e-6;
            let f = |s: f64| eval_orbit(c(s), 1e-18, DEFAULT_MAX_ITER, false).x.re;
            let fd = (f(t + h) - f(t - h)) / (2.0 * h);
            let d = eval_orbit(c(t), 1e-18, DEFAULT_MAX_ITER, true)
                .dx
                .unwrap()
                .re;
            assert!(((d - fd) / d).abs() < 1e-6, "t = {t}: {d} vs {fd}");
        }
        let t = Complex64::new(0.3, 0.2);
        let h = 1e-6;
        let f = |s: Complex64| eval_orbit(s, 1e-18, DEFAULT_MAX_ITER, false).x;
        let fd = (f(t + h) - f(t - h)) / (2.0 * h);
        let d = eval_orbit(t, 1e-18, DEFAULT_MAX_ITER, true).dx.unwrap();
        assert!((d - fd).norm() / d.norm() < 1e-6);
    }

    #[test]
    fn monotone_on_the_real_axis() {
        let ts: Vec<f64> = (1..=60).map(|k| k as f64 * 0.01).collect();
        let xs: Vec<f64> = ts
            .iter()
            .map(|&t| eval_orbit(c(t), DEFAULT_TOL, DEFAULT_MAX_ITER, false).x.re)
            .collect();
        assert!(xs.windows(2).all(|w| w[0] < w[1]));
        assert!(xs.iter().all(|&x| x < 1.0));
    }

    #[test]
    fn trapping_holds_inside() {
        let r = trapping_check(0.5, 100).unwrap();
        assert_eq!(r.values.len(), 101);
        assert!(r.values.iter().all(|&i| i < 0.0));
        assert!(r.x.windows(2).all(|w| w[0] <= w[1]));
        assert!(r.y.windows(2).all(|w| w[0] >= w[1]));
        assert!(trapping_check(0.1, 100).is_ok());
    }

    #[test]
    fn trapping_precondition() {
        let edge = (2.0 - 3f64.sqrt()).sqrt();
        assert!(matches!(
            trapping_check(edge, 10),
            Err(Error::InvalidArgument(_))
        ));
        assert!(trapping_check(0.0, 10).is_err());
        assert!(trapping_check(0.6, 10).is_err());
        assert!(trapping_check(edge - 1e-6, 10).is_ok());
    }

    proptest! {
        #[test]
        fn divergence_region_is_forward_invariant(
            ax in 1.0001f64..50.0,
            ph_x in 0.0f64..std::f64::consts::TAU,
            ratio in 2.0001f64..50.0,
            ph_y in 0.0f64..std::f64::consts::TAU,
        ) {
            let x = Complex64::from_polar(ax, ph_x);
            let y = Complex64::from_polar(ax * ratio, ph_y);
            prop_assume!(in_divergence_region(x, y));
            let xn = x + y;
            let yn = y * xn;
            prop_assert!(in_divergence_region(xn, yn));
        }
    }
}
