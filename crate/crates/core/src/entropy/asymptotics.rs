//! Correction terms to `c_n ~ n^{-1} α^{-n}` coming from the square-root
//! singularities of `x(t)` at `t = ±β`.
//!
//! With `c_n` the dimension of the free part `L(A, X)` at order `n`:
//!
//! * odd `n`:  `n^{-1} α^{-n} - c_n ≈ K n^{-3/2} β^{-n}`
//! * even `n`: `n^{-1} α^{-n} - c_n ≈ K n^{-5/2} β^{-n}` (the `±β` terms cancel to first order)
//! * even `n`: `[t^n] x(t) ≈ K n^{-3/2} β^{-n}`
//!
//! The Möbius tail `Σ_{d>1} μ(d)/d b_{n/d}` of `c_n` grows like `α^{-n/2}` and
//! swamps the even-order term at moderate `n`, so the deficits are taken on
//! `b_n = Σ_{d|n} c_{n/d} / d`, which differs from `c_n` by exactly that tail.
//! Each `K` is fitted by least squares on `K + K'/n` over a window of orders.

use serde::Serialize;

use super::roots::{estimate_beta, solve_alpha};
use crate::dims::{assemble_order_table, to_f64, Variant};
use crate::series::iterate_x;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FittedConstant {
    pub name: &'static str,
    /// Power of `n` multiplying `β^{-n}` in the model.
    pub exponent: f64,
    /// Limit constant `K`.
    pub value: f64,
    /// Slope `K'` of the `1/n` correction.
    pub slope: f64,
    pub window: (usize, usize),
    /// Root-mean-square of the scaled residuals.
    pub rms_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticFit {
    pub alpha: f64,
    pub beta: f64,
    pub max_n: usize,
    /// `(n, c_n n α^n)` for the total dimension of the Lie algebra.
    pub leading_ratios: Vec<(usize, f64)>,
    pub odd: FittedConstant,
    pub even: FittedConstant,
    pub modified_potentials: FittedConstant,
}

/// Least squares of `s_n ≈ K + K'/n`.
fn fit_line(name: &'static str, exponent: f64, samples: &[(usize, f64)]) -> FittedConstant {
    let m = samples.len() as f64;
    let (sx, sy) = samples
        .iter()
        .fold((0.0, 0.0), |(a, b), &(n, s)| (a + 1.0 / n as f64, b + s));
    let (mx, my) = (sx / m, sy / m);
    let (sxx, sxy) = samples.iter().fold((0.0, 0.0), |(a, b), &(n, s)| {
        let dx = 1.0 / n as f64 - mx;
        (a + dx * dx, b + dx * (s - my))
    });
    let slope = sxy / sxx;
    let value = my - slope * mx;
    let rms = (samples
        .iter()
        .map(|&(n, s)| (s - value - slope / n as f64).powi(2))
        .sum::<f64>()
        / m)
        .sqrt();
    FittedConstant {
        name,
        exponent,
        value,
        slope,
        window: (samples[0].0, samples[samples.len() - 1].0),
        rms_residual: rms,
    }
}

/// Fits the correction constants from exact dimensions up to `max_n`, using
/// orders in `[max_n / 2, max_n]`.
pub fn fit_asymptotics(max_n: usize) -> Result<AsymptoticFit> {
    if max_n < 40 {
        return Err(Error::InsufficientData(format!(
            "asymptotic fit needs max_n >= 40, got {max_n}"
        )));
    }
    let alpha = solve_alpha(1e-14)?.alpha;
    let beta = estimate_beta(1e-12)?;
    let table = assemble_order_table(max_n, Variant::General)?;
    let x = iterate_x(max_n);

    let leading_ratios = (1..=max_n)
        .map(|n| (n, to_f64(&table.total(n)) * n as f64 * alpha.powi(n as i32)))
        .collect();

    let scaled = |n: usize, value: f64, exponent: f64| {
        value * (n as f64).powf(-exponent) * beta.powi(n as i32)
    };
    let free: Vec<f64> = table.free.iter().map(to_f64).collect();
    let deficit = |n: usize| {
        let b: f64 = (1..=n)
            .filter(|d| n % d == 0)
            .map(|d| free[n / d - 1] / d as f64)
            .sum();
        alpha.powi(-(n as i32)) / n as f64 - b
    };
    let window = max_n / 2..=max_n;
    let odd: Vec<_> = window
        .clone()
        .filter(|n| n % 2 == 1)
        .map(|n| (n, scaled(n, deficit(n), -1.5)))
        .collect();
    let even: Vec<_> = window
        .clone()
        .filter(|n| n % 2 == 0)
        .map(|n| (n, scaled(n, deficit(n), -2.5)))
        .collect();
    let mp: Vec<_> = window
        .filter(|n| n % 2 == 0)
        .map(|n| (n, scaled(n, to_f64(&x.coeff(n)), -1.5)))
        .collect();

    Ok(AsymptoticFit {
        alpha,
        beta,
        max_n,
        leading_ratios,
        odd: fit_line("odd-order deficit", -1.5, &odd),
        even: fit_line("even-order deficit", -2.5, &even),
        modified_potentials: fit_line("modified potentials", -1.5, &mp),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_fit_recovers_exact_model() {
        let s: Vec<_> = (10..30).map(|n| (n, 2.0 + 3.0 / n as f64)).collect();
        let f = fit_line("t", -1.0, &s);
        assert!((f.value - 2.0).abs() < 1e-12);
        assert!((f.slope - 3.0).abs() < 1e-10);
        assert!(f.rms_residual < 1e-12);
        assert_eq!(f.window, (10, 29));
    }

    #[test]
    fn needs_enough_orders() {
        assert!(matches!(
            fit_asymptotics(39),
            Err(Error::InsufficientData(_))
        ));
    }
}
