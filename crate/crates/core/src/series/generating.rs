use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::power::IntSeries;
use super::trees::free_trees;

/// `x(t)` truncated after `t^max_order`, from `x_0 = 0`, `y_0 = t^2`,
/// `x_{k+1} = x_k + y_k`, `y_{k+1} = y_k x_{k+1}`.
///
/// `[t^{n+1}] x` counts modified potentials of order `n` and `[t^n] x`
/// counts degree-1 generators `X` of order `n`.
pub fn iterate_x(max_order: usize) -> IntSeries {
    run(max_order, |_, _| {})
}

/// Euclidean variant `x_E(t)`: after each step the new `y` is capped so that
/// the modified potentials of order `2n - 1` never outnumber the free trees
/// with `n` nodes.
pub fn iterate_x_euclidean(max_order: usize) -> IntSeries {
    let caps = free_trees((max_order / 2).max(1));
    run(max_order, |x, y| {
        for n in 1..=(max_order / 2) {
            let k = 2 * n;
            let room = &caps[n - 1] - &x.coeffs()[k];
            let room = if room.is_negative() {
                BigInt::zero()
            } else {
                room
            };
            let c = &mut y.coeffs_mut()[k];
            if *c > room {
                *c = room;
            }
        }
    })
}

fn run(max_order: usize, mut cap: impl FnMut(&IntSeries, &mut IntSeries)) -> IntSeries {
    let mut x = IntSeries::zero(max_order);
    let mut y = IntSeries::monomial(max_order, 2, 1);
    while !y.is_zero() {
        x = &x + &y;
        y = &y * &x;
        cap(&x, &mut y);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(s: &IntSeries, from: usize, step: usize) -> Vec<i64> {
        use num_traits::ToPrimitive;
        s.coeffs()[from..]
            .iter()
            .step_by(step)
            .map(|c| c.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn leading_terms() {
        let x = iterate_x(12);
        assert_eq!(coeffs(&x, 2, 1), vec![1, 0, 1, 0, 1, 0, 2, 0, 3, 0, 6]);
        assert_eq!(iterate_x(2), IntSeries::monomial(2, 2, 1));
        assert_eq!(iterate_x(36).coeff(36), BigInt::from(67371));
    }

    #[test]
    fn euclidean_terms() {
        let xe = iterate_x_euclidean(20);
        assert_eq!(coeffs(&xe, 14, 2), vec![11, 23, 47, 102]);
        assert_eq!(xe.truncate(12), iterate_x(12));
    }

    #[test]
    fn shape_of_x() {
        let x = iterate_x(60);
        assert!(x.has_nonnegative_coeffs());
        for k in (1..=60).step_by(2) {
            assert!(x.coeff(k).is_zero());
        }
        for k in (8..58).step_by(2) {
            assert!(x.coeff(k) <= x.coeff(k + 2));
        }
    }

    #[test]
    fn truncation_is_schedule_independent() {
        let big = iterate_x(50);
        for n in [2, 3, 10, 17, 31] {
            assert_eq!(big.truncate(n), iterate_x(n));
        }
        let big = iterate_x_euclidean(50);
        for n in [2, 13, 26] {
            assert_eq!(big.truncate(n), iterate_x_euclidean(n));
        }
    }

    #[test]
    fn euclidean_respects_tree_bound() {
        let n_max = 40;
        let x = iterate_x(2 * n_max);
        let xe = iterate_x_euclidean(2 * n_max);
        let trees = free_trees(n_max);
        for n in 1..=n_max {
            assert!(xe.coeff(2 * n) <= x.coeff(2 * n));
            assert!(xe.coeff(2 * n) <= trees[n - 1]);
        }
    }
}
