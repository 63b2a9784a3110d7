//! Brute-force Lyndon word counts against the dimension formulas.

use mechlie::dims::graded_dims;
use mechlie::series::{iterate_x, IntSeries};
use num_bigint::BigInt;

/// Letters `0..weights.len()` with the given weights; counts Lyndon words of
/// total weight `n`.
fn lyndon_count(weights: &[usize], n: usize) -> usize {
    fn extend(weights: &[usize], left: usize, word: &mut Vec<usize>, count: &mut usize) {
        if left == 0 {
            if is_lyndon(word) {
                *count += 1;
            }
            return;
        }
        for (letter, &w) in weights.iter().enumerate() {
            if w <= left {
                word.push(letter);
                extend(weights, left - w, word, count);
                word.pop();
            }
        }
    }
    let mut count = 0;
    extend(weights, n, &mut Vec::new(), &mut count);
    count
}

/// Strictly smaller than every proper rotation.
fn is_lyndon(w: &[usize]) -> bool {
    (1..w.len()).all(|k| {
        let rotated: Vec<_> = w[k..].iter().chain(&w[..k]).copied().collect();
        w < &rotated[..]
    })
}

fn alphabet_weights(a: &IntSeries) -> Vec<usize> {
    let mut weights = Vec::new();
    for k in 1..=a.truncation() {
        let c: usize = a.coeff(k).try_into().expect("small coefficient");
        weights.extend(std::iter::repeat(k).take(c));
    }
    weights
}

#[test]
fn lyndon_predicate() {
    assert!(is_lyndon(&[0, 0, 1]));
    assert!(!is_lyndon(&[0, 1, 0]));
    assert!(!is_lyndon(&[0, 1, 0, 1]));
    assert!(is_lyndon(&[2]));
}

#[test]
fn two_letters_match_necklace_counts() {
    let a = IntSeries::from_coeffs(10, [0, 2]);
    let dims = graded_dims(&a, 10).unwrap();
    for n in 1..=10 {
        assert_eq!(
            dims.dim(n),
            BigInt::from(lyndon_count(&[1, 1], n)),
            "n = {n}"
        );
    }
}

#[test]
fn weights_one_two_four() {
    let a = IntSeries::from_coeffs(8, [0, 1, 1, 0, 1]);
    let dims = graded_dims(&a, 8).unwrap();
    let weights = alphabet_weights(&a);
    assert_eq!(weights, vec![1, 2, 4]);
    for n in 1..=8 {
        assert_eq!(
            dims.dim(n),
            BigInt::from(lyndon_count(&weights, n)),
            "n = {n}"
        );
    }
}

#[test]
fn free_part_of_the_mechanics_algebra() {
    let x = iterate_x(8);
    let a = &IntSeries::monomial(7, 1, 1) + &x.truncate(7);
    let weights = alphabet_weights(&a);
    let dims = graded_dims(&a, 7).unwrap();
    for n in 1..=7 {
        assert_eq!(
            dims.dim(n),
            BigInt::from(lyndon_count(&weights, n)),
            "n = {n}"
        );
    }
    assert_eq!(lyndon_count(&weights, 7), 8);
}
