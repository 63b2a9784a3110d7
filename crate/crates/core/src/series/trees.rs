//! Unlabelled tree counts used to cap the Euclidean iteration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Euler transform: `b_n` with `Π_k (1 - t^k)^{-a_k} = 1 + Σ b_n t^n`.
///
/// `a[0]` is `a_1`; the result has the same length with `b[0] = b_1`.
pub fn euler_transform(a: &[BigInt]) -> Vec<BigInt> {
    let n_max = a.len();
    // s_k = Σ_{d | k} d a_d
    let s: Vec<BigInt> = (1..=n_max)
        .map(|k| {
            (1..=k)
                .filter(|d| k % d == 0)
                .map(|d| BigInt::from(d) * &a[d - 1])
                .sum()
        })
        .collect();
    let mut b = vec![BigInt::one()]; // b_0
    for n in 1..=n_max {
        let acc: BigInt = (1..=n).map(|k| &s[k - 1] * &b[n - k]).sum();
        let (q, r) = acc.div_rem(&BigInt::from(n));
        debug_assert!(r.is_zero());
        b.push(q);
    }
    b.remove(0);
    b
}

/// Unlabelled rooted trees with `1..=n_max` nodes; index 0 holds one node.
pub fn rooted_trees(n_max: usize) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = Vec::with_capacity(n_max);
    if n_max == 0 {
        return r;
    }
    r.push(BigInt::one());
    // s_k = Σ_{d | k} d r_d, kept incrementally
    let mut s: Vec<BigInt> = Vec::new();
    for n in 1..n_max {
        s.push(
            (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| BigInt::from(d) * &r[d - 1])
                .sum(),
        );
        let acc: BigInt = (1..=n).map(|k| &s[k - 1] * &r[n - k]).sum();
        r.push(acc / BigInt::from(n));
    }
    r
}

/// Unlabelled free trees with `1..=n_max` nodes, by Otter's dissimilarity formula.
pub fn free_trees(n_max: usize) -> Vec<BigInt> {
    let r = rooted_trees(n_max);
    (1..=n_max)
        .map(|n| {
            let mut pairs: BigInt = (1..n).map(|i| &r[i - 1] * &r[n - i - 1]).sum();
            if n % 2 == 0 {
                pairs -= &r[n / 2 - 1];
            }
            &r[n - 1] - pairs / 2
        })
        .collect()
}

/// Wedderburn–Etherington numbers `W_1..W_{n_max}`: unordered binary trees with
/// `n` leaves, equivalently rooted trees on `n - 1` nodes with at most two
/// children per node.
pub fn binary_free_trees(n_max: usize) -> Vec<BigInt> {
    let mut w = vec![BigInt::zero(); n_max + 1];
    if n_max >= 1 {
        w[1] = BigInt::one();
    }
    for n in 2..=n_max {
        let half = (n - 1) / 2;
        let mut acc: BigInt = (1..=half).map(|i| &w[i] * &w[n - i]).sum();
        if n % 2 == 0 {
            let m = &w[n / 2];
            acc += m * (m + 1u32) / 2u32;
        }
        w[n] = acc;
    }
    w.remove(0);
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeSet, HashSet};

    // ---- brute-force oracle: explicit canonical forms ----

    /// All rooted trees with `n` nodes as canonical parenthesis strings,
    /// optionally restricted to at most `max_children` children per node.
    fn enumerate_rooted(n_max: usize, max_children: usize) -> Vec<Vec<String>> {
        let mut by_size: Vec<Vec<String>> = vec![Vec::new(); n_max + 1];
        for n in 1..=n_max {
            let mut set = BTreeSet::new();
            let mut chosen = Vec::new();
            pick_children(
                &by_size,
                n - 1,
                (usize::MAX, 0),
                max_children,
                &mut chosen,
                &mut set,
            );
            by_size[n] = set.into_iter().collect();
        }
        by_size
    }

    // children are chosen in non-increasing (size, index) order to build multisets
    fn pick_children(
        by_size: &[Vec<String>],
        remaining: usize,
        bound: (usize, usize),
        max_children: usize,
        chosen: &mut Vec<String>,
        out: &mut BTreeSet<String>,
    ) {
        if remaining == 0 {
            let mut kids = chosen.clone();
            kids.sort();
            out.insert(format!("({})", kids.concat()));
            return;
        }
        if chosen.len() == max_children {
            return;
        }
        for size in (1..=remaining.min(bound.0)).rev() {
            let limit = if size == bound.0 {
                bound.1 + 1
            } else {
                by_size[size].len()
            };
            for idx in 0..limit.min(by_size[size].len()) {
                chosen.push(by_size[size][idx].clone());
                pick_children(
                    by_size,
                    remaining - size,
                    (size, idx),
                    max_children,
                    chosen,
                    out,
                );
                chosen.pop();
            }
        }
    }

    fn parse_adjacency(s: &str) -> Vec<Vec<usize>> {
        let mut adj: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        for c in s.chars() {
            if c == '(' {
                let id = adj.len();
                adj.push(Vec::new());
                if let Some(&p) = stack.last() {
                    adj[p].push(id);
                    adj[id].push(p);
                }
                stack.push(id);
            } else {
                stack.pop();
            }
        }
        adj
    }

    fn canon_rooted_at(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| canon_rooted_at(adj, w, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }

    fn free_canonical(adj: &[Vec<usize>]) -> String {
        // peel leaves to find the center(s)
        let n = adj.len();
        let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
        let mut left = n;
        while left > 2 {
            left -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                for &w in &adj[v] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        layer
            .iter()
            .map(|&c| canon_rooted_at(adj, c, usize::MAX))
            .min()
            .unwrap()
    }

    fn to_big(v: &[u64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rooted_counts_match_enumeration() {
        let brute = enumerate_rooted(6, usize::MAX);
        let counts: Vec<u64> = (1..=6).map(|n| brute[n].len() as u64).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20]);
        assert_eq!(rooted_trees(6), to_big(&counts));
        assert_eq!(rooted_trees(1), to_big(&[1]));
        assert!(rooted_trees(0).is_empty());
    }

    #[test]
    fn euler_transform_of_rooted_is_shift() {
        let r = rooted_trees(15);
        let e = euler_transform(&r[..14]);
        assert_eq!(e, r[1..15].to_vec());

        // direct convolution: multiply out Π (1 - t^k)^{-r_k} = Π (Σ_j C(r_k + j - 1, j) t^{kj})
        let n = 14;
        let mut prod = vec![BigInt::zero(); n + 1];
        prod[0] = BigInt::one();
        for k in 1..=n {
            let rk = &r[k - 1];
            let mut factor = vec![BigInt::zero(); n + 1];
            let mut binom = BigInt::one();
            for j in 0..=(n / k) {
                factor[k * j] = binom.clone();
                binom = binom * (rk + BigInt::from(j)) / BigInt::from(j + 1);
            }
            let mut next = vec![BigInt::zero(); n + 1];
            for a in 0..=n {
                for b in 0..=(n - a) {
                    next[a + b] += &prod[a] * &factor[b];
                }
            }
            prod = next;
        }
        assert_eq!(prod[1..].to_vec(), r[1..=n].to_vec());
    }

    #[test]
    fn free_tree_counts() {
        assert_eq!(
            free_trees(11),
            to_big(&[1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235])
        );
        assert_eq!(free_trees(4)[3], BigInt::from(2));
    }

    #[test]
    fn free_trees_match_canonical_enumeration_at_twelve() {
        let brute = enumerate_rooted(12, usize::MAX);
        let set: HashSet<String> = brute[12]
            .iter()
            .map(|s| free_canonical(&parse_adjacency(s)))
            .collect();
        assert_eq!(BigInt::from(set.len()), free_trees(12)[11]);
        assert_eq!(set.len(), 551);
    }

    #[test]
    fn binary_counts() {
        assert_eq!(
            binary_free_trees(12),
            to_big(&[1, 1, 1, 2, 3, 6, 11, 23, 46, 98, 207, 451])
        );
        assert_eq!(binary_free_trees(2)[1], BigInt::from(1));
    }

    #[test]
    fn binary_counts_match_enumeration_at_thirteen() {
        // W_n counts rooted trees on n - 1 nodes with at most two children
        let brute = enumerate_rooted(12, 2);
        let w = binary_free_trees(13);
        for n in 2..=13 {
            assert_eq!(BigInt::from(brute[n - 1].len()), w[n - 1], "n = {n}");
        }
    }

    #[test]
    fn free_bounded_by_rooted() {
        let r = rooted_trees(40);
        let f = free_trees(40);
        assert!(f.iter().zip(&r).all(|(a, b)| a <= b));
    }
}
