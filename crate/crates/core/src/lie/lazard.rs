use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::expr::BracketExpr;
use crate::{Error, Result};

/// Default cap on the number of generator entries.
pub const DEFAULT_ENTRY_BOUND: usize = 10_000_000;

/// How a modified potential `Z_i` is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Definition {
    /// `Z_1 = B`.
    Base,
    /// `Z_i = [Z_z, X_x]` with `X_x = [Z_x, A]` (1-based indices).
    Bracket { z: usize, x: usize },
}

#[derive(Clone, Debug)]
pub struct Generator {
    /// 1-based index, assigned in generation order.
    pub index: usize,
    pub definition: Definition,
    pub order: usize,
    /// Iteration at which the element joins `Z` (`Z_1 = B` has birth 1).
    pub birth: usize,
    pub expr: BracketExpr,
}

impl Generator {
    /// Order of the companion element `X_i = [Z_i, A]`.
    pub fn x_order(&self) -> usize {
        self.order + 1
    }

    pub fn x_expr(&self) -> BracketExpr {
        BracketExpr::bracket(&self.expr, &BracketExpr::a())
    }
}

/// All modified potentials `Z_i` of order at most `max_order`, in generation order.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    pub max_order: usize,
    pub entries: Vec<Generator>,
    /// Number of nonempty `Y_k` sets processed.
    pub iterations: usize,
}

/// JSON record `{"i": .., "def": [j, k] | "B", "order": .., "birth": ..}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub i: usize,
    pub def: DefinitionJson,
    pub order: usize,
    pub birth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DefinitionJson {
    Base(String),
    Pair([usize; 2]),
}

impl GeneratorTable {
    pub fn get(&self, index: usize) -> Option<&Generator> {
        index.checked_sub(1).and_then(|i| self.entries.get(i))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn records(&self) -> Vec<GeneratorRecord> {
        self.entries
            .iter()
            .map(|g| GeneratorRecord {
                i: g.index,
                def: match g.definition {
                    Definition::Base => DefinitionJson::Base("B".into()),
                    Definition::Bracket { z, x } => DefinitionJson::Pair([z, x]),
                },
                order: g.order,
                birth: g.birth,
            })
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.records())?)
    }
}

impl fmt::Display for GeneratorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>3}  {:<6}{:<16}{:>5}  expansion",
            "k", "Z", "definition", "order"
        )?;
        let mut last_birth = 0;
        for g in &self.entries {
            let k = if g.birth != last_birth {
                last_birth = g.birth;
                g.birth.to_string()
            } else {
                String::new()
            };
            let def = match g.definition {
                Definition::Base => "B".to_string(),
                Definition::Bracket { z, x } => format!("[Z_{z},X_{x}]"),
            };
            writeln!(
                f,
                "{:>3}  {:<6}{:<16}{:>5}  {}",
                k,
                format!("Z_{}", g.index),
                def,
                g.order,
                g.expr
            )?;
        }
        Ok(())
    }
}

/// Enumerates `Z` and `X = [Z, A]` up to `max_order` by iterated Lazard
/// elimination, dropping brackets of order above the cutoff as they appear.
pub fn lazard_enumerate(max_order: usize) -> Result<GeneratorTable> {
    lazard_enumerate_bounded(max_order, DEFAULT_ENTRY_BOUND)
}

pub fn lazard_enumerate_bounded(max_order: usize, entry_bound: usize) -> Result<GeneratorTable> {
    if max_order == 0 {
        return Err(Error::InvalidArgument(
            "max_order must be at least 1".into(),
        ));
    }
    let mut entries = vec![Generator {
        index: 1,
        definition: Definition::Base,
        order: 1,
        birth: 1,
        expr: BracketExpr::b(),
    }];
    // indices (0-based) into `entries`
    let mut y_set: Vec<usize> = vec![0];
    let mut x_set: Vec<usize> = Vec::new();
    let mut iterations = 0;

    while !y_set.is_empty() {
        iterations += 1;
        // X_{k+1} = X_k ∪ [Y_k, A]
        x_set.extend(
            y_set
                .iter()
                .copied()
                .filter(|&j| entries[j].x_order() <= max_order),
        );
        // Y_{k+1} = [Y_k, X_{k+1}]
        let mut next = Vec::new();
        for &j in &y_set {
            for &k in &x_set {
                let order = entries[j].order + entries[k].x_order();
                if order > max_order {
                    continue;
                }
                if entries.len() >= entry_bound {
                    return Err(Error::ResourceLimit {
                        what: "generator table",
                        needed: entries.len() + 1,
                        limit: entry_bound,
                    });
                }
                let expr = BracketExpr::bracket(&entries[j].expr, &entries[k].x_expr());
                next.push(entries.len());
                entries.push(Generator {
                    index: entries.len() + 1,
                    definition: Definition::Bracket { z: j + 1, x: k + 1 },
                    order,
                    birth: iterations + 1,
                    expr,
                });
            }
        }
        y_set = next;
    }

    Ok(GeneratorTable {
        max_order,
        entries,
        iterations,
    })
}

/// Sizes `|X_k|`, `|Y_k|` of the untruncated elimination sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSizePair {
    pub k: usize,
    pub size_x: BigUint,
    pub size_y: BigUint,
}

pub fn set_sizes(k_max: usize) -> Vec<SetSizePair> {
    let mut out = Vec::with_capacity(k_max + 1);
    let mut x = BigUint::zero();
    let mut y = BigUint::one();
    for k in 0..=k_max {
        out.push(SetSizePair {
            k,
            size_x: x.clone(),
            size_y: y.clone(),
        });
        x += &y;
        y *= &x;
    }
    out
}

/// Per-order counts of `Z` and `X` elements; index `n - 1` holds order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCounts {
    pub z: Vec<usize>,
    pub x: Vec<usize>,
}

impl OrderCounts {
    pub fn total_z(&self) -> usize {
        self.z.iter().sum()
    }

    pub fn total_x(&self) -> usize {
        self.x.iter().sum()
    }
}

pub fn count_by_order(table: &GeneratorTable, max_order: usize) -> Result<OrderCounts> {
    if table.max_order < max_order {
        return Err(Error::InvalidArgument(format!(
            "table computed to order {} cannot be counted to order {max_order}",
            table.max_order
        )));
    }
    let mut z = vec![0; max_order];
    let mut x = vec![0; max_order];
    for g in &table.entries {
        if g.order <= max_order {
            z[g.order - 1] += 1;
        }
        if g.x_order() <= max_order {
            x[g.x_order() - 1] += 1;
        }
    }
    Ok(OrderCounts { z, x })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_entry_at_order_one() {
        let t = lazard_enumerate(1).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.entries[0].definition, Definition::Base);
        assert_eq!(t.entries[0].expr.to_string(), "B");
    }

    #[test]
    fn rejects_zero_cutoff() {
        assert!(matches!(
            lazard_enumerate(0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn entry_bound_is_enforced() {
        let err = lazard_enumerate_bounded(12, 10).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { limit: 10, .. }));
        assert_eq!(lazard_enumerate_bounded(12, 14).unwrap().len(), 14);
    }

    #[test]
    fn order_twelve_examples() {
        let t = lazard_enumerate(12).unwrap();
        assert_eq!(t.len(), 14);
        let z5 = t.get(5).unwrap();
        assert_eq!(z5.definition, Definition::Bracket { z: 3, x: 1 });
        assert_eq!(z5.order, 7);
        let z14 = t.get(14).unwrap();
        assert_eq!(z14.definition, Definition::Bracket { z: 10, x: 1 });
        assert_eq!((z14.order, z14.birth), (11, 6));
        assert_eq!(t.iterations, 6);
    }

    #[test]
    fn expressions_have_degree_zero_and_cached_order() {
        let t = lazard_enumerate(15).unwrap();
        for g in &t.entries {
            assert_eq!(g.expr.degree(), Some(0));
            assert_eq!(g.expr.order(), g.order);
            assert_eq!(g.x_expr().degree(), Some(1));
            assert_eq!(g.order % 2, 1);
        }
    }

    #[test]
    fn counts_small() {
        let t = lazard_enumerate(2).unwrap();
        let c = count_by_order(&t, 2).unwrap();
        assert_eq!(c.z, vec![1, 0]);
        assert_eq!(c.x, vec![0, 1]);
        assert!(count_by_order(&t, 3).is_err());
    }

    #[test]
    fn set_size_recurrence() {
        let s = set_sizes(1);
        assert_eq!(s[1].size_x, BigUint::from(1u32));
        assert_eq!(s[1].size_y, BigUint::from(1u32));
        let s = set_sizes(9);
        for w in s.windows(2) {
            assert_eq!(&w[1].size_x - &w[0].size_x, w[0].size_y);
            assert_eq!(w[1].size_y, &w[0].size_y * &w[1].size_x);
        }
    }

    #[test]
    fn json_shape() {
        let t = lazard_enumerate(3).unwrap();
        let v: serde_json::Value = serde_json::from_str(&t.to_json().unwrap()).unwrap();
        assert_eq!(v[0]["def"], serde_json::json!("B"));
        assert_eq!(v[1]["def"], serde_json::json!([1, 1]));
        assert_eq!(v[1]["order"], serde_json::json!(3));
        assert_eq!(v[1]["birth"], serde_json::json!(2));
        let back: Vec<GeneratorRecord> = serde_json::from_str(&t.to_json().unwrap()).unwrap();
        assert_eq!(back, t.records());
    }
}
