use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::system::{MechanicalSystem, MetricKind};
use crate::lie::{lazard_enumerate, GeneratorTable};
use crate::par::map_indexed;
use crate::Result;

/// Rank of the span of the order-`order` modified potentials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub order: usize,
    pub count: usize,
    pub rank: usize,
}

/// Ranks after stacking 1, 2, ... samples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankHistory {
    pub order: usize,
    pub count: usize,
    pub ranks: Vec<usize>,
}

impl RankHistory {
    pub fn final_rank(&self) -> usize {
        self.ranks.last().copied().unwrap_or(0)
    }
}

type Key = (usize, Vec<u32>);
type Row = BTreeMap<Key, BigRational>;

/// Incremental exact row echelon form keyed by leading entry.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<Key, Row>,
}

impl Echelon {
    fn insert(&mut self, mut row: Row) -> bool {
        while let Some((lead, c)) = row.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            match self.pivots.get(&lead) {
                Some(p) => {
                    for (k, v) in p {
                        let entry = row.entry(k.clone()).or_insert_with(BigRational::zero);
                        *entry -= &c * v;
                        if entry.is_zero() {
                            row.remove(k);
                        }
                    }
                }
                None => {
                    for v in row.values_mut() {
                        *v /= &c;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }
}

/// Exact rank of sparse rational rows.
fn rank(rows: &[Row]) -> usize {
    let mut e = Echelon::default();
    rows.iter().filter(|r| e.insert((*r).clone())).count()
}

/// Coefficient rows of every modified potential of order ≤ `max_order` on one
/// system, tagged with `tag` so rows from different systems can be stacked.
fn sample_rows(
    table: &GeneratorTable,
    system: &MechanicalSystem,
    tag: usize,
    budget: usize,
) -> Result<Vec<Row>> {
    let mut memo = HashMap::new();
    table
        .entries
        .iter()
        .map(|g| {
            let poly = system.eval_memo(&g.expr, &mut memo, budget)?;
            Ok(poly
                .terms()
                .map(|(q, p, c)| ((tag, [q, p].concat()), c.clone()))
                .collect())
        })
        .collect()
}

fn stacked_rows(
    table: &GeneratorTable,
    samples: &[MechanicalSystem],
    budget: usize,
) -> Result<Vec<Row>> {
    let per_sample: Vec<Result<Vec<Row>>> = map_indexed(samples.len(), |s| {
        sample_rows(table, &samples[s], s, budget)
    });
    let mut rows = vec![Row::new(); table.entries.len()];
    for sample in per_sample {
        for (row, part) in rows.iter_mut().zip(sample?) {
            row.extend(part);
        }
    }
    Ok(rows)
}

/// Per-order rank of the modified potentials evaluated on all `samples` at
/// once: a linear relation counts only if it holds on every sample.
pub fn independence_rank(
    max_order: usize,
    samples: &[MechanicalSystem],
    budget: usize,
) -> Result<Vec<RankReport>> {
    let table = lazard_enumerate(max_order)?;
    let rows = stacked_rows(&table, samples, budget)?;
    let mut out = Vec::new();
    for order in 1..=max_order {
        let selected: Vec<Row> = table
            .entries
            .iter()
            .zip(&rows)
            .filter(|(g, _)| g.order == order)
            .map(|(_, r)| r.clone())
            .collect();
        if !selected.is_empty() {
            out.push(RankReport {
                order,
                count: selected.len(),
                rank: rank(&selected),
            });
        }
    }
    Ok(out)
}

/// Rank at one order as random samples are added, stopping when the rank
/// reaches the number of potentials, stays unchanged for `patience` extra
/// samples, or `max_samples` is reached.
#[allow(clippy::too_many_arguments)]
pub fn rank_until_stable(
    order: usize,
    n: usize,
    kind: MetricKind,
    v_degree: u32,
    seed: u64,
    patience: usize,
    max_samples: usize,
    budget: usize,
) -> Result<RankHistory> {
    let table = lazard_enumerate(order)?;
    let samples = MechanicalSystem::random_samples(seed, max_samples, n, kind, v_degree);
    let idx: Vec<usize> = table
        .entries
        .iter()
        .enumerate()
        .filter(|(_, g)| g.order == order)
        .map(|(i, _)| i)
        .collect();
    let mut rows = vec![Row::new(); idx.len()];
    let mut ranks = Vec::new();
    for (s, system) in samples.iter().enumerate() {
        let part = sample_rows(&table, system, s, budget)?;
        for (row, &i) in rows.iter_mut().zip(&idx) {
            row.extend(part[i].clone());
        }
        let r = rank(&rows);
        ranks.push(r);
        let flat = ranks.len() > patience && ranks[ranks.len() - 1 - patience] == r;
        if r == idx.len() || flat {
            break;
        }
    }
    Ok(RankHistory {
        order,
        count: idx.len(),
        ranks,
    })
}
