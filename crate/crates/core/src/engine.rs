//! Frontier-based contraction of a tensor network laid out on a graph.
//!
//! A copy of the family's degree-`d` tensor sits at every vertex and each
//! edge contracts two legs through the bilinear form. Vertices are absorbed
//! one at a time in plan order. The state after each step maps colorings
//! of the open edges (those with exactly one absorbed endpoint) to the
//! partial sum of all products consistent with that coloring.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::family::{BilinearForm, Color, TensorFamily};
use crate::graph::Graph;
use crate::rings::Ring;

pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 12;

/// A vertex elimination order and its predicted cost
/// `Σ_i r^{f_i}`, where `f_i` is the frontier size after step `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionPlan {
    order: Vec<usize>,
    predicted_cost: BigInt,
}

impl ContractionPlan {
    pub fn new(g: &Graph, order: Vec<usize>, r: usize) -> Result<Self> {
        let predicted_cost = plan_cost(g, &order, r)?;
        Ok(ContractionPlan { order, predicted_cost })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn predicted_cost(&self) -> &BigInt {
        &self.predicted_cost
    }
}

/// Observed work for one contraction.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ContractionStats {
    /// Largest number of stored frontier states after any step.
    pub peak_states: usize,
    /// Sum of stored frontier states over all steps.
    pub total_states: usize,
    /// Tensor completions visited.
    pub completions: usize,
}

fn check_order(g: &Graph, order: &[usize]) -> Result<()> {
    let n = g.vertex_count();
    if order.len() != n {
        return Err(Error::arg(format!(
            "order has {} vertices, graph has {n}",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::arg("order is not a permutation of the vertices"));
        }
    }
    Ok(())
}

/// Frontier sizes after each step of `order`.
fn frontier_sizes(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut done = vec![false; g.vertex_count()];
    let mut f = 0usize;
    order
        .iter()
        .map(|&v| {
            for &h in g.half_edges_at(v) {
                let other = g.endpoint(h.opposite());
                if other == v {
                    continue;
                }
                if done[other] {
                    f -= 1;
                } else {
                    f += 1;
                }
            }
            done[v] = true;
            f
        })
        .collect()
}

/// Worst-case dense state count of processing `g` in `order` with `r` colors.
pub fn plan_cost(g: &Graph, order: &[usize], r: usize) -> Result<BigInt> {
    check_order(g, order)?;
    let base = BigInt::from(r);
    Ok(frontier_sizes(g, order)
        .into_iter()
        .map(|f| base.pow(f as u32))
        .sum())
}

/// Greedy order: always absorb the vertex giving the smallest frontier,
/// lowest id on ties.
pub fn plan_greedy(g: &Graph, r: usize) -> ContractionPlan {
    let n = g.vertex_count();
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut f: isize = 0;
    for _ in 0..n {
        let (best, next_f) = (0..n)
            .filter(|&v| !done[v])
            .map(|v| {
                let delta: isize = g
                    .half_edges_at(v)
                    .iter()
                    .map(|&h| g.endpoint(h.opposite()))
                    .filter(|&o| o != v)
                    .map(|o| if done[o] { -1 } else { 1 })
                    .sum();
                (v, f + delta)
            })
            .min_by_key(|&(v, nf)| (nf, v))
            .expect("an unprocessed vertex remains");
        done[best] = true;
        order.push(best);
        f = next_f;
    }
    ContractionPlan::new(g, order, r).expect("greedy order is a permutation")
}

/// Minimum-cost order by dynamic programming over vertex subsets; among
/// optimal orders the lexicographically smallest is returned.
pub fn plan_exhaustive(g: &Graph, r: usize, limit: usize) -> Result<ContractionPlan> {
    let n = g.vertex_count();
    if n > limit || n >= usize::BITS as usize {
        return Err(Error::TooLarge { n, limit });
    }
    let full = (1usize << n) - 1;
    let edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(u, v)| u != v).collect();
    let pow: Vec<BigInt> = (0..=edges.len()).map(|k| BigInt::from(r).pow(k as u32)).collect();
    let step_cost = |mask: usize| {
        let f = edges
            .iter()
            .filter(|&&(u, v)| ((mask >> u) & 1) != ((mask >> v) & 1))
            .count();
        &pow[f]
    };

    // to_go[mask]: cheapest cost of absorbing the vertices outside `mask`.
    let mut to_go = vec![BigInt::zero(); full + 1];
    for mask in (0..full).rev() {
        to_go[mask] = (0..n)
            .filter(|&v| mask & (1 << v) == 0)
            .map(|v| {
                let next = mask | (1 << v);
                step_cost(next) + &to_go[next]
            })
            .min()
            .expect("mask is not full");
    }

    let mut order = Vec::with_capacity(n);
    let mut mask = 0usize;
    while mask != full {
        let v = (0..n)
            .filter(|&v| mask & (1 << v) == 0)
            .find(|&v| {
                let next = mask | (1 << v);
                step_cost(next) + &to_go[next] == to_go[mask]
            })
            .expect("some vertex attains the optimum");
        order.push(v);
        mask |= 1 << v;
    }
    let plan = ContractionPlan::new(g, order, r)?;
    debug_assert_eq!(plan.predicted_cost, to_go[0]);
    Ok(plan)
}

/// Where a leg of the vertex being absorbed is connected.
enum Leg {
    /// Edge to an absorbed vertex, stored at this frontier position.
    Closing(usize),
    /// Edge to a vertex not yet absorbed.
    Opening,
    /// Second slot of a loop whose first slot is at the given leg index.
    LoopEnd(usize),
    LoopStart,
}

/// Evaluates the graph function for `family` and `b` on `g`.
pub fn contract<R: Ring>(
    g: &Graph,
    family: &TensorFamily<R>,
    b: &BilinearForm<R::Elem>,
    plan: &ContractionPlan,
) -> Result<R::Elem> {
    contract_with_stats(g, family, b, plan).map(|(v, _)| v)
}

pub fn contract_with_stats<R: Ring>(
    g: &Graph,
    family: &TensorFamily<R>,
    b: &BilinearForm<R::Elem>,
    plan: &ContractionPlan,
) -> Result<(R::Elem, ContractionStats)> {
    if b.dim() != family.colors() {
        return Err(Error::arg(format!(
            "bilinear form has dimension {}, family has {} colors",
            b.dim(),
            family.colors()
        )));
    }
    check_order(g, plan.order())?;
    let ring = family.ring();
    let mut stats = ContractionStats::default();

    let mut done = vec![false; g.vertex_count()];
    // open edges, ascending edge id (equivalently, half-edge id)
    let mut frontier: Vec<usize> = Vec::new();
    let mut states: HashMap<Vec<Color>, R::Elem> = HashMap::from([(Vec::new(), ring.one())]);

    for &v in plan.order() {
        let hs = g.half_edges_at(v);
        let mut legs = Vec::with_capacity(hs.len());
        let mut loop_first: HashMap<usize, usize> = HashMap::new();
        for (slot, &h) in hs.iter().enumerate() {
            let e = h.edge();
            let other = g.endpoint(h.opposite());
            legs.push(if other == v {
                match loop_first.remove(&e) {
                    Some(first) => Leg::LoopEnd(first),
                    None => {
                        loop_first.insert(e, slot);
                        Leg::LoopStart
                    }
                }
            } else if done[other] {
                Leg::Closing(frontier.binary_search(&e).expect("closing edge is open"))
            } else {
                Leg::Opening
            });
        }

        // Next frontier, and where each of its colors comes from.
        enum Source {
            Kept(usize),
            Slot(usize),
        }
        let closing: Vec<usize> = legs
            .iter()
            .filter_map(|l| match l {
                Leg::Closing(p) => Some(*p),
                _ => None,
            })
            .collect();
        let mut next: Vec<(usize, Source)> = frontier
            .iter()
            .enumerate()
            .filter(|(p, _)| !closing.contains(p))
            .map(|(p, &e)| (e, Source::Kept(p)))
            .collect();
        for (slot, leg) in legs.iter().enumerate() {
            if matches!(leg, Leg::Opening) {
                next.push((hs[slot].edge(), Source::Slot(slot)));
            }
        }
        next.sort_by_key(|(e, _)| *e);

        let mut next_states: HashMap<Vec<Color>, R::Elem> = HashMap::new();
        let mut partial: Vec<Option<Color>> = vec![None; legs.len()];
        for (key, value) in &states {
            let mut absorb = |idx: &[Color], weight: R::Elem| {
                let new_key: Vec<Color> = next
                    .iter()
                    .map(|(_, src)| match *src {
                        Source::Kept(p) => key[p],
                        Source::Slot(s) => idx[s],
                    })
                    .collect();
                let term = ring.mul(value, &weight);
                match next_states.get_mut(&new_key) {
                    Some(acc) => ring.add_assign(acc, &term),
                    None => {
                        next_states.insert(new_key, term);
                    }
                }
            };
            if b.is_identity() {
                for (slot, leg) in legs.iter().enumerate() {
                    partial[slot] = match leg {
                        Leg::Closing(p) => Some(key[*p]),
                        _ => None,
                    };
                }
                family.for_each_completion(&partial, |idx, entry| {
                    stats.completions += 1;
                    let loops_match = legs.iter().enumerate().all(|(s, leg)| match leg {
                        Leg::LoopEnd(first) => idx[*first] == idx[s],
                        _ => true,
                    });
                    if loops_match {
                        absorb(idx, entry.clone());
                    }
                });
            } else {
                partial.iter_mut().for_each(|p| *p = None);
                family.for_each_completion(&partial, |idx, entry| {
                    stats.completions += 1;
                    let mut weight = entry.clone();
                    for (s, leg) in legs.iter().enumerate() {
                        let w = match leg {
                            Leg::Closing(p) => b.weight(key[*p], idx[s]),
                            Leg::LoopEnd(first) => b.weight(idx[*first], idx[s]),
                            _ => continue,
                        };
                        if ring.is_zero(w) {
                            return;
                        }
                        weight = ring.mul(&weight, w);
                    }
                    absorb(idx, weight);
                });
            }
        }
        next_states.retain(|_, val| !ring.is_zero(val));

        done[v] = true;
        frontier = next.into_iter().map(|(e, _)| e).collect();
        states = next_states;
        stats.peak_states = stats.peak_states.max(states.len());
        stats.total_states += states.len();
        if states.is_empty() {
            return Ok((ring.zero(), stats));
        }
    }

    debug_assert!(frontier.is_empty());
    let value = states.remove(&Vec::new()).unwrap_or_else(|| ring.zero());
    Ok((value, stats))
}

/// Largest frontier the order ever holds.
pub fn max_frontier(g: &Graph, order: &[usize]) -> Result<usize> {
    check_order(g, order)?;
    Ok(frontier_sizes(g, order).into_iter().max().unwrap_or(0))
}

impl ContractionPlan {
    /// The plan `0, 1, ..., n-1`.
    pub fn identity(g: &Graph, r: usize) -> Self {
        ContractionPlan::new(g, (0..g.vertex_count()).collect(), r).expect("identity order")
    }
}
