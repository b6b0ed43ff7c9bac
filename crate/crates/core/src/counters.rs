//! Counting edge colorings and cycles by contracting with `B = I_r`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::engine::{contract, plan_greedy, ContractionPlan};
use crate::error::{Error, Result};
use crate::family::{BilinearForm, TensorFamily};
use crate::graph::Graph;
use crate::partition::{partitions_up_to, Partition};
use crate::rings::{eval_power_sum, solve_linear_exact, CyclotomicRing, Integers, Ring};

/// Number of 2-valent subgraphs of each cycle type. Types with no subgraph
/// are absent.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleSpectrum(BTreeMap<Partition, BigInt>);

impl CycleSpectrum {
    /// Builds a spectrum, dropping zero counts.
    pub fn from_map(mut counts: BTreeMap<Partition, BigInt>) -> Self {
        counts.retain(|_, c| !c.is_zero());
        CycleSpectrum(counts)
    }

    /// `N_λ`, zero when absent.
    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.0.get(lambda).cloned().unwrap_or_default()
    }

    /// Entries in ascending partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Single-line JSON: `{"n": 4, "spectrum": {"[]": 1, "[3]": 4, "[4]": 3}}`.
    pub fn to_json(&self, n: usize) -> String {
        let mut out = format!("{{\"n\": {n}, \"spectrum\": {{");
        for (i, (lambda, count)) in self.0.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            write!(out, "\"{lambda}\": {count}").expect("writing to a String");
        }
        out.push_str("}}");
        out
    }
}

impl FromIterator<(Partition, BigInt)> for CycleSpectrum {
    fn from_iter<T: IntoIterator<Item = (Partition, BigInt)>>(iter: T) -> Self {
        CycleSpectrum::from_map(iter.into_iter().collect())
    }
}

/// Proper `r`-edge colorings of `g`.
pub fn count_edge_colorings(g: &Graph, r: usize) -> BigInt {
    count_edge_colorings_with_plan(g, r, &plan_greedy(g, r)).expect("greedy plan fits the graph")
}

pub fn count_edge_colorings_with_plan(g: &Graph, r: usize, plan: &ContractionPlan) -> Result<BigInt> {
    let family = TensorFamily::coloring(Integers, r);
    contract(g, &family, &BilinearForm::identity(&Integers, r), plan)
}

/// 3-edge colorings of a cubic graph.
pub fn count_tait(g: &Graph) -> Result<BigInt> {
    if !g.is_regular(3) {
        return Err(Error::Precondition(format!(
            "Tait colorings need a 3-regular graph, degrees are {:?}",
            g.degree_sequence()
        )));
    }
    Ok(count_edge_colorings(g, 3))
}

/// `Σ_{|λ| ≤ n} t^{n-|λ|} p_λ(x) N_λ(g)` with `r = x.len() + 1` colors.
pub fn eval_cycle_function(g: &Graph, x: &[BigInt], t: &BigInt) -> BigInt {
    let r = x.len() + 1;
    eval_cycle_function_with_plan(g, x, t, &plan_greedy(g, r)).expect("greedy plan fits the graph")
}

pub fn eval_cycle_function_with_plan(g: &Graph, x: &[BigInt], t: &BigInt, plan: &ContractionPlan) -> Result<BigInt> {
    let family = TensorFamily::cycle(Integers, x.to_vec(), t.clone());
    contract(g, &family, &BilinearForm::identity(&Integers, x.len() + 1), plan)
}

/// Spanning 2-regular subgraphs, connected or not.
pub fn count_spanning_cycles(g: &Graph) -> BigInt {
    eval_cycle_function(g, &[BigInt::one()], &BigInt::zero())
}

/// Hamiltonian cycles, evaluated over `Z[ζ_n]` with `x_j = ζ^j` and `t = 0`.
/// Power sums `p_k` of the `n`-th roots of unity vanish for `k < n`, so the
/// contraction equals `n · N_[n]`.
pub fn count_hamiltonian(g: &Graph) -> Result<BigInt> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::Precondition(format!(
            "Hamiltonian counting needs at least 3 vertices, got {n}"
        )));
    }
    count_hamiltonian_with_plan(g, &plan_greedy(g, n + 1))
}

pub fn count_hamiltonian_with_plan(g: &Graph, plan: &ContractionPlan) -> Result<BigInt> {
    let n = g.vertex_count();
    let ring = CyclotomicRing::new(n)?;
    let x = (1..=n).map(|j| ring.zeta_pow(j)).collect();
    let family = TensorFamily::cycle(ring.clone(), x, ring.zero());
    let value = contract(g, &family, &BilinearForm::identity(&ring, n + 1), plan)?;
    let total = value
        .as_integer()
        .ok_or_else(|| Error::Inconsistent(format!("contraction {value} is not an integer")))?;
    let (count, rem) = total.div_rem(&BigInt::from(n));
    if !rem.is_zero() || count.is_negative() {
        return Err(Error::Inconsistent(format!(
            "contraction {total} is not a nonnegative multiple of {n}"
        )));
    }
    Ok(count)
}

/// Cycle types that can occur in `g`: parts of size 1 need a loop and
/// parts of size 2 need a parallel pair.
pub fn feasible_partitions(g: &Graph) -> Vec<Partition> {
    let min_part = if g.has_loops() {
        1
    } else if g.has_multi_edges() {
        2
    } else {
        3
    };
    partitions_up_to(g.vertex_count(), min_part)
}

#[derive(Debug, Clone)]
pub struct SpectrumOptions {
    /// Only report types of weight at most this; defaults to `n`.
    pub max_weight: Option<usize>,
    pub seed: u64,
    /// Fresh evaluation points are drawn this many times after a singular system.
    pub retries: usize,
    /// Points are drawn from `[-bound, bound]`.
    pub coordinate_bound: i64,
    /// Evaluate points on this many threads; 0 or 1 means sequential.
    pub threads: usize,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            max_weight: None,
            seed: 0x5eed_c7c1e,
            retries: 5,
            coordinate_bound: 1 << 20,
            threads: 1,
        }
    }
}

/// Recovers every `N_λ(g)` with `|λ| ≤ max_weight` by interpolation.
pub fn cycle_spectrum(g: &Graph, max_weight: Option<usize>) -> Result<CycleSpectrum> {
    cycle_spectrum_with(
        g,
        &SpectrumOptions {
            max_weight,
            ..SpectrumOptions::default()
        },
    )
}

/// With `r = n + 1` the monomials `t^{n-|λ|} p_λ(x)` are linearly
/// independent, so evaluating at as many random points as there are
/// feasible types gives a square system with a unique solution.
pub fn cycle_spectrum_with(g: &Graph, opts: &SpectrumOptions) -> Result<CycleSpectrum> {
    let n = g.vertex_count();
    let unknowns = feasible_partitions(g);
    let plan = plan_greedy(g, n + 1);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let bound = opts.coordinate_bound;

    let mut solution = None;
    for _ in 0..=opts.retries {
        let points: Vec<(Vec<BigInt>, BigInt)> = (0..unknowns.len())
            .map(|_| {
                let x = (0..n).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
                (x, BigInt::from(rng.gen_range(-bound..=bound)))
            })
            .collect();
        let matrix: Vec<Vec<BigRational>> = points
            .iter()
            .map(|(x, t)| {
                unknowns
                    .iter()
                    .map(|lambda| {
                        let mono = t.pow((n - lambda.weight()) as u32) * eval_power_sum(lambda, x);
                        BigRational::from_integer(mono)
                    })
                    .collect()
            })
            .collect();
        let eval = |(x, t): &(Vec<BigInt>, BigInt)| eval_cycle_function_with_plan(g, x, t, &plan);
        let values: Vec<BigInt> = if opts.threads > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
                .map_err(|e| Error::arg(format!("cannot start thread pool: {e}")))?;
            pool.install(|| points.par_iter().map(eval).collect::<Result<_>>())?
        } else {
            points.iter().map(eval).collect::<Result<_>>()?
        };
        let rhs: Vec<BigRational> = values.into_iter().map(BigRational::from_integer).collect();
        match solve_linear_exact(&matrix, &rhs) {
            Ok(sol) => {
                solution = Some(sol);
                break;
            }
            Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        }
    }
    let solution = solution.ok_or(Error::Singular)?;

    let cap = opts.max_weight.unwrap_or(n);
    let mut counts = BTreeMap::new();
    for (lambda, value) in unknowns.into_iter().zip(solution) {
        if !value.is_integer() || value.is_negative() {
            return Err(Error::Inconsistent(format!("N_{lambda} solved to {value}")));
        }
        if lambda.is_empty() && !value.is_one() {
            return Err(Error::Inconsistent(format!("N_[] solved to {value}, expected 1")));
        }
        if lambda.weight() <= cap {
            counts.insert(lambda, value.to_integer());
        }
    }
    Ok(CycleSpectrum::from_map(counts))
}
