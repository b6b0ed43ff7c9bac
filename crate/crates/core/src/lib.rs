//! Exact graph counting by contracting symmetric tensors along edges.
//!
//! Put a symmetric `d`-tensor at every vertex of degree `d` and contract
//! along each edge with a symmetric bilinear form. The resulting scalar is
//! an isomorphism invariant of the graph. Two tensor families make it count
//! things:
//!
//! * the **coloring** family (entry 1 on pairwise distinct indices) counts
//!   proper `r`-edge colorings;
//! * the **cycle** family (entry `x_i` on permutations of `(i, i, r, ..., r)`
//!   and `t` on `(r, ..., r)`) gives `Σ_λ t^{n-|λ|} p_λ(x) N_λ(G)`, a
//!   generating function for 2-valent subgraphs by cycle type.
//!
//! Evaluating the cycle family at the `n`-th roots of unity in `Z[ζ_n]`
//! isolates Hamiltonian cycles, and evaluating it at enough integer points
//! recovers every `N_λ` by exact interpolation.
//!
//! ```
//! use tensorcount::{count_hamiltonian, graph::petersen, graph::complete};
//!
//! assert_eq!(count_hamiltonian(&complete(6)).unwrap(), 60.into());
//! assert_eq!(count_hamiltonian(&petersen()).unwrap(), 0.into());
//! ```

pub mod counters;
pub mod engine;
pub mod error;
pub mod family;
pub mod graph;
pub mod oracle;
pub mod partition;
pub mod rings;

pub use counters::{
    count_edge_colorings, count_hamiltonian, count_spanning_cycles, count_tait, cycle_spectrum,
    cycle_spectrum_with, eval_cycle_function, CycleSpectrum, SpectrumOptions,
};
pub use engine::{contract, plan_cost, plan_exhaustive, plan_greedy, ContractionPlan};
pub use error::{Error, ErrorKind, Result};
pub use family::{BilinearForm, TensorFamily};
pub use graph::{parse_graph, Graph};
pub use partition::Partition;
