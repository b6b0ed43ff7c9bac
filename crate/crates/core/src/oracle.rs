//! Brute-force reference counts taken straight from the definitions.
//!
//! Nothing here touches the contraction engine. These are deliberately
//! simple and only practical for small graphs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::counters::CycleSpectrum;
use crate::family::{BilinearForm, Color, TensorFamily};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::rings::Ring;

/// Proper edge colorings with `r` colors, by backtracking over edges.
pub fn brute_edge_colorings(g: &Graph, r: usize) -> BigInt {
    if g.has_loops() {
        return BigInt::zero();
    }
    fn go(g: &Graph, r: usize, e: usize, colors: &mut Vec<usize>) -> BigInt {
        if e == g.edge_count() {
            return BigInt::one();
        }
        let (u, v) = g.edges()[e];
        let mut total = BigInt::zero();
        for c in 0..r {
            let clash = g.edges()[..e]
                .iter()
                .zip(colors.iter())
                .any(|(&(a, b), &col)| col == c && (a == u || a == v || b == u || b == v));
            if !clash {
                colors.push(c);
                total += go(g, r, e + 1, colors);
                colors.pop();
            }
        }
        total
    }
    go(g, r, 0, &mut Vec::with_capacity(g.edge_count()))
}

/// Every 2-valent edge subset, classified by the sizes of its components.
pub fn brute_cycle_spectrum(g: &Graph) -> CycleSpectrum {
    let n = g.vertex_count();
    let edges = g.edges();
    // last edge index touching each vertex, for early rejection of degree 1
    let mut last = vec![None; n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        last[u] = Some(e);
        last[v] = Some(e);
    }

    struct Search<'a> {
        edges: &'a [(usize, usize)],
        last: Vec<Option<usize>>,
        deg: Vec<u8>,
        chosen: Vec<usize>,
        counts: BTreeMap<Partition, BigInt>,
    }

    impl Search<'_> {
        fn settled_ok(&self, e: usize) -> bool {
            let (u, v) = self.edges[e];
            [u, v]
                .iter()
                .all(|&w| self.last[w] != Some(e) || self.deg[w] != 1)
        }

        fn go(&mut self, e: usize) {
            if e == self.edges.len() {
                let lambda = component_sizes(self.deg.len(), self.edges, &self.chosen);
                *self.counts.entry(lambda).or_default() += 1;
                return;
            }
            let (u, v) = self.edges[e];
            // exclude
            if self.settled_ok(e) {
                self.go(e + 1);
            }
            // include
            self.deg[u] += 1;
            self.deg[v] += 1;
            if self.deg[u] <= 2 && self.deg[v] <= 2 && self.settled_ok(e) {
                self.chosen.push(e);
                self.go(e + 1);
                self.chosen.pop();
            }
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
    }

    let mut search = Search {
        edges,
        last,
        deg: vec![0; n],
        chosen: Vec::new(),
        counts: BTreeMap::new(),
    };
    search.go(0);
    CycleSpectrum::from_map(search.counts)
}

/// Component edge counts of the subgraph formed by `chosen`.
fn component_sizes(n: usize, edges: &[(usize, usize)], chosen: &[usize]) -> Partition {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &e in chosen {
        let (u, v) = edges[e];
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for &e in chosen {
        let root = find(&mut parent, edges[e].0);
        *sizes.entry(root).or_default() += 1;
    }
    Partition::new(sizes.into_values().collect()).expect("components are nonempty")
}

/// Hamiltonian cycles, by extending paths from vertex 0. Each undirected
/// cycle is counted once by requiring the second vertex to be smaller than
/// the last; parallel edges multiply the count. Zero when `n < 3`.
pub fn brute_hamiltonian(g: &Graph) -> BigInt {
    let n = g.vertex_count();
    if n < 3 {
        return BigInt::zero();
    }
    let mut mult = vec![vec![0u32; n]; n];
    for &(u, v) in g.edges() {
        if u != v {
            mult[u][v] += 1;
            mult[v][u] += 1;
        }
    }

    fn go(mult: &[Vec<u32>], path: &mut Vec<usize>, used: &mut [bool], weight: &BigInt, total: &mut BigInt) {
        let n = mult.len();
        let tail = *path.last().expect("path starts at 0");
        if path.len() == n {
            if mult[tail][0] > 0 && path[1] < tail {
                *total += weight * mult[tail][0];
            }
            return;
        }
        for next in 1..n {
            if !used[next] && mult[tail][next] > 0 {
                used[next] = true;
                path.push(next);
                go(mult, path, used, &(weight * mult[tail][next]), total);
                path.pop();
                used[next] = false;
            }
        }
    }

    let mut used = vec![false; n];
    used[0] = true;
    let mut total = BigInt::zero();
    go(&mult, &mut vec![0], &mut used, &BigInt::one(), &mut total);
    total
}

/// The graph function computed the slow way: every tensor is materialized
/// densely and every coloring of every half-edge is summed. With an
/// identity form only colorings that agree along each edge are visited.
pub fn naive_contract<R: Ring>(g: &Graph, family: &TensorFamily<R>, b: &BilinearForm<R::Elem>) -> R::Elem {
    let ring = family.ring();
    let r = family.colors();
    let max_d = g.max_degree();
    // dense[d][code] where code is the base-r reading of the index tuple
    let dense: Vec<Vec<R::Elem>> = (0..=max_d)
        .map(|d| {
            (0..r.pow(d as u32))
                .map(|code| {
                    if d == 0 {
                        return family.scalar();
                    }
                    let idx = decode(code, d, r);
                    family.entry(&idx).expect("valid colors")
                })
                .collect()
        })
        .collect();

    let half_edges = 2 * g.edge_count();
    let free = if b.is_identity() { g.edge_count() } else { half_edges };
    let mut total = ring.zero();
    if r == 0 && free > 0 {
        return total;
    }
    for code in 0..r.pow(free as u32) {
        let raw = decode(code, free, r);
        let colors: Vec<Color> = if b.is_identity() {
            raw.iter().flat_map(|&c| [c, c]).collect()
        } else {
            raw
        };
        let mut term = ring.one();
        if !b.is_identity() {
            for pair in colors.chunks(2) {
                term = ring.mul(&term, b.weight(pair[0], pair[1]));
            }
        }
        for v in 0..g.vertex_count() {
            let hs = g.half_edges_at(v);
            let idx: usize = hs
                .iter()
                .rev()
                .fold(0, |acc, h| acc * r + (colors[h.id()] as usize - 1));
            term = ring.mul(&term, &dense[hs.len()][idx]);
        }
        ring.add_assign(&mut total, &term);
    }
    total
}

/// Digits of `code` in base `r`, least significant first, shifted to `1..=r`.
fn decode(mut code: usize, len: usize, r: usize) -> Vec<Color> {
    (0..len)
        .map(|_| {
            let c = code % r;
            code /= r;
            c as Color + 1
        })
        .collect()
}
