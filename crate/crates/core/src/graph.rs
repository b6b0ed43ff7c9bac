//! Finite multigraphs with loops, the edge-list text format, and fixture generators.
//!
//! Vertices are dense ids `0..n`. Every edge owns two half-edges: half-edge
//! `2e` sits at the first endpoint of edge `e` and `2e + 1` at the second.
//! A loop therefore contributes two half-edges, and degree two, to its vertex.

use std::fmt;
use std::io::Read;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// One side of an edge. The identifier is `2 * edge + side`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge(usize);

impl HalfEdge {
    pub fn new(edge: usize, side: usize) -> Self {
        debug_assert!(side < 2);
        HalfEdge(2 * edge + side)
    }

    pub fn id(self) -> usize {
        self.0
    }

    pub fn edge(self) -> usize {
        self.0 / 2
    }

    pub fn side(self) -> usize {
        self.0 % 2
    }

    pub fn opposite(self) -> HalfEdge {
        HalfEdge(self.0 ^ 1)
    }
}

/// An undirected multigraph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<HalfEdge>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::arg(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{n}"
            )));
        }
        let mut incidence = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            incidence[u].push(HalfEdge::new(e, 0));
            incidence[v].push(HalfEdge::new(e, 1));
        }
        Ok(Graph { n, edges, incidence })
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Half-edges incident to `v`, in increasing id order.
    pub fn half_edges_at(&self, v: usize) -> &[HalfEdge] {
        &self.incidence[v]
    }

    /// The vertex a half-edge is attached to.
    pub fn endpoint(&self, h: HalfEdge) -> usize {
        let (u, v) = self.edges[h.edge()];
        if h.side() == 0 {
            u
        } else {
            v
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// True when some unordered pair of distinct vertices is joined more than once.
    pub fn has_multi_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .filter(|&&(u, v)| u != v)
            .any(|&(u, v)| !seen.insert((u.min(v), u.max(v))))
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_multi_edges()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.incidence.iter().all(|hs| hs.len() == d)
    }

    /// Applies a vertex permutation: edge `(u, v)` becomes `(perm[u], perm[v])`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::arg(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::arg("permutation is not a bijection"));
            }
        }
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, edges)
    }

    /// Serializes into the edge-list format accepted by [`parse_graph`].
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for &(u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Parses the edge-list format.
///
/// Lines are LF separated; `#` starts a comment; blank lines are skipped.
/// The first significant line is `n <count>`, every later one is `<u> <v>`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let line = line.strip_suffix('\r').unwrap_or(line);
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match n {
            None => {
                if tokens.len() != 2 || tokens[0] != "n" {
                    return Err(parse_err(format!("expected header `n <count>`, got `{}`", line.trim())));
                }
                n = Some(
                    tokens[1]
                        .parse()
                        .map_err(|_| parse_err(format!("invalid vertex count `{}`", tokens[1])))?,
                );
            }
            Some(count) => {
                if tokens.len() != 2 {
                    return Err(parse_err(format!("expected `<u> <v>`, got `{}`", line.trim())));
                }
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip(&tokens) {
                    let value: i64 = tok
                        .parse()
                        .map_err(|_| parse_err(format!("`{tok}` is not an integer")))?;
                    if value < 0 || value as u64 >= count as u64 {
                        return Err(parse_err(format!("endpoint {value} outside 0..{count}")));
                    }
                    *slot = value as usize;
                }
                edges.push((ends[0], ends[1]));
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing header `n <count>`".into(),
    })?;
    Graph::new(n, edges)
}

/// Reads a graph from any reader (a file or standard input).
pub fn read_graph(mut reader: impl Read) -> Result<Graph> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    parse_graph(&text)
}

pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    g.degree_sequence()
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Result<Graph> {
    g.relabel(perm)
}

/// Builds a named fixture: `complete`, `cycle`, `path`, `star` (with `size`
/// vertices in total) or `petersen`.
pub fn make_named(name: &str, size: Option<usize>) -> Result<Graph> {
    if name == "petersen" {
        return Ok(petersen());
    }
    let size = match size {
        Some(s) if s >= 1 => s,
        Some(s) => return Err(Error::arg(format!("size must be at least 1, got {s}"))),
        None => return Err(Error::arg(format!("`{name}` needs a size"))),
    };
    match name {
        "complete" => Ok(complete(size)),
        "cycle" => Ok(cycle(size)),
        "path" => Ok(path(size)),
        "star" => Ok(star(size)),
        other => Err(Error::arg(format!("unknown graph `{other}`"))),
    }
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, edges).expect("valid endpoints")
}

/// The cycle on `n` vertices. `n = 1` gives a loop and `n = 2` a doubled edge.
pub fn cycle(n: usize) -> Graph {
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, edges).expect("valid endpoints")
}

pub fn path(n: usize) -> Graph {
    let edges = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, edges).expect("valid endpoints")
}

/// Star with centre 0 and `n - 1` leaves.
pub fn star(n: usize) -> Graph {
    let edges = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, edges).expect("valid endpoints")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a)
        .flat_map(|u| (0..b).map(move |v| (u, a + v)))
        .collect();
    Graph::new(a + b, edges).expect("valid endpoints")
}

/// Kneser graph on the 2-subsets of a 5-set: subsets are adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::new(pairs.len(), edges).expect("valid endpoints")
}

/// Erdős–Rényi graph: each of the `n(n-1)/2` pairs is an edge with probability `p`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid endpoints")
}

/// Random multigraph with `m` edges whose endpoints are chosen uniformly,
/// so loops and parallel edges appear.
pub fn random_multigraph<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    if n == 0 {
        return Graph::empty(0);
    }
    let edges = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    Graph::new(n, edges).expect("valid endpoints")
}

/// Uniform-ish simple `d`-regular graph by the configuration model with rejection.
pub fn random_regular<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R) -> Result<Graph> {
    if !(n * d).is_multiple_of(2) || d >= n.max(1) {
        return Err(Error::arg(format!("no simple {d}-regular graph on {n} vertices")));
    }
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..10_000 {
        stubs.shuffle(rng);
        let mut seen = std::collections::HashSet::new();
        let mut edges = Vec::with_capacity(stubs.len() / 2);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        return Graph::new(n, edges);
    }
    Err(Error::Inconsistent("configuration model kept producing non-simple graphs".into()))
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sorted_edges(g: &Graph) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e
    }

    #[test]
    fn parses_triangle() {
        let g = parse_graph("n 3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(g.degree_sequence(), vec![2, 2, 2]);
    }

    #[test]
    fn loop_counts_twice() {
        let g = parse_graph("n 1\n0 0\n").unwrap();
        assert_eq!(degree_sequence(&g), vec![2]);
        assert_eq!(g.half_edges_at(0), &[HalfEdge::new(0, 0), HalfEdge::new(0, 1)]);
    }

    #[test]
    fn comments_blank_lines_and_spacing() {
        let g = parse_graph("# header\n\nn   4 # four\n0    1\n\n  2 3  \n2 3\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (2, 3), (2, 3)]);
        assert!(g.has_multi_edges());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("n 3\n0 5\n", 2),
            ("n 3\n0 -1\n", 2),
            ("n 3\n\n0 x\n", 3),
            ("m 3\n", 1),
            ("n three\n", 1),
            ("n 3\n0 1 2\n", 2),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(matches!(parse_graph("# nothing\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(complete(4).degree_sequence(), vec![3; 4]);
        assert_eq!(cycle(5).degree_sequence(), vec![2; 5]);
    }

    #[test]
    fn relabel_examples() {
        let tri = complete(3);
        assert_eq!(tri.relabel(&[0, 1, 2]).unwrap().edges(), tri.edges());
        let p = path(3).relabel(&[2, 1, 0]).unwrap();
        assert_eq!(p.edges(), &[(2, 1), (1, 0)]);
        assert!(tri.relabel(&[0, 0, 1]).is_err());
        assert!(tri.relabel(&[0, 1]).is_err());
        assert!(tri.relabel(&[0, 1, 3]).is_err());
    }

    #[test]
    fn named_graphs() {
        let k4 = make_named("complete", Some(4)).unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        let c5 = make_named("cycle", Some(5)).unwrap();
        assert_eq!((c5.vertex_count(), c5.edge_count()), (5, 5));
        assert!(c5.is_regular(2));
        assert_eq!(make_named("star", Some(4)).unwrap().degree_sequence(), vec![3, 1, 1, 1]);
        assert_eq!(make_named("path", Some(1)).unwrap().edge_count(), 0);
        assert!(make_named("wheel", Some(5)).is_err());
        assert!(make_named("cycle", Some(0)).is_err());
        assert!(make_named("cycle", None).is_err());
    }

    #[test]
    fn petersen_is_kneser() {
        let p = make_named("petersen", None).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert!(p.is_regular(3));
        assert!(p.is_simple());
        // girth 5: no triangles or 4-cycles
        let adj = |a: usize, b: usize| p.edges().iter().any(|&(u, v)| (u, v) == (a, b) || (v, u) == (a, b));
        for a in 0..10 {
            for b in 0..10 {
                for c in 0..10 {
                    if a != b && b != c && a != c {
                        assert!(!(adj(a, b) && adj(b, c) && adj(c, a)));
                    }
                }
            }
        }
    }

    #[test]
    fn random_regular_is_regular() {
        let mut rng = rand::thread_rng();
        let g = random_regular(14, 3, &mut rng).unwrap();
        assert!(g.is_regular(3) && g.is_simple());
        assert!(random_regular(5, 3, &mut rng).is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..8).prop_flat_map(|n| {
            prop::collection::vec((0..n, 0..n), 0..14)
                .prop_map(move |edges| Graph::new(n, edges).unwrap())
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
        }

        #[test]
        fn degree_sum_is_twice_edges(g in arb_graph()) {
            prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.edge_count());
            for v in 0..g.vertex_count() {
                for &h in g.half_edges_at(v) {
                    prop_assert_eq!(g.endpoint(h), v);
                }
            }
        }

        #[test]
        fn relabel_preserves_degrees_and_inverts(g in arb_graph(), seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let perm = random_permutation(g.vertex_count(), &mut rng);
            let h = g.relabel(&perm).unwrap();
            let mut a = g.degree_sequence();
            let mut b = h.degree_sequence();
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
            let mut inv = vec![0; perm.len()];
            for (i, &p) in perm.iter().enumerate() {
                inv[p] = i;
            }
            prop_assert_eq!(sorted_edges(&h.relabel(&inv).unwrap()), sorted_edges(&g));
        }
    }
}
