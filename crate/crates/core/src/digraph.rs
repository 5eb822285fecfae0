//! Labeled digraphs on vertices `1..=n`, loops allowed.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Vertex limit imposed by the bitmask adjacency rows.
pub const MAX_VERTICES: usize = 64;
/// Largest `n` for which Hamiltonian paths are counted.
pub const MAX_HAMILTONIAN: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    // adj[u] has bit v set iff (u+1, v+1) is an edge
    adj: Vec<u64>,
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Digraph {
    /// `D_n`: `n` vertices, no edges.
    pub fn discrete(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Digraph { adj: vec![0; n] }
    }

    /// Builds a digraph from 1-based edges; repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "digraph",
                size: n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Self::discrete(n);
        for (u, v) in edges {
            g.check_vertex_pair(u, v)?;
            g.adj[u - 1] |= bit(v - 1);
        }
        Ok(g)
    }

    fn check_vertex_pair(&self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::EdgeOutOfRange(u, v, n));
        }
        Ok(())
    }

    /// `K_n`: all `n²` ordered pairs, loops included.
    pub fn complete(n: usize) -> Self {
        Self::discrete(n).complement()
    }

    /// `P_n`: edges `(i, i+1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::discrete(n);
        for u in 1..n {
            g.adj[u - 1] |= bit(u);
        }
        g
    }

    /// Directed cycle `1 → 2 → ⋯ → n → 1`; for `n = 1` this is a single loop.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n > 0 {
            g.adj[n - 1] |= bit(0);
        }
        g
    }

    /// Each of the `n²` pairs (loops included) independently with probability `p`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Self::discrete(n);
        for u in 0..n {
            for v in 0..n {
                if rng.random_bool(p) {
                    g.adj[u] |= bit(v);
                }
            }
        }
        g
    }

    /// Like [`Digraph::random`] but never draws loops.
    pub fn random_loopless<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Self::discrete(n);
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.random_bool(p) {
                    g.adj[u] |= bit(v);
                }
            }
        }
        g
    }

    /// Orients every unordered pair uniformly at random.
    pub fn random_tournament<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut g = Self::discrete(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(0.5) {
                    g.adj[u] |= bit(v);
                } else {
                    g.adj[v] |= bit(u);
                }
            }
        }
        g
    }

    /// Every digraph on `n` vertices (loops optional), in edge-bitmask order.
    pub fn all(n: usize, with_loops: bool) -> Vec<Digraph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| with_loops || u != v)
            .collect();
        assert!(pairs.len() < 24, "too many digraphs to list");
        (0u32..1 << pairs.len())
            .map(|mask| {
                let mut g = Self::discrete(n);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        g.adj[u] |= bit(v);
                    }
                }
                g
            })
            .collect()
    }

    /// All `2^(n(n−1)/2)` tournaments on `n` vertices.
    pub fn all_tournaments(n: usize) -> Vec<Digraph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        assert!(pairs.len() < 24, "too many tournaments to list");
        (0u32..1 << pairs.len())
            .map(|mask| {
                let mut g = Self::discrete(n);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        g.adj[u] |= bit(v);
                    } else {
                        g.adj[v] |= bit(u);
                    }
                }
                g
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1] & bit(v - 1) != 0
    }

    pub(crate) fn has_edge0(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Sorted 1-based edge list.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|u| {
                (0..n)
                    .filter(move |&v| self.adj[u] & bit(v) != 0)
                    .map(move |v| (u + 1, v + 1))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn non_loop_edges(&self) -> Vec<(usize, usize)> {
        self.edges().into_iter().filter(|(u, v)| u != v).collect()
    }

    pub fn is_loopless(&self) -> bool {
        (0..self.n()).all(|u| !self.has_edge0(u, u))
    }

    pub fn without_loops(&self) -> Digraph {
        let mut g = self.clone();
        for (u, row) in g.adj.iter_mut().enumerate() {
            *row &= !bit(u);
        }
        g
    }

    /// `X̄ = (V, V×V ∖ E)`; loops absent from `X` become loops of `X̄`.
    pub fn complement(&self) -> Digraph {
        let n = self.n();
        let full = if n == 64 { u64::MAX } else { bit(n) - 1 };
        Digraph {
            adj: self.adj.iter().map(|r| !r & full).collect(),
        }
    }

    /// `X^op`: every edge reversed.
    pub fn opposite(&self) -> Digraph {
        let n = self.n();
        let mut g = Self::discrete(n);
        for u in 0..n {
            for v in 0..n {
                if self.has_edge0(u, v) {
                    g.adj[v] |= bit(u);
                }
            }
        }
        g
    }

    /// `X ∖ S`.
    pub fn delete_edges(&self, edges: &[(usize, usize)]) -> Result<Digraph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            self.check_vertex_pair(u, v)?;
            if !self.has_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
            g.adj[u - 1] &= !bit(v - 1);
        }
        Ok(g)
    }

    /// `X / e` for `e = (n−1, n)`. The merged vertex is `n−1`; it inherits the
    /// in-edges of `n−1` and the out-edges of `n` from the other vertices, and
    /// never gets a loop.
    pub fn contract_last_edge(&self) -> Result<Digraph> {
        let n = self.n();
        if n < 2 {
            return Err(Error::SizeTooSmall {
                what: "contraction",
                size: n,
                min: 2,
            });
        }
        let (u, v) = (n - 2, n - 1);
        if !self.has_edge0(u, v) {
            return Err(Error::MissingEdge(n - 1, n));
        }
        let rest = bit(u) - 1; // vertices 0..n-2
        let mut g = Self::discrete(n - 1);
        for w in 0..u {
            g.adj[w] = self.adj[w] & rest;
            if self.has_edge0(w, u) {
                g.adj[w] |= bit(u);
            }
        }
        g.adj[u] = self.adj[v] & rest;
        Ok(g)
    }

    /// `δ(X)`: edge `(a, b)` becomes `(δ(a), δ(b))`.
    pub fn relabel(&self, delta: &Perm) -> Result<Digraph> {
        let n = self.n();
        if delta.degree() != n {
            return Err(Error::DegreeMismatch {
                left: delta.degree(),
                right: n,
            });
        }
        let mut g = Self::discrete(n);
        for u in 0..n {
            for v in 0..n {
                if self.has_edge0(u, v) {
                    g.adj[delta.apply0(u)] |= bit(delta.apply0(v));
                }
            }
        }
        Ok(g)
    }

    /// `X · Y`: disjoint union with `Y` shifted past `X`, plus every edge from an `X` vertex to a `Y` vertex.
    pub fn product(&self, other: &Digraph) -> Result<Digraph> {
        let (a, b) = (self.n(), other.n());
        if a + b > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "digraph product",
                size: a + b,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Self::discrete(a + b);
        let y_mask: u64 = (0..b).fold(0, |m, v| m | bit(a + v));
        for u in 0..a {
            g.adj[u] = self.adj[u] | y_mask;
        }
        for u in 0..b {
            g.adj[a + u] = other.adj[u] << a;
        }
        Ok(g)
    }

    pub fn is_tournament(&self) -> bool {
        let n = self.n();
        (0..n).all(|u| {
            !self.has_edge0(u, u)
                && (u + 1..n).all(|v| self.has_edge0(u, v) != self.has_edge0(v, u))
        })
    }

    /// Loopless, in- and out-degrees at most one, and no directed cycle.
    pub fn is_disjoint_union_of_paths(&self) -> bool {
        if !self.is_loopless() {
            return false;
        }
        let mut targets = 0u64;
        for &out in &self.adj {
            if out.count_ones() > 1 || out & targets != 0 {
                return false;
            }
            targets |= out;
        }
        self.find_directed_cycle(false).is_none()
    }

    /// One directed cycle as an edge list in traversal order. Loops count as
    /// cycles only when `include_loops` is set; otherwise cycles have length ≥ 2.
    pub fn find_directed_cycle(&self, include_loops: bool) -> Option<Vec<(usize, usize)>> {
        let n = self.n();
        if include_loops {
            if let Some(u) = (0..n).find(|&u| self.has_edge0(u, u)) {
                return Some(vec![(u + 1, u + 1)]);
            }
        }
        // 0 = unvisited, 1 = on stack, 2 = finished
        let mut state = vec![0u8; n];
        let mut stack: Vec<usize> = Vec::new();
        fn dfs(
            g: &Digraph,
            u: usize,
            state: &mut [u8],
            stack: &mut Vec<usize>,
        ) -> Option<Vec<(usize, usize)>> {
            state[u] = 1;
            stack.push(u);
            for v in 0..g.n() {
                if v == u || !g.has_edge0(u, v) {
                    continue;
                }
                if state[v] == 1 {
                    let start = stack.iter().position(|&x| x == v).expect("on stack");
                    let cycle = &stack[start..];
                    let mut edges: Vec<(usize, usize)> =
                        cycle.windows(2).map(|w| (w[0] + 1, w[1] + 1)).collect();
                    edges.push((u + 1, v + 1));
                    return Some(edges);
                }
                if state[v] == 0 {
                    if let Some(c) = dfs(g, v, state, stack) {
                        return Some(c);
                    }
                }
            }
            stack.pop();
            state[u] = 2;
            None
        }
        (0..n).find_map(|s| {
            if state[s] == 0 {
                dfs(self, s, &mut state, &mut stack)
            } else {
                None
            }
        })
    }

    /// Every simple directed cycle of length ≥ 2, listed once from its least vertex (1-based).
    pub fn simple_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut out = Vec::new();
        fn extend(
            g: &Digraph,
            start: usize,
            path: &mut Vec<usize>,
            used: u64,
            out: &mut Vec<Vec<usize>>,
        ) {
            let last = *path.last().expect("nonempty");
            for v in start..g.n() {
                if !g.has_edge0(last, v) {
                    continue;
                }
                if v == start && path.len() >= 2 {
                    out.push(path.iter().map(|x| x + 1).collect());
                } else if v > start && used & bit(v) == 0 {
                    path.push(v);
                    extend(g, start, path, used | bit(v), out);
                    path.pop();
                }
            }
        }
        for s in 0..n {
            extend(self, s, &mut vec![s], bit(s), &mut out);
        }
        out
    }

    pub fn has_even_cycle(&self) -> bool {
        self.simple_cycles().iter().any(|c| c.len() % 2 == 0)
    }

    /// Number of vertex listings whose consecutive pairs are all edges.
    pub fn hamiltonian_path_count(&self) -> Result<u64> {
        let n = self.n();
        if n > MAX_HAMILTONIAN {
            return Err(Error::SizeLimit {
                what: "Hamiltonian path count",
                size: n,
                limit: MAX_HAMILTONIAN,
            });
        }
        if n == 0 {
            return Ok(1);
        }
        fn walk(g: &Digraph, last: usize, used: u64, remaining: usize) -> u64 {
            if remaining == 0 {
                return 1;
            }
            let mut total = 0;
            let mut candidates = g.adj[last] & !used;
            while candidates != 0 {
                let v = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                total += walk(g, v, used | bit(v), remaining - 1);
            }
            total
        }
        Ok((0..n).map(|s| walk(self, s, bit(s), n - 1)).sum())
    }

    /// Parses the text format: `n <count>` followed by one `u v` edge per line;
    /// `#` starts a comment. Duplicate edges are rejected.
    pub fn parse_text(text: &str) -> Result<Digraph> {
        let mut graph: Option<Digraph> = None;
        let mut seen = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match &mut graph {
                None => {
                    let [key, count] = fields[..] else {
                        return Err(err(format!("expected `n <count>`, found {line:?}")));
                    };
                    if key != "n" {
                        return Err(err(format!("expected `n <count>`, found {line:?}")));
                    }
                    let n: usize = count
                        .parse()
                        .map_err(|_| err(format!("bad vertex count {count:?}")))?;
                    if n > MAX_VERTICES {
                        return Err(err(format!("at most {MAX_VERTICES} vertices")));
                    }
                    graph = Some(Digraph::discrete(n));
                }
                Some(g) => {
                    let [a, b] = fields[..] else {
                        return Err(err(format!("expected `u v`, found {line:?}")));
                    };
                    let parse = |s: &str| {
                        s.parse::<usize>()
                            .map_err(|_| err(format!("bad vertex {s:?}")))
                    };
                    let (u, v) = (parse(a)?, parse(b)?);
                    g.check_vertex_pair(u, v).map_err(|e| err(e.to_string()))?;
                    if !seen.insert((u, v)) {
                        return Err(err(format!("duplicate edge ({u}, {v})")));
                    }
                    g.adj[u - 1] |= bit(v - 1);
                }
            }
        }
        graph.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `n <count>` header".into(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} E={{", self.n())?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({u},{v})")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g(n: usize, edges: &[(usize, usize)]) -> Digraph {
        Digraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn complement_examples() {
        for n in 0..4 {
            assert_eq!(Digraph::complete(n).complement(), Digraph::discrete(n));
            assert_eq!(Digraph::complete(n).edge_count(), n * n);
        }
        assert_eq!(
            Digraph::discrete(2).complement(),
            g(2, &[(1, 1), (1, 2), (2, 1), (2, 2)])
        );
        assert_eq!(
            Digraph::path(2).complement(),
            g(2, &[(1, 1), (2, 2), (2, 1)])
        );
    }

    #[test]
    fn opposite_examples() {
        assert_eq!(Digraph::path(2).opposite(), g(2, &[(2, 1)]));
        let sym = g(3, &[(1, 2), (2, 1), (3, 3)]);
        assert_eq!(sym.opposite(), sym);
    }

    #[test]
    fn deletion() {
        assert_eq!(
            Digraph::path(2).delete_edges(&[(1, 2)]).unwrap(),
            Digraph::discrete(2)
        );
        let c3 = Digraph::cycle(3);
        assert_eq!(c3.delete_edges(&[]).unwrap(), c3);
        assert_eq!(c3.delete_edges(&c3.edges()).unwrap(), Digraph::discrete(3));
        assert!(matches!(
            c3.delete_edges(&[(2, 1)]),
            Err(Error::MissingEdge(2, 1))
        ));
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(
            Digraph::path(2).contract_last_edge().unwrap(),
            Digraph::discrete(1)
        );
        assert_eq!(
            Digraph::path(3).contract_last_edge().unwrap(),
            Digraph::path(2)
        );
        assert_eq!(
            Digraph::cycle(3).contract_last_edge().unwrap(),
            g(2, &[(1, 2), (2, 1)])
        );
        assert!(matches!(
            Digraph::discrete(3).contract_last_edge(),
            Err(Error::MissingEdge(2, 3))
        ));
        assert!(Digraph::discrete(1).contract_last_edge().is_err());
    }

    #[test]
    fn contraction_follows_orientation() {
        // in-edges come from the old n-1, out-edges from the old n
        let x = g(
            4,
            &[
                (1, 3),
                (3, 4),
                (4, 2),
                (3, 1),
                (4, 3),
                (3, 3),
                (4, 4),
                (1, 4),
                (2, 2),
            ],
        );
        assert_eq!(
            x.contract_last_edge().unwrap(),
            g(3, &[(1, 3), (3, 2), (2, 2)])
        );
    }

    #[test]
    fn contraction_never_loops_and_drops_a_vertex() {
        for n in 2..=4 {
            for x in Digraph::all(n, n <= 3) {
                if !x.has_edge(n - 1, n) {
                    continue;
                }
                let c = x.contract_last_edge().unwrap();
                assert_eq!(c.n(), n - 1);
                assert!(!c.has_edge(n - 1, n - 1), "{x}");
                assert!((1..n - 1).all(|w| c.has_edge(w, w) == x.has_edge(w, w)));
            }
        }
    }

    #[test]
    fn relabel_examples() {
        let x = Digraph::cycle(4);
        assert_eq!(x.relabel(&Perm::identity(4)).unwrap(), x);
        let swap = Perm::new(vec![2, 1]).unwrap();
        assert_eq!(Digraph::path(2).relabel(&swap).unwrap(), g(2, &[(2, 1)]));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x = Digraph::random(5, 0.4, &mut rng);
            let d = Perm::random(5, &mut rng);
            assert_eq!(x.relabel(&d).unwrap().relabel(&d.inverse()).unwrap(), x);
        }
    }

    #[test]
    fn product_examples() {
        let d1 = Digraph::discrete(1);
        assert_eq!(d1.product(&d1).unwrap(), Digraph::path(2));
        let x = Digraph::cycle(3);
        assert_eq!(x.product(&Digraph::discrete(0)).unwrap(), x);
        assert_eq!(
            Digraph::discrete(2).product(&d1).unwrap(),
            g(3, &[(1, 3), (2, 3)])
        );
        assert_eq!(
            Digraph::path(2).product(&g(1, &[(1, 1)])).unwrap(),
            g(3, &[(1, 2), (1, 3), (2, 3), (3, 3)])
        );
    }

    #[test]
    fn tournament_predicate() {
        assert!(Digraph::cycle(3).is_tournament());
        assert!(Digraph::path(2).is_tournament());
        assert!(!Digraph::discrete(2).is_tournament());
        assert!(!g(2, &[(1, 2), (2, 1)]).is_tournament());
        assert!(!g(1, &[(1, 1)]).is_tournament());
        assert_eq!(Digraph::all_tournaments(4).len(), 64);
        assert!(Digraph::all_tournaments(4)
            .iter()
            .all(Digraph::is_tournament));
    }

    #[test]
    fn paths_predicate() {
        for n in 0..6 {
            assert!(Digraph::path(n).is_disjoint_union_of_paths());
            assert!(Digraph::discrete(n).is_disjoint_union_of_paths());
        }
        assert!(!Digraph::cycle(3).is_disjoint_union_of_paths());
        assert!(!g(3, &[(1, 2), (1, 3)]).is_disjoint_union_of_paths());
        assert!(!g(3, &[(1, 3), (2, 3)]).is_disjoint_union_of_paths());
        assert!(!g(2, &[(1, 1)]).is_disjoint_union_of_paths());
        assert!(g(4, &[(3, 1), (4, 2)]).is_disjoint_union_of_paths());
    }

    #[test]
    fn cycle_finding() {
        assert_eq!(
            Digraph::cycle(3).find_directed_cycle(false),
            Some(vec![(1, 2), (2, 3), (3, 1)])
        );
        assert_eq!(Digraph::path(4).find_directed_cycle(false), None);
        assert_eq!(
            g(2, &[(1, 2), (2, 1)]).find_directed_cycle(false),
            Some(vec![(1, 2), (2, 1)])
        );
        let looped = g(2, &[(2, 2)]);
        assert_eq!(looped.find_directed_cycle(false), None);
        assert_eq!(looped.find_directed_cycle(true), Some(vec![(2, 2)]));
        let x = g(4, &[(1, 2), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(
            x.find_directed_cycle(false),
            Some(vec![(2, 3), (3, 4), (4, 2)])
        );
    }

    #[test]
    fn found_cycles_are_cycles() {
        for x in Digraph::all(3, true) {
            match x.find_directed_cycle(false) {
                Some(c) => {
                    assert!(c.len() >= 2);
                    assert!(c.iter().all(|&(u, v)| x.has_edge(u, v) && u != v));
                    for w in 0..c.len() {
                        assert_eq!(c[w].1, c[(w + 1) % c.len()].0);
                    }
                }
                None => assert!(x.simple_cycles().is_empty(), "{x}"),
            }
        }
    }

    #[test]
    fn simple_cycle_listing() {
        assert_eq!(Digraph::complete(3).simple_cycles().len(), 5);
        assert_eq!(Digraph::cycle(4).simple_cycles(), vec![vec![1, 2, 3, 4]]);
        assert!(Digraph::cycle(4).has_even_cycle());
        assert!(!Digraph::cycle(3).has_even_cycle());
        assert!(g(2, &[(1, 2), (2, 1)]).has_even_cycle());
    }

    #[test]
    fn hamiltonian_examples() {
        assert_eq!(Digraph::path(3).hamiltonian_path_count().unwrap(), 1);
        assert_eq!(Digraph::cycle(3).hamiltonian_path_count().unwrap(), 3);
        let transitive = g(3, &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(transitive.hamiltonian_path_count().unwrap(), 1);
        assert_eq!(Digraph::complete(4).hamiltonian_path_count().unwrap(), 24);
        assert!(matches!(
            Digraph::discrete(10).hamiltonian_path_count(),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn tournament_complement_is_opposite_off_diagonal() {
        for n in 1..=5 {
            for x in Digraph::all_tournaments(n) {
                assert_eq!(x.complement().without_loops(), x.opposite());
            }
        }
    }

    #[test]
    fn random_involutions_and_symmetries() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 0..=7 {
            for _ in 0..20 {
                let x = Digraph::random(n, 0.35, &mut rng);
                assert_eq!(x.complement().complement(), x);
                assert_eq!(x.opposite().opposite(), x);
                assert_eq!(x.opposite().complement(), x.complement().opposite());
                assert_eq!(
                    x.hamiltonian_path_count().unwrap(),
                    x.opposite().hamiltonian_path_count().unwrap()
                );
            }
        }
    }

    #[test]
    fn text_format() {
        let text = "# a triangle\nn 3\n1 2  # first\n2 3\n\n3 1\n";
        let x = Digraph::parse_text(text).unwrap();
        assert_eq!(x, Digraph::cycle(3));
        assert_eq!(Digraph::parse_text(&x.to_text()).unwrap(), x);
        let dup = Digraph::parse_text("n 2\n1 2\n1 2\n");
        assert!(matches!(dup, Err(Error::Parse { line: 3, .. })));
        assert!(matches!(
            Digraph::parse_text("n 2\n1 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Digraph::parse_text("# nothing\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Digraph::parse_text("m 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Digraph::parse_text("n 2\n1 2 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn generators() {
        assert_eq!(Digraph::cycle(1), g(1, &[(1, 1)]));
        assert_eq!(Digraph::all(2, true).len(), 16);
        assert_eq!(Digraph::all(3, false).len(), 64);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(Digraph::random_loopless(6, 0.9, &mut rng).is_loopless());
        assert!(Digraph::random_tournament(6, &mut rng).is_tournament());
    }
}
