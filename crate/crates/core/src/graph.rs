//! Simple undirected graphs, vertex subsets and domination predicates.
//!
//! Vertices are `0..n`. A path `v1 - v2 - ... - vn` is labelled `0..n-1` in
//! order, so `v1` is vertex `0`.
//!
//! Every graph keeps per-vertex neighbour lists. Graphs with at most
//! [`MAX_MASK_VERTICES`] vertices additionally keep per-vertex neighbour
//! bitmasks, which is what [`VertexSet`] based predicates run on.

use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;

/// Largest vertex count for which subsets fit in a single `u64` word.
pub const MAX_MASK_VERTICES: usize = 63;

/// A simple finite undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted, deduplicated, each pair stored as `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    /// Empty when `n > MAX_MASK_VERTICES`.
    masks: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted_edges(n, edges))
    }

    fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let masks = if n <= MAX_MASK_VERTICES {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |m, &w| m | (1 << w)))
                .collect()
        } else {
            Vec::new()
        };
        Graph {
            n,
            edges,
            adj,
            masks,
        }
    }

    /// Graph on `n` vertices whose edges are the set bits of `edge_mask`,
    /// with bit `k` standing for the `k`-th pair of [`pair_index`] order.
    ///
    /// Panics if `edge_mask` has bits beyond `n(n-1)/2`.
    pub fn from_edge_mask(n: usize, edge_mask: u64) -> Self {
        let pairs = pair_count(n);
        assert!(
            pairs >= 64 || edge_mask >> pairs == 0,
            "edge mask {edge_mask:#x} has bits beyond {pairs} pairs"
        );
        let mut edges = Vec::with_capacity(edge_mask.count_ones() as usize);
        let mut k = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if k < 64 && edge_mask >> k & 1 == 1 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Self::from_sorted_edges(n, edges)
    }

    /// Path `v1 - ... - vn`, labelled `0..n-1` left to right.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGenerator { family: "path" });
        }
        Ok(Self::from_sorted_edges(
            n,
            (1..n).map(|v| (v - 1, v)).collect(),
        ))
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooShort { n });
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Ok(Self::from_sorted_edges(n, edges))
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGenerator { family: "complete" });
        }
        let edges = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// `K_{a,b}`: vertices `0..a` form one side and `a..a+b` the other.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        Self::complete_multipartite(&[a, b])
    }

    /// Complete multipartite graph; parts occupy consecutive index ranges.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self, GraphError> {
        if parts.is_empty() {
            return Err(GraphError::EmptyGenerator { family: "kpartite" });
        }
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(GraphError::EmptyPart { index });
        }
        let mut part_of = Vec::new();
        for (i, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, size));
        }
        let n = part_of.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// Parses the edge-list text format: a header line `n m` followed by
    /// `m` lines `u v`. Blank lines and lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let parse_pair = |line: usize, l: &str, what: &str| -> Result<(usize, usize), GraphError> {
            let fields: Vec<&str> = l.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(GraphError::Parse {
                    line,
                    message: format!("expected `{what}`, found {} fields", fields.len()),
                });
            }
            let num = |s: &str| {
                s.parse::<usize>().map_err(|_| GraphError::Parse {
                    line,
                    message: format!("`{s}` is not a non-negative integer"),
                })
            };
            Ok((num(fields[0])?, num(fields[1])?))
        };

        let (header_line, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(header_line, header, "n m")?;

        let mut pairs = Vec::with_capacity(m);
        let mut last_line = header_line;
        for (line, l) in lines {
            if pairs.len() == m {
                return Err(GraphError::Parse {
                    line,
                    message: format!("more than the declared {m} edges"),
                });
            }
            let (u, v) = parse_pair(line, l, "u v")?;
            if u >= n || v >= n {
                return Err(GraphError::Parse {
                    line,
                    message: format!("endpoint out of range for {n} vertices"),
                });
            }
            if u == v {
                return Err(GraphError::Parse {
                    line,
                    message: format!("self-loop at vertex {u}"),
                });
            }
            pairs.push((u, v));
            last_line = line;
        }
        if pairs.len() != m {
            return Err(GraphError::Parse {
                line: last_line,
                message: format!("declared {m} edges but found {}", pairs.len()),
            });
        }
        Self::from_edge_list(n, &pairs)
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order. Orientations
    /// are indexed by position in this slice.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|l| l.binary_search(&v).is_ok())
    }

    /// Whether subset bitmasks are available (`n <= MAX_MASK_VERTICES`).
    #[inline]
    pub fn supports_masks(&self) -> bool {
        self.n <= MAX_MASK_VERTICES
    }

    /// Neighbourhood of `v` as a bitmask.
    ///
    /// Panics when the graph is too large for masks.
    #[inline]
    pub fn neighbour_mask(&self, v: usize) -> u64 {
        assert!(
            self.supports_masks(),
            "graph has {} vertices, masks need <= 63",
            self.n
        );
        self.masks[v]
    }

    /// Bitmask with all `n` vertex bits set.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        assert!(
            self.supports_masks(),
            "graph has {} vertices, masks need <= 63",
            self.n
        );
        low_bits(self.n)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    fn check_set(&self, s: VertexSet) {
        assert_eq!(
            s.universe(),
            self.n,
            "vertex set over {} vertices used with a graph on {}",
            s.universe(),
            self.n
        );
    }

    /// Number of neighbours of `v` inside `s`.
    pub fn degree_into(&self, v: usize, s: VertexSet) -> usize {
        self.check_set(s);
        (self.masks[v] & s.bits()).count_ones() as usize
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        self.check_set(s);
        s.iter().all(|v| self.masks[v] & s.bits() == 0)
    }

    /// Whether every vertex is in `s` or has a neighbour in `s`.
    pub fn is_dominating(&self, s: VertexSet) -> bool {
        self.check_set(s);
        self.dominated_mask(s.bits()) == self.full_mask()
    }

    fn dominated_mask(&self, bits: u64) -> u64 {
        let mut covered = bits;
        let mut rest = bits;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            covered |= self.masks[v];
        }
        covered
    }

    /// Dominating, and no proper subset obtained by dropping one vertex is.
    pub fn is_minimal_dominating(&self, s: VertexSet) -> bool {
        if !self.is_dominating(s) {
            return false;
        }
        let full = self.full_mask();
        s.iter()
            .all(|v| self.dominated_mask(s.bits() & !(1 << v)) != full)
    }

    /// Independent, and every vertex outside `s` has exactly one
    /// neighbour in `s` (a perfect code).
    pub fn is_efficient_dominating(&self, s: VertexSet) -> bool {
        if !self.is_independent(s) {
            return false;
        }
        s.complement()
            .iter()
            .all(|v| (self.masks[v] & s.bits()).count_ones() == 1)
    }

    /// Connected components of the subgraph induced by `s`, each as a
    /// vertex set, ordered by smallest member.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        self.check_set(s);
        let mut remaining = s.bits();
        let mut out = Vec::new();
        while remaining != 0 {
            let mut component = remaining & remaining.wrapping_neg();
            loop {
                let grown = (self.dominated_mask(component) & s.bits()) | component;
                if grown == component {
                    break;
                }
                component = grown;
            }
            remaining &= !component;
            out.push(VertexSet::from_bits_unchecked(component, self.n));
        }
        out
    }
}

/// Number of unordered vertex pairs on `n` vertices.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `{u, v}` in lexicographic pair order
/// `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = (u.min(v), u.max(v));
    debug_assert!(v < n && u != v);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the vertices `0..n` of some graph, stored as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
    universe: u8,
}

impl VertexSet {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::from_bits(0, n)
    }

    pub fn full(n: usize) -> Result<Self, GraphError> {
        Self::from_bits(low_bits(n), n)
    }

    pub fn from_bits(bits: u64, n: usize) -> Result<Self, GraphError> {
        if n > MAX_MASK_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_MASK_VERTICES,
            });
        }
        if bits & !low_bits(n) != 0 {
            let vertex = 63 - (bits & !low_bits(n)).leading_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { vertex, n });
        }
        Ok(Self::from_bits_unchecked(bits, n))
    }

    #[inline]
    pub(crate) fn from_bits_unchecked(bits: u64, n: usize) -> Self {
        debug_assert!(n <= MAX_MASK_VERTICES && bits & !low_bits(n) == 0);
        VertexSet {
            bits,
            universe: n as u8,
        }
    }

    /// Builds a set from vertex indices; duplicates are harmless.
    pub fn from_indices<I>(n: usize, indices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        if n > MAX_MASK_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_MASK_VERTICES,
            });
        }
        let mut bits = 0u64;
        for v in indices {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            bits |= 1 << v;
        }
        Ok(Self::from_bits_unchecked(bits, n))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == low_bits(self.universe())
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < self.universe() && self.bits >> v & 1 == 1
    }

    #[inline]
    pub fn complement(self) -> Self {
        VertexSet {
            bits: !self.bits & low_bits(self.universe()),
            universe: self.universe,
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A named graph family with its parameters, as written on the command
/// line: `path:N`, `cycle:N`, `complete:N`, `kbip:A,B`, `kpartite:A,B,...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            GeneratorSpec::Path(n) => Graph::path(*n),
            GeneratorSpec::Cycle(n) => Graph::cycle(*n),
            GeneratorSpec::Complete(n) => Graph::complete(*n),
            GeneratorSpec::CompleteBipartite(a, b) => Graph::complete_bipartite(*a, *b),
            GeneratorSpec::CompleteMultipartite(parts) => Graph::complete_multipartite(parts),
        }
    }

    /// Whether `s` starts with one of the generator family prefixes.
    pub fn looks_like_spec(s: &str) -> bool {
        s.split_once(':').is_some_and(|(family, _)| {
            matches!(family, "path" | "cycle" | "complete" | "kbip" | "kpartite")
        })
    }
}

impl FromStr for GeneratorSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |message: String| GraphError::BadGenerator {
            spec: s.to_string(),
            message,
        };
        let (family, args) = s
            .split_once(':')
            .ok_or_else(|| bad("expected `family:args`".into()))?;
        let numbers = args
            .split(',')
            .map(|a| {
                a.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("`{a}` is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let single = || match numbers.as_slice() {
            [n] => Ok(*n),
            _ => Err(bad(format!("`{family}` takes exactly one size"))),
        };
        match family {
            "path" => Ok(GeneratorSpec::Path(single()?)),
            "cycle" => Ok(GeneratorSpec::Cycle(single()?)),
            "complete" => Ok(GeneratorSpec::Complete(single()?)),
            "kbip" => match numbers.as_slice() {
                [a, b] => Ok(GeneratorSpec::CompleteBipartite(*a, *b)),
                _ => Err(bad("`kbip` takes two part sizes".into())),
            },
            "kpartite" => Ok(GeneratorSpec::CompleteMultipartite(numbers)),
            other => Err(bad(format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Path(n) => write!(f, "path:{n}"),
            GeneratorSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GeneratorSpec::Complete(n) => write!(f, "complete:{n}"),
            GeneratorSpec::CompleteBipartite(a, b) => write!(f, "kbip:{a},{b}"),
            GeneratorSpec::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "kpartite:{}", parts.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied()).unwrap()
    }

    fn no_proper_zero2_graph() -> Graph {
        Graph::from_edge_list(
            6,
            &[
                (5, 4),
                (4, 3),
                (4, 2),
                (4, 1),
                (3, 1),
                (3, 0),
                (2, 1),
                (1, 0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn edge_list_builds_and_dedups() {
        let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(p2, Graph::path(2).unwrap());

        let g = Graph::from_edge_list(3, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.degree(2), 0);

        let g = Graph::from_edge_list(3, &[(1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);

        let g6 = no_proper_zero2_graph();
        assert_eq!(g6.edge_count(), 8);
        assert_eq!(g6.degree(4), 4);
        assert_eq!(g6.neighbours(1), &[0, 2, 3, 4]);
    }

    #[test]
    fn edge_list_rejects_bad_pairs() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
    }

    #[test]
    fn generators() {
        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.edges(), &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(Graph::complete_bipartite(3, 3).unwrap().edge_count(), 9);
        assert_eq!(Graph::cycle(5).unwrap().edge_count(), 5);
        assert_eq!(Graph::complete(6).unwrap().edge_count(), 15);
        assert_eq!(Graph::path(1).unwrap().edge_count(), 0);
        assert!(matches!(
            Graph::cycle(2),
            Err(GraphError::CycleTooShort { n: 2 })
        ));
        assert!(Graph::path(0).is_err());
        assert!(matches!(
            Graph::complete_multipartite(&[2, 0, 1]),
            Err(GraphError::EmptyPart { index: 1 })
        ));
    }

    #[test]
    fn multipartite_edge_count_matches_cross_part_pairs() {
        // Oracle: count pairs whose labels fall in different parts.
        let parts = [2, 2, 2];
        let label: Vec<usize> = parts
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
            .collect();
        let mut expected = 0;
        for u in 0..label.len() {
            for v in (u + 1)..label.len() {
                expected += (label[u] != label[v]) as usize;
            }
        }
        assert_eq!(expected, 12);
        assert_eq!(
            Graph::complete_multipartite(&parts).unwrap().edge_count(),
            expected
        );
    }

    #[test]
    fn parse_edge_list_format() {
        let g = Graph::parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        let round = Graph::parse_edge_list(&no_proper_zero2_graph().to_edge_list()).unwrap();
        assert_eq!(round, no_proper_zero2_graph());

        let err = Graph::parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err}");
        let err = Graph::parse_edge_list("3 1\n0 3\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
        let err = Graph::parse_edge_list("3 1\n2 2\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
        let err = Graph::parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { .. }), "{err}");
        let err = Graph::parse_edge_list("3 1\n0 1\n1 2\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err}");
        assert!(Graph::parse_edge_list("").is_err());
    }

    #[test]
    fn generator_specs_parse_and_print() {
        for s in [
            "path:5",
            "cycle:4",
            "complete:3",
            "kbip:2,3",
            "kpartite:2,2,2",
        ] {
            let spec: GeneratorSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert!(GeneratorSpec::looks_like_spec(s));
        }
        assert_eq!(
            "kbip:3,3"
                .parse::<GeneratorSpec>()
                .unwrap()
                .build()
                .unwrap(),
            Graph::complete_bipartite(3, 3).unwrap()
        );
        assert!("path:x".parse::<GeneratorSpec>().is_err());
        assert!("kbip:3".parse::<GeneratorSpec>().is_err());
        assert!("star:3".parse::<GeneratorSpec>().is_err());
        assert!(!GeneratorSpec::looks_like_spec("graphs/fig3.txt"));
    }

    #[test]
    fn domination_examples() {
        let g6 = no_proper_zero2_graph();
        assert!(g6.is_dominating(set(6, &[1, 4])));
        assert!(!Graph::path(3).unwrap().is_dominating(set(3, &[])));
        let p6 = Graph::path(6).unwrap();
        assert!(p6.is_dominating(set(6, &[1, 4])));
        assert!(p6.is_minimal_dominating(set(6, &[1, 4])));
        assert!(!Graph::path(3)
            .unwrap()
            .is_minimal_dominating(set(3, &[0, 1, 2])));
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert!(k33.is_minimal_dominating(set(6, &[0, 1, 2])));
        assert!(k33.is_minimal_dominating(set(6, &[0, 3])));
    }

    #[test]
    fn efficient_domination_examples() {
        assert!(Graph::path(6)
            .unwrap()
            .is_efficient_dominating(set(6, &[1, 4])));
        assert!(Graph::path(4)
            .unwrap()
            .is_efficient_dominating(set(4, &[0, 3])));
        assert!(!Graph::complete(3)
            .unwrap()
            .is_efficient_dominating(set(3, &[0, 1])));
        // Two neighbours in the set: not efficient.
        assert!(!Graph::path(3)
            .unwrap()
            .is_efficient_dominating(set(3, &[0, 2])));
    }

    #[test]
    fn degree_components_independence() {
        let p6 = Graph::path(6).unwrap();
        let h = set(6, &[0, 1, 3, 4]);
        assert_eq!(p6.degree_into(1, h.complement()), 1);
        assert_eq!(
            p6.components_within(h),
            vec![set(6, &[0, 1]), set(6, &[3, 4])]
        );
        assert!(Graph::path(3).unwrap().is_independent(set(3, &[0, 2])));
        assert!(!Graph::path(3).unwrap().is_independent(set(3, &[0, 1])));
        assert!(p6.components_within(set(6, &[])).is_empty());
    }

    #[test]
    fn vertex_set_bounds() {
        assert!(VertexSet::from_indices(3, [3]).is_err());
        assert!(VertexSet::from_indices(64, [0]).is_err());
        assert!(VertexSet::from_bits(0b1000, 3).is_err());
        let s = set(5, &[0, 3]);
        assert_eq!(s.to_string(), "{0,3}");
        assert_eq!(s.complement().to_vec(), vec![1, 2, 4]);
        assert!(VertexSet::full(63).unwrap().is_full());
        assert!(VertexSet::empty(0).unwrap().is_full());
    }

    #[test]
    fn pair_index_is_lexicographic() {
        let n = 7;
        let mut k = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                assert_eq!(pair_index(n, u, v), k);
                assert_eq!(pair_index(n, v, u), k);
                k += 1;
            }
        }
        assert_eq!(k, pair_count(n));
        let g = Graph::from_edge_mask(4, 1 << pair_index(4, 1, 3) | 1);
        assert_eq!(g.edges(), &[(0, 1), (1, 3)]);
    }

    #[test]
    fn large_graphs_allowed_without_masks() {
        let g = Graph::path(100).unwrap();
        assert!(!g.supports_masks());
        assert_eq!(g.edge_count(), 99);
        assert!(g.is_connected());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=10).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), pair_count(n)).prop_map(move |bits| {
                let mask = bits
                    .iter()
                    .enumerate()
                    .fold(0u64, |m, (i, &b)| m | (b as u64) << i);
                Graph::from_edge_mask(n, mask)
            })
        })
    }

    fn arb_graph_and_set() -> impl Strategy<Value = (Graph, VertexSet)> {
        arb_graph().prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), 0u64..(1 << n))
                .prop_map(move |(g, bits)| (g, VertexSet::from_bits(bits, n).unwrap()))
        })
    }

    proptest! {
        #[test]
        fn adjacency_is_symmetric(g in arb_graph()) {
            for u in 0..g.vertex_count() {
                for &v in g.neighbours(u) {
                    prop_assert!(g.neighbours(v).contains(&u));
                    prop_assert!(g.neighbour_mask(v) >> u & 1 == 1);
                    prop_assert!(u != v);
                }
            }
        }

        #[test]
        fn set_predicates_are_consistent((g, s) in arb_graph_and_set()) {
            prop_assert_eq!(s.complement().complement(), s);
            if g.is_efficient_dominating(s) {
                prop_assert!(g.is_dominating(s));
            }
            if g.is_minimal_dominating(s) {
                prop_assert!(g.is_dominating(s));
            }
            for v in 0..g.vertex_count() {
                prop_assert_eq!(
                    g.degree_into(v, s) + g.degree_into(v, s.complement()),
                    g.degree(v)
                );
            }
            let parts = g.components_within(s);
            let union = parts.iter().fold(0u64, |m, p| {
                assert_eq!(m & p.bits(), 0, "components overlap");
                m | p.bits()
            });
            prop_assert_eq!(union, s.bits());
            for p in &parts {
                prop_assert_eq!(g.components_within(*p).len(), 1);
            }
        }

        #[test]
        fn generator_edge_counts(n in 1usize..40, a in 1usize..12, b in 1usize..12) {
            prop_assert_eq!(Graph::path(n).unwrap().edge_count(), n - 1);
            prop_assert_eq!(Graph::complete(n).unwrap().edge_count(), n * (n - 1) / 2);
            prop_assert_eq!(Graph::complete_bipartite(a, b).unwrap().edge_count(), a * b);
            if n >= 3 {
                prop_assert_eq!(Graph::cycle(n).unwrap().edge_count(), n);
            }
        }
    }
}
