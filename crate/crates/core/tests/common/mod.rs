//! Reference implementations over a dense adjacency matrix, written
//! without any of the library's bitmask machinery.

#![allow(dead_code)]

use diffusion_core::{Graph, VertexSet};
use rand::Rng;

#[derive(Clone, Debug)]
pub struct Naive {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in pairs {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Naive { n, adj }
    }

    pub fn of(g: &Graph) -> Self {
        Self::from_pairs(g.vertex_count(), g.edges())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&a| a).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn fire(&self, s: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|v| {
                let mut x = s[v];
                for u in 0..self.n {
                    if self.adj[v][u] {
                        if s[u] > s[v] {
                            x += 1;
                        } else if s[u] < s[v] {
                            x -= 1;
                        }
                    }
                }
                x
            })
            .collect()
    }

    pub fn perturb(&self, h: &[bool]) -> Vec<i64> {
        let mut s = vec![0i64; self.n];
        for v in 0..self.n {
            if h[v] {
                for u in 0..self.n {
                    if self.adj[v][u] {
                        s[v] -= 1;
                        s[u] += 1;
                    }
                }
            }
        }
        s
    }

    fn count_into(&self, v: usize, h: &[bool], inside: bool) -> usize {
        (0..self.n)
            .filter(|&u| self.adj[v][u] && h[u] == inside)
            .count()
    }

    pub fn ccd(&self, h: &[bool]) -> bool {
        for x in 0..self.n {
            for y in 0..self.n {
                if !self.adj[x][y] || h[x] != h[y] {
                    continue;
                }
                let inside = !h[x];
                if self.count_into(x, h, inside) != self.count_into(y, h, inside) {
                    return false;
                }
            }
        }
        true
    }

    pub fn dominating(&self, h: &[bool]) -> bool {
        (0..self.n).all(|v| h[v] || (0..self.n).any(|u| self.adj[v][u] && h[u]))
    }

    pub fn minimal_dominating(&self, h: &[bool]) -> bool {
        if !self.dominating(h) {
            return false;
        }
        (0..self.n).filter(|&v| h[v]).all(|v| {
            let mut smaller = h.to_vec();
            smaller[v] = false;
            !self.dominating(&smaller)
        })
    }

    /// Every vertex has exactly one member of `h` in its closed neighbourhood.
    pub fn efficient_dominating(&self, h: &[bool]) -> bool {
        (0..self.n).all(|v| {
            let own = usize::from(h[v]);
            own + (0..self.n).filter(|&u| self.adj[v][u] && h[u]).count() == 1
        })
    }

    pub fn domination_number(&self) -> usize {
        (0..1usize << self.n)
            .map(|m| bools(m as u64, self.n))
            .filter(|h| self.dominating(h))
            .map(|h| h.iter().filter(|&&b| b).count())
            .min()
            .unwrap_or(0)
    }
}

pub fn bools(mask: u64, n: usize) -> Vec<bool> {
    (0..n).map(|i| mask >> i & 1 == 1).collect()
}

pub fn set(mask: u64, n: usize) -> VertexSet {
    VertexSet::from_bits(mask, n).unwrap()
}

/// All pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

pub fn graph_from_choice(n: usize, chosen: &[bool]) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .zip(chosen)
        .filter_map(|(p, &c)| c.then_some(p))
        .collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Uniform random labelled graph on `n` vertices.
pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let chosen: Vec<bool> = (0..pairs(n).len()).map(|_| rng.gen()).collect();
    graph_from_choice(n, &chosen)
}

/// Labelled graphs on `n` vertices, built from explicit edge lists rather
/// than the library's mask decoding.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let m = pairs(n).len();
    (0..1u64 << m).map(move |mask| graph_from_choice(n, &bools(mask, m)))
}
