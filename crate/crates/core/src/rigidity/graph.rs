use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Unordered vertex pair stored with the smaller index first.
pub type Edge = (usize, usize);

pub fn edge(i: usize, j: usize) -> Edge {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    /// Rejects loops, parallel edges and out-of-range endpoints.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            if i >= vertex_count || j >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({i}, {j}) out of range for {vertex_count} vertices"
                )));
            }
            if !set.insert(edge(i, j)) {
                return Err(Error::InvalidGraph(format!("parallel edge ({i}, {j})")));
            }
        }
        Ok(Graph { vertex_count, edges: set })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph { vertex_count, edges: BTreeSet::new() }
    }

    pub fn complete(vertex_count: usize) -> Self {
        Graph { vertex_count, edges: (0..vertex_count).tuple_combinations().collect() }
    }

    /// Two copies of `K₅` minus their hinge edge `{0, 1}`, glued along the
    /// hinge vertices. Eight vertices, eighteen edges, flexible in 3-space.
    pub fn double_banana() -> Self {
        let mut edges = BTreeSet::new();
        for banana in [[0, 1, 2, 3, 4], [0, 1, 5, 6, 7]] {
            for (a, b) in banana.iter().tuple_combinations() {
                if (*a, *b) != (0, 1) {
                    edges.insert(edge(*a, *b));
                }
            }
        }
        Graph { vertex_count: 8, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges.iter().copied().collect()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&edge(i, j))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    }

    /// `E(X)`: edges with both endpoints in `x`.
    pub fn edges_within(&self, x: &[usize]) -> Vec<Edge> {
        self.edges.iter().copied().filter(|&(a, b)| x.contains(&a) && x.contains(&b)).collect()
    }

    pub fn with_edge(&self, i: usize, j: usize) -> Result<Self> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
        }
        let mut g = self.clone();
        g.edges.insert(edge(i, j));
        Ok(g)
    }

    /// `G − F`. Edges not present are ignored.
    pub fn without_edges(&self, f: &[Edge]) -> Self {
        let mut g = self.clone();
        for &(i, j) in f {
            g.edges.remove(&edge(i, j));
        }
        g
    }

    pub fn without_edge(&self, i: usize, j: usize) -> Self {
        self.without_edges(&[(i, j)])
    }

    /// Graph with vertex `v` of the result being vertex `perm[v]` of `self`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let mut inverse = vec![0; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        Graph {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|&(a, b)| edge(inverse[a], inverse[b])).collect(),
        }
    }

    /// Lexicographically smallest sorted edge list over all relabelings.
    /// Brute force; only meant for graphs of at most eight or so vertices.
    pub fn canonical_form(&self) -> Vec<Edge> {
        (0..self.vertex_count)
            .permutations(self.vertex_count)
            .map(|perm| self.relabeled(&perm).edge_list())
            .min()
            .unwrap_or_default()
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.edge_count() == other.edge_count()
            && self.canonical_form() == other.canonical_form()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::BadIndex { index: v, count: self.vertex_count });
        }
        Ok(())
    }
}
