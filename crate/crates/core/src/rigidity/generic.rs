//! Generic rigidity decided by exact rank at random integer configurations.
//!
//! A framework that is infinitesimally rigid at one configuration certifies
//! generic rigidity, so a single rigid sample is accepted. Negative answers
//! and rank comparisons use the maximum rank over [`GENERIC_SAMPLES`]
//! independent configurations.

use itertools::Itertools;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::motions::{trivial_motion_space, PointConfiguration};

use super::framework::{rank_with_extra_edge, Framework};
use super::graph::Graph;

/// Independent configurations drawn before a negative answer is accepted.
pub const GENERIC_SAMPLES: usize = 2;

fn random_framework<R: Rng + ?Sized>(g: &Graph, n: usize, rng: &mut R) -> Framework<Rational> {
    let p = PointConfiguration::random_generic(n, g.vertex_count(), rng);
    Framework::new(g.clone(), p).expect("sizes agree")
}

fn rigid_rank(f: &Framework<Rational>) -> usize {
    let p = f.config();
    p.dim() * p.count() - trivial_motion_space(p).dim()
}

pub fn is_generically_rigid<R: Rng + ?Sized>(g: &Graph, n: usize, rng: &mut R) -> bool {
    (0..GENERIC_SAMPLES).any(|_| {
        let f = random_framework(g, n, rng);
        rank_with_extra_edge(&f, None) == rigid_rank(&f)
    })
}

/// Generically rigid with independent rows, i.e. removing any edge breaks rigidity.
pub fn is_generically_isostatic<R: Rng + ?Sized>(g: &Graph, n: usize, rng: &mut R) -> bool {
    for _ in 0..GENERIC_SAMPLES {
        let f = random_framework(g, n, rng);
        let rank = rank_with_extra_edge(&f, None);
        if rank == rigid_rank(&f) {
            return rank == g.edge_count();
        }
    }
    false
}

/// Maximum rank of the rigidity matrix over the sampled configurations.
pub fn generic_rank<R: Rng + ?Sized>(g: &Graph, n: usize, rng: &mut R) -> usize {
    (0..GENERIC_SAMPLES)
        .map(|_| rank_with_extra_edge(&random_framework(g, n, rng), None))
        .max()
        .unwrap_or(0)
}

/// Implied-edge oracle for one graph, reusing the same sample
/// configurations for every query.
///
/// `ij` is implied when adding it does not raise the generic rank, which
/// at generic configurations is the same as every flex preserving the
/// distance between `pᵢ` and `pⱼ` to first order.
pub struct ImpliedEdges {
    graph: Graph,
    frameworks: Vec<Framework<Rational>>,
    base_rank: usize,
}

impl ImpliedEdges {
    pub fn new<R: Rng + ?Sized>(g: &Graph, n: usize, rng: &mut R) -> Self {
        let frameworks: Vec<_> = (0..GENERIC_SAMPLES).map(|_| random_framework(g, n, rng)).collect();
        let base_rank = frameworks.iter().map(|f| rank_with_extra_edge(f, None)).max().unwrap_or(0);
        ImpliedEdges { graph: g.clone(), frameworks, base_rank }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn is_implied(&self, i: usize, j: usize) -> Result<bool> {
        self.graph.check_vertex(i)?;
        self.graph.check_vertex(j)?;
        if i == j {
            return Err(Error::BadIndex { index: j, count: self.graph.vertex_count() });
        }
        if self.graph.has_edge(i, j) {
            return Ok(true);
        }
        let extended = self
            .frameworks
            .iter()
            .map(|f| rank_with_extra_edge(f, Some((i, j))))
            .max()
            .unwrap_or(0);
        Ok(extended == self.base_rank)
    }

    /// Implied status of every pair in `x`, keyed by the sorted pair.
    pub fn implied_pairs(&self, x: &[usize]) -> Result<Vec<((usize, usize), bool)>> {
        let mut sorted = x.to_vec();
        sorted.sort_unstable();
        sorted
            .iter()
            .tuple_combinations()
            .map(|(&a, &b)| Ok(((a, b), self.is_implied(a, b)?)))
            .collect()
    }

    /// First 4-subset of `x` (lexicographic) whose six pairs are all implied.
    pub fn find_k4(&self, x: &[usize]) -> Result<Option<[usize; 4]>> {
        let pairs = self.implied_pairs(x)?;
        let implied = |a: usize, b: usize| {
            let key = if a < b { (a, b) } else { (b, a) };
            pairs.iter().any(|&(k, v)| k == key && v)
        };
        let mut sorted = x.to_vec();
        sorted.sort_unstable();
        Ok(sorted.into_iter().combinations(4).find_map(|c| {
            c.iter()
                .tuple_combinations()
                .all(|(&a, &b)| implied(a, b))
                .then(|| [c[0], c[1], c[2], c[3]])
        }))
    }
}

pub fn is_implied_edge<R: Rng + ?Sized>(g: &Graph, i: usize, j: usize, n: usize, rng: &mut R) -> Result<bool> {
    ImpliedEdges::new(g, n, rng).is_implied(i, j)
}

/// First 4-subset of `x` spanning an implied `K₄`; `None` when `|x| < 4`.
pub fn find_implied_k4<R: Rng + ?Sized>(g: &Graph, x: &[usize], n: usize, rng: &mut R) -> Result<Option<[usize; 4]>> {
    if x.len() < 4 {
        return Ok(None);
    }
    ImpliedEdges::new(g, n, rng).find_k4(x)
}
