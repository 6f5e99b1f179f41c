use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Scalar};
use crate::motions::{trivial_motion_space, MotionSpace, PointConfiguration};

use super::graph::Graph;

/// Bar-and-joint framework `(G, p)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Framework<S: Scalar> {
    graph: Graph,
    config: PointConfiguration<S>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub edge_count: usize,
    pub rank: usize,
    pub flex_dim: usize,
    pub trivial_dim: usize,
    pub is_rigid: bool,
    pub is_isostatic: bool,
}

impl<S: Scalar> Framework<S> {
    pub fn new(graph: Graph, config: PointConfiguration<S>) -> Result<Self> {
        if graph.vertex_count() != config.count() {
            return Err(Error::ShapeMismatch(format!(
                "graph has {} vertices, configuration has {} points",
                graph.vertex_count(),
                config.count()
            )));
        }
        Ok(Framework { graph, config })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn config(&self) -> &PointConfiguration<S> {
        &self.config
    }
}

/// One row per edge `ij`: `(pᵢ − pⱼ)ᵀ` in block `i`, `(pⱼ − pᵢ)ᵀ` in block `j`.
pub fn rigidity_matrix<S: Scalar>(f: &Framework<S>) -> Matrix<S> {
    edge_rows(&f.config, f.graph.edges())
}

fn edge_rows<S: Scalar>(p: &PointConfiguration<S>, edges: impl Iterator<Item = (usize, usize)>) -> Matrix<S> {
    let (n, k) = (p.dim(), p.count());
    let rows: Vec<Vec<S>> = edges
        .map(|(i, j)| {
            let d = vector::sub(&p.point(i), &p.point(j));
            let mut row = vec![S::zero(); n * k];
            for a in 0..n {
                row[i * n + a] = d[a].clone();
                row[j * n + a] = -d[a].clone();
            }
            row
        })
        .collect();
    if rows.is_empty() {
        Matrix::zeros(0, n * k)
    } else {
        Matrix::from_rows(rows)
    }
}

/// Infinitesimal flexes of the framework as a motion space.
pub fn flex_space<S: Scalar>(f: &Framework<S>) -> MotionSpace<S> {
    let r = rigidity_matrix(f);
    MotionSpace::from_subspace(&f.config, crate::linalg::nullspace(&r)).expect("kernel lives in n*k")
}

/// Flex and trivial dimensions, rigidity and isostaticity.
///
/// The trivial dimension is measured from the actual configuration, so
/// frameworks with fewer than `n + 1` points are handled correctly.
/// Isostaticity is checked by deleting each edge in turn.
pub fn analyze<S: Scalar>(f: &Framework<S>) -> RigidityReport {
    let (n, k) = (f.config.dim(), f.config.count());
    let r = rigidity_matrix(f);
    let rank = r.rank();
    let flex_dim = n * k - rank;
    let trivial_dim = trivial_motion_space(&f.config).dim();
    let is_rigid = flex_dim == trivial_dim;
    let edges = f.graph.edge_list();
    let is_isostatic = is_rigid
        && (0..edges.len()).all(|skip| {
            let kept: Vec<usize> = (0..edges.len()).filter(|&e| e != skip).collect();
            n * k - r.select_rows(&kept).rank() == flex_dim + 1
        });
    RigidityReport { edge_count: edges.len(), rank, flex_dim, trivial_dim, is_rigid, is_isostatic }
}

pub(crate) fn rank_with_extra_edge<S: Scalar>(f: &Framework<S>, extra: Option<(usize, usize)>) -> usize {
    edge_rows(&f.config, f.graph.edges().chain(extra)).rank()
}
