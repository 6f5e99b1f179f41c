use itertools::Itertools;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Scalar, Subspace};
use crate::motions::PointConfiguration;
use crate::rigidity::{edge, henneberg_extend, is_generically_isostatic, is_generically_rigid, Edge, Graph, ImpliedEdges};

/// Matrices `m` (row-major in `ℝ^{n²}`) with `(pᵢ − pⱼ)ᵀ m (pᵢ − pⱼ) = 0`
/// for every given edge.
pub fn conic_check<S: Scalar>(p: &PointConfiguration<S>, edges: &[Edge]) -> Result<Subspace<S>> {
    let n = p.dim();
    let mut rows = Vec::with_capacity(edges.len());
    for &(i, j) in edges {
        if i >= p.count() || j >= p.count() {
            return Err(Error::BadIndex { index: i.max(j), count: p.count() });
        }
        let d = vector::sub(&p.point(i), &p.point(j));
        rows.push(Matrix::outer(&d, &d).into_entries());
    }
    if rows.is_empty() {
        return Ok(Subspace::full(n * n));
    }
    Ok(Subspace::span(n * n, Matrix::from_rows(rows).nullspace()))
}

/// Skew-symmetric `n×n` matrices, row-major in `ℝ^{n²}`.
pub fn skew_symmetric_matrices<S: Scalar>(n: usize) -> Subspace<S> {
    Subspace::span(n * n, crate::motions::skew_basis::<S>(n).into_iter().map(Matrix::into_entries))
}

/// The three 6-edge graphs on five vertices checked against the conic at
/// infinity: two triangles sharing an edge with a further edge to the fifth
/// vertex from an unshared vertex (first) or a shared vertex (second), and a
/// 5-cycle with one chord (third).
pub fn six_edge_graphs() -> [Vec<Edge>; 3] {
    [
        vec![(0, 1), (1, 2), (0, 2), (1, 3), (2, 3), (0, 4)],
        vec![(0, 1), (1, 2), (0, 2), (1, 3), (2, 3), (2, 4)],
        vec![(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (2, 4)],
    ]
}

/// Hypothesis under which a rigidity prediction for the 2-extension is made.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtensionHypothesis {
    /// `|E(X)| ≥ 7`.
    SevenEdges,
    /// `G − {e, f}` has an implied triangle with a pendant edge inside `X`.
    ImpliedTrianglePendant,
}

impl ExtensionHypothesis {
    pub fn name(self) -> &'static str {
        match self {
            ExtensionHypothesis::SevenEdges => "seven-edges",
            ExtensionHypothesis::ImpliedTrianglePendant => "implied-triangle-pendant",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    /// `|E(X)|` in `G`.
    pub edges_in_x: usize,
    pub implied_k4: Option<[usize; 4]>,
    /// Triangle vertices followed by the pendant vertex.
    pub implied_triangle_pendant: Option<[usize; 4]>,
    pub hypothesis: Option<ExtensionHypothesis>,
    /// `Some(true)` when a hypothesis holds and no implied `K₄` exists in
    /// `X`; `None` otherwise.
    pub predicted_rigid: Option<bool>,
    pub actual_rigid: bool,
    pub consistent: bool,
}

fn find_triangle_pendant(oracle: &ImpliedEdges, x: &[usize]) -> Result<Option<[usize; 4]>> {
    let pairs = oracle.implied_pairs(x)?;
    let implied = |a: usize, b: usize| pairs.iter().any(|&(k, v)| v && k == edge(a, b));
    let mut sorted = x.to_vec();
    sorted.sort_unstable();
    for quad in sorted.iter().copied().combinations(4) {
        for tri in quad.iter().copied().combinations(3) {
            let pendant = *quad.iter().find(|v| !tri.contains(v)).expect("four vertices");
            let triangle = tri.iter().tuple_combinations().all(|(&a, &b)| implied(a, b));
            if triangle && tri.iter().any(|&t| implied(t, pendant)) {
                return Ok(Some([tri[0], tri[1], tri[2], pendant]));
            }
        }
    }
    Ok(None)
}

/// Rigidity of the 3-dimensional 2-extension of `g` on `x` deleting `e`
/// and `f`, next to what the five-vertex extension results predict.
pub fn verify_extension_theorems<R: Rng + ?Sized>(
    g: &Graph,
    x: &[usize],
    e: Edge,
    f: Edge,
    rng: &mut R,
) -> Result<ExtensionReport> {
    if x.len() != 5 || x.iter().duplicates().next().is_some() {
        return Err(Error::BadSupport("X must be five distinct vertices".into()));
    }
    for &v in x {
        if v >= g.vertex_count() {
            return Err(Error::BadIndex { index: v, count: g.vertex_count() });
        }
    }
    let in_x = g.edges_within(x);
    if edge(e.0, e.1) == edge(f.0, f.1) {
        return Err(Error::BadSupport("e and f must be distinct".into()));
    }
    for (a, b) in [e, f] {
        if !in_x.contains(&edge(a, b)) {
            return Err(Error::BadSupport(format!("edge ({a}, {b}) is not in E(X)")));
        }
    }
    if !is_generically_isostatic(g, 3, rng) {
        return Err(Error::NotIsostatic);
    }
    let reduced = g.without_edges(&[e, f]);
    let oracle = ImpliedEdges::new(&reduced, 3, rng);
    let implied_k4 = oracle.find_k4(x)?;
    let implied_triangle_pendant = find_triangle_pendant(&oracle, x)?;
    let hypothesis = if in_x.len() >= 7 {
        Some(ExtensionHypothesis::SevenEdges)
    } else if implied_triangle_pendant.is_some() {
        Some(ExtensionHypothesis::ImpliedTrianglePendant)
    } else {
        None
    };
    let predicted_rigid = (hypothesis.is_some() && implied_k4.is_none()).then_some(true);
    let extended = henneberg_extend(g, x, &[e, f], 3)?;
    let actual_rigid = is_generically_rigid(&extended, 3, rng);
    Ok(ExtensionReport {
        edges_in_x: in_x.len(),
        implied_k4,
        implied_triangle_pendant,
        hypothesis,
        predicted_rigid,
        actual_rigid,
        consistent: predicted_rigid.is_none_or(|p| p == actual_rigid),
    })
}
