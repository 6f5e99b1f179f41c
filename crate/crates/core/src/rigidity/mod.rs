//! Graphs, frameworks, rigidity matrices and Henneberg extensions.
//!
//! Vertices are 0-based in the library; the JSON file formats used by the
//! command line are 1-based and converted at the boundary.
//!
//! "Implied subgraph" (used by the four-edge extension criterion) is read
//! as: every edge of the subgraph is an implied edge of the graph.

mod framework;
mod generic;
mod graph;
mod henneberg;

pub use framework::{analyze, flex_space, rigidity_matrix, Framework, RigidityReport};
pub use generic::{
    find_implied_k4, generic_rank, is_generically_isostatic, is_generically_rigid, is_implied_edge,
    ImpliedEdges, GENERIC_SAMPLES,
};
pub use graph::{edge, Edge, Graph};
pub use henneberg::henneberg_extend;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::linalg::{Matrix, Rational, Scalar};
    use crate::motions::{trivial_motion_space, PointConfiguration};
    use crate::sampling::SeedTree;

    fn rng(i: u64) -> rand_chacha::ChaCha8Rng {
        SeedTree::new(11).rng("rigidity-test", i)
    }

    fn generic_framework(g: Graph, n: usize, i: u64) -> Framework<Rational> {
        let p = PointConfiguration::random_generic(n, g.vertex_count(), &mut rng(i));
        Framework::new(g, p).unwrap()
    }

    #[test]
    fn one_dimensional_bar() {
        let p = PointConfiguration::<Rational>::from_i64_points(&[&[0], &[1]]);
        let f = Framework::new(Graph::complete(2), p).unwrap();
        assert_eq!(rigidity_matrix(&f), Matrix::from_i64_rows(&[&[-1, 1]]));
    }

    #[test]
    fn complete_graph_ranks() {
        assert_eq!(rigidity_matrix(&generic_framework(Graph::complete(4), 3, 0)).rank(), 6);
        assert_eq!(rigidity_matrix(&generic_framework(Graph::complete(5), 3, 1)).rank(), 9);
    }

    #[test]
    fn flex_space_dims() {
        assert_eq!(flex_space(&generic_framework(Graph::complete(4), 3, 2)).dim(), 6);
        assert_eq!(flex_space(&generic_framework(Graph::empty(5), 3, 3)).dim(), 15);
        assert_eq!(flex_space(&generic_framework(Graph::double_banana(), 3, 4)).dim(), 7);
    }

    #[test]
    fn flex_space_contains_trivial_motions() {
        for (i, g) in [Graph::complete(4), Graph::double_banana(), Graph::empty(3)].into_iter().enumerate() {
            let f = generic_framework(g, 3, 10 + i as u64);
            let flex = flex_space(&f);
            let triv = trivial_motion_space(f.config());
            assert!(flex.subspace().contains_subspace(triv.subspace()));
        }
    }

    #[test]
    fn analyze_reference_graphs() {
        let k4 = analyze(&generic_framework(Graph::complete(4), 3, 5));
        assert!(k4.is_rigid && k4.is_isostatic);
        let k5 = analyze(&generic_framework(Graph::complete(5), 3, 6));
        assert!(k5.is_rigid && !k5.is_isostatic);
        let db = analyze(&generic_framework(Graph::double_banana(), 3, 7));
        assert!(!db.is_rigid);
        assert_eq!((db.flex_dim, db.trivial_dim), (7, 6));
    }

    #[test]
    fn analyze_float_backend_agrees() {
        let g = Graph::double_banana();
        let p = PointConfiguration::<f64>::random_generic(3, 8, &mut rng(8));
        let report = analyze(&Framework::new(g, p).unwrap());
        assert_eq!((report.flex_dim, report.trivial_dim, report.is_rigid), (7, 6, false));
    }

    #[test]
    fn small_vertex_counts_use_actual_affine_span() {
        // two points in space: 5 trivial motions, a single bar is rigid
        let r = analyze(&generic_framework(Graph::complete(2), 3, 9));
        assert_eq!(r.trivial_dim, 5);
        assert!(r.is_rigid && r.is_isostatic);
        let tri = analyze(&generic_framework(Graph::complete(3), 3, 19));
        assert!(tri.is_rigid && tri.is_isostatic);
    }

    #[test]
    fn generic_rigidity_oracle() {
        assert!(is_generically_rigid(&Graph::complete(4), 3, &mut rng(20)));
        assert!(!is_generically_rigid(&Graph::double_banana(), 3, &mut rng(21)));
        assert!(is_generically_rigid(&Graph::complete(3), 2, &mut rng(22)));
        assert!(is_generically_isostatic(&Graph::complete(4), 3, &mut rng(23)));
        assert!(!is_generically_isostatic(&Graph::complete(5), 3, &mut rng(24)));
    }

    #[test]
    fn implied_edges() {
        let db = Graph::double_banana();
        let oracle = ImpliedEdges::new(&db, 3, &mut rng(30));
        assert!(oracle.is_implied(0, 1).unwrap());
        assert!(oracle.is_implied(0, 2).unwrap());
        assert!(!oracle.is_implied(2, 5).unwrap());
        assert!(matches!(oracle.is_implied(0, 9), Err(Error::BadIndex { .. })));
        assert!(matches!(oracle.is_implied(3, 3), Err(Error::BadIndex { .. })));

        let k5e = Graph::complete(5).without_edge(3, 4);
        assert!(is_implied_edge(&k5e, 3, 4, 3, &mut rng(31)).unwrap());
    }

    #[test]
    fn implied_k4_search() {
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(find_implied_k4(&Graph::complete(4), &all[..4], 3, &mut rng(40)).unwrap(), Some([0, 1, 2, 3]));
        assert_eq!(find_implied_k4(&Graph::empty(5), &all, 3, &mut rng(41)).unwrap(), None);
        let k5e = Graph::complete(5).without_edge(3, 4);
        assert!(find_implied_k4(&k5e, &all, 3, &mut rng(42)).unwrap().is_some());
    }

    #[test]
    fn henneberg_extensions() {
        let k4 = henneberg_extend(&Graph::complete(3), &[0, 1, 2], &[], 3).unwrap();
        assert!(k4.is_isomorphic(&Graph::complete(4)));

        let one = henneberg_extend(&Graph::complete(4), &[0, 1, 2, 3], &[(0, 1)], 3).unwrap();
        assert_eq!((one.vertex_count(), one.edge_count()), (5, 9));
        assert!(is_generically_rigid(&one, 3, &mut rng(50)));

        // two edges at a degree-3 vertex of K5 - e
        let k5e = Graph::complete(5).without_edge(3, 4);
        let bad = henneberg_extend(&k5e, &[0, 1, 2, 3, 4], &[(0, 3), (1, 3)], 3).unwrap();
        assert!(!is_generically_rigid(&bad, 3, &mut rng(51)));
    }

    #[test]
    fn henneberg_bad_support() {
        let k4 = Graph::complete(4);
        assert!(matches!(henneberg_extend(&k4, &[0, 1, 2], &[(0, 1)], 3), Err(Error::BadSupport(_))));
        let k5e = Graph::complete(5).without_edge(3, 4);
        // (3, 4) is not an edge
        assert!(matches!(
            henneberg_extend(&k5e, &[0, 1, 2, 3, 4], &[(3, 4), (0, 1)], 3),
            Err(Error::BadSupport(_))
        ));
        // edge not spanned by X
        assert!(matches!(henneberg_extend(&k5e, &[0, 1, 2, 3], &[(0, 4)], 3), Err(Error::BadSupport(_))));
    }

    #[test]
    fn rank_bounded_by_rigid_count() {
        for (i, g) in [Graph::complete(5), Graph::double_banana(), Graph::complete(6)].into_iter().enumerate() {
            let f = generic_framework(g.clone(), 3, 60 + i as u64);
            let bound = g.edge_count().min(3 * g.vertex_count() - 6);
            assert!(rigidity_matrix(&f).rank() <= bound);
        }
        let _ = Rational::from_i64(0);
    }
}
