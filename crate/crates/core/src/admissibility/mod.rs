//! Admissible motion subspaces of point configurations.
//!
//! A subspace `S` of motions of `p` is admissible when it meets the
//! trivial motions `ℐ_p` only in zero and, for almost every pin position
//! `x`, some nonzero `u ∈ S` extends to a flex of the cone over `p` with
//! apex `x`. The test used here splits the points into two blocks `q`
//! and `r` of `n` points each, computes the unique pin velocity each block
//! forces, and asks for a nonzero `u` where they agree: the map
//! `h_x(u) = 𝒫(x, q, v) − 𝒫(x, r, w)` must have rank at most `dim S − 1`.
//!
//! "Almost all x" is sampled: random integer pins in `[−10⁶, 10⁶]`,
//! skipping (and redrawing) pins where a denominator vanishes.

mod check;
mod classify;
mod extension;
mod pin;
pub mod poly;
mod spaces;

pub use check::{
    h_map, h_map_with, meets_trivial_motions, one_dim_check, sample_point, sufficient_check, test_admissible,
    AdmissibilityReport, DEFAULT_SAMPLES,
};
pub use classify::{
    classify_admissible, fbar, fixed_triple_form, q1_projection, Classification, ClassificationKind,
    FixedTripleForm, TripleFormKind,
};
pub use extension::{
    conic_check, six_edge_graphs, skew_symmetric_matrices, verify_extension_theorems, ExtensionHypothesis,
    ExtensionReport,
};
pub use pin::{limit_velocity, pin_velocity, BlockSplit, PinContext};
pub use poly::{affine_poly_dependence, PolyDependence, Polynomial};
pub use spaces::{
    construct_admissible_family, example_one_space, example_one_space_with_plane, example_two_space,
    orthogonal_complement, rank_one_space, AdmissibleFamily,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::linalg::{vector, Matrix, Rational, Scalar, Subspace};
    use crate::motions::{p_equivalent, trivial_motion_space, Motion, MotionSpace, PointConfiguration};
    use crate::rigidity::{edge, Graph};
    use crate::sampling::{random_integer_matrix, SeedTree};
    use rand_chacha::ChaCha8Rng;

    type P = PointConfiguration<Rational>;

    fn rng(tag: &str, i: u64) -> ChaCha8Rng {
        SeedTree::new(5).rng(tag, i)
    }

    fn generic(i: u64) -> P {
        PointConfiguration::random_generic(3, 5, &mut rng("config", i))
    }

    fn random_space(p: &P, i: u64) -> MotionSpace<Rational> {
        let mut g = rng("space", i);
        let motions: Vec<Motion<Rational>> =
            (0..2).map(|_| Motion::new(random_integer_matrix(3, 5, 20, &mut g))).collect();
        MotionSpace::span(p, &motions).unwrap()
    }

    fn r(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn h_map_ranks() {
        let p = generic(0);
        let x = sample_point::<Rational, _>(3, &mut rng("x", 0));
        assert!(h_map(&p, &trivial_motion_space(&p), &x).unwrap().is_zero_matrix());
        assert_eq!(h_map(&p, &example_one_space(&p), &x).unwrap().rank(), 1);
        assert_eq!(h_map(&p, &random_space(&p, 0), &x).unwrap().rank(), 2);
    }

    #[test]
    fn example_spaces_are_admissible() {
        let p = generic(1);
        let one = test_admissible(&p, &example_one_space(&p), DEFAULT_SAMPLES, &mut rng("adm", 0)).unwrap();
        assert!(one.admissible, "{one:?}");
        assert_eq!((one.candidate_dim, one.samples_tested, one.max_h_rank), (2, 20, 1));
        for k in [0, 3, -2] {
            let s = example_two_space(&p, &r(k)).unwrap();
            assert_eq!(s.dim(), 2);
            let rep = test_admissible(&p, &s, DEFAULT_SAMPLES, &mut rng("adm", 1)).unwrap();
            assert!(rep.admissible);
        }
        let bad = test_admissible(&p, &random_space(&p, 1), 5, &mut rng("adm", 2)).unwrap();
        assert!(!bad.admissible);
        assert_eq!(bad.witness_failures.len(), 5);
        let triv = test_admissible(&p, &trivial_motion_space(&p), 3, &mut rng("adm", 3)).unwrap();
        assert!(triv.intersects_trivial && !triv.admissible);
    }

    #[test]
    fn example_two_at_zero_is_example_one_with_plane() {
        let p = generic(2);
        let two = example_two_space(&p, &r(0)).unwrap();
        let plane = orthogonal_complement(&vector::sub(&p.point(0), &p.point(1)));
        let one = example_one_space_with_plane(&p, &plane).unwrap();
        assert!(p_equivalent(&two, &one).unwrap());
        assert!(!p_equivalent(&two, &example_one_space(&p)).unwrap());
        assert!(!meets_trivial_motions(&example_one_space(&p)));
    }

    #[test]
    fn example_two_degenerate() {
        let p = P::from_i64_points(&[&[1, 2, 3], &[1, 2, 3], &[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        assert!(matches!(example_two_space(&p, &r(1)), Err(Error::DegenerateConfig(_))));
    }

    #[test]
    fn constructed_family() {
        let p = generic(3);
        let fam = construct_admissible_family(&p, 4, &mut rng("family", 0)).unwrap();
        assert_eq!(fam.linear_dim, 9);
        assert!(fam.constrained.dim() >= 7);
        assert_eq!(fam.constrained_trivial_dim, 3);
        assert_eq!(fam.spaces.len(), 4);
        for (i, s) in fam.spaces.iter().enumerate() {
            assert!(sufficient_check(&p, s).unwrap());
            assert!(test_admissible(&p, s, 5, &mut rng("family-adm", i as u64)).unwrap().admissible);
            assert_eq!(classify_admissible(&p, s).unwrap().kind, ClassificationKind::AllAffine);
        }
    }

    #[test]
    fn sufficient_check_rejections() {
        let p = generic(4);
        let triv = trivial_motion_space(&p);
        let two_trivial = MotionSpace::span(&p, &triv.motions()[..2]).unwrap();
        assert!(!sufficient_check(&p, &two_trivial).unwrap());
        assert!(!sufficient_check(&p, &example_one_space(&p)).unwrap());
    }

    fn shift_invariant_equal(z: &[Rational], i: usize, j: usize) -> bool {
        z[i] == z[j]
    }

    #[test]
    fn classify_rank_one_examples() {
        let p = generic(5);
        let c = classify_admissible(&p, &example_one_space(&p)).unwrap();
        assert_eq!(c.kind, ClassificationKind::RankOneForm, "{}", c.details);
        let z = c.z.unwrap();
        assert!((2..5).all(|i| shift_invariant_equal(&z, 1, i)));
        assert_ne!(z[0], z[1]);
        assert!(c.plane.unwrap().same_as(&Subspace::span(3, [vector::unit(3, 0), vector::unit(3, 1)])));

        for k in [0, 1, 4, -3] {
            let k = r(k);
            let s = example_two_space(&p, &k).unwrap();
            let c = classify_admissible(&p, &s).unwrap();
            assert_eq!(c.kind, ClassificationKind::RankOneForm, "{}", c.details);
            let z = c.z.unwrap();
            assert!(z[2] == z[3] && z[3] == z[4]);
            assert_eq!(z[1].clone() - z[4].clone(), k.clone() * (z[0].clone() - z[4].clone()));
            let e = orthogonal_complement(&vector::sub(&p.point(0), &p.point(1)));
            assert!(c.plane.unwrap().same_as(&e));
        }
    }

    #[test]
    fn classify_hypothesis() {
        // r = q up to column order makes (r⁻¹q)ᵀ𝟙 = 𝟙
        let p = P::from_i64_points(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 1, 0], &[0, 0, 1]]);
        let s = MotionSpace::span(&p, &[Motion::unit(3, 5, 0, 0)]).unwrap();
        assert!(matches!(classify_admissible(&p, &s), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn fixed_triple_of_example_two() {
        let p = generic(6);
        let s = example_two_space(&p, &r(5)).unwrap();
        let form = fixed_triple_form(&p, &s).unwrap().unwrap();
        assert_eq!(form.fixed, [2, 3, 4]);
        assert_eq!(form.kind, TripleFormKind::Proportional { k: r(5) });
        assert!(form.plane.same_as(&orthogonal_complement(&vector::sub(&p.point(0), &p.point(1)))));
        let one = fixed_triple_form(&p, &example_one_space(&p)).unwrap().unwrap();
        assert_eq!(one.kind, TripleFormKind::SingleVertex { vertex: 0 });
        assert!(fixed_triple_form(&p, &random_space(&p, 6)).unwrap().is_none());
    }

    #[test]
    fn fbar_routes_agree() {
        let p = generic(7);
        let split = BlockSplit::five_point();
        let (q0, r0) = split.contexts(&p).unwrap();
        let mut g = rng("fbar", 0);
        for _ in 0..10 {
            let u = Motion::new(random_integer_matrix(3, 5, 30, &mut g));
            let x = sample_point::<Rational, _>(3, &mut g);
            let q = q0.with_motion(u.v_block()).unwrap();
            let rr = r0.with_motion(u.w_block()).unwrap();
            let diff = vector::sub(&limit_velocity(&q, &x).unwrap(), &limit_velocity(&rr, &x).unwrap());
            let direct = fbar(&p, &u, &x).unwrap();
            assert_eq!(direct, q1_projection(&p, &diff).unwrap());
            let t = r(-7);
            assert_eq!(fbar(&p, &u, &vector::scale(&x, &t)).unwrap(), vector::scale(&direct, &t));
        }
        for u in trivial_motion_space(&p).motions() {
            let x = sample_point::<Rational, _>(3, &mut g);
            assert_eq!(fbar(&p, &u, &x).unwrap(), vec![r(0); 3]);
        }
    }

    #[test]
    fn one_dimensional_spaces_fail() {
        for (n, i) in [(3, 0), (3, 1), (2, 2), (2, 3)] {
            let mut g = rng("one-dim", i);
            let p = PointConfiguration::<Rational>::random_generic(n, n + 1, &mut g);
            let u = Motion::new(random_integer_matrix(n, n + 1, 30, &mut g));
            assert!(one_dim_check(&p, &u, &mut g).unwrap());
            let triv = trivial_motion_space(&p).motions()[0].clone();
            assert_eq!(one_dim_check(&p, &triv, &mut g), Err(Error::TrivialMotion));
        }
    }

    #[test]
    fn conic_spaces() {
        let p = generic(8);
        assert_eq!(conic_check(&p, &[]).unwrap().dim(), 9);
        for edges in six_edge_graphs() {
            assert!(conic_check(&p, &edges).unwrap().same_as(&skew_symmetric_matrices(3)));
        }
        let line = P::from_i64_points(&[&[0, 0, 0], &[1, 2, 3], &[2, 4, 6], &[5, 10, 15], &[-1, -2, -3]]);
        assert!(conic_check(&line, &six_edge_graphs()[0]).unwrap().dim() > 3);
    }

    #[test]
    fn k5_minus_edge_extensions() {
        let g = Graph::complete(5).without_edge(3, 4);
        let x = [0, 1, 2, 3, 4];
        // vertex 3 has degree 3
        let bad = verify_extension_theorems(&g, &x, (0, 3), (1, 3), &mut rng("ext", 0)).unwrap();
        assert!(bad.implied_k4.is_some());
        assert!(!bad.actual_rigid);
        assert_eq!(bad.predicted_rigid, None);
        assert_eq!(bad.edges_in_x, 9);

        let good = verify_extension_theorems(&g, &x, (0, 1), (2, 3), &mut rng("ext", 1)).unwrap();
        assert!(good.consistent);

        assert!(matches!(
            verify_extension_theorems(&g, &x, (3, 4), (0, 1), &mut rng("ext", 2)),
            Err(Error::BadSupport(_))
        ));
        let not_iso = Graph::complete(5);
        assert_eq!(
            verify_extension_theorems(&not_iso, &x, (0, 1), (2, 3), &mut rng("ext", 3)),
            Err(Error::NotIsostatic)
        );
        let _ = edge(0, 1);
        let _ = Matrix::<Rational>::identity(1);
    }
}
