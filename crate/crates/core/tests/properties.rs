mod common;

use num::Zero;
use proptest::prelude::*;
use rigidlab::admissibility::{pin_velocity, PinContext, Polynomial};
use rigidlab::io::{graph_to_json, parse_graph};
use rigidlab::linalg::{vector, Matrix, Rational, Scalar};
use rigidlab::motions::{p_equivalent, trivial_motion_space, Motion, MotionSpace, PointConfiguration};
use rigidlab::rigidity::{flex_space, Framework, Graph};

fn rat(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-20i64..=20, rows * cols)
        .prop_map(move |v| Matrix::from_vec(rows, cols, v.into_iter().map(rat).collect()))
}

fn graph(k: usize) -> impl Strategy<Value = Graph> {
    prop::collection::vec(any::<bool>(), k * (k - 1) / 2).prop_map(move |mask| {
        let edges = common::complete_edges(k).into_iter().zip(mask).filter(|(_, m)| *m).map(|(e, _)| e);
        Graph::new(k, edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pinned_velocity_is_a_flex(q in int_matrix(3, 3), v in int_matrix(3, 3), x in prop::collection::vec(-20i64..=20, 3)) {
        let x: Vec<Rational> = x.into_iter().map(rat).collect();
        let Ok(ctx) = PinContext::new(q.clone(), v.clone()) else { return Ok(()) };
        let Ok(pv) = pin_velocity(&ctx, &x) else { return Ok(()) };
        for c in 0..3 {
            let d = vector::sub(&x, &q.column(c));
            prop_assert!(vector::dot(&vector::sub(&pv, &v.column(c)), &d).is_zero());
        }
    }

    #[test]
    fn trivial_motions_flex_every_framework(g in graph(5), p in int_matrix(3, 5)) {
        let config = PointConfiguration::new(p).unwrap();
        let flexes = flex_space(&Framework::new(g, config.clone()).unwrap());
        for u in trivial_motion_space(&config).motions() {
            prop_assert!(flexes.contains(&u));
        }
    }

    #[test]
    fn equivalence_ignores_trivial_parts(p in int_matrix(3, 5), u in int_matrix(3, 5), c in -5i64..=5) {
        let config = PointConfiguration::new(p).unwrap();
        let u = Motion::new(u);
        let triv = trivial_motion_space(&config).motions();
        let shifted = u.add(&triv[0].scale(&rat(c)));
        prop_assume!(!shifted.matrix().is_zero_matrix() && !u.matrix().is_zero_matrix());
        let a = MotionSpace::span(&config, &[u]).unwrap();
        let b = MotionSpace::span(&config, &[shifted]).unwrap();
        prop_assert!(p_equivalent(&a, &b).unwrap());
    }

    #[test]
    fn graph_json_round_trip(g in graph(6)) {
        prop_assert_eq!(parse_graph(&graph_to_json(&g).to_string()).unwrap(), g);
    }

    #[test]
    fn polynomial_product_evaluates_pointwise(
        a in prop::collection::vec(-9i64..=9, 4),
        b in prop::collection::vec(-9i64..=9, 4),
        z in prop::collection::vec(-50i64..=50, 3),
    ) {
        let affine = |c: &[i64]| Polynomial::affine(rat(c[0]), &c[1..].iter().map(|&v| rat(v)).collect::<Vec<_>>());
        let (pa, pb) = (affine(&a), affine(&b));
        let z: Vec<Rational> = z.into_iter().map(rat).collect();
        prop_assert_eq!(pa.mul(&pb).eval(&z), pa.eval(&z) * pb.eval(&z));
        prop_assert_eq!(pa.add(&pb).eval(&z), pa.eval(&z) + pb.eval(&z));
    }
}
