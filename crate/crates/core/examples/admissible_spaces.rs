//! Admissibility tests on five points: the two rank-one examples, a random
//! subspace, and spaces built from the stress constraint.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rigidlab::admissibility::{
    construct_admissible_family, example_one_space, example_two_space, test_admissible, DEFAULT_SAMPLES,
};
use rigidlab::linalg::{Matrix, Rational, Scalar};
use rigidlab::motions::{Motion, MotionSpace, PointConfiguration};
use rigidlab::sampling::SeedTree;

fn main() -> rigidlab::Result<()> {
    let tree = SeedTree::new(4);
    let p = PointConfiguration::<Rational>::random_generic(3, 5, &mut tree.rng("config", 0));
    let random = MotionSpace::span(
        &p,
        &[
            Motion::new(Matrix::from_fn(3, 5, |a, i| Rational::from_i64((3 * a + i) as i64 % 7 - 3))),
            Motion::new(Matrix::from_fn(3, 5, |a, i| Rational::from_i64((a * i) as i64 % 5 - 2))),
        ],
    )?;
    let spaces = [
        ("first example", example_one_space(&p)),
        ("second example, k = 3", example_two_space(&p, &Rational::from_i64(3))?),
        ("random", random),
    ];
    for (i, (name, s)) in spaces.iter().enumerate() {
        let rep = test_admissible(&p, s, DEFAULT_SAMPLES, &mut tree.rng("samples", i as u64))?;
        println!("{name:>22}: admissible {}, h ranks {:?}", rep.admissible, rep.h_ranks);
    }

    let fam = construct_admissible_family(&p, 3, &mut ChaCha8Rng::seed_from_u64(5))?;
    println!(
        "constrained linear motions: dim {} (constraint rank {}), {} of them trivial",
        fam.constrained.dim(),
        fam.constraint_rank,
        fam.constrained_trivial_dim
    );
    for (i, s) in fam.spaces.iter().enumerate() {
        let rep = test_admissible(&p, s, DEFAULT_SAMPLES, &mut tree.rng("family", i as u64))?;
        println!("constructed space {i}: admissible {}", rep.admissible);
    }
    Ok(())
}
