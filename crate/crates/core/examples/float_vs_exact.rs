//! The same computations on the f64 and exact rational backends.

use std::time::Instant;

use rigidlab::admissibility::{example_one_space, test_admissible};
use rigidlab::linalg::{set_default_tolerance, Rational, Scalar};
use rigidlab::motions::{trivial_motion_space, PointConfiguration};
use rigidlab::rigidity::{analyze, Framework, Graph};
use rigidlab::sampling::SeedTree;

fn run<S: Scalar>(tree: &SeedTree) -> rigidlab::Result<()> {
    let start = Instant::now();
    let p = PointConfiguration::<S>::random_generic(3, 8, &mut tree.rng("config", 0));
    let rep = analyze(&Framework::new(Graph::double_banana(), p)?);
    let five = PointConfiguration::<S>::random_generic(3, 5, &mut tree.rng("config", 1));
    let adm = test_admissible(&five, &example_one_space(&five), 20, &mut tree.rng("samples", 0))?;
    println!(
        "{:>5}: double banana flex dim {}, trivial dim {}, first example admissible {} ({:.1} ms)",
        S::NAME,
        rep.flex_dim,
        trivial_motion_space(&five).dim(),
        adm.admissible,
        start.elapsed().as_secs_f64() * 1e3
    );
    Ok(())
}

fn main() -> rigidlab::Result<()> {
    let tree = SeedTree::new(8);
    run::<Rational>(&tree)?;
    run::<f64>(&tree)?;
    // a tolerance this loose merges distinct singular values
    set_default_tolerance(1e-2);
    run::<f64>(&tree)?;
    Ok(())
}
