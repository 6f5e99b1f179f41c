//! Normal forms of admissible 2-dimensional spaces on five points.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rigidlab::admissibility::{
    classify_admissible, construct_admissible_family, example_one_space, example_two_space, fixed_triple_form,
};
use rigidlab::linalg::{Rational, Scalar};
use rigidlab::motions::{p_equivalent, PointConfiguration};

fn main() -> rigidlab::Result<()> {
    let p = PointConfiguration::<Rational>::from_i64_points(&[
        &[3, -9, 5],
        &[1, 2, -8],
        &[-4, 6, 9],
        &[1, 5, 7],
        &[5, 3, 9],
    ]);
    let fam = construct_admissible_family(&p, 1, &mut ChaCha8Rng::seed_from_u64(6))?;
    let spaces = [
        ("first example", example_one_space(&p)),
        ("second example, k = 2", example_two_space(&p, &Rational::from_i64(2))?),
        ("constructed", fam.spaces[0].clone()),
    ];
    for (name, s) in &spaces {
        let c = classify_admissible(&p, s)?;
        println!("{name}: {} ({})", c.kind.name(), c.details);
        if let (Some(plane), Some(z)) = (&c.plane, &c.z) {
            let rebuilt = rigidlab::admissibility::rank_one_space(&p, plane, z)?;
            let z: Vec<String> = z.iter().map(|v| format!("{:.4}", v.to_f64())).collect();
            println!("  z = [{}], reconstruction equivalent: {}", z.join(", "), p_equivalent(&rebuilt, s)?);
        }
        if let Some(form) = fixed_triple_form(&p, s)? {
            println!("  isometric on points {:?}: {:?}", form.fixed, form.kind);
        }
    }
    Ok(())
}
