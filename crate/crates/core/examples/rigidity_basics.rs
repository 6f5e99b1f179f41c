//! Rank, flexes and isostaticity of a few small frameworks in 3-space.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rigidlab::linalg::Rational;
use rigidlab::motions::PointConfiguration;
use rigidlab::rigidity::{analyze, Framework, Graph};

fn main() -> rigidlab::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (name, g) in [("K4", Graph::complete(4)), ("K5", Graph::complete(5)), ("double banana", Graph::double_banana())] {
        let p = PointConfiguration::<Rational>::random_generic(3, g.vertex_count(), &mut rng);
        let rep = analyze(&Framework::new(g, p)?);
        println!(
            "{name:>14}: {} edges, rank {}, flex dim {}, trivial dim {}, rigid {}, isostatic {}",
            rep.edge_count, rep.rank, rep.flex_dim, rep.trivial_dim, rep.is_rigid, rep.is_isostatic
        );
    }

    // a square in the plane flexes; its diagonal braces it
    let square = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let p = PointConfiguration::<Rational>::from_i64_points(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]);
    println!("square: {:?}", analyze(&Framework::new(square.clone(), p.clone())?));
    println!("braced: {:?}", analyze(&Framework::new(square.with_edge(0, 2)?, p)?));
    Ok(())
}
