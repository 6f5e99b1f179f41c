//! Growing isostatic graphs by 0- and 1-extensions, and a 2-extension that
//! loses rigidity.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rigidlab::rigidity::{henneberg_extend, is_generically_isostatic, is_generically_rigid, Graph};

fn main() -> rigidlab::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut g = Graph::complete(4);
    // new vertex on three old ones, then on four old ones minus an edge
    g = henneberg_extend(&g, &[0, 1, 2], &[], 3)?;
    println!("0-extension: {} vertices, {} edges, isostatic {}", g.vertex_count(), g.edge_count(), is_generically_isostatic(&g, 3, &mut rng));
    g = henneberg_extend(&g, &[1, 2, 3, 4], &[(1, 4)], 3)?;
    println!("1-extension: {} vertices, {} edges, isostatic {}", g.vertex_count(), g.edge_count(), is_generically_isostatic(&g, 3, &mut rng));

    let k5e = Graph::complete(5).without_edge(3, 4);
    let x = [0, 1, 2, 3, 4];
    for f in [[(0, 1), (2, 3)], [(0, 3), (1, 3)]] {
        let h = henneberg_extend(&k5e, &x, &f, 3)?;
        println!("2-extension of K5 - e deleting {f:?}: rigid {}", is_generically_rigid(&h, 3, &mut rng));
    }
    Ok(())
}
