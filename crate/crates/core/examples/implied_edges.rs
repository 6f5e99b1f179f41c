//! Vertex pairs whose distance every generic flex preserves.

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rigidlab::rigidity::{Graph, ImpliedEdges};

fn main() -> rigidlab::Result<()> {
    let g = Graph::double_banana();
    let oracle = ImpliedEdges::new(&g, 3, &mut ChaCha8Rng::seed_from_u64(3));
    let implied: Vec<_> = (0..8)
        .tuple_combinations()
        .filter(|&(i, j)| !g.has_edge(i, j))
        .filter(|&(i, j)| oracle.is_implied(i, j).unwrap())
        .collect();
    println!("implied non-edges of the double banana: {implied:?}");
    println!("implied K4 in the first banana: {:?}", oracle.find_k4(&[0, 1, 2, 3, 4])?);
    println!("implied K4 across the hinge: {:?}", oracle.find_k4(&[0, 2, 3, 5, 6])?);
    Ok(())
}
