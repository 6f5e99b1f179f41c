//! Every 2-extension of K5 minus an edge, with the predicted and the
//! computed rigidity of the result.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rigidlab::admissibility::verify_extension_theorems;
use rigidlab::rigidity::Graph;

fn main() -> rigidlab::Result<()> {
    let g = Graph::complete(5).without_edge(3, 4);
    let edges = g.edge_list();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (a, &e) in edges.iter().enumerate() {
        for &f in &edges[a + 1..] {
            let r = verify_extension_theorems(&g, &[0, 1, 2, 3, 4], e, f, &mut rng)?;
            println!(
                "{e:?} {f:?}: hypothesis {:<24} implied K4 {:<14} predicted {:<11} rigid {}",
                r.hypothesis.map_or("-", |h| h.name()),
                format!("{:?}", r.implied_k4),
                format!("{:?}", r.predicted_rigid),
                r.actual_rigid
            );
        }
    }
    Ok(())
}
