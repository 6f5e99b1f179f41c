//! Matrices whose quadratic form vanishes on the edge directions of the
//! three six-edge graphs on five points.

use rigidlab::admissibility::{conic_check, six_edge_graphs, skew_symmetric_matrices};
use rigidlab::linalg::Rational;
use rigidlab::motions::PointConfiguration;

fn main() -> rigidlab::Result<()> {
    let p = PointConfiguration::<Rational>::from_i64_points(&[
        &[2, 8, 4],
        &[7, 1, 5],
        &[1, 8, 9],
        &[8, 2, 0],
        &[2, 8, 5],
    ]);
    let skew = skew_symmetric_matrices::<Rational>(3);
    for (i, edges) in six_edge_graphs().iter().enumerate() {
        let s = conic_check(&p, edges)?;
        println!("graph {}: {edges:?} -> dim {}, only skew matrices: {}", i + 1, s.dim(), s.same_as(&skew));
    }
    // five edges leave room for a symmetric solution
    let s = conic_check(&p, &six_edge_graphs()[0][..5])?;
    println!("first five edges -> dim {}", s.dim());
    Ok(())
}
