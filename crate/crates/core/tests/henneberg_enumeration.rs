//! Every isostatic graph on at most six vertices, and the 0- and
//! 1-extensions of those on four and five vertices.

mod common;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rigidlab::rigidity::{henneberg_extend, is_generically_isostatic, Graph};

fn isostatic_graphs(k: usize, rng: &mut ChaCha8Rng) -> Vec<Graph> {
    let all = common::complete_edges(k);
    let target = if k <= 3 { all.len() } else { 3 * k - 6 };
    all.iter()
        .copied()
        .combinations(target)
        .filter(|edges| common::generically_rigid(k, edges, 3, rng))
        .map(|edges| Graph::new(k, edges).unwrap())
        .collect()
}

/// 12-edge graphs on six vertices with a vertex of degree below 3 or a
/// copy of K5, counted directly.
fn flexible_six() -> usize {
    common::complete_edges(6)
        .into_iter()
        .combinations(12)
        .filter(|edges| {
            let low = (0..6).any(|v| edges.iter().filter(|&&(a, b)| a == v || b == v).count() < 3);
            let k5 = (0..6).any(|v| edges.iter().filter(|&&(a, b)| a != v && b != v).count() == 10);
            low || k5
        })
        .count()
}

#[test]
fn isostatic_counts_and_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    // labelled graphs: K1..K4 and K5 minus an edge
    let counts: Vec<usize> = (1..=5).map(|k| isostatic_graphs(k, &mut rng).len()).collect();
    assert_eq!(counts, [1, 1, 1, 1, 10]);
    let mut six = 0;
    for edges in common::complete_edges(6).into_iter().combinations(12) {
        let g = Graph::new(6, edges.clone()).unwrap();
        let expected = common::generically_rigid(6, &edges, 3, &mut rng);
        assert_eq!(is_generically_isostatic(&g, 3, &mut rng), expected, "{edges:?}");
        six += usize::from(expected);
    }
    // 455 edge sets; flexible ones have a vertex of degree < 3 or contain K5
    assert_eq!(six, 455 - flexible_six());
}

#[test]
fn extensions_stay_isostatic() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    for k in 4..=5 {
        for g in isostatic_graphs(k, &mut rng) {
            for x in (0..k).combinations(3) {
                let h = henneberg_extend(&g, &x, &[], 3).unwrap();
                assert!(is_generically_isostatic(&h, 3, &mut rng));
                assert!(common::generically_rigid(k + 1, &h.edge_list(), 3, &mut rng));
                checked += 1;
            }
            for x in (0..k).combinations(4) {
                for e in g.edges_within(&x) {
                    let h = henneberg_extend(&g, &x, &[e], 3).unwrap();
                    assert_eq!(h.edge_count(), 3 * (k + 1) - 6);
                    assert!(is_generically_isostatic(&h, 3, &mut rng), "{:?} on {x:?} minus {e:?}", g.edge_list());
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}
