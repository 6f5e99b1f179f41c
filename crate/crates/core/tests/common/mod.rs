//! Reference computations shared by the integration tests. Plain
//! `Vec<Vec<BigRational>>` arithmetic, written without the library's
//! linear algebra so the two can be compared.

#![allow(dead_code)]

use num::{BigInt, BigRational, One, Zero};
use rand::Rng;

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn random_int<R: Rng>(range: i64, rng: &mut R) -> Q {
    q(rng.gen_range(-range..=range))
}

/// Rank by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &rows[r][c];
            let pivot_row = rows[r].clone();
            for (v, pv) in rows[i][c..].iter_mut().zip(&pivot_row[c..]) {
                *v -= &f * pv;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Inverse by Gauss-Jordan on `[m | I]`.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let pivot = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, pivot);
        let p = a[c][c].clone();
        for v in a[c].iter_mut() {
            *v /= &p;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[c].clone();
                for (v, pv) in a[i].iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det_nonzero(m: &[Vec<Q>]) -> bool {
    rank(m.to_vec()) == m.len()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Rows of the rigidity matrix, one block of `dim` columns per vertex.
pub fn rigidity_rows(points: &[Vec<Q>], edges: &[(usize, usize)]) -> Vec<Vec<Q>> {
    let dim = points[0].len();
    edges
        .iter()
        .map(|&(i, j)| {
            let mut row = vec![Q::zero(); dim * points.len()];
            let d = sub(&points[i], &points[j]);
            for a in 0..dim {
                row[i * dim + a] = d[a].clone();
                row[j * dim + a] = -d[a].clone();
            }
            row
        })
        .collect()
}

pub fn complete_edges(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect()
}

pub fn random_points<R: Rng>(dim: usize, count: usize, rng: &mut R) -> Vec<Vec<Q>> {
    (0..count).map(|_| (0..dim).map(|_| random_int(1_000_000, rng)).collect()).collect()
}

/// Generic rank of a graph in `dim`-space: the larger rank over two random
/// integer placements.
pub fn generic_rank<R: Rng>(vertices: usize, edges: &[(usize, usize)], dim: usize, rng: &mut R) -> usize {
    (0..2)
        .map(|_| rank(rigidity_rows(&random_points(dim, vertices, rng), edges)))
        .max()
        .unwrap()
}

pub fn generically_rigid<R: Rng>(vertices: usize, edges: &[(usize, usize)], dim: usize, rng: &mut R) -> bool {
    let full = if vertices <= dim { vertices * (vertices - 1) / 2 } else { dim * vertices - dim * (dim + 1) / 2 };
    generic_rank(vertices, edges, dim, rng) == full
}

/// A motion as one velocity per point, flattened in vertex blocks.
pub fn flatten(velocities: &[Vec<Q>]) -> Vec<Q> {
    velocities.iter().flatten().cloned().collect()
}

/// Image of the motions under the rigidity matrix of the complete graph;
/// its kernel is exactly the trivial motions for points spanning space.
pub fn modulo_trivial(points: &[Vec<Q>], motions: &[Vec<Vec<Q>>]) -> Vec<Vec<Q>> {
    let rows = rigidity_rows(points, &complete_edges(points.len()));
    motions.iter().map(|u| rows.iter().map(|r| dot(r, &flatten(u))).collect()).collect()
}

/// Span of the motions meets the trivial motions only in zero.
pub fn avoids_trivial(points: &[Vec<Q>], motions: &[Vec<Vec<Q>>]) -> bool {
    rank(modulo_trivial(points, motions)) == motions.len()
}

/// Same dimension and same image modulo trivial motions.
pub fn equivalent(points: &[Vec<Q>], a: &[Vec<Vec<Q>>], b: &[Vec<Vec<Q>>]) -> bool {
    let (ia, ib) = (modulo_trivial(points, a), modulo_trivial(points, b));
    let (ra, rb) = (rank(ia.clone()), rank(ib.clone()));
    let both = rank(ia.into_iter().chain(ib).collect());
    a.len() == b.len() && ra == rb && rb == both
}

/// Some nonzero combination of the motions extends to a flex of the cone
/// over the points with apex `x`: `Σ c_l u_l,i·(x − pᵢ) = w·(x − pᵢ)` has a
/// solution with `c ≠ 0`.
pub fn extends_to_cone(points: &[Vec<Q>], motions: &[Vec<Vec<Q>>], x: &[Q]) -> bool {
    let mut full = Vec::new();
    let mut apex = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let d = sub(x, p);
        let mut row: Vec<Q> = motions.iter().map(|u| dot(&u[i], &d)).collect();
        let w: Vec<Q> = d.iter().map(|v| -v.clone()).collect();
        row.extend(w.iter().cloned());
        full.push(row);
        apex.push(w);
    }
    rank(full) < motions.len() + rank(apex)
}

/// Every pair of the listed points keeps its distance to first order.
pub fn isometric_on(points: &[Vec<Q>], u: &[Vec<Q>], subset: &[usize]) -> bool {
    subset.iter().enumerate().all(|(a, &i)| {
        subset[a + 1..]
            .iter()
            .all(|&j| dot(&sub(&u[i], &u[j]), &sub(&points[i], &points[j])).is_zero())
    })
}

pub fn relative_error(a: &[f64], b: &[f64]) -> f64 {
    let diff: f64 = a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt();
    let scale: f64 = b.iter().map(|y| y * y).sum::<f64>().sqrt();
    diff / scale.max(f64::MIN_POSITIVE)
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}
