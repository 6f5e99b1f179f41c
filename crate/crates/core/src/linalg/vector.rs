//! Column vectors are plain `Vec<S>`; these are the few helpers needed.

use super::scalar::Scalar;

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    assert_eq!(a.len(), b.len(), "dot length mismatch");
    a.iter().zip(b).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale<S: Scalar>(a: &[S], s: &S) -> Vec<S> {
    a.iter().map(|x| x.clone() * s.clone()).collect()
}

pub fn ones<S: Scalar>(n: usize) -> Vec<S> {
    vec![S::one(); n]
}

pub fn unit<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

pub fn sum<S: Scalar>(a: &[S]) -> S {
    a.iter().cloned().fold(S::zero(), |acc, x| acc + x)
}

pub fn max_abs<S: Scalar>(a: &[S]) -> f64 {
    a.iter().map(Scalar::magnitude).fold(0.0, f64::max)
}

pub fn norm_f64<S: Scalar>(a: &[S]) -> f64 {
    a.iter().map(|x| x.to_f64().powi(2)).sum::<f64>().sqrt()
}

/// Zero test for a vector: exact for rationals, `|v_i| <= tol * scale` for floats.
pub fn is_negligible<S: Scalar>(a: &[S], scale: f64, tol: f64) -> bool {
    a.iter().all(|x| x.is_negligible(scale, tol))
}

pub fn cross<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    assert!(a.len() == 3 && b.len() == 3, "cross product needs 3-vectors");
    vec![
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}
