//! Dense linear algebra over interchangeable scalar backends.
//!
//! Everything is generic over [`Scalar`]: `f64` (SVD rank with a relative
//! tolerance) or [`Rational`] (exact elimination). Matrices in this crate
//! are at most a few hundred entries, so no sparse or blocked formats exist.

mod float;
mod matrix;
mod scalar;
mod subspace;
pub mod vector;

pub use matrix::Matrix;
pub use scalar::{
    default_tolerance, rational_from_f64, set_default_tolerance, Rational, Scalar,
    DEFAULT_TOLERANCE,
};
pub use subspace::{rank_of_vectors, Subspace};

use crate::error::{Error, Result};

/// `(𝟙xᵀ − qᵀ)⁻¹` evaluated through the rank-one update
/// `−(qᵀ)⁻¹ (I + 𝟙(q⁻¹x)ᵀ / (1 − (q⁻¹x)ᵀ𝟙))`.
///
/// Fails with [`Error::AffineSpanDegenerate`] when `x` lies on the affine
/// span of the columns of `q`.
pub fn sherman_morrison_inverse<S: Scalar>(q: &Matrix<S>, x: &[S]) -> Result<Matrix<S>> {
    let q_inv = q.invert()?;
    sherman_morrison_with_inverse(&q_inv, x)
}

/// Same as [`sherman_morrison_inverse`] with `q⁻¹` already known.
pub fn sherman_morrison_with_inverse<S: Scalar>(q_inv: &Matrix<S>, x: &[S]) -> Result<Matrix<S>> {
    let n = q_inv.rows();
    if x.len() != n {
        return Err(Error::ShapeMismatch(format!("x has length {}, expected {n}", x.len())));
    }
    let y = q_inv.mul_vec(x);
    let s = vector::sum(&y);
    let denom = S::one() - s.clone();
    if denom.is_negligible(1.0 + s.magnitude(), default_tolerance()) {
        return Err(Error::AffineSpanDegenerate);
    }
    let update = Matrix::outer(&vector::ones(n), &y).scale(&(S::one() / denom));
    let inner = Matrix::identity(n).add(&update);
    Ok(q_inv.transpose().mul(&inner).map(|a| -a.clone()))
}

/// `△(b)`: the diagonal of a square matrix as a column vector.
pub fn diag_vector<S: Scalar>(b: &Matrix<S>) -> Result<Vec<S>> {
    b.diag_vector()
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    m.rank()
}

pub fn nullspace<S: Scalar>(m: &Matrix<S>) -> Subspace<S> {
    Subspace::span(m.cols(), m.nullspace())
}

pub fn invert<S: Scalar>(m: &Matrix<S>) -> Result<Matrix<S>> {
    m.invert()
}

pub fn subspace_intersection<S: Scalar>(a: &Subspace<S>, b: &Subspace<S>) -> Subspace<S> {
    a.intersection(b)
}
