use super::matrix::Matrix;
use super::scalar::Scalar;
use super::vector;

/// Linear subspace of `S^ambient_dim` held as an independent spanning set.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<S> {
    ambient_dim: usize,
    basis: Vec<Vec<S>>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| vector::unit(ambient_dim, i)).collect(),
        }
    }

    /// Span of `vectors`. Keeps each vector that is independent of the ones
    /// already kept, so an independent input is preserved verbatim.
    pub fn span(ambient_dim: usize, vectors: impl IntoIterator<Item = Vec<S>>) -> Self {
        let mut basis: Vec<Vec<S>> = Vec::new();
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length must equal ambient dimension");
            if vector::max_abs(&v) == 0.0 {
                continue;
            }
            basis.push(v);
            if rank_of_vectors(ambient_dim, &basis) < basis.len() {
                basis.pop();
            }
        }
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Basis vectors as the columns of an `ambient_dim × dim` matrix.
    pub fn to_matrix(&self) -> Matrix<S> {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }

    pub fn contains(&self, v: &[S]) -> bool {
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        rank_of_vectors(self.ambient_dim, &vs) == self.dim()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        self.sum(other).dim() == self.dim()
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() == other.dim()
            && self.contains_subspace(other)
    }

    /// `self + other`.
    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        Subspace::span(self.ambient_dim, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient_dim);
        }
        // solve A a = B b via the null space of [A | -B]
        let a = self.to_matrix();
        let b = other.to_matrix().map(|x| -x.clone());
        let joint = a.hstack(&b);
        let kernel = joint.nullspace();
        let da = self.dim();
        Subspace::span(
            self.ambient_dim,
            kernel.into_iter().map(|coeffs| a.mul_vec(&coeffs[..da])),
        )
    }

    /// Image of `self` under a linear map.
    pub fn map(&self, f: &Matrix<S>) -> Self {
        assert_eq!(f.cols(), self.ambient_dim);
        Subspace::span(f.rows(), self.basis.iter().map(|v| f.mul_vec(v)))
    }

    /// Linear combination of the basis with the given coefficients.
    pub fn combine(&self, coeffs: &[S]) -> Vec<S> {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = vec![S::zero(); self.ambient_dim];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            out = vector::add(&out, &vector::scale(b, c));
        }
        out
    }
}

/// Rank of a set of vectors of common length.
pub fn rank_of_vectors<S: Scalar>(ambient_dim: usize, vectors: &[Vec<S>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    // rows are the vectors; rank is invariant under transposition
    Matrix::from_columns(ambient_dim, vectors).transpose().rank()
}
