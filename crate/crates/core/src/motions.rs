//! Point configurations, infinitesimal motions and motion subspaces.
//!
//! A configuration in `ℝⁿ` with `k` points is an `n × k` matrix whose
//! columns are the points; a motion of it is another `n × k` matrix whose
//! columns are velocities. Motion subspaces live in `ℝ^{n·k}` with motions
//! flattened column-major: coordinate `i·n + a` is component `a` of the
//! velocity of point `i`.
//!
//! For five points in space the two overlapping three-point blocks are
//! exposed by name: `q` keeps points 1, 4, 5 (columns 2 and 3 deleted) and
//! `r` keeps points 1, 2, 3 (columns 4 and 5 deleted). The motion blocks
//! `v` and `w` follow the same convention.

use itertools::Itertools;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{default_tolerance, vector, Matrix, Rational, Scalar, Subspace};
use crate::sampling::{random_integer_matrix, GENERIC_RANGE};

/// Columns of the `q` block of a five-point configuration (0-based).
pub const Q_COLUMNS: [usize; 3] = [0, 3, 4];
/// Columns of the `r` block of a five-point configuration (0-based).
pub const R_COLUMNS: [usize; 3] = [0, 1, 2];

#[derive(Clone, Debug, PartialEq)]
pub struct PointConfiguration<S: Scalar> {
    points: Matrix<S>,
}

impl<S: Scalar> PointConfiguration<S> {
    pub fn new(points: Matrix<S>) -> Result<Self> {
        if points.rows() == 0 || points.cols() == 0 {
            return Err(Error::ShapeMismatch("configuration needs dim >= 1 and count >= 1".into()));
        }
        Ok(PointConfiguration { points })
    }

    /// Configuration from a list of points.
    pub fn from_points(points: &[Vec<S>]) -> Result<Self> {
        let dim = points.first().map_or(0, Vec::len);
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::ShapeMismatch("points have differing dimensions".into()));
        }
        Self::new(Matrix::from_columns(dim, points))
    }

    pub fn from_i64_points(points: &[&[i64]]) -> Self {
        let pts: Vec<Vec<S>> = points.iter().map(|p| p.iter().map(|&v| S::from_i64(v)).collect()).collect();
        Self::from_points(&pts).expect("well-formed literal configuration")
    }

    /// Generic configuration: integer coordinates uniform in `[-10⁶, 10⁶]`.
    pub fn random_generic<R: Rng + ?Sized>(dim: usize, count: usize, rng: &mut R) -> Self {
        PointConfiguration { points: random_integer_matrix(dim, count, GENERIC_RANGE, rng) }
    }

    pub fn dim(&self) -> usize {
        self.points.rows()
    }

    pub fn count(&self) -> usize {
        self.points.cols()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.points
    }

    pub fn point(&self, i: usize) -> Vec<S> {
        self.points.column(i)
    }

    /// Five-point `q` block: points 1, 4, 5.
    pub fn q_block(&self) -> Matrix<S> {
        self.points.select_columns(&Q_COLUMNS)
    }

    /// Five-point `r` block: points 1, 2, 3.
    pub fn r_block(&self) -> Matrix<S> {
        self.points.select_columns(&R_COLUMNS)
    }

    /// New configuration whose point `i` is the old point `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        PointConfiguration { points: self.points.select_columns(perm) }
    }

    pub fn sub_configuration(&self, indices: &[usize]) -> Self {
        self.permuted(indices)
    }

    /// Points with a row of ones appended.
    fn homogeneous(&self, indices: &[usize]) -> Matrix<S> {
        let ones = Matrix::from_vec(1, indices.len(), vector::ones(indices.len()));
        self.points.select_columns(indices).vstack(&ones)
    }

    /// Dimension of the affine span of the points.
    pub fn affine_span_dim(&self) -> usize {
        let all: Vec<usize> = (0..self.count()).collect();
        self.homogeneous(&all).rank() - 1
    }

    /// Every subset of `min(k, n + 1)` points is affinely independent.
    pub fn is_general_position(&self) -> bool {
        let size = self.count().min(self.dim() + 1);
        (0..self.count())
            .combinations(size)
            .all(|subset| self.homogeneous(&subset).rank() == size)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.count() {
            return Err(Error::BadIndex { index: i, count: self.count() });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Motion<S: Scalar> {
    velocities: Matrix<S>,
}

impl<S: Scalar> Motion<S> {
    pub fn new(velocities: Matrix<S>) -> Self {
        Motion { velocities }
    }

    pub fn zero(dim: usize, count: usize) -> Self {
        Motion { velocities: Matrix::zeros(dim, count) }
    }

    /// Motion with a single unit entry at `(row, col)`: the matrix `e_{row,col}`.
    pub fn unit(dim: usize, count: usize, row: usize, col: usize) -> Self {
        let mut m = Matrix::zeros(dim, count);
        m[(row, col)] = S::one();
        Motion { velocities: m }
    }

    pub fn from_flat(dim: usize, count: usize, flat: &[S]) -> Self {
        assert_eq!(flat.len(), dim * count, "flat motion length mismatch");
        Motion { velocities: Matrix::from_fn(dim, count, |a, i| flat[i * dim + a].clone()) }
    }

    /// Column-major flattening.
    pub fn flatten(&self) -> Vec<S> {
        let (n, k) = (self.dim(), self.count());
        (0..k).flat_map(|i| (0..n).map(move |a| (i, a))).map(|(i, a)| self.velocities[(a, i)].clone()).collect()
    }

    pub fn dim(&self) -> usize {
        self.velocities.rows()
    }

    pub fn count(&self) -> usize {
        self.velocities.cols()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.velocities
    }

    pub fn velocity(&self, i: usize) -> Vec<S> {
        self.velocities.column(i)
    }

    /// Five-point `v` block: velocities of points 1, 4, 5.
    pub fn v_block(&self) -> Matrix<S> {
        self.velocities.select_columns(&Q_COLUMNS)
    }

    /// Five-point `w` block: velocities of points 1, 2, 3.
    pub fn w_block(&self) -> Matrix<S> {
        self.velocities.select_columns(&R_COLUMNS)
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        Motion { velocities: self.velocities.select_columns(perm) }
    }

    pub fn add(&self, other: &Self) -> Self {
        Motion { velocities: self.velocities.add(&other.velocities) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Motion { velocities: self.velocities.sub(&other.velocities) }
    }

    pub fn scale(&self, s: &S) -> Self {
        Motion { velocities: self.velocities.scale(s) }
    }

    /// `t𝟙ᵀ` added to every velocity.
    pub fn translated(&self, t: &[S]) -> Self {
        let tr = Matrix::outer(t, &vector::ones(self.count()));
        Motion { velocities: self.velocities.add(&tr) }
    }

    fn matches(&self, p: &PointConfiguration<S>) -> Result<()> {
        if (self.dim(), self.count()) != (p.dim(), p.count()) {
            return Err(Error::ShapeMismatch(format!(
                "motion is {}x{}, configuration is {}x{}",
                self.dim(),
                self.count(),
                p.dim(),
                p.count()
            )));
        }
        Ok(())
    }
}

/// A linear subspace of motions of a fixed configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct MotionSpace<S: Scalar> {
    config: PointConfiguration<S>,
    space: Subspace<S>,
}

impl<S: Scalar> MotionSpace<S> {
    pub fn span(config: &PointConfiguration<S>, motions: &[Motion<S>]) -> Result<Self> {
        for m in motions {
            m.matches(config)?;
        }
        let ambient = config.dim() * config.count();
        Ok(MotionSpace {
            config: config.clone(),
            space: Subspace::span(ambient, motions.iter().map(Motion::flatten)),
        })
    }

    pub fn from_subspace(config: &PointConfiguration<S>, space: Subspace<S>) -> Result<Self> {
        if space.ambient_dim() != config.dim() * config.count() {
            return Err(Error::ShapeMismatch("subspace ambient dimension does not match n*k".into()));
        }
        Ok(MotionSpace { config: config.clone(), space })
    }

    pub fn zero(config: &PointConfiguration<S>) -> Self {
        MotionSpace { config: config.clone(), space: Subspace::zero(config.dim() * config.count()) }
    }

    pub fn config(&self) -> &PointConfiguration<S> {
        &self.config
    }

    pub fn subspace(&self) -> &Subspace<S> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn motions(&self) -> Vec<Motion<S>> {
        self.space
            .basis()
            .iter()
            .map(|b| Motion::from_flat(self.config.dim(), self.config.count(), b))
            .collect()
    }

    /// Linear combination of the basis motions.
    pub fn combine(&self, coeffs: &[S]) -> Motion<S> {
        Motion::from_flat(self.config.dim(), self.config.count(), &self.space.combine(coeffs))
    }

    pub fn contains(&self, u: &Motion<S>) -> bool {
        self.space.contains(&u.flatten())
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_config(other)?;
        Ok(MotionSpace { config: self.config.clone(), space: self.space.intersection(&other.space) })
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_config(other)?;
        Ok(MotionSpace { config: self.config.clone(), space: self.space.sum(&other.space) })
    }

    /// Relabel points: point `i` of the result is point `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let config = self.config.permuted(perm);
        let motions: Vec<Motion<S>> = self.motions().iter().map(|m| m.permuted(perm)).collect();
        MotionSpace::span(&config, &motions).expect("permutation preserves shape")
    }

    fn same_config(&self, other: &Self) -> Result<()> {
        if self.config != other.config {
            return Err(Error::ConfigMismatch);
        }
        Ok(())
    }
}

fn pair_isometric<S: Scalar>(p: &PointConfiguration<S>, u: &Motion<S>, i: usize, j: usize, tol: f64) -> bool {
    let du = vector::sub(&u.velocity(i), &u.velocity(j));
    let dp = vector::sub(&p.point(i), &p.point(j));
    let scale = vector::norm_f64(&du) * vector::norm_f64(&dp);
    vector::dot(&du, &dp).is_negligible(scale, tol)
}

/// `(uᵢ − uⱼ)ᵀ(pᵢ − pⱼ) = 0` for every pair of points.
pub fn is_infinitesimal_isometry<S: Scalar>(p: &PointConfiguration<S>, u: &Motion<S>) -> Result<bool> {
    u.matches(p)?;
    let tol = default_tolerance();
    Ok((0..p.count()).tuple_combinations().all(|(i, j)| pair_isometric(p, u, i, j, tol)))
}

/// Skew-symmetric basis `E_ab − E_ba`, `a < b`.
pub fn skew_basis<S: Scalar>(n: usize) -> Vec<Matrix<S>> {
    (0..n)
        .tuple_combinations()
        .map(|(a, b)| {
            let mut m = Matrix::zeros(n, n);
            m[(a, b)] = S::one();
            m[(b, a)] = -S::one();
            m
        })
        .collect()
}

/// The space `ℐ_p` of trivial motions: translations `t𝟙ᵀ` and rotations `a·p`.
pub fn trivial_motion_space<S: Scalar>(p: &PointConfiguration<S>) -> MotionSpace<S> {
    let (n, k) = (p.dim(), p.count());
    let mut generators: Vec<Motion<S>> = (0..n)
        .map(|a| Motion::new(Matrix::outer(&vector::unit(n, a), &vector::ones(k))))
        .collect();
    generators.extend(skew_basis::<S>(n).iter().map(|a| Motion::new(a.mul(p.matrix()))));
    MotionSpace::span(p, &generators).expect("generators match configuration")
}

/// Some `m` with `u = m·p`, if `u` is the restriction of a linear field.
pub fn is_linear_motion<S: Scalar>(p: &PointConfiguration<S>, u: &Motion<S>) -> Option<Matrix<S>> {
    u.matches(p).ok()?;
    // pᵀ mᵀ = uᵀ
    let mt = p.matrix().transpose().solve(&u.matrix().transpose())?;
    Some(mt.transpose())
}

/// Some `(m, b)` with `uᵢ = m pᵢ + b`, if `u` is the restriction of an affine field.
pub fn is_affine_motion<S: Scalar>(p: &PointConfiguration<S>, u: &Motion<S>) -> Option<(Matrix<S>, Vec<S>)> {
    u.matches(p).ok()?;
    let all: Vec<usize> = (0..p.count()).collect();
    let y = p.homogeneous(&all).transpose().solve(&u.matrix().transpose())?;
    let n = p.dim();
    let m = Matrix::from_fn(n, n, |a, c| y[(c, a)].clone());
    let b = (0..n).map(|a| y[(n, a)].clone()).collect();
    Some((m, b))
}

/// Same dimension and same image modulo `ℐ_p`.
pub fn p_equivalent<S: Scalar>(s1: &MotionSpace<S>, s2: &MotionSpace<S>) -> Result<bool> {
    s1.same_config(s2)?;
    if s1.dim() != s2.dim() {
        return Ok(false);
    }
    let triv = trivial_motion_space(&s1.config);
    let r1 = s1.sum(&triv)?.dim();
    let r2 = s2.sum(&triv)?.dim();
    let r12 = s1.sum(s2)?.sum(&triv)?.dim();
    Ok(r1 == r2 && r2 == r12)
}

/// Every basis motion of `s` is an isometry of the points in `subset`.
pub fn restricts_to_isometry<S: Scalar>(
    p: &PointConfiguration<S>,
    s: &MotionSpace<S>,
    subset: &[usize],
) -> Result<bool> {
    for &i in subset {
        p.check_index(i)?;
    }
    if s.config() != p {
        return Err(Error::ConfigMismatch);
    }
    let tol = default_tolerance();
    Ok(s.motions().iter().all(|u| {
        subset.iter().tuple_combinations().all(|(&i, &j)| pair_isometric(p, u, i, j, tol))
    }))
}

/// Trivial motion agreeing with `u` on the points of `subset`, if `u`
/// restricted there is an isometry.
pub fn isometry_matching_on<S: Scalar>(
    p: &PointConfiguration<S>,
    u: &Motion<S>,
    subset: &[usize],
) -> Option<Motion<S>> {
    let triv = trivial_motion_space(p);
    let gens = triv.motions();
    let n = p.dim();
    // unknown coefficients c with Σ c_l gen_l = u on the subset
    let rows: Vec<(usize, usize)> = subset.iter().flat_map(|&i| (0..n).map(move |a| (i, a))).collect();
    let a = Matrix::from_fn(rows.len(), gens.len(), |r, l| {
        let (i, c) = rows[r];
        gens[l].matrix()[(c, i)].clone()
    });
    let b = Matrix::from_fn(rows.len(), 1, |r, _| {
        let (i, c) = rows[r];
        u.matrix()[(c, i)].clone()
    });
    let coeffs = a.solve(&b)?;
    Some(triv.combine(&coeffs.column(0)))
}

pub type ExactConfiguration = PointConfiguration<Rational>;
