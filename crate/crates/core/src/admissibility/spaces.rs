use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Scalar, Subspace};
use crate::motions::{trivial_motion_space, Motion, MotionSpace, PointConfiguration};
use crate::sampling::random_integer_vector;

use super::check::{meets_trivial_motions, stress_residual, sufficient_check};
use super::pin::BlockSplit;

/// `E·zᵀ`: motions `a zᵀ` (velocity `zᵢ a` at point `i`) with `a ∈ E`.
pub fn rank_one_space<S: Scalar>(p: &PointConfiguration<S>, plane: &Subspace<S>, z: &[S]) -> Result<MotionSpace<S>> {
    if plane.ambient_dim() != p.dim() || z.len() != p.count() {
        return Err(Error::ShapeMismatch(format!(
            "E lives in dimension {} and z has length {}, configuration is {}x{}",
            plane.ambient_dim(),
            z.len(),
            p.dim(),
            p.count()
        )));
    }
    let motions: Vec<Motion<S>> = plane.basis().iter().map(|a| Motion::new(Matrix::outer(a, z))).collect();
    MotionSpace::span(p, &motions)
}

/// `v^⊥` in the ambient space of `v`.
pub fn orthogonal_complement<S: Scalar>(v: &[S]) -> Subspace<S> {
    Subspace::span(v.len(), Matrix::from_rows(vec![v.to_vec()]).nullspace())
}

/// Velocities in the `x₁x₂`-plane at point 1, zero elsewhere: `span{e₁₁, e₂₁}`.
pub fn example_one_space<S: Scalar>(p: &PointConfiguration<S>) -> MotionSpace<S> {
    let (n, k) = (p.dim(), p.count());
    let motions: Vec<Motion<S>> = (0..2.min(n)).map(|a| Motion::unit(n, k, a, 0)).collect();
    MotionSpace::span(p, &motions).expect("shape taken from p")
}

/// Velocities in `plane` at point 1, zero elsewhere.
pub fn example_one_space_with_plane<S: Scalar>(p: &PointConfiguration<S>, plane: &Subspace<S>) -> Result<MotionSpace<S>> {
    let z: Vec<S> = vector::unit(p.count(), 0);
    rank_one_space(p, plane, &z)
}

/// `u₁ ⊥ p₁ − p₂`, `u₂ = k·u₁`, all other velocities zero.
pub fn example_two_space<S: Scalar>(p: &PointConfiguration<S>, k: &S) -> Result<MotionSpace<S>> {
    if p.count() < 2 {
        return Err(Error::ShapeMismatch("need at least two points".into()));
    }
    let d = vector::sub(&p.point(0), &p.point(1));
    if vector::max_abs(&d) == 0.0 {
        return Err(Error::DegenerateConfig("p1 == p2".into()));
    }
    let mut z = vec![S::zero(); p.count()];
    z[0] = S::one();
    z[1] = k.clone();
    rank_one_space(p, &orthogonal_complement(&d), &z)
}

/// Linear motions `m·p` cut down by the stress constraint, and 2-dim
/// admissible subspaces drawn from them.
#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibleFamily<S: Scalar> {
    /// Dimension of the space `L` of linear motions.
    pub linear_dim: usize,
    /// Rank of the constraint map `m ↦ (qᵀ)⁻¹△(qᵀmq) − (rᵀ)⁻¹△(rᵀmr)` on `L`.
    pub constraint_rank: usize,
    /// Kernel `R` of the constraint map, as motions.
    pub constrained: MotionSpace<S>,
    /// `dim(R ∩ ℐ_p)`.
    pub constrained_trivial_dim: usize,
    pub spaces: Vec<MotionSpace<S>>,
}

/// `trials` random 2-dim subspaces of `R` meeting `ℐ_p` trivially. Every
/// returned space passes [`sufficient_check`].
pub fn construct_admissible_family<S: Scalar, R: Rng + ?Sized>(
    p: &PointConfiguration<S>,
    trials: usize,
    rng: &mut R,
) -> Result<AdmissibleFamily<S>> {
    if (p.dim(), p.count()) != (3, 5) {
        return Err(Error::ShapeMismatch("construction needs five points in space".into()));
    }
    let split = BlockSplit::five_point();
    let pins = split.contexts(p)?;
    let units: Vec<Matrix<S>> = (0..9)
        .map(|idx| {
            let mut m = Matrix::zeros(3, 3);
            m[(idx / 3, idx % 3)] = S::one();
            m
        })
        .collect();
    let linear: Vec<Motion<S>> = units.iter().map(|m| Motion::new(m.mul(p.matrix()))).collect();
    let linear_dim = MotionSpace::span(p, &linear)?.dim();
    let columns = linear.iter().map(|u| stress_residual(&split, &pins, u)).collect::<Result<Vec<_>>>()?;
    let constraint = Matrix::from_columns(3, &columns);
    let constraint_rank = constraint.rank();

    let kernel = constraint.nullspace();
    let to_motion = |coeffs: &[S]| {
        let m = Matrix::from_fn(3, 3, |a, b| coeffs[3 * a + b].clone());
        Motion::new(m.mul(p.matrix()))
    };
    let r_motions: Vec<Motion<S>> = kernel.iter().map(|c| to_motion(c)).collect();
    let constrained = MotionSpace::span(p, &r_motions)?;
    let constrained_trivial_dim = constrained.intersection(&trivial_motion_space(p))?.dim();
    if constrained.dim() < 7 || constrained_trivial_dim != 3 {
        return Err(Error::DegenerateConfig(format!(
            "constrained linear motions have dim {} with {} trivial",
            constrained.dim(),
            constrained_trivial_dim
        )));
    }

    let mut spaces = Vec::with_capacity(trials);
    let mut attempts = 0;
    while spaces.len() < trials {
        attempts += 1;
        if attempts > 20 * trials + 20 {
            return Err(Error::DegenerateConfig("could not draw admissible subspaces".into()));
        }
        let pick = |rng: &mut R| -> Motion<S> {
            let coeffs: Vec<S> = random_integer_vector(kernel.len(), 100, rng);
            let flat = kernel
                .iter()
                .zip(&coeffs)
                .fold(vec![S::zero(); 9], |acc, (c, a)| vector::add(&acc, &vector::scale(c, a)));
            to_motion(&flat)
        };
        let pair = [pick(rng), pick(rng)];
        let s = MotionSpace::span(p, &pair)?;
        if s.dim() == 2 && !meets_trivial_motions(&s) && sufficient_check(p, &s)? {
            spaces.push(s);
        }
    }
    Ok(AdmissibleFamily { linear_dim, constraint_rank, constrained, constrained_trivial_dim, spaces })
}
