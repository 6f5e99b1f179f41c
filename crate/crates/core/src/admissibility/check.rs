use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{default_tolerance, vector, Matrix, Scalar};
use crate::motions::{is_linear_motion, trivial_motion_space, Motion, MotionSpace, PointConfiguration};
use crate::sampling::{random_integer_vector, GENERIC_RANGE};

use super::pin::{pin_velocity, BlockSplit, PinContext};

/// Sample points used for "almost all x" unless stated otherwise.
pub const DEFAULT_SAMPLES: usize = 20;

/// Outcome of the rank test for admissibility.
#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibilityReport<S: Scalar> {
    pub candidate_dim: usize,
    pub intersects_trivial: bool,
    pub samples_tested: usize,
    /// Samples redrawn because a pin denominator vanished.
    pub samples_skipped: usize,
    pub max_h_rank: usize,
    /// `rank h_x` at each tested sample, in sampling order.
    pub h_ranks: Vec<usize>,
    pub admissible: bool,
    /// Samples where `rank h_x` exceeded `dim S − 1`.
    pub witness_failures: Vec<Vec<S>>,
}

/// Random integer pin position with entries in `[−10⁶, 10⁶]`.
pub fn sample_point<S: Scalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<S> {
    random_integer_vector(n, GENERIC_RANGE, rng)
}

/// Whether `S ∩ ℐ_p ≠ 0`.
pub fn meets_trivial_motions<S: Scalar>(s: &MotionSpace<S>) -> bool {
    let triv = trivial_motion_space(s.config());
    s.sum(&triv).expect("same configuration").dim() < s.dim() + triv.dim()
}

fn check_config<S: Scalar>(p: &PointConfiguration<S>, s: &MotionSpace<S>) -> Result<()> {
    if s.config() != p {
        return Err(Error::ConfigMismatch);
    }
    Ok(())
}

/// `𝒫(x, q, v) − 𝒫(x, r, w)`.
pub(crate) fn pin_difference<S: Scalar>(
    split: &BlockSplit,
    pins: &(PinContext<S>, PinContext<S>),
    u: &Motion<S>,
    x: &[S],
) -> Result<Vec<S>> {
    let (q, r) = split.with_motion(pins, u)?;
    Ok(vector::sub(&pin_velocity(&q, x)?, &pin_velocity(&r, x)?))
}

fn h_columns<S: Scalar>(
    split: &BlockSplit,
    pins: &(PinContext<S>, PinContext<S>),
    motions: &[Motion<S>],
    x: &[S],
) -> Result<Matrix<S>> {
    let cols = motions.iter().map(|u| pin_difference(split, pins, u, x)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(x.len(), &cols))
}

/// Matrix of `u ↦ 𝒫(x, q, v) − 𝒫(x, r, w)` in the basis of `s`.
pub fn h_map<S: Scalar>(p: &PointConfiguration<S>, s: &MotionSpace<S>, x: &[S]) -> Result<Matrix<S>> {
    h_map_with(&BlockSplit::for_config(p)?, p, s, x)
}

pub fn h_map_with<S: Scalar>(
    split: &BlockSplit,
    p: &PointConfiguration<S>,
    s: &MotionSpace<S>,
    x: &[S],
) -> Result<Matrix<S>> {
    check_config(p, s)?;
    let pins = split.contexts(p)?;
    h_columns(split, &pins, &s.motions(), x)
}

fn is_pin_degeneracy(e: &Error) -> bool {
    matches!(e, Error::OnAffineSpan | Error::ParallelToAffineSpan | Error::AffineSpanDegenerate)
}

/// Rank test at `samples` random pin positions: `s` is reported
/// admissible when it meets `ℐ_p` trivially and `rank h_x ≤ dim s − 1`
/// at every sample.
pub fn test_admissible<S: Scalar, R: Rng + ?Sized>(
    p: &PointConfiguration<S>,
    s: &MotionSpace<S>,
    samples: usize,
    rng: &mut R,
) -> Result<AdmissibilityReport<S>> {
    check_config(p, s)?;
    let split = BlockSplit::for_config(p)?;
    let pins = split.contexts(p)?;
    let motions = s.motions();
    let d = s.dim();
    let mut report = AdmissibilityReport {
        candidate_dim: d,
        intersects_trivial: meets_trivial_motions(s),
        samples_tested: 0,
        samples_skipped: 0,
        max_h_rank: 0,
        h_ranks: Vec::with_capacity(samples),
        admissible: false,
        witness_failures: Vec::new(),
    };
    let max_attempts = 10 * samples + 10;
    while report.samples_tested < samples && report.samples_tested + report.samples_skipped < max_attempts {
        let x = sample_point(p.dim(), rng);
        let h = match h_columns(&split, &pins, &motions, &x) {
            Ok(h) => h,
            Err(e) if is_pin_degeneracy(&e) => {
                report.samples_skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let rank = h.rank();
        report.samples_tested += 1;
        report.h_ranks.push(rank);
        report.max_h_rank = report.max_h_rank.max(rank);
        if rank + 1 > d {
            report.witness_failures.push(x);
        }
    }
    report.admissible = d > 0
        && !report.intersects_trivial
        && report.samples_tested > 0
        && report.witness_failures.is_empty();
    Ok(report)
}

/// `(qᵀ)⁻¹△(vᵀq) − (rᵀ)⁻¹△(wᵀr)`.
pub(crate) fn stress_residual<S: Scalar>(
    split: &BlockSplit,
    pins: &(PinContext<S>, PinContext<S>),
    u: &Motion<S>,
) -> Result<Vec<S>> {
    let (q, r) = split.with_motion(pins, u)?;
    let side = |ctx: &PinContext<S>| {
        let diag: Vec<S> = (0..ctx.dim()).map(|i| vector::dot(&ctx.v().column(i), &ctx.q().column(i))).collect();
        ctx.q_inv().transpose().mul_vec(&diag)
    };
    Ok(vector::sub(&side(&q), &side(&r)))
}

/// Sufficient condition for admissibility: `s` meets `ℐ_p` trivially, each
/// basis motion is linear, and `(qᵀ)⁻¹△(vᵀq) = (rᵀ)⁻¹△(wᵀr)` for each.
pub fn sufficient_check<S: Scalar>(p: &PointConfiguration<S>, s: &MotionSpace<S>) -> Result<bool> {
    check_config(p, s)?;
    let split = BlockSplit::for_config(p)?;
    let pins = split.contexts(p)?;
    if meets_trivial_motions(s) {
        return Ok(false);
    }
    let tol = default_tolerance();
    for u in s.motions() {
        if is_linear_motion(p, &u).is_none() {
            return Ok(false);
        }
        let scale = (u.matrix().max_abs() * p.matrix().max_abs()).max(1.0);
        let resid = stress_residual(&split, &pins, &u)?;
        if !vector::is_negligible(&resid, scale, tol) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For `n + 1` points in `ℝⁿ` and a nontrivial `u`: true when
/// `𝒫(x, q, v) ≠ 𝒫(x, r, w)` at every one of [`DEFAULT_SAMPLES`] pins, so
/// `⟨u⟩` is not admissible.
pub fn one_dim_check<S: Scalar, R: Rng + ?Sized>(p: &PointConfiguration<S>, u: &Motion<S>, rng: &mut R) -> Result<bool> {
    if p.count() != p.dim() + 1 {
        return Err(Error::ShapeMismatch(format!("need n + 1 points, got {} in dimension {}", p.count(), p.dim())));
    }
    if !p.is_general_position() {
        return Err(Error::DegenerateConfig("points are not in general position".into()));
    }
    let line = MotionSpace::span(p, std::slice::from_ref(u))?;
    if line.dim() == 0 || meets_trivial_motions(&line) {
        return Err(Error::TrivialMotion);
    }
    let split = BlockSplit::simplex(p.dim());
    let pins = split.contexts(p)?;
    let tol = default_tolerance();
    let scale = u.matrix().max_abs().max(1.0);
    let mut tested = 0;
    let mut attempts = 0;
    while tested < DEFAULT_SAMPLES && attempts < 10 * DEFAULT_SAMPLES {
        attempts += 1;
        let x = sample_point(p.dim(), rng);
        let h = match pin_difference(&split, &pins, u, &x) {
            Ok(h) => h,
            Err(e) if is_pin_degeneracy(&e) => continue,
            Err(e) => return Err(e),
        };
        tested += 1;
        if vector::is_negligible(&h, scale * vector::max_abs(&x).max(1.0), tol) {
            return Ok(false);
        }
    }
    Ok(tested > 0)
}
