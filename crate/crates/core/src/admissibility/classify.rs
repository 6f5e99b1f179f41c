use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::{default_tolerance, vector, Matrix, Scalar, Subspace};
use crate::motions::{
    is_affine_motion, isometry_matching_on, p_equivalent, restricts_to_isometry, Motion, MotionSpace,
    PointConfiguration,
};

use super::pin::{BlockSplit, PinContext};
use super::spaces::rank_one_space;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassificationKind {
    /// Every element is an affine motion of `p`.
    AllAffine,
    /// `p`-equivalent to `E·zᵀ` for a plane `E` and a vector `z`.
    RankOneForm,
    /// Neither form could be verified.
    Anomaly,
}

impl ClassificationKind {
    pub fn name(self) -> &'static str {
        match self {
            ClassificationKind::AllAffine => "AllAffine",
            ClassificationKind::RankOneForm => "RankOneForm",
            ClassificationKind::Anomaly => "Anomaly",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification<S: Scalar> {
    pub kind: ClassificationKind,
    /// `E`, present for [`ClassificationKind::RankOneForm`].
    pub plane: Option<Subspace<S>>,
    /// `z`, present for [`ClassificationKind::RankOneForm`]. Only defined up
    /// to scale and adding a multiple of `𝟙`.
    pub z: Option<Vec<S>>,
    pub details: String,
}

impl<S: Scalar> Classification<S> {
    fn anomaly(details: String) -> Self {
        Classification { kind: ClassificationKind::Anomaly, plane: None, z: None, details }
    }
}

struct FivePoint<S: Scalar> {
    split: BlockSplit,
    pins: (PinContext<S>, PinContext<S>),
    /// `(rᵀ)⁻¹𝟙 − (qᵀ)⁻¹𝟙`
    c: Vec<S>,
    /// `(qᵀ)⁻¹𝟙`
    g: Vec<S>,
}

impl<S: Scalar> FivePoint<S> {
    fn new(p: &PointConfiguration<S>) -> Result<Self> {
        if (p.dim(), p.count()) != (3, 5) {
            return Err(Error::ShapeMismatch("expected five points in space".into()));
        }
        let split = BlockSplit::five_point();
        let pins = split.contexts(p).map_err(|e| match e {
            Error::DegenerateConfig(msg) => Error::HypothesisViolated(msg),
            other => other,
        })?;
        let ones = vector::ones(3);
        let g = pins.0.q_inv().transpose().mul_vec(&ones);
        let c = vector::sub(&pins.1.q_inv().transpose().mul_vec(&ones), &g);
        Ok(FivePoint { split, pins, c, g })
    }

    fn q_inv(&self) -> &Matrix<S> {
        self.pins.0.q_inv()
    }

    fn r_inv(&self) -> &Matrix<S> {
        self.pins.1.q_inv()
    }

    /// `(w r⁻¹, w r⁻¹ − v q⁻¹)`
    fn blocks(&self, u: &Motion<S>) -> (Matrix<S>, Matrix<S>) {
        let v = u.matrix().select_columns(self.split.q_columns());
        let w = u.matrix().select_columns(self.split.r_columns());
        let wr = w.mul(self.r_inv());
        let d = wr.sub(&v.mul(self.q_inv()));
        (wr, d)
    }
}

fn check_config<S: Scalar>(p: &PointConfiguration<S>, s: &MotionSpace<S>) -> Result<()> {
    if s.config() != p {
        return Err(Error::ConfigMismatch);
    }
    Ok(())
}

fn negligible_vec<S: Scalar>(v: &[S], scale: f64) -> bool {
    vector::is_negligible(v, scale.max(1.0), default_tolerance())
}

/// Structure of a 2-dim admissible space of five points in space: either
/// all affine motions, or `p`-equivalent to `E·zᵀ`.
///
/// The rank-one branch normalizes each basis motion by a translation so
/// that `w r⁻¹ − v q⁻¹ = k dᵀ` with `d = q₁ × c` fixed, then solves for a
/// common `l` with `sym(w r⁻¹) = sym(k lᵀ)` and sets
/// `z = (p₁ᵀl, p₂ᵀl, p₃ᵀl, p₄ᵀ(l − d), p₅ᵀ(l − d))`, `E = span{kⁱ}`.
/// The result is verified by [`p_equivalent`]; failure yields
/// [`ClassificationKind::Anomaly`].
pub fn classify_admissible<S: Scalar>(p: &PointConfiguration<S>, s: &MotionSpace<S>) -> Result<Classification<S>> {
    check_config(p, s)?;
    let fp = FivePoint::new(p)?;
    if negligible_vec(&fp.c, vector::max_abs(&fp.g)) {
        return Err(Error::HypothesisViolated("(r⁻¹q)ᵀ𝟙 = 𝟙".into()));
    }
    let motions = s.motions();
    if motions.iter().all(|u| is_affine_motion(p, u).is_some()) {
        return Ok(Classification {
            kind: ClassificationKind::AllAffine,
            plane: None,
            z: None,
            details: format!("all {} basis motions are affine", motions.len()),
        });
    }
    if s.dim() != 2 {
        return Err(Error::HypothesisViolated(format!(
            "rank-one normal form needs a two dimensional space, got {}",
            s.dim()
        )));
    }
    let q1 = p.point(0);
    let d = vector::cross(&q1, &fp.c);
    if negligible_vec(&d, vector::max_abs(&q1) * vector::max_abs(&fp.c)) {
        return Err(Error::HypothesisViolated("p1 is zero".into()));
    }
    let cc = vector::dot(&fp.c, &fp.c);
    let dd = vector::dot(&d, &d);

    let mut ks = Vec::new();
    let mut rows: Vec<Vec<S>> = Vec::new();
    let mut rhs: Vec<S> = Vec::new();
    for (i, u) in motions.iter().enumerate() {
        let (wr, diff) = fp.blocks(u);
        let alpha = vector::scale(&diff.mul_vec(&fp.c), &(S::one() / cc.clone()));
        let k = vector::scale(&diff.mul_vec(&d), &(S::one() / dd.clone()));
        let rebuilt = Matrix::outer(&alpha, &fp.c).add(&Matrix::outer(&k, &d));
        if !rebuilt.approx_eq(&diff, default_tolerance()) {
            return Ok(Classification::anomaly(format!(
                "basis motion {i}: w r⁻¹ − v q⁻¹ has rows outside span{{c, d}}"
            )));
        }
        // translating by −α removes the c component
        let shift = Matrix::outer(&alpha, &fp.r_inv().transpose().mul_vec(&vector::ones(3)));
        let wr = wr.sub(&shift);
        for a in 0..3 {
            for b in a..3 {
                rows.push(
                    (0..3)
                        .map(|j| {
                            let mut coeff = S::zero();
                            if j == b {
                                coeff = coeff + k[a].clone();
                            }
                            if j == a {
                                coeff = coeff + k[b].clone();
                            }
                            coeff
                        })
                        .collect(),
                );
                rhs.push(wr[(a, b)].clone() + wr[(b, a)].clone());
            }
        }
        ks.push(k);
    }
    let plane = Subspace::span(3, ks.clone());
    if plane.dim() != 2 {
        return Ok(Classification::anomaly(format!("k vectors span dimension {}", plane.dim())));
    }
    let l = match Matrix::from_rows(rows).solve(&Matrix::column_vector(&rhs)) {
        Some(sol) => sol.column(0),
        None => return Ok(Classification::anomaly("no common l solves sym(w r⁻¹) = sym(k lᵀ)".into())),
    };
    let l_minus_d = vector::sub(&l, &d);
    let z: Vec<S> = (0..5)
        .map(|i| {
            let lv = if i < 3 { &l } else { &l_minus_d };
            vector::dot(&p.point(i), lv)
        })
        .collect();
    let candidate = rank_one_space(p, &plane, &z)?;
    if p_equivalent(s, &candidate)? {
        Ok(Classification {
            kind: ClassificationKind::RankOneForm,
            plane: Some(plane),
            z: Some(z),
            details: "p-equivalent to E·zᵀ".into(),
        })
    } else {
        Ok(Classification::anomaly("E·zᵀ is not p-equivalent to the input".into()))
    }
}

/// `π(y) = y − g·(q₁ᵀy)` with `g = (qᵀ)⁻¹𝟙`: projection onto `q₁^⊥` along `g`.
pub fn q1_projection<S: Scalar>(p: &PointConfiguration<S>, y: &[S]) -> Result<Vec<S>> {
    let fp = FivePoint::new(p)?;
    let t = vector::dot(&p.point(0), y);
    Ok(vector::sub(y, &vector::scale(&fp.g, &t)))
}

/// `f̄(x) = (w r⁻¹ − v q⁻¹)ᵀx − c·xᵀ(w r⁻¹)ᵀx / ((r⁻¹x)ᵀ𝟙)`, the projection of
/// `𝓛(x, q, v) − 𝓛(x, r, w)` onto `q₁^⊥`.
pub fn fbar<S: Scalar>(p: &PointConfiguration<S>, u: &Motion<S>, x: &[S]) -> Result<Vec<S>> {
    let fp = FivePoint::new(p)?;
    if (u.dim(), u.count()) != (3, 5) || x.len() != 3 {
        return Err(Error::ShapeMismatch("fbar needs a 3x5 motion and x in R^3".into()));
    }
    let s_r = vector::sum(&fp.r_inv().mul_vec(x));
    let scale: f64 = fp.r_inv().mul_vec(x).iter().map(Scalar::magnitude).sum();
    if s_r.is_negligible(scale, default_tolerance()) {
        return Err(Error::ParallelToAffineSpan);
    }
    let (wr, diff) = fp.blocks(u);
    let quad = vector::dot(x, &wr.mul_vec(x));
    let linear = diff.transpose().mul_vec(x);
    Ok(vector::sub(&linear, &vector::scale(&fp.c, &(quad / s_r))))
}

/// Shape of a space that restricts to isometries on three points, after
/// subtracting the matching isometry from each basis motion.
#[derive(Clone, Debug, PartialEq)]
pub enum TripleFormKind<S: Scalar> {
    /// Only one of the two remaining points moves.
    SingleVertex { vertex: usize },
    /// The velocities of the two remaining points satisfy `u_b = k·u_a`.
    Proportional { k: S },
    Other,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixedTripleForm<S: Scalar> {
    pub fixed: [usize; 3],
    /// The remaining points `a < b`.
    pub free: [usize; 2],
    /// Span of the velocities at the moving point(s).
    pub plane: Subspace<S>,
    pub kind: TripleFormKind<S>,
}

/// First 3-subset (lexicographic) on which every motion of `s` is an
/// isometry, with the normal form of `s` relative to it. `None` if no
/// such subset exists.
pub fn fixed_triple_form<S: Scalar>(p: &PointConfiguration<S>, s: &MotionSpace<S>) -> Result<Option<FixedTripleForm<S>>> {
    check_config(p, s)?;
    let k = p.count();
    for triple in (0..k).combinations(3) {
        if !restricts_to_isometry(p, s, &triple)? {
            continue;
        }
        let free: Vec<usize> = (0..k).filter(|i| !triple.contains(i)).collect();
        if free.len() != 2 {
            return Err(Error::ShapeMismatch("fixed-triple form needs five points".into()));
        }
        let (a, b) = (free[0], free[1]);
        let reps: Vec<Motion<S>> = s
            .motions()
            .iter()
            .map(|u| {
                let iso = isometry_matching_on(p, u, &triple).expect("restriction is an isometry");
                u.sub(&iso)
            })
            .collect();
        let va: Vec<Vec<S>> = reps.iter().map(|u| u.velocity(a)).collect();
        let vb: Vec<Vec<S>> = reps.iter().map(|u| u.velocity(b)).collect();
        let scale = reps.iter().map(|u| u.matrix().max_abs()).fold(0.0, f64::max);
        let all_zero = |vs: &[Vec<S>]| vs.iter().all(|v| negligible_vec(v, scale));
        let span = |vs: &[Vec<S>]| Subspace::span(p.dim(), vs.iter().filter(|v| !negligible_vec(v, scale)).cloned());
        let (plane, kind) = if all_zero(&vb) {
            (span(&va), TripleFormKind::SingleVertex { vertex: a })
        } else if all_zero(&va) {
            (span(&vb), TripleFormKind::SingleVertex { vertex: b })
        } else {
            let ratio = va.iter().zip(&vb).find_map(|(x, y)| {
                let j = (0..x.len()).max_by(|&i, &j| x[i].magnitude().total_cmp(&x[j].magnitude()))?;
                (!x[j].is_negligible(scale.max(1.0), default_tolerance())).then(|| y[j].clone() / x[j].clone())
            });
            match ratio {
                Some(ratio)
                    if va.iter().zip(&vb).all(|(x, y)| negligible_vec(&vector::sub(y, &vector::scale(x, &ratio)), scale)) =>
                {
                    (span(&va), TripleFormKind::Proportional { k: ratio })
                }
                _ => (span(&[va.clone(), vb.clone()].concat()), TripleFormKind::Other),
            }
        };
        return Ok(Some(FixedTripleForm { fixed: [triple[0], triple[1], triple[2]], free: [a, b], plane, kind }));
    }
    Ok(None)
}
