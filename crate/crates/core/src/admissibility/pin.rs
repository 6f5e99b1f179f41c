use crate::error::{Error, Result};
use crate::linalg::{default_tolerance, vector, Matrix, Scalar};
use crate::motions::{Motion, PointConfiguration};

/// An invertible point block `q` together with velocities `v` on it.
#[derive(Clone, Debug, PartialEq)]
pub struct PinContext<S: Scalar> {
    q: Matrix<S>,
    q_inv: Matrix<S>,
    v: Matrix<S>,
}

impl<S: Scalar> PinContext<S> {
    pub fn new(q: Matrix<S>, v: Matrix<S>) -> Result<Self> {
        if !q.is_square() {
            return Err(Error::NotSquare { rows: q.rows(), cols: q.cols() });
        }
        let q_inv = q.invert()?;
        PinContext { q, q_inv, v: Matrix::zeros(0, 0) }.with_motion(v)
    }

    /// Same block with different velocities; reuses `q⁻¹`.
    pub fn with_motion(&self, v: Matrix<S>) -> Result<Self> {
        if (v.rows(), v.cols()) != (self.q.rows(), self.q.cols()) {
            return Err(Error::ShapeMismatch(format!(
                "velocity block is {}x{}, point block is {}x{}",
                v.rows(),
                v.cols(),
                self.q.rows(),
                self.q.cols()
            )));
        }
        Ok(PinContext { q: self.q.clone(), q_inv: self.q_inv.clone(), v })
    }

    pub fn dim(&self) -> usize {
        self.q.rows()
    }

    pub fn q(&self) -> &Matrix<S> {
        &self.q
    }

    pub fn q_inv(&self) -> &Matrix<S> {
        &self.q_inv
    }

    pub fn v(&self) -> &Matrix<S> {
        &self.v
    }

    fn check_point(&self, x: &[S]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::ShapeMismatch(format!("x has length {}, expected {}", x.len(), self.dim())));
        }
        Ok(())
    }
}

/// Velocity of a pin at `x` that, together with `v` on the points of `q`,
/// is a flex of the cone `K_{n,1}`:
/// `−(qᵀ)⁻¹ (I + 𝟙yᵀ/(1 − yᵀ𝟙)) (vᵀx − △(vᵀq))` with `y = q⁻¹x`.
pub fn pin_velocity<S: Scalar>(ctx: &PinContext<S>, x: &[S]) -> Result<Vec<S>> {
    ctx.check_point(x)?;
    let y = ctx.q_inv.mul_vec(x);
    let s = vector::sum(&y);
    let denom = S::one() - s.clone();
    if denom.is_negligible(1.0 + s.magnitude(), default_tolerance()) {
        return Err(Error::OnAffineSpan);
    }
    let vx = ctx.v.transpose().mul_vec(x);
    let b: Vec<S> = (0..ctx.dim())
        .map(|i| vx[i].clone() - vector::dot(&ctx.v.column(i), &ctx.q.column(i)))
        .collect();
    let shift = vector::dot(&y, &b) / denom;
    let inner: Vec<S> = b.into_iter().map(|bi| bi + shift.clone()).collect();
    Ok(ctx.q_inv.transpose().mul_vec(&inner).into_iter().map(|a| -a).collect())
}

/// `lim 𝒫(tx, q, v)/t` as `t → ∞`: `−(qᵀ)⁻¹ (I − 𝟙yᵀ/(yᵀ𝟙)) vᵀx`.
pub fn limit_velocity<S: Scalar>(ctx: &PinContext<S>, x: &[S]) -> Result<Vec<S>> {
    ctx.check_point(x)?;
    let y = ctx.q_inv.mul_vec(x);
    let s = vector::sum(&y);
    let scale: f64 = y.iter().map(Scalar::magnitude).sum();
    if s.is_negligible(scale, default_tolerance()) {
        return Err(Error::ParallelToAffineSpan);
    }
    let b = ctx.v.transpose().mul_vec(x);
    let shift = vector::dot(&y, &b) / s;
    let inner: Vec<S> = b.into_iter().map(|bi| bi - shift.clone()).collect();
    Ok(ctx.q_inv.transpose().mul_vec(&inner).into_iter().map(|a| -a).collect())
}

/// Which points form the two pinned blocks `q` and `r`.
///
/// The blocks must each hold `n` points and together cover the
/// configuration; a flex of the cone then exists exactly when the two
/// pinned velocities agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSplit {
    q: Vec<usize>,
    r: Vec<usize>,
}

impl BlockSplit {
    /// Five points in space: `q = (p₁, p₄, p₅)`, `r = (p₁, p₂, p₃)`.
    pub fn five_point() -> Self {
        BlockSplit { q: crate::motions::Q_COLUMNS.to_vec(), r: crate::motions::R_COLUMNS.to_vec() }
    }

    /// `n + 1` points in `ℝⁿ`: `q` drops point `n`, `r` drops point `n + 1`
    /// (1-based).
    pub fn simplex(n: usize) -> Self {
        assert!(n >= 1, "simplex split needs n >= 1");
        let q = (0..n + 1).filter(|&i| i != n - 1).collect();
        let r = (0..n).collect();
        BlockSplit { q, r }
    }

    /// The split used for a configuration shape: [`five_point`](Self::five_point)
    /// for `3×5`, [`simplex`](Self::simplex) for `n×(n+1)`.
    pub fn for_config<S: Scalar>(p: &PointConfiguration<S>) -> Result<Self> {
        match (p.dim(), p.count()) {
            (3, 5) => Ok(Self::five_point()),
            (n, k) if n >= 1 && k == n + 1 => Ok(Self::simplex(n)),
            (n, k) => Err(Error::ShapeMismatch(format!("no pin split for {k} points in dimension {n}"))),
        }
    }

    pub fn q_columns(&self) -> &[usize] {
        &self.q
    }

    pub fn r_columns(&self) -> &[usize] {
        &self.r
    }

    /// Pin contexts for both blocks with zero velocities.
    /// Singular blocks are reported as [`Error::DegenerateConfig`].
    pub fn contexts<S: Scalar>(&self, p: &PointConfiguration<S>) -> Result<(PinContext<S>, PinContext<S>)> {
        let block = |cols: &[usize], name: &str| {
            let q = p.matrix().select_columns(cols);
            let v = Matrix::zeros(q.rows(), q.cols());
            PinContext::new(q, v).map_err(|e| match e {
                Error::Singular => Error::DegenerateConfig(format!("{name} block is singular")),
                other => other,
            })
        };
        Ok((block(&self.q, "q")?, block(&self.r, "r")?))
    }

    /// The two contexts carrying the blocks `v` and `w` of `u`.
    pub fn with_motion<S: Scalar>(
        &self,
        pins: &(PinContext<S>, PinContext<S>),
        u: &Motion<S>,
    ) -> Result<(PinContext<S>, PinContext<S>)> {
        Ok((
            pins.0.with_motion(u.matrix().select_columns(&self.q))?,
            pins.1.with_motion(u.matrix().select_columns(&self.r))?,
        ))
    }
}
