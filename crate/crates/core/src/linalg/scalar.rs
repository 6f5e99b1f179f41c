use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use num::bigint::BigInt;
use num::{BigRational, FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::matrix::Matrix;

/// Exact arbitrary precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Default relative rank tolerance for the float backend.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

// zero bits mean "not overridden"
static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0);

/// Current module-level relative tolerance used by the float backend.
pub fn default_tolerance() -> f64 {
    match TOLERANCE_BITS.load(Ordering::Relaxed) {
        0 => DEFAULT_TOLERANCE,
        bits => f64::from_bits(bits),
    }
}

/// Override the module-level tolerance. Intended to be called once at
/// program start (the CLI `--tol` flag).
pub fn set_default_tolerance(tol: f64) {
    assert!(tol > 0.0 && tol.is_finite(), "tolerance must be positive");
    TOLERANCE_BITS.store(tol.to_bits(), Ordering::Relaxed);
}

/// Field element used by every matrix in the crate.
///
/// Two backends exist: `f64`, whose zero tests and rank go through a
/// relative tolerance, and [`Rational`], where everything is exact and the
/// tolerance arguments are ignored.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    const EXACT: bool;
    const NAME: &'static str;

    fn from_i64(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    fn from_rational(v: &Rational) -> Self;

    fn to_f64(&self) -> f64;

    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }

    /// Zero test. Exact backends compare with zero; floats accept
    /// `|self| <= tol * scale`.
    fn is_negligible(&self, scale: f64, tol: f64) -> bool;

    fn rank_of(m: &Matrix<Self>, tol: f64) -> usize;

    /// Basis of the right null space.
    fn nullspace_of(m: &Matrix<Self>, tol: f64) -> Vec<Vec<Self>>;
}

impl Scalar for f64 {
    const EXACT: bool = false;
    const NAME: &'static str = "float";

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_rational(v: &Rational) -> Self {
        ToPrimitive::to_f64(v).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_negligible(&self, scale: f64, tol: f64) -> bool {
        self.abs() <= tol * scale
    }

    fn rank_of(m: &Matrix<Self>, tol: f64) -> usize {
        super::float::svd_rank(m, tol)
    }

    fn nullspace_of(m: &Matrix<Self>, tol: f64) -> Vec<Vec<Self>> {
        super::float::svd_nullspace(m, tol)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;
    const NAME: &'static str = "exact";

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_rational(v: &Rational) -> Self {
        v.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn magnitude(&self) -> f64 {
        ToPrimitive::to_f64(&self.abs()).unwrap_or(f64::INFINITY)
    }

    fn is_negligible(&self, _scale: f64, _tol: f64) -> bool {
        self.is_zero()
    }

    fn rank_of(m: &Matrix<Self>, _tol: f64) -> usize {
        super::matrix::Echelon::reduce(m, 0.0).pivots.len()
    }

    fn nullspace_of(m: &Matrix<Self>, _tol: f64) -> Vec<Vec<Self>> {
        super::matrix::Echelon::reduce(m, 0.0).nullspace()
    }
}

/// Exact conversion of a finite float into a rational.
pub fn rational_from_f64(v: f64) -> Option<Rational> {
    BigRational::from_f64(v)
}
