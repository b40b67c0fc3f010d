//! Scalar abstractions.
//!
//! The floating-point geometry is written once against [`Real`] and
//! instantiated for `f32` and `f64`. The planar sector figure is written
//! against [`ExactField`], which is satisfied by exact rationals.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, Num, Signed};

/// Floating-point scalar used by the spherical kernel.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static {
    /// `π/2 - FRAC_PI_2` rounded to `Self`: the part of a right angle lost
    /// when it is stored in this type.
    const FRAC_PI_2_LO: Self;

    /// Tolerances appropriate to the precision of this type.
    fn default_tolerances() -> Tolerances<Self>;

    /// Converts an `f64` literal. Panics only for values that cannot be
    /// represented at all, which never happens for the literals used here.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }
}

impl Real for f64 {
    const FRAC_PI_2_LO: f64 = 6.123_233_995_736_766e-17;

    fn default_tolerances() -> Tolerances<f64> {
        Tolerances { degeneracy: 1e-12, quadrant: 1e-9, right_angle: 1e-9, identity: 1e-10, consistency: 1e-10 }
    }
}

impl Real for f32 {
    const FRAC_PI_2_LO: f32 = -4.371_139e-8;

    fn default_tolerances() -> Tolerances<f32> {
        Tolerances { degeneracy: 1e-6, quadrant: 1e-4, right_angle: 1e-4, identity: 1e-4, consistency: 1e-4 }
    }
}

/// Every numeric threshold the kernel uses, in one place.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances<T> {
    /// Two unit vectors are coincident or antipodal when `|p·q| > 1 - degeneracy`.
    pub degeneracy: T,
    /// A side counts as a quadrant when `|side - π/2| <= quadrant`.
    pub quadrant: T,
    /// An angle counts as right when `|angle - π/2| <= right_angle`.
    pub right_angle: T,
    /// Residual bound for trigonometric identities (Menelaus, sine rule).
    pub identity: T,
    /// Agreement bound when recomputing stored elements from coordinates.
    pub consistency: T,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        T::default_tolerances()
    }
}

/// Exact ordered field: rationals over arbitrary-precision or machine integers.
pub trait ExactField: Clone + Num + Signed + PartialOrd + Debug {}

impl<T: Clone + Num + Signed + PartialOrd + Debug> ExactField for T {}

/// Converts degrees to radians.
#[inline]
pub fn to_radians<T: Real>(deg: T) -> T {
    deg.to_radians()
}

/// Converts radians to degrees.
#[inline]
pub fn to_degrees<T: Real>(rad: T) -> T {
    rad.to_degrees()
}
