//! Spherical trigonometry on the unit sphere: compounded ratios, the
//! sector figure in the plane and on the sphere, the census of triangles
//! cut out by three great circles, and a solver for spherical triangles.
//!
//! Floating-point code is generic over [`scalar::Real`] (`f32`, `f64`);
//! planar constructions are generic over [`scalar::ExactField`] and are
//! normally used with [`Rational`].

pub mod census;
pub mod ratio;
pub mod scalar;
pub mod sector;
pub mod sphere;
pub mod trig;

pub use scalar::{ExactField, Real, Tolerances};
pub use sphere::{Elements, GreatCircle, SpherePoint, SphericalTriangle, Vec3};

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

pub type SpherePoint64 = SpherePoint<f64>;
pub type SpherePoint32 = SpherePoint<f32>;
pub type GreatCircle64 = GreatCircle<f64>;
pub type GreatCircle32 = GreatCircle<f32>;
pub type Triangle64 = SphericalTriangle<f64>;
pub type Triangle32 = SphericalTriangle<f32>;
pub type Census64 = census::Census<f64>;
pub type Census32 = census::Census<f32>;
pub type PlanarLineQ = sector::PlanarLine<Rational>;
pub type PlanarPointQ = sector::PlanarPoint<Rational>;
pub type PlanarQuadrilateralQ = sector::PlanarQuadrilateral<Rational>;
pub type SphericalQuadrilateral64 = sector::SphericalQuadrilateral<f64>;
