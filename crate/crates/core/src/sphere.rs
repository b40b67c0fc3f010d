//! Points, great circles, arcs and triangles on the unit sphere.
//!
//! A point is a unit 3-vector. A great circle is stored as its pole, the
//! unit normal of its plane; `GreatCircle(p)` and `GreatCircle(-p)` are the
//! same circle with opposite orientation. Arc lengths and angles are in
//! radians and are computed as `atan2(|u×v|, u·v)`, which stays accurate
//! near 0 and π where `acos` does not.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SphereError {
    #[error("zero-length vector cannot be normalised")]
    ZeroVector,
    #[error("coordinates are not finite")]
    NonFinite,
    #[error("point is not on the unit sphere")]
    NotUnit,
    #[error("points are coincident or antipodal")]
    DegeneratePair,
    #[error("great circles coincide")]
    CoincidentCircles,
    #[error("vertices lie on a single great circle")]
    DegenerateTriangle,
}

/// A 3-vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(
    from = "[T; 3]",
    into = "[T; 3]",
    bound(serialize = "T: Copy + Serialize", deserialize = "T: Deserialize<'de>")
)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T> From<[T; 3]> for Vec3<T> {
    fn from([x, y, z]: [T; 3]) -> Self {
        Self { x, y, z }
    }
}

impl<T> From<Vec3<T>> for [T; 3] {
    fn from(v: Vec3<T>) -> Self {
        [v.x, v.y, v.z]
    }
}

impl<T: Real> Vec3<T> {
    pub const fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn dot(&self, o: &Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(&self, o: &Self) -> Self {
        Self::new(self.y * o.z - self.z * o.y, self.z * o.x - self.x * o.z, self.x * o.y - self.y * o.x)
    }

    pub fn norm(&self) -> T {
        self.x.hypot(self.y).hypot(self.z)
    }

    pub fn scale(&self, k: T) -> Self {
        Self::new(self.x * k, self.y * k, self.z * k)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn normalized(&self) -> Result<Self, SphereError> {
        if !self.is_finite() {
            return Err(SphereError::NonFinite);
        }
        let n = self.norm();
        if n <= T::min_positive_value() {
            return Err(SphereError::ZeroVector);
        }
        Ok(self.scale(n.recip()))
    }

    /// Scalar triple product `a · (b × c)`.
    pub fn triple(a: &Self, b: &Self, c: &Self) -> T {
        a.dot(&b.cross(c))
    }
}

impl<T: Real> Add for Vec3<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Real> Sub for Vec3<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Real> Neg for Vec3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl<T: Real> Mul<T> for Vec3<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        self.scale(k)
    }
}

/// Angle between two nonzero vectors, in `[0, π]`.
fn vector_angle<T: Real>(u: &Vec3<T>, v: &Vec3<T>) -> T {
    u.cross(v).norm().atan2(u.dot(v))
}

/// A point on the unit sphere.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "[T; 3]",
    into = "[T; 3]",
    bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>")
)]
pub struct SpherePoint<T>(Vec3<T>);

impl<T: Real> SpherePoint<T> {
    /// Accepts coordinates whose norm is 1 within the degeneracy tolerance.
    pub fn new(x: T, y: T, z: T) -> Result<Self, SphereError> {
        let v = Vec3::new(x, y, z);
        if !v.is_finite() {
            return Err(SphereError::NonFinite);
        }
        if (v.norm() - T::one()).abs() > T::default_tolerances().degeneracy {
            return Err(SphereError::NotUnit);
        }
        Ok(Self(v))
    }

    /// Projects any nonzero vector onto the sphere.
    pub fn from_vector(v: Vec3<T>) -> Result<Self, SphereError> {
        v.normalized().map(Self)
    }

    pub(crate) fn from_unit(v: Vec3<T>) -> Self {
        Self(v)
    }

    pub fn x(&self) -> T {
        self.0.x
    }

    pub fn y(&self) -> T {
        self.0.y
    }

    pub fn z(&self) -> T {
        self.0.z
    }

    pub fn vector(&self) -> &Vec3<T> {
        &self.0
    }

    pub fn coords(&self) -> [T; 3] {
        self.0.into()
    }

    pub fn dot(&self, o: &Self) -> T {
        self.0.dot(&o.0)
    }

    pub fn antipode(&self) -> Self {
        Self(-self.0)
    }

    /// Euclidean distance between the two points as vectors.
    pub fn chord(&self, o: &Self) -> T {
        (self.0 - o.0).norm()
    }

    /// True when the points are coincident or antipodal within `tol`.
    pub fn is_degenerate_with(&self, o: &Self, tol: T) -> bool {
        self.dot(o).abs() > T::one() - tol
    }
}

impl<T: Real> TryFrom<[T; 3]> for SpherePoint<T> {
    type Error = SphereError;
    fn try_from([x, y, z]: [T; 3]) -> Result<Self, SphereError> {
        Self::new(x, y, z)
    }
}

impl<T> From<SpherePoint<T>> for [T; 3] {
    fn from(p: SpherePoint<T>) -> Self {
        p.0.into()
    }
}

/// The point `-p`.
pub fn antipode<T: Real>(p: &SpherePoint<T>) -> SpherePoint<T> {
    p.antipode()
}

/// Length of the great-circle arc `pq`, in `(0, π)`.
pub fn arc_length<T: Real>(p: &SpherePoint<T>, q: &SpherePoint<T>) -> Result<T, SphereError> {
    if p.is_degenerate_with(q, T::default_tolerances().degeneracy) {
        return Err(SphereError::DegeneratePair);
    }
    Ok(vector_angle(p.vector(), q.vector()))
}

/// Sine of the arc `pq`, read off directly as `|p × q|`.
pub(crate) fn arc_sine<T: Real>(p: &SpherePoint<T>, q: &SpherePoint<T>) -> T {
    p.vector().cross(q.vector()).norm()
}

/// Angle at `at` between the arcs toward `toward1` and `toward2`, in `[0, π]`.
///
/// Collinear arcs give 0 (same direction) or π (opposite directions).
pub fn interior_angle<T: Real>(
    at: &SpherePoint<T>,
    toward1: &SpherePoint<T>,
    toward2: &SpherePoint<T>,
) -> Result<T, SphereError> {
    let tol = T::default_tolerances().degeneracy;
    if at.is_degenerate_with(toward1, tol) || at.is_degenerate_with(toward2, tol) {
        return Err(SphereError::DegeneratePair);
    }
    let n1 = at.vector().cross(toward1.vector());
    let n2 = at.vector().cross(toward2.vector());
    Ok(vector_angle(&n1, &n2))
}

/// A great circle, stored by its pole.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
#[serde(bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>"))]
pub struct GreatCircle<T> {
    pole: SpherePoint<T>,
}

impl<T: Real> GreatCircle<T> {
    pub fn new(pole: SpherePoint<T>) -> Self {
        Self { pole }
    }

    /// Circle whose plane has the given (not necessarily unit) normal.
    pub fn from_normal(n: Vec3<T>) -> Result<Self, SphereError> {
        SpherePoint::from_vector(n).map(Self::new)
    }

    /// The circle through two points, oriented by `p × q`.
    pub fn through(p: &SpherePoint<T>, q: &SpherePoint<T>) -> Result<Self, SphereError> {
        if p.is_degenerate_with(q, T::default_tolerances().degeneracy) {
            return Err(SphereError::DegeneratePair);
        }
        Self::from_normal(p.vector().cross(q.vector()))
    }

    pub fn pole(&self) -> &SpherePoint<T> {
        &self.pole
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.pole.antipode())
    }

    /// Signed height of `p` above the plane of the circle: `sin` of its
    /// arc distance from the circle, positive on the pole's side.
    pub fn side(&self, p: &SpherePoint<T>) -> T {
        self.pole.dot(p)
    }

    pub fn contains(&self, p: &SpherePoint<T>, tol: T) -> bool {
        self.side(p).abs() <= tol
    }

    /// Same circle regardless of orientation.
    pub fn same_circle(&self, o: &Self, tol: T) -> bool {
        self.pole.is_degenerate_with(&o.pole, tol)
    }
}

/// The two poles `(pole, -pole)` of a circle.
pub fn poles_of<T: Real>(c: &GreatCircle<T>) -> (SpherePoint<T>, SpherePoint<T>) {
    (*c.pole(), c.pole().antipode())
}

/// The two intersection points of distinct circles. The first is
/// `pole1 × pole2` normalised, the second its antipode.
pub fn intersect<T: Real>(
    c1: &GreatCircle<T>,
    c2: &GreatCircle<T>,
) -> Result<(SpherePoint<T>, SpherePoint<T>), SphereError> {
    if c1.same_circle(c2, T::default_tolerances().degeneracy) {
        return Err(SphereError::CoincidentCircles);
    }
    let p = SpherePoint::from_vector(c1.pole().vector().cross(c2.pole().vector()))?;
    Ok((p, p.antipode()))
}

/// A minor great-circle arc.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Real + Serialize"))]
pub struct Arc<T> {
    pub start: SpherePoint<T>,
    pub end: SpherePoint<T>,
    pub length: T,
}

impl<T: Real> Arc<T> {
    pub fn new(start: SpherePoint<T>, end: SpherePoint<T>) -> Result<Self, SphereError> {
        let length = arc_length(&start, &end)?;
        Ok(Self { start, end, length })
    }
}

/// A spherical triangle with its derived elements.
///
/// Side `i` is the arc opposite vertex `i`; angle `i` is the interior
/// angle at vertex `i`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Real + Serialize"))]
pub struct SphericalTriangle<T> {
    vertices: [SpherePoint<T>; 3],
    sides: [T; 3],
    angles: [T; 3],
}

impl<T: Real> SphericalTriangle<T> {
    pub fn from_vertices(a: SpherePoint<T>, b: SpherePoint<T>, c: SpherePoint<T>) -> Result<Self, SphereError> {
        let vertices = [a, b, c];
        let tol = T::default_tolerances().degeneracy;
        // Coplanar with the centre means all three lie on one great circle.
        let det = Vec3::triple(a.vector(), b.vector(), c.vector());
        if det.abs() <= tol {
            return Err(SphereError::DegenerateTriangle);
        }
        let mut sides = [T::zero(); 3];
        let mut angles = [T::zero(); 3];
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            sides[i] = arc_length(&vertices[j], &vertices[k])?;
            angles[i] = interior_angle(&vertices[i], &vertices[j], &vertices[k])?;
        }
        Ok(Self { vertices, sides, angles })
    }

    pub fn vertices(&self) -> &[SpherePoint<T>; 3] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &SpherePoint<T> {
        &self.vertices[i]
    }

    pub fn sides(&self) -> [T; 3] {
        self.sides
    }

    pub fn angles(&self) -> [T; 3] {
        self.angles
    }

    pub fn elements(&self) -> Elements<T> {
        Elements::of(self)
    }

    /// Sign of `v0 · (v1 × v2)`: +1 for counter-clockwise vertex order
    /// seen from outside the sphere.
    pub fn orientation(&self) -> T {
        Vec3::triple(self.vertices[0].vector(), self.vertices[1].vector(), self.vertices[2].vector()).signum()
    }

    /// Great circle carrying side `i`, oriented so that its pole lies on
    /// the same side as vertex `i`.
    pub fn carrier(&self, i: usize) -> GreatCircle<T> {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let n = self.vertices[j].vector().cross(self.vertices[k].vector()) * self.orientation();
        GreatCircle::from_normal(n).expect("non-degenerate triangle has non-degenerate sides")
    }

    /// Pole of side `i` on the same side of its carrier as vertex `i`.
    pub fn pole_toward_vertex(&self, i: usize) -> SpherePoint<T> {
        *self.carrier(i).pole()
    }

    /// Closed containment: `p` is on the inner side of all three carriers,
    /// with slack `tol` for points on the boundary.
    pub fn contains(&self, p: &SpherePoint<T>, tol: T) -> bool {
        (0..3).all(|i| self.carrier(i).side(p) >= -tol)
    }

    pub fn antipodal(&self) -> Self {
        Self { vertices: self.vertices.map(|v| v.antipode()), sides: self.sides, angles: self.angles }
    }

    /// Largest disagreement between the stored elements and those
    /// recomputed from the vertices.
    pub fn consistency_error(&self) -> Result<T, SphereError> {
        let fresh = Self::from_vertices(self.vertices[0], self.vertices[1], self.vertices[2])?;
        let mut worst = T::zero();
        for i in 0..3 {
            worst = worst.max((fresh.sides[i] - self.sides[i]).abs());
            worst = worst.max((fresh.angles[i] - self.angles[i]).abs());
        }
        Ok(worst)
    }
}

/// Sides and angles of one triangle, slot `k` opposite vertex `k`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Elements<T> {
    pub sides: [T; 3],
    pub angles: [T; 3],
}

impl<T: Real> Elements<T> {
    pub fn of(tri: &SphericalTriangle<T>) -> Self {
        Self { sides: tri.sides(), angles: tri.angles() }
    }

    pub fn max_deviation(&self, o: &Self) -> T {
        self.sides
            .iter()
            .zip(&o.sides)
            .chain(self.angles.iter().zip(&o.angles))
            .map(|(x, y)| (*x - *y).abs())
            .fold(T::zero(), T::max)
    }

    pub fn values(&self) -> impl Iterator<Item = T> + '_ {
        self.sides.iter().chain(&self.angles).copied()
    }
}

/// Searches for a pole whose open hemisphere strictly contains every point.
///
/// The best separating direction is the point of the convex hull nearest
/// the origin, which is the minimum-norm point of the affine hull of some
/// subset of at most three of the points. Every such candidate is tried and
/// the one with the largest margin is returned if that margin exceeds `tol`.
pub fn open_hemisphere_pole<T: Real>(points: &[SpherePoint<T>], tol: T) -> Option<(SpherePoint<T>, T)> {
    let pts: Vec<Vec3<T>> = points.iter().map(|p| *p.vector()).collect();
    let n = pts.len();
    let mut best: Option<(Vec3<T>, T)> = None;
    let mut consider = |cand: Vec3<T>| {
        let Ok(u) = cand.normalized() else { return };
        let margin = pts.iter().map(|p| u.dot(p)).fold(T::infinity(), T::min);
        if best.as_ref().is_none_or(|(_, m)| margin > *m) {
            best = Some((u, margin));
        }
    };
    for i in 0..n {
        consider(pts[i]);
        for j in i + 1..n {
            let d = pts[j] - pts[i];
            let dd = d.dot(&d);
            if dd > T::zero() {
                consider(pts[i] - d * (pts[i].dot(&d) / dd));
            }
            for k in j + 1..n {
                let u = pts[j] - pts[i];
                let w = pts[k] - pts[i];
                let (uu, uw, ww) = (u.dot(&u), u.dot(&w), w.dot(&w));
                let det = uu * ww - uw * uw;
                if det.abs() <= T::epsilon() * uu * ww {
                    continue;
                }
                let (pu, pw) = (pts[i].dot(&u), pts[i].dot(&w));
                let alpha = (-pu * ww + pw * uw) / det;
                let beta = (-pw * uu + pu * uw) / det;
                consider(pts[i] + u * alpha + w * beta);
            }
        }
    }
    best.filter(|(_, m)| *m > tol).map(|(u, m)| (SpherePoint::from_unit(u), m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};

    fn p(x: f64, y: f64, z: f64) -> SpherePoint<f64> {
        SpherePoint::from_vector(Vec3::new(x, y, z)).unwrap()
    }

    #[test]
    fn arc_length_examples() {
        assert!((arc_length(&p(1., 0., 0.), &p(0., 1., 0.)).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(arc_length(&p(1., 0., 0.), &p(-1., 0., 0.)), Err(SphereError::DegeneratePair));
        assert_eq!(arc_length(&p(1., 0., 0.), &p(1., 0., 0.)), Err(SphereError::DegeneratePair));
        let d = arc_length(&p(1., 0., 0.), &p(FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.)).unwrap();
        assert!((d - FRAC_1_SQRT_2.acos()).abs() < 1e-15);
        assert!((d - FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn arc_length_is_stable_near_zero_and_pi() {
        let eps: f64 = 1e-5;
        let a = p(1., 0., 0.);
        let b = p(eps.cos(), eps.sin(), 0.);
        assert!((arc_length(&a, &b).unwrap() - eps).abs() < 1e-18);
        let c = p(-(eps.cos()), eps.sin(), 0.);
        assert!((arc_length(&a, &c).unwrap() - (PI - eps)).abs() < 1e-15);
    }

    #[test]
    fn interior_angle_examples() {
        let z = p(0., 0., 1.);
        let a = interior_angle(&z, &p(1., 0., 0.), &p(0., 1., 0.)).unwrap();
        assert!((a - FRAC_PI_2).abs() < 1e-15);
        // toward1 on the arc from z to toward2
        let flat = interior_angle(&z, &p(1., 0., 1.), &p(1., 0., 0.)).unwrap();
        assert!(flat.abs() < 1e-10);
        let q = interior_angle(&z, &p(1., 0., 0.), &p(FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.)).unwrap();
        assert!((q - FRAC_PI_4).abs() < 1e-15);
        assert_eq!(interior_angle(&z, &z, &p(1., 0., 0.)), Err(SphereError::DegeneratePair));
    }

    #[test]
    fn point_validation() {
        assert!(SpherePoint::new(1.0, 0.0, 0.0).is_ok());
        assert_eq!(SpherePoint::new(1.0, 1.0, 0.0), Err(SphereError::NotUnit));
        assert_eq!(SpherePoint::new(f64::NAN, 0.0, 0.0), Err(SphereError::NonFinite));
        assert_eq!(SpherePoint::from_vector(Vec3::new(0.0, 0.0, 0.0)), Err(SphereError::ZeroVector));
    }

    #[test]
    fn antipode_and_poles() {
        let z = p(0., 0., 1.);
        assert_eq!(antipode(&z).coords(), [-0.0, -0.0, -1.0]);
        assert_eq!(antipode(&antipode(&z)), z);
        let equator = GreatCircle::new(z);
        let (n, s) = poles_of(&equator);
        assert_eq!(n, z);
        assert_eq!(s.z(), -1.0);
        for k in 0..12 {
            let t = k as f64 * PI / 6.0;
            let q = p(t.cos(), t.sin(), 0.);
            assert!((arc_length(&n, &q).unwrap() - FRAC_PI_2).abs() < 1e-15);
            assert!((arc_length(&s, &q).unwrap() - FRAC_PI_2).abs() < 1e-15);
        }
    }

    #[test]
    fn intersect_convention() {
        // Equator (pole +z) and the meridian through +x (pole +y).
        let equator = GreatCircle::new(p(0., 0., 1.));
        let meridian = GreatCircle::new(p(0., 1., 0.));
        let (first, second) = intersect(&equator, &meridian).unwrap();
        // z × y = -x
        assert_eq!(first.coords(), [-1.0, 0.0, 0.0]);
        assert_eq!(second.coords(), [1.0, -0.0, -0.0]);
        assert_eq!(intersect(&equator, &equator), Err(SphereError::CoincidentCircles));
        assert_eq!(intersect(&equator, &equator.reversed()), Err(SphereError::CoincidentCircles));
    }

    #[test]
    fn three_coordinate_circles_meet_in_six_points() {
        let circles = [p(1., 0., 0.), p(0., 1., 0.), p(0., 0., 1.)].map(GreatCircle::new);
        let mut pts = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                let (a, b) = intersect(&circles[i], &circles[j]).unwrap();
                pts.push(a);
                pts.push(b);
            }
        }
        assert_eq!(pts.len(), 6);
        for i in 0..6 {
            for j in i + 1..6 {
                assert!(pts[i].chord(&pts[j]) > 1.0);
            }
        }
    }

    #[test]
    fn octant_poles_are_opposite_vertices() {
        let t = SphericalTriangle::from_vertices(p(1., 0., 0.), p(0., 1., 0.), p(0., 0., 1.)).unwrap();
        for i in 0..3 {
            assert!((t.sides()[i] - FRAC_PI_2).abs() < 1e-15);
            assert!((t.angles()[i] - FRAC_PI_2).abs() < 1e-15);
            assert!(t.pole_toward_vertex(i).chord(t.vertex(i)) < 1e-15);
        }
        // Same answer for the clockwise ordering.
        let t = SphericalTriangle::from_vertices(p(0., 1., 0.), p(1., 0., 0.), p(0., 0., 1.)).unwrap();
        for i in 0..3 {
            assert!(t.pole_toward_vertex(i).chord(t.vertex(i)) < 1e-15);
        }
    }

    #[test]
    fn triangle_rejects_collinear_vertices() {
        let r = SphericalTriangle::from_vertices(p(1., 0., 0.), p(0., 1., 0.), p(1., 1., 0.));
        assert_eq!(r, Err(SphereError::DegenerateTriangle));
    }

    #[test]
    fn containment_is_closed() {
        let t = SphericalTriangle::from_vertices(p(1., 0., 0.), p(0., 1., 0.), p(0., 0., 1.)).unwrap();
        assert!(t.contains(&p(1., 1., 1.), 1e-12));
        assert!(t.contains(&p(1., 1., 0.), 1e-12));
        assert!(t.contains(&p(1., 0., 0.), 1e-12));
        assert!(!t.contains(&p(-1., 1., 1.), 1e-12));
    }

    #[test]
    fn hemisphere_search() {
        let pts = [p(1., 0., 0.), p(0., 1., 0.), p(0., 0., 1.)];
        let (pole, margin) = open_hemisphere_pole(&pts, 1e-12).unwrap();
        assert!((margin - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        assert!((pole.x() - pole.z()).abs() < 1e-12);
        // Three points on a great circle spread over more than a semicircle.
        let spread = [p(1., 0., 0.), p(-0.5, 0.75f64.sqrt(), 0.), p(-0.5, -(0.75f64.sqrt()), 0.)];
        assert!(open_hemisphere_pole(&spread, 1e-12).is_none());
        // A point and its antipode.
        assert!(open_hemisphere_pole(&[p(0., 0., 1.), p(0., 0., -1.)], 1e-12).is_none());
    }

    #[test]
    fn works_in_single_precision() {
        let a = SpherePoint::<f32>::from_vector(Vec3::new(1.0, 0.0, 0.0)).unwrap();
        let b = SpherePoint::<f32>::from_vector(Vec3::new(0.0, 1.0, 0.0)).unwrap();
        let d = arc_length(&a, &b).unwrap();
        assert!((d - std::f32::consts::FRAC_PI_2).abs() < 1e-6);
    }
}
