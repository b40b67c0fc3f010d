use serde::Serialize;

use super::TrigError;
use crate::scalar::{Real, Tolerances};
use crate::sphere::{Elements, SpherePoint, SphericalTriangle, Vec3};

/// Largest disagreement between the ratios `sin(side) / sin(opposite angle)`.
pub fn sine_rule_residual<T: Real>(e: &Elements<T>) -> T {
    let r: [T; 3] = std::array::from_fn(|i| e.sides[i].sin() / e.angles[i].sin());
    let mut worst = T::zero();
    for i in 0..3 {
        for j in i + 1..3 {
            worst = worst.max((r[i] - r[j]).abs());
        }
    }
    worst
}

fn check_right<T: Real>(e: &Elements<T>, right: usize, tol: &Tolerances<T>) -> Result<(), TrigError> {
    if right > 2 {
        return Err(TrigError::DomainError(format!("slot {right}")));
    }
    if (e.angles[right] - T::FRAC_PI_2()).abs() > tol.right_angle {
        return Err(TrigError::NotRight(right));
    }
    Ok(())
}

fn near_quadrant<T: Real>(x: T, tol: &Tolerances<T>) -> bool {
    (x - T::FRAC_PI_2()).abs() <= tol.quadrant
}

/// Residual of `sin(leg) / sin(right angle) = tan(other leg) / tan(angle opposite it)`
/// for a triangle right-angled at slot `right`.
pub fn shadow_rule_check<T: Real>(
    e: &Elements<T>,
    right: usize,
    leg: usize,
    tol: &Tolerances<T>,
) -> Result<T, TrigError> {
    check_right(e, right, tol)?;
    if leg > 2 || leg == right {
        return Err(TrigError::DomainError(format!("slot {leg} is not a leg")));
    }
    let other = 3 - right - leg;
    if near_quadrant(e.sides[other], tol) || near_quadrant(e.angles[other], tol) {
        return Err(TrigError::UndefinedShadow);
    }
    let lhs = e.sides[leg].sin() / e.angles[right].sin();
    let rhs = e.sides[other].tan() / e.angles[other].tan();
    Ok((lhs - rhs).abs())
}

/// Residuals of both forms of `cos A = tan b / tan c`, right angle at
/// slot `right`, acute angle `A` at slot `acute`, `b` the leg beside `A`
/// and `c` the hypotenuse.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CorollaryResidual<T> {
    /// `|cos A - tan b / tan c|`
    pub tangent_form: T,
    /// `|cos A - tan(π/2 - c) / tan(π/2 - b)|`
    pub complement_form: T,
}

impl<T: Real> CorollaryResidual<T> {
    pub fn max(&self) -> T {
        self.tangent_form.max(self.complement_form)
    }
}

pub fn cosine_corollary_check<T: Real>(
    e: &Elements<T>,
    right: usize,
    acute: usize,
    tol: &Tolerances<T>,
) -> Result<CorollaryResidual<T>, TrigError> {
    check_right(e, right, tol)?;
    if acute > 2 || acute == right {
        return Err(TrigError::DomainError(format!("slot {acute} is not an oblique angle")));
    }
    if e.angles[acute] >= T::FRAC_PI_2() - tol.right_angle {
        return Err(TrigError::NotAcute(acute));
    }
    let leg = 3 - right - acute;
    let (b, c) = (e.sides[leg], e.sides[right]);
    if near_quadrant(b, tol) || near_quadrant(c, tol) {
        return Err(TrigError::UndefinedShadow);
    }
    let cos_a = e.angles[acute].cos();
    let half = T::FRAC_PI_2();
    Ok(CorollaryResidual {
        tangent_form: (cos_a - b.tan() / c.tan()).abs(),
        complement_form: (cos_a - (half - c).tan() / (half - b).tan()).abs(),
    })
}

/// Triangle whose vertex `C` is at the north pole, with `CA = b` along
/// longitude 0 and `CB = a` along longitude `angle_c`. Vertices are
/// returned in the order `A, B, C`.
pub fn place_sas<T: Real>(a: T, angle_c: T, b: T) -> Result<SphericalTriangle<T>, TrigError> {
    let pa = SpherePoint::from_vector(Vec3::new(b.sin(), T::zero(), b.cos()))?;
    let pb = SpherePoint::from_vector(Vec3::new(a.sin() * angle_c.cos(), a.sin() * angle_c.sin(), a.cos()))?;
    let pc = SpherePoint::from_vector(Vec3::new(T::zero(), T::zero(), T::one()))?;
    Ok(SphericalTriangle::from_vertices(pa, pb, pc)?)
}

/// Triangle whose vertices are the poles of the given one's sides, each
/// taken toward the opposite vertex.
pub fn polar_triangle<T: Real>(tri: &SphericalTriangle<T>) -> Result<SphericalTriangle<T>, TrigError> {
    Ok(SphericalTriangle::from_vertices(
        tri.pole_toward_vertex(0),
        tri.pole_toward_vertex(1),
        tri.pole_toward_vertex(2),
    )?)
}

/// Elements of the polar triangle: sides `π - angles`, angles `π - sides`.
pub fn polar_elements<T: Real>(e: &Elements<T>) -> Elements<T> {
    Elements { sides: e.angles.map(|x| T::PI() - x), angles: e.sides.map(|x| T::PI() - x) }
}
