//! Checks of the ten propositions on triangles classified by their sides.
//!
//! Proposition `N` has as hypothesis side species `N`. The pole of a side
//! is the one on the same side of its carrier as the opposite vertex, and
//! "inside" means inside the closed triangle.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::species::{classify_sides, Comparison};
use super::CensusError;
use crate::scalar::{Real, Tolerances};
use crate::sphere::{SpherePoint, SphericalTriangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PropositionId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
}

impl PropositionId {
    pub const ALL: [Self; 10] =
        [Self::I, Self::II, Self::III, Self::IV, Self::V, Self::VI, Self::VII, Self::VIII, Self::IX, Self::X];

    /// The side species this proposition takes as hypothesis.
    pub fn species(self) -> u8 {
        self as u8 + 1
    }

    pub fn for_species(species: u8) -> Option<Self> {
        Self::ALL.get(usize::from(species).checked_sub(1)?).copied()
    }
}

impl fmt::Display for PropositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::str::FromStr for PropositionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|p| p.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown proposition {s:?}"))
    }
}

/// The five angle patterns allowed by Proposition VIII.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViiiCase {
    RightTwoObtuse,
    RightAcuteObtuse,
    AcuteTwoObtuse,
    ObtuseTwoAcute,
    ThreeObtuse,
}

impl ViiiCase {
    fn from_counts(right: usize, acute: usize, obtuse: usize) -> Option<Self> {
        match (right, acute, obtuse) {
            (1, 0, 2) => Some(Self::RightTwoObtuse),
            (1, 1, 1) => Some(Self::RightAcuteObtuse),
            (0, 1, 2) => Some(Self::AcuteTwoObtuse),
            (0, 2, 1) => Some(Self::ObtuseTwoAcute),
            (0, 0, 3) => Some(Self::ThreeObtuse),
            _ => None,
        }
    }

    /// Position in the proposition's list, from 1.
    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropositionVerdict {
    pub proposition: PropositionId,
    pub holds: bool,
    pub claims: Vec<Claim>,
    pub viii_case: Option<ViiiCase>,
}

impl PropositionVerdict {
    pub fn claim(&self, name: &str) -> Option<bool> {
        self.claims.iter().find(|c| c.name == name).map(|c| c.holds)
    }
}

struct Facts<T: Real> {
    sides: [Comparison; 3],
    angles: [Comparison; 3],
    side_values: [T; 3],
    poles: [SpherePoint<T>; 3],
    tri: SphericalTriangle<T>,
    tol: Tolerances<T>,
}

impl<T: Real> Facts<T> {
    fn new(tri: &SphericalTriangle<T>, tol: &Tolerances<T>) -> Self {
        Self {
            sides: tri.sides().map(|s| Comparison::of(s, tol.quadrant)),
            angles: tri.angles().map(|a| Comparison::of(a, tol.right_angle)),
            side_values: tri.sides(),
            poles: std::array::from_fn(|i| tri.pole_toward_vertex(i)),
            tri: *tri,
            tol: *tol,
        }
    }

    fn angle_count(&self, c: Comparison) -> usize {
        self.angles.iter().filter(|&&a| a == c).count()
    }

    fn slot_of_side(&self, c: Comparison) -> usize {
        self.sides.iter().position(|&s| s == c).expect("hypothesis guarantees the side")
    }

    fn greatest_side(&self) -> usize {
        (0..3).fold(0, |m, i| if self.side_values[i] > self.side_values[m] { i } else { m })
    }

    /// Angle `k` has class `at_k` and the others class `rest`.
    fn angles_are(&self, k: usize, at_k: Comparison, rest: Comparison) -> bool {
        (0..3).all(|i| self.angles[i] == if i == k { at_k } else { rest })
    }

    fn inside(&self, i: usize) -> bool {
        self.tri.contains(&self.poles[i], self.tol.quadrant)
    }

    fn all_inside(&self) -> bool {
        (0..3).all(|i| self.inside(i))
    }

    fn all_outside(&self) -> bool {
        (0..3).all(|i| !self.inside(i))
    }

    fn vertex_is_pole(&self, i: usize) -> bool {
        self.tri.vertex(i).chord(&self.poles[i]) <= self.tol.quadrant
    }

    /// Pole `i` lies on the circle carrying side `k`.
    fn pole_on_circle(&self, i: usize, k: usize) -> bool {
        self.tri.carrier(k).contains(&self.poles[i], self.tol.quadrant)
    }
}

/// Checks every conclusion of proposition `id` on `tri`, after confirming
/// its hypothesis.
pub fn check_proposition<T: Real>(
    tri: &SphericalTriangle<T>,
    id: PropositionId,
    tol: &Tolerances<T>,
) -> Result<PropositionVerdict, CensusError> {
    let species = classify_sides(tri, tol.quadrant);
    if species != id.species() {
        return Err(CensusError::HypothesisNotMet { proposition: id, species });
    }
    use Comparison::{Equal, Greater, Less};
    let f = Facts::new(tri, tol);
    let mut claims = Vec::new();
    let mut claim = |name, holds| claims.push(Claim { name, holds });
    let mut viii_case = None;

    match id {
        PropositionId::I => {
            claim("all angles right", f.angle_count(Equal) == 3);
            claim("each vertex is the pole of the opposite side", (0..3).all(|i| f.vertex_is_pole(i)));
        }
        PropositionId::II | PropositionId::III => {
            let (odd, odd_angle) = if id == PropositionId::II { (Less, Less) } else { (Greater, Greater) };
            let k = f.slot_of_side(odd);
            claim("two right angles and the third opposite the odd side", f.angles_are(k, odd_angle, Equal));
            claim("the odd vertex is the pole of the opposite side", f.vertex_is_pole(k));
            let others = (0..3).filter(|&i| i != k);
            claim("the other poles lie on the circle of the odd side", others.clone().all(|i| f.pole_on_circle(i, k)));
            if id == PropositionId::II {
                claim("the other poles lie outside", others.clone().all(|i| !f.inside(i)));
            } else {
                claim("the other poles lie inside", others.clone().all(|i| f.inside(i)));
            }
        }
        PropositionId::IV => {
            let k = f.slot_of_side(Equal);
            claim("the angle opposite the quadrant is obtuse, the others acute", f.angles_are(k, Greater, Less));
            claim("the three poles lie inside", f.all_inside());
        }
        PropositionId::V | PropositionId::X => {
            claim("all angles obtuse", f.angle_count(Greater) == 3);
            claim("the three poles lie inside", f.all_inside());
        }
        PropositionId::VI | PropositionId::IX => {
            let k = f.greatest_side();
            claim("the angle opposite the greatest side is obtuse, the others acute", f.angles_are(k, Greater, Less));
            claim("the three poles lie outside", f.all_outside());
        }
        PropositionId::VII => {
            claim("at least two angles acute", f.angle_count(Less) >= 2);
            claim("the three poles lie outside", f.all_outside());
        }
        PropositionId::VIII => {
            viii_case = ViiiCase::from_counts(f.angle_count(Equal), f.angle_count(Less), f.angle_count(Greater));
            claim("the angles follow one of the five listed patterns", viii_case.is_some());
        }
    }

    let holds = claims.iter().all(|c| c.holds);
    Ok(PropositionVerdict { proposition: id, holds, claims, viii_case })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::Vec3;
    use std::f64::consts::FRAC_PI_3;

    fn p(x: f64, y: f64, z: f64) -> SpherePoint<f64> {
        SpherePoint::from_vector(Vec3::new(x, y, z)).unwrap()
    }

    fn tri(a: SpherePoint<f64>, b: SpherePoint<f64>, c: SpherePoint<f64>) -> SphericalTriangle<f64> {
        SphericalTriangle::from_vertices(a, b, c).unwrap()
    }

    fn tol() -> Tolerances<f64> {
        Tolerances::default()
    }

    /// Base on the equator between x and the point at longitude `t`, apex at the north pole.
    fn isoceles_quadrant(t: f64) -> SphericalTriangle<f64> {
        tri(p(1., 0., 0.), p(t.cos(), t.sin(), 0.), p(0., 0., 1.))
    }

    #[test]
    fn octant_satisfies_one() {
        let v = check_proposition(&tri(p(1., 0., 0.), p(0., 1., 0.), p(0., 0., 1.)), PropositionId::I, &tol()).unwrap();
        assert!(v.holds, "{v:?}");
    }

    #[test]
    fn two_and_three() {
        let v = check_proposition(&isoceles_quadrant(FRAC_PI_3), PropositionId::II, &tol()).unwrap();
        assert!(v.holds, "{v:?}");
        let v = check_proposition(&isoceles_quadrant(2.0), PropositionId::III, &tol()).unwrap();
        assert!(v.holds, "{v:?}");
    }

    #[test]
    fn hypothesis_is_enforced() {
        let t = isoceles_quadrant(FRAC_PI_3);
        assert_eq!(
            check_proposition(&t, PropositionId::III, &tol()),
            Err(CensusError::HypothesisNotMet { proposition: PropositionId::III, species: 2 })
        );
    }

    #[test]
    fn small_triangle_satisfies_seven() {
        let v = check_proposition(&tri(p(1., 0.1, 0.), p(1., 0., 0.2), p(1., -0.1, 0.)), PropositionId::VII, &tol())
            .unwrap();
        assert!(v.holds, "{v:?}");
    }

    #[test]
    fn large_triangle_satisfies_ten() {
        // The antipodal completion of a small triangle's exterior: reverse the hemisphere.
        let small = tri(p(1., 0.1, 0.), p(1., 0., 0.2), p(1., -0.1, 0.));
        let polar = tri(
            small.pole_toward_vertex(0).antipode(),
            small.pole_toward_vertex(1).antipode(),
            small.pole_toward_vertex(2).antipode(),
        );
        assert_eq!(classify_sides(&polar, 1e-9), 10);
        let v = check_proposition(&polar, PropositionId::X, &tol()).unwrap();
        assert!(v.holds, "{v:?}");
    }

    #[test]
    fn right_angled_witnesses_for_eight() {
        // Right angle at the north pole; legs along meridians 0 and 90 degrees.
        let leg = |lon: f64, len: f64| p(len.sin() * lon.cos(), len.sin() * lon.sin(), len.cos());
        let pole = p(0., 0., 1.);
        let v = check_proposition(
            &tri(pole, leg(0.0, 2.0), leg(std::f64::consts::FRAC_PI_2, 1.0)),
            PropositionId::VIII,
            &tol(),
        )
        .unwrap();
        assert_eq!(v.viii_case, Some(ViiiCase::RightAcuteObtuse));
        let v = check_proposition(
            &tri(pole, leg(0.0, 2.0), leg(std::f64::consts::FRAC_PI_2, 2.2)),
            PropositionId::VIII,
            &tol(),
        )
        .unwrap();
        assert_eq!(v.viii_case, Some(ViiiCase::RightTwoObtuse));
        assert!(v.holds);
    }

    #[test]
    fn ids_round_trip() {
        for id in PropositionId::ALL {
            assert_eq!(id.to_string().parse::<PropositionId>().unwrap(), id);
            assert_eq!(PropositionId::for_species(id.species()), Some(id));
        }
        assert_eq!(PropositionId::for_species(0), None);
        assert_eq!(PropositionId::for_species(11), None);
    }
}
