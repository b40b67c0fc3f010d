//! Complete spherical quadrilaterals and the figures cut out by four great circles.

use serde::Serialize;

use super::{CompleteQuadrilateral, MenelausReport, RatioForm, SectorError, SectorPoints};
use crate::scalar::{Real, Tolerances};
use crate::sphere::{arc_sine, open_hemisphere_pole, GreatCircle, SpherePoint};

pub type SphericalQuadrilateral<T> = CompleteQuadrilateral<SpherePoint<T>, GreatCircle<T>>;

impl<T: Real> SphericalQuadrilateral<T> {
    /// A figure from explicit points, with carriers through the first two
    /// points of each incidence triple.
    pub fn from_points(points: SectorPoints<SpherePoint<T>>) -> Result<Self, SectorError> {
        let carriers = [
            GreatCircle::through(&points.a, &points.g)?,
            GreatCircle::through(&points.a, &points.d)?,
            GreatCircle::through(&points.d, &points.e)?,
            GreatCircle::through(&points.g, &points.e)?,
        ];
        Ok(Self { points, carriers })
    }

    pub fn is_incident(&self, tol: T) -> bool {
        self.points
            .carrier_triples()
            .iter()
            .zip(&self.carriers)
            .all(|(triple, circle)| triple.iter().all(|p| circle.contains(p, tol)))
    }

    /// Margin of the best open hemisphere containing all six points, if any.
    pub fn hemisphere_margin(&self) -> Option<T> {
        open_hemisphere_pole(&self.point_list(), T::zero()).map(|(_, m)| m)
    }

    pub fn antipodal(&self) -> Self {
        Self { points: self.points.map(|p| p.antipode()), carriers: self.carriers.map(|c| c.reversed()) }
    }

    pub fn menelaus(&self, tol: T) -> Result<MenelausReport<T>, SectorError> {
        menelaus_spherical(&self.points, tol)
    }

    fn point_list(&self) -> [SpherePoint<T>; 6] {
        let p = &self.points;
        [p.a, p.b, p.c, p.d, p.e, p.g]
    }
}

/// Evaluates `sin AG / sin BG = (sin AC / sin CD)·(sin DE / sin EB)`.
///
/// Sines are taken as `|p × q|`, which keeps full relative precision for
/// short arcs.
pub fn menelaus_spherical<T: Real>(
    points: &SectorPoints<SpherePoint<T>>,
    tol: T,
) -> Result<MenelausReport<T>, SectorError> {
    let floor = T::default_tolerances().degeneracy;
    let mut s = [T::zero(); 6];
    for (slot, (name, p, q)) in s.iter_mut().zip(points.identity_segments()) {
        *slot = arc_sine(p, q);
        if *slot <= floor {
            return Err(SectorError::DegenerateSegment(name));
        }
    }
    let [ag, bg, ac, cd, de, eb] = s;
    let lhs = ag / bg;
    let rhs = (ac / cd) * (de / eb);
    Ok(MenelausReport::new(lhs, rhs, (lhs - rhs).abs(), tol, RatioForm::Plain))
}

/// One of the 24 sector figures of four great circles.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Real + Serialize"))]
pub struct SectorFigure<T> {
    pub quadrilateral: SphericalQuadrilateral<T>,
    /// Side of each input circle the quadrilateral face lies on.
    pub face: [i8; 4],
    /// Input circles meeting at the corner `E`.
    pub corner: (usize, usize),
    /// Input circle playing each carrier role.
    pub roles: [usize; 4],
    /// Antipodal equivalence class, in `0..12`.
    pub class: usize,
}

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn check_generic<T: Real>(circles: &[GreatCircle<T>; 4], tol: &Tolerances<T>) -> Result<(), SectorError> {
    for &(i, j) in &PAIRS {
        if circles[i].same_circle(&circles[j], tol.degeneracy) {
            return Err(SectorError::NonGeneric(format!("circles {i} and {j} coincide")));
        }
    }
    for &(i, j) in &PAIRS {
        let p = meet(circles, i, j);
        for k in (0..4).filter(|&k| k != i && k != j) {
            if circles[k].contains(&p, tol.degeneracy) {
                return Err(SectorError::NonGeneric(format!("circles {i}, {j} and {k} share a point")));
            }
        }
    }
    Ok(())
}

fn meet<T: Real>(circles: &[GreatCircle<T>; 4], i: usize, j: usize) -> SpherePoint<T> {
    SpherePoint::from_vector(circles[i].pole().vector().cross(circles[j].pole().vector()))
        .expect("distinct circles meet")
}

fn shared(p: (usize, usize), q: (usize, usize)) -> Option<usize> {
    [p.0, p.1].into_iter().find(|&k| k == q.0 || k == q.1)
}

fn other(p: (usize, usize), k: usize) -> usize {
    if p.0 == k {
        p.1
    } else {
        p.0
    }
}

/// Enumerates every sector figure of four great circles in general position.
///
/// The circles cut the sphere into six quadrilaterals and eight triangles.
/// Each quadrilateral, taken with a corner `E`, extends to one complete
/// quadrilateral, giving 24 figures; a figure and its antipodal image share
/// a `class`, so there are 12 classes. Output order is deterministic.
pub fn enumerate_sector_figures<T: Real>(circles: &[GreatCircle<T>; 4]) -> Result<Vec<SectorFigure<T>>, SectorError> {
    enumerate_sector_figures_with(circles, &T::default_tolerances())
}

pub fn enumerate_sector_figures_with<T: Real>(
    circles: &[GreatCircle<T>; 4],
    tol: &Tolerances<T>,
) -> Result<Vec<SectorFigure<T>>, SectorError> {
    check_generic(circles, tol)?;
    let vertices: Vec<((usize, usize), i8, SpherePoint<T>)> = PAIRS
        .iter()
        .flat_map(|&ij| {
            let p = meet(circles, ij.0, ij.1);
            [(ij, 1, p), (ij, -1, p.antipode())]
        })
        .collect();
    let on_side = |s: &[i8; 4], k: usize, p: &SpherePoint<T>| T::from_i8(s[k]).unwrap() * circles[k].side(p);

    let mut figures = Vec::with_capacity(24);
    let mut keys = Vec::with_capacity(24);
    for bits in 0..16u8 {
        let face: [i8; 4] = std::array::from_fn(|k| if bits >> (3 - k) & 1 == 0 { 1 } else { -1 });
        let corners: Vec<_> = vertices
            .iter()
            .filter(|(ij, _, p)| (0..4).filter(|&k| k != ij.0 && k != ij.1).all(|k| on_side(&face, k, p) > T::zero()))
            .collect();
        if corners.len() != 4 {
            continue;
        }
        for &&(eij, esign, e) in &corners {
            // Neighbours of E share one circle with it; G is across the lower-indexed one.
            let mut nb: Vec<_> =
                corners.iter().filter(|c| c.0 != eij).filter_map(|c| shared(c.0, eij).map(|k| (k, c.0, c.2))).collect();
            nb.sort_by_key(|(k, _, _)| *k);
            let &&(aij, _, a) = corners.iter().find(|c| shared(c.0, eij).is_none()).expect("opposite corner");
            let [(l4, gij, g), (l3, dij, d)] = [nb[0], nb[1]];
            let l1 = other(gij, l4);
            let l2 = other(dij, l3);
            debug_assert!(aij == (l1.min(l2), l1.max(l2)));
            let b = meet(circles, l1, l3);
            let b = if on_side(&face, l4, &b) < T::zero() { b } else { b.antipode() };
            let c = meet(circles, l2, l4);
            let c = if on_side(&face, l3, &c) < T::zero() { c } else { c.antipode() };
            let roles = [l1, l2, l3, l4];
            let quadrilateral = CompleteQuadrilateral {
                points: SectorPoints { a, b, c, d, e, g },
                carriers: roles.map(|k| circles[k]),
            };
            if quadrilateral.hemisphere_margin().is_none() {
                return Err(SectorError::NotConvex);
            }
            let s0 = face[0];
            keys.push((face.map(|s| s * s0), eij, esign * s0));
            figures.push(SectorFigure { quadrilateral, face, corner: eij, roles, class: 0 });
        }
    }
    let mut distinct = keys.clone();
    distinct.sort();
    distinct.dedup();
    for (f, k) in figures.iter_mut().zip(&keys) {
        f.class = distinct.binary_search(k).expect("key present");
    }
    Ok(figures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::Vec3;

    fn circle(x: f64, y: f64, z: f64) -> GreatCircle<f64> {
        GreatCircle::from_normal(Vec3::new(x, y, z)).unwrap()
    }

    fn coordinate_config() -> [GreatCircle<f64>; 4] {
        [circle(0., 0., 1.), circle(0., 1., 0.), circle(1., 0., 0.), circle(1., 1., 1.)]
    }

    #[test]
    fn coordinate_circles_and_transversal() {
        let figs = enumerate_sector_figures(&coordinate_config()).unwrap();
        assert_eq!(figs.len(), 24);
        let mut classes: Vec<_> = figs.iter().map(|f| f.class).collect();
        classes.sort();
        classes.dedup();
        assert_eq!(classes, (0..12).collect::<Vec<_>>());
        for f in &figs {
            let q = &f.quadrilateral;
            assert!(q.is_incident(1e-12));
            assert!(q.hemisphere_margin().unwrap() > 0.0);
            let r = q.menelaus(1e-10).unwrap();
            assert!(r.satisfied, "{r:?}");
        }
        // The transversal's pole is equidistant from the octant vertices.
        let unit = figs
            .iter()
            .filter(|f| {
                let r = f.quadrilateral.menelaus(1e-10).unwrap();
                (r.lhs - 1.0).abs() < 1e-12 && (r.rhs - 1.0).abs() < 1e-12
            })
            .count();
        assert!(unit > 0);
    }

    #[test]
    fn four_figures_per_quadrilateral_and_two_per_class() {
        let figs = enumerate_sector_figures(&coordinate_config()).unwrap();
        let mut faces: Vec<_> = figs.iter().map(|f| f.face).collect();
        faces.dedup();
        assert_eq!(faces.len(), 6);
        for face in faces {
            assert_eq!(figs.iter().filter(|f| f.face == face).count(), 4);
        }
        for class in 0..12 {
            let members: Vec<_> = figs.iter().filter(|f| f.class == class).collect();
            assert_eq!(members.len(), 2);
            let anti = members[0].quadrilateral.antipodal();
            let pts = members[1].quadrilateral.points;
            for (p, q) in [(anti.points.a, pts.a), (anti.points.e, pts.e), (anti.points.b, pts.b)] {
                assert!(p.chord(&q) < 1e-12);
            }
        }
    }

    #[test]
    fn antipodal_figure_has_same_ratios() {
        for f in enumerate_sector_figures(&coordinate_config()).unwrap() {
            let r1 = f.quadrilateral.menelaus(1e-10).unwrap();
            let r2 = f.quadrilateral.antipodal().menelaus(1e-10).unwrap();
            assert!((r1.lhs - r2.lhs).abs() < 1e-12);
            assert!((r1.rhs - r2.rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn perturbing_e_breaks_the_identity() {
        let fig = &enumerate_sector_figures(&coordinate_config()).unwrap()[0];
        let mut pts = fig.quadrilateral.points;
        let carrier = fig.quadrilateral.carriers[2];
        let moved = *pts.e.vector() + *carrier.pole().vector() * 1e-3;
        pts.e = SpherePoint::from_vector(moved).unwrap();
        let r = menelaus_spherical(&pts, 1e-10).unwrap();
        assert!(!r.satisfied);
    }

    #[test]
    fn from_points_recovers_carriers() {
        let fig = &enumerate_sector_figures(&coordinate_config()).unwrap()[5];
        let rebuilt = SphericalQuadrilateral::from_points(fig.quadrilateral.points).unwrap();
        assert!(rebuilt.is_incident(1e-12));
        for (a, b) in rebuilt.carriers.iter().zip(&fig.quadrilateral.carriers) {
            assert!(a.same_circle(b, 1e-12));
        }
    }

    #[test]
    fn non_generic_configurations() {
        let same = [circle(0., 0., 1.), circle(0., 1., 0.), circle(1., 0., 0.), circle(0., 0., -1.)];
        assert!(matches!(enumerate_sector_figures(&same), Err(SectorError::NonGeneric(_))));
        // Three meridians share the poles of the equator.
        let concurrent = [circle(0., 0., 1.), circle(0., 1., 0.), circle(1., 0., 0.), circle(1., 1., 0.)];
        assert!(matches!(enumerate_sector_figures(&concurrent), Err(SectorError::NonGeneric(_))));
    }

    #[test]
    fn degenerate_segment() {
        let figs = enumerate_sector_figures(&coordinate_config()).unwrap();
        let mut pts = figs[0].quadrilateral.points;
        pts.g = pts.a;
        assert_eq!(menelaus_spherical(&pts, 1e-10), Err(SectorError::DegenerateSegment("AG")));
    }

    #[test]
    fn single_precision() {
        let cfg = coordinate_config().map(|c| {
            let [x, y, z] = c.pole().coords();
            GreatCircle::from_normal(Vec3::new(x as f32, y as f32, z as f32)).unwrap()
        });
        let figs = enumerate_sector_figures(&cfg).unwrap();
        assert_eq!(figs.len(), 24);
        for f in figs {
            assert!(f.quadrilateral.menelaus(1e-4).unwrap().satisfied);
        }
    }
}
