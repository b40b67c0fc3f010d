//! The eight triangles cut out by three great circles.
//!
//! Triangle `t` is the region where `s_i (n_i · p) > 0` for the circle
//! poles `n_i`, with `s_i = -1` exactly when bit `i` of `t` is set. Its
//! vertex in slot `k` is the meeting point of circles `k+1` and `k+2`, so
//! side `k` lies on circle `k`. Triangle `7 - t` is its antipodal image,
//! and triangles `0, 2, 4, 6` fill the hemisphere on the pole side of
//! circle 0.

mod propositions;
mod species;

pub use propositions::{check_proposition, Claim, PropositionId, PropositionVerdict, ViiiCase};
pub use species::{
    angle_intersection_type, classify_angles, classify_sides, intersection_type, Comparison, IntersectionType,
    SpeciesReport,
};

use serde::Serialize;
use thiserror::Error;

use crate::scalar::Real;
use crate::sphere::{Arc, Elements, GreatCircle, SphereError, SpherePoint, SphericalTriangle, Vec3};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CensusError {
    #[error("circles are not in general position: {0}")]
    NonGeneric(String),
    #[error("triangles {0} and {1} share no vertex")]
    NotAdjacent(usize, usize),
    #[error("triangle index {0} is out of range")]
    BadIndex(usize),
    #[error("a triangle cannot be compared with itself")]
    SameTriangle,
    #[error("species multiset {0:?} matches no intersection type")]
    UnclassifiableCensus([u8; 4]),
    #[error("triangle of side species {species} does not satisfy the hypothesis of proposition {proposition}")]
    HypothesisNotMet { proposition: PropositionId, species: u8 },
    #[error(transparent)]
    Sphere(#[from] SphereError),
}

/// Three great circles in general position.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Real + Serialize"))]
pub struct CircleTriple<T> {
    circles: [GreatCircle<T>; 3],
    genericity_tolerance: T,
}

impl<T: Real> CircleTriple<T> {
    /// Rejects parallel or antiparallel poles and circles sharing a point,
    /// both judged against `genericity_tolerance`.
    pub fn new(circles: [GreatCircle<T>; 3], genericity_tolerance: T) -> Result<Self, CensusError> {
        for i in 0..3 {
            for j in i + 1..3 {
                if circles[i].same_circle(&circles[j], genericity_tolerance) {
                    return Err(CensusError::NonGeneric(format!("circles {i} and {j} coincide")));
                }
            }
        }
        let n = circles.map(|c| *c.pole().vector());
        if Vec3::triple(&n[0], &n[1], &n[2]).abs() <= genericity_tolerance {
            return Err(CensusError::NonGeneric("the three circles share a point".into()));
        }
        Ok(Self { circles, genericity_tolerance })
    }

    pub fn from_poles(poles: [SpherePoint<T>; 3]) -> Result<Self, CensusError> {
        Self::new(poles.map(GreatCircle::new), T::default_tolerances().degeneracy)
    }

    pub fn circles(&self) -> &[GreatCircle<T>; 3] {
        &self.circles
    }

    pub fn genericity_tolerance(&self) -> T {
        self.genericity_tolerance
    }
}

/// How a slot of one triangle relates to the same slot of another.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Equal,
    Supplementary,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Real + Serialize"))]
pub struct Census<T> {
    circles: CircleTriple<T>,
    vertices: [SpherePoint<T>; 6],
    arcs: Vec<Arc<T>>,
    triangles: [SphericalTriangle<T>; 8],
    signs: [[i8; 3]; 8],
    antipodal_pairs: [(usize, usize); 4],
}

fn signs_of(t: usize) -> [i8; 3] {
    std::array::from_fn(|i| if t >> i & 1 == 0 { 1 } else { -1 })
}

pub fn build_census<T: Real>(triple: &CircleTriple<T>) -> Result<Census<T>, CensusError> {
    let n = triple.circles.map(|c| *c.pole().vector());
    let orient = Vec3::triple(&n[0], &n[1], &n[2]).signum();
    // P_k = ±(n_{k+1} × n_{k+2}), signed so that n_k · P_k > 0.
    let mut poles = [SpherePoint::from_vector(n[1].cross(&n[2]) * orient)?; 3];
    for k in 1..3 {
        poles[k] = SpherePoint::from_vector(n[(k + 1) % 3].cross(&n[(k + 2) % 3]) * orient)?;
    }
    let vertices: [SpherePoint<T>; 6] =
        std::array::from_fn(|i| if i % 2 == 0 { poles[i / 2] } else { poles[i / 2].antipode() });
    let vertex = |k: usize, s: i8| vertices[2 * k + usize::from(s < 0)];

    let mut arcs = Vec::with_capacity(12);
    for k in 0..3 {
        for s in [1, -1] {
            for t in [1, -1] {
                arcs.push(Arc::new(vertex((k + 1) % 3, s), vertex((k + 2) % 3, t))?);
            }
        }
    }

    let signs: [[i8; 3]; 8] = std::array::from_fn(signs_of);
    let mut triangles = Vec::with_capacity(8);
    for s in &signs {
        triangles.push(SphericalTriangle::from_vertices(vertex(0, s[0]), vertex(1, s[1]), vertex(2, s[2]))?);
    }
    let triangles: [SphericalTriangle<T>; 8] = triangles.try_into().expect("eight triangles");

    let tol = triple.genericity_tolerance.max(T::default_tolerances().degeneracy);
    let mut antipodal_pairs = Vec::with_capacity(4);
    for i in 0..8 {
        let partner =
            (0..8).find(|&j| (0..3).all(|k| triangles[i].vertex(k).antipode().chord(triangles[j].vertex(k)) <= tol));
        match partner {
            Some(j) if i < j => antipodal_pairs.push((i, j)),
            Some(_) => {}
            None => return Err(CensusError::NonGeneric(format!("triangle {i} has no antipodal partner"))),
        }
    }
    let antipodal_pairs: [(usize, usize); 4] =
        antipodal_pairs.try_into().map_err(|_| CensusError::NonGeneric("antipodal pairing failed".into()))?;

    Ok(Census { circles: *triple, vertices, arcs, triangles, signs, antipodal_pairs })
}

impl<T: Real> Census<T> {
    pub fn circles(&self) -> &CircleTriple<T> {
        &self.circles
    }

    pub fn vertices(&self) -> &[SpherePoint<T>; 6] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[Arc<T>] {
        &self.arcs
    }

    pub fn triangles(&self) -> &[SphericalTriangle<T>; 8] {
        &self.triangles
    }

    pub fn triangle(&self, i: usize) -> &SphericalTriangle<T> {
        &self.triangles[i]
    }

    /// Side of each circle that triangle `i` lies on.
    pub fn signs(&self, i: usize) -> [i8; 3] {
        self.signs[i]
    }

    pub fn antipodal_pairs(&self) -> &[(usize, usize); 4] {
        &self.antipodal_pairs
    }

    /// One triangle from each antipodal pair, all in the same hemisphere.
    pub fn hemisphere(&self) -> [usize; 4] {
        [0, 2, 4, 6]
    }

    /// Vertices, arcs, triangles and triangle corners.
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        (self.vertices.len(), self.arcs.len(), self.triangles.len(), 3 * self.triangles.len())
    }

    pub fn elements(&self, i: usize) -> Elements<T> {
        Elements::of(&self.triangles[i])
    }

    /// Slotwise relation between triangles `i` and `j`, which must share at
    /// least one vertex.
    ///
    /// Triangles that differ across one circle share the side on it; those
    /// that differ across two share a vertex. Either way the shared slot is
    /// equal and the other two slots are supplementary, for sides and
    /// angles alike.
    pub fn relation(&self, i: usize, j: usize) -> Result<[Relation; 3], CensusError> {
        for k in [i, j] {
            if k >= 8 {
                return Err(CensusError::BadIndex(k));
            }
        }
        let flipped = std::array::from_fn::<bool, 3, _>(|m| self.signs[i][m] != self.signs[j][m]);
        let count = flipped.iter().filter(|&&f| f).count();
        match count {
            0 => Err(CensusError::SameTriangle),
            3 => Err(CensusError::NotAdjacent(i, j)),
            _ => Ok(flipped.map(|f| if f ^ (count % 2 == 1) { Relation::Supplementary } else { Relation::Equal })),
        }
    }

    /// Largest violation of the supplement relations between `i` and `j`.
    pub fn supplement_deviation(&self, i: usize, j: usize) -> Result<T, CensusError> {
        let rel = self.relation(i, j)?;
        let predicted = apply(&self.elements(i), &rel);
        Ok(predicted.max_deviation(&self.elements(j)))
    }

    /// Elements of all eight triangles reconstructed from those of `from`
    /// alone, through the supplement relations.
    pub fn propagate(&self, from: usize, known: &Elements<T>) -> Result<[Elements<T>; 8], CensusError> {
        if from >= 8 {
            return Err(CensusError::BadIndex(from));
        }
        let mut out = [*known; 8];
        for (j, slot) in out.iter_mut().enumerate() {
            if j == from {
                continue;
            }
            *slot = match self.relation(from, j) {
                Ok(rel) => apply(known, &rel),
                // The antipodal image has the same elements slot for slot.
                Err(CensusError::NotAdjacent(..)) => *known,
                Err(e) => return Err(e),
            };
        }
        Ok(out)
    }
}

fn apply<T: Real>(e: &Elements<T>, rel: &[Relation; 3]) -> Elements<T> {
    let f = |x: T, r: Relation| match r {
        Relation::Equal => x,
        Relation::Supplementary => T::PI() - x,
    };
    Elements {
        sides: std::array::from_fn(|k| f(e.sides[k], rel[k])),
        angles: std::array::from_fn(|k| f(e.angles[k], rel[k])),
    }
}

/// Whether triangles `i` and `j` satisfy the supplement relations within
/// the identity-level tolerance `tol`.
pub fn supplement_check<T: Real>(census: &Census<T>, i: usize, j: usize, tol: T) -> Result<bool, CensusError> {
    Ok(census.supplement_deviation(i, j)? <= tol)
}
