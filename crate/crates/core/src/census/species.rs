//! The ten species of triangles, by sides and by angles, and the five
//! types of intersection of three circles.

use serde::Serialize;

use super::{Census, CensusError};
use crate::scalar::{Real, Tolerances};
use crate::sphere::SphericalTriangle;

/// Position of an element relative to a quadrant (sides) or a right angle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Less,
    Equal,
    Greater,
}

impl Comparison {
    pub fn of<T: Real>(x: T, tol: T) -> Self {
        let d = x - T::FRAC_PI_2();
        if d.abs() <= tol {
            Self::Equal
        } else if d < T::zero() {
            Self::Less
        } else {
            Self::Greater
        }
    }
}

/// Counts `(equal, less, greater)` for species 1–10 of the side table.
const SIDE_TABLE: [(u8, u8, u8); 10] =
    [(3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 0, 2), (1, 1, 1), (0, 3, 0), (0, 1, 2), (0, 2, 1), (0, 0, 3)];

/// The angle table; it agrees with the side table except that its last
/// two rows are exchanged.
const ANGLE_TABLE: [(u8, u8, u8); 10] =
    [(3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 0, 2), (1, 1, 1), (0, 3, 0), (0, 1, 2), (0, 0, 3), (0, 2, 1)];

fn species<T: Real>(table: &[(u8, u8, u8); 10], values: [T; 3], tol: T) -> u8 {
    let mut counts = (0, 0, 0);
    for x in values {
        match Comparison::of(x, tol) {
            Comparison::Equal => counts.0 += 1,
            Comparison::Less => counts.1 += 1,
            Comparison::Greater => counts.2 += 1,
        }
    }
    let idx = table.iter().position(|&c| c == counts).expect("tables cover every count triple");
    idx as u8 + 1
}

pub fn classify_sides<T: Real>(tri: &SphericalTriangle<T>, quadrant_tolerance: T) -> u8 {
    species(&SIDE_TABLE, tri.sides(), quadrant_tolerance)
}

pub fn classify_angles<T: Real>(tri: &SphericalTriangle<T>, right_tolerance: T) -> u8 {
    species(&ANGLE_TABLE, tri.angles(), right_tolerance)
}

/// Side and angle species from raw elements, for triangles given by value.
pub(crate) fn species_of_values<T: Real>(sides: [T; 3], angles: [T; 3], tol: &Tolerances<T>) -> (u8, u8) {
    (species(&SIDE_TABLE, sides, tol.quadrant), species(&ANGLE_TABLE, angles, tol.right_angle))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpeciesReport<T> {
    pub side_species: u8,
    pub angle_species: u8,
    pub quadrant_tolerance: T,
    pub right_tolerance: T,
}

impl<T: Real> SpeciesReport<T> {
    pub fn of(tri: &SphericalTriangle<T>, tol: &Tolerances<T>) -> Self {
        Self::from_values(tri.sides(), tri.angles(), tol)
    }

    pub fn from_values(sides: [T; 3], angles: [T; 3], tol: &Tolerances<T>) -> Self {
        let (side_species, angle_species) = species_of_values(sides, angles, tol);
        Self { side_species, angle_species, quadrant_tolerance: tol.quadrant, right_tolerance: tol.right_angle }
    }
}

/// One of the five ways three circles can cut a hemisphere, with the
/// sorted species of its four triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionType {
    pub type_id: u8,
    pub member_species: [u8; 4],
}

/// Species multisets per intersection type, sides.
///
/// Within a hemisphere each triangle keeps one element of its neighbour
/// and supplements the other two, which fixes these rows.
const SIDE_TYPES: [[u8; 4]; 5] = [[1, 1, 1, 1], [2, 2, 3, 3], [4, 5, 6, 6], [7, 8, 8, 8], [9, 9, 9, 10]];

/// Species multisets per intersection type, angles (numbered by the angle table).
const ANGLE_TYPES: [[u8; 4]; 5] = [[1, 1, 1, 1], [2, 2, 3, 3], [4, 5, 6, 6], [7, 8, 8, 8], [9, 10, 10, 10]];

fn match_type(rows: &[[u8; 4]; 5], mut species: [u8; 4]) -> Result<IntersectionType, CensusError> {
    species.sort_unstable();
    rows.iter()
        .position(|r| *r == species)
        .map(|i| IntersectionType { type_id: i as u8 + 1, member_species: species })
        .ok_or(CensusError::UnclassifiableCensus(species))
}

/// Intersection type from the side species of the hemisphere's four triangles.
pub fn intersection_type<T: Real>(census: &Census<T>, quadrant_tolerance: T) -> Result<IntersectionType, CensusError> {
    match_type(&SIDE_TYPES, census.hemisphere().map(|i| classify_sides(census.triangle(i), quadrant_tolerance)))
}

/// Intersection type from the angle species of the hemisphere's four triangles.
pub fn angle_intersection_type<T: Real>(
    census: &Census<T>,
    right_tolerance: T,
) -> Result<IntersectionType, CensusError> {
    match_type(&ANGLE_TYPES, census.hemisphere().map(|i| classify_angles(census.triangle(i), right_tolerance)))
}
