//! Complete quadrilaterals (sector figures) in the plane and on the sphere.
//!
//! Labels follow one fixed figure: a convex quadrilateral `AGED` whose
//! opposite sides `AG`, `DE` are produced to meet at `B` and whose opposite
//! sides `GE`, `AD` are produced to meet at `C`, so the two appended
//! triangles `BEG` and `CED` share the corner `E`. The four carriers are
//!
//! | carrier | points    |
//! |---------|-----------|
//! | 0       | A, G, B   |
//! | 1       | A, D, C   |
//! | 2       | D, E, B   |
//! | 3       | G, E, C   |
//!
//! and the sector-figure identity reads `AG/BG = (AC/CD)·(DE/EB)`, with
//! lengths replaced by sines of arcs on the sphere.

mod planar;
mod spherical;

pub use planar::{
    build_planar, menelaus_planar, planar_labelings, Labeling, PlanarLine, PlanarPoint, PlanarQuadrilateral,
};
pub use spherical::{
    enumerate_sector_figures, enumerate_sector_figures_with, menelaus_spherical, SectorFigure, SphericalQuadrilateral,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sphere::SphereError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SectorError {
    #[error("configuration is not in general position: {0}")]
    NonGeneric(String),
    #[error("segment {0} has zero length")]
    DegenerateSegment(&'static str),
    #[error("figure does not lie in an open hemisphere")]
    NotConvex,
    #[error("line has zero normal (a = b = 0)")]
    ZeroNormal,
    #[error(transparent)]
    Sphere(#[from] SphereError),
}

/// The six labelled points of a sector figure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorPoints<P> {
    #[serde(rename = "A")]
    pub a: P,
    #[serde(rename = "B")]
    pub b: P,
    #[serde(rename = "C")]
    pub c: P,
    #[serde(rename = "D")]
    pub d: P,
    #[serde(rename = "E")]
    pub e: P,
    #[serde(rename = "G")]
    pub g: P,
}

impl<P> SectorPoints<P> {
    pub fn map<Q>(self, mut f: impl FnMut(P) -> Q) -> SectorPoints<Q> {
        SectorPoints { a: f(self.a), b: f(self.b), c: f(self.c), d: f(self.d), e: f(self.e), g: f(self.g) }
    }

    /// Points of each carrier, in the order of the table above.
    pub fn carrier_triples(&self) -> [[&P; 3]; 4] {
        [
            [&self.a, &self.g, &self.b],
            [&self.a, &self.d, &self.c],
            [&self.d, &self.e, &self.b],
            [&self.g, &self.e, &self.c],
        ]
    }

    /// The six segments of the identity as `(name, from, to)`.
    pub(crate) fn identity_segments(&self) -> [(&'static str, &P, &P); 6] {
        [
            ("AG", &self.a, &self.g),
            ("BG", &self.b, &self.g),
            ("AC", &self.a, &self.c),
            ("CD", &self.c, &self.d),
            ("DE", &self.d, &self.e),
            ("EB", &self.e, &self.b),
        ]
    }
}

/// Points plus the four carriers (lines or great circles) through them.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompleteQuadrilateral<P, L> {
    pub points: SectorPoints<P>,
    pub carriers: [L; 4],
}

/// Whether a report compares the ratios themselves or their squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RatioForm {
    Plain,
    Squared,
}

/// Both sides of the sector-figure identity and how far apart they are.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MenelausReport<T> {
    pub lhs: T,
    pub rhs: T,
    pub residual: T,
    pub tolerance: T,
    pub satisfied: bool,
    pub form: RatioForm,
}

impl<T: PartialOrd + Clone> MenelausReport<T> {
    pub(crate) fn new(lhs: T, rhs: T, residual: T, tolerance: T, form: RatioForm) -> Self {
        let satisfied = residual <= tolerance;
        Self { lhs, rhs, residual, tolerance, satisfied, form }
    }
}
