//! The sector figure of four lines in the plane, in exact arithmetic.

use serde::{Deserialize, Serialize};

use super::{CompleteQuadrilateral, MenelausReport, RatioForm, SectorError, SectorPoints};
use crate::scalar::ExactField;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarPoint<T> {
    pub x: T,
    pub y: T,
}

impl<T: ExactField> PlanarPoint<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn distance_squared(&self, o: &Self) -> T {
        let dx = self.x.clone() - o.x.clone();
        let dy = self.y.clone() - o.y.clone();
        dx.clone() * dx + dy.clone() * dy
    }
}

/// The line `a·x + b·y = c`, scaled so its leading non-zero coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarLine<T> {
    a: T,
    b: T,
    c: T,
}

impl<T: ExactField> PlanarLine<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self, SectorError> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(SectorError::ZeroNormal);
        };
        Ok(Self { a: a / lead.clone(), b: b / lead.clone(), c: c / lead })
    }

    /// The line through two distinct points.
    pub fn through(p: &PlanarPoint<T>, q: &PlanarPoint<T>) -> Result<Self, SectorError> {
        let a = q.y.clone() - p.y.clone();
        let b = p.x.clone() - q.x.clone();
        let c = a.clone() * p.x.clone() + b.clone() * p.y.clone();
        Self::new(a, b, c)
    }

    pub fn coefficients(&self) -> (&T, &T, &T) {
        (&self.a, &self.b, &self.c)
    }

    pub fn contains(&self, p: &PlanarPoint<T>) -> bool {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() == self.c
    }

    pub fn is_parallel(&self, o: &Self) -> bool {
        (self.a.clone() * o.b.clone() - o.a.clone() * self.b.clone()).is_zero()
    }

    /// Unique common point, or `None` for parallel or equal lines.
    pub fn intersect(&self, o: &Self) -> Option<PlanarPoint<T>> {
        let det = self.a.clone() * o.b.clone() - o.a.clone() * self.b.clone();
        if det.is_zero() {
            return None;
        }
        let x = (self.c.clone() * o.b.clone() - o.c.clone() * self.b.clone()) / det.clone();
        let y = (self.a.clone() * o.c.clone() - o.a.clone() * self.c.clone()) / det;
        Some(PlanarPoint::new(x, y))
    }
}

pub type PlanarQuadrilateral<T> = CompleteQuadrilateral<PlanarPoint<T>, PlanarLine<T>>;

/// A figure with the input line playing each carrier role.
pub type Labeling<T> = (PlanarQuadrilateral<T>, [usize; 4]);

/// Strict betweenness of collinear points: `q` lies inside segment `pr`.
fn strictly_between<T: ExactField>(p: &PlanarPoint<T>, q: &PlanarPoint<T>, r: &PlanarPoint<T>) -> bool {
    let dot = (q.x.clone() - p.x.clone()) * (r.x.clone() - q.x.clone())
        + (q.y.clone() - p.y.clone()) * (r.y.clone() - q.y.clone());
    dot > T::zero()
}

fn check_generic<T: ExactField>(lines: &[PlanarLine<T>; 4]) -> Result<(), SectorError> {
    for i in 0..4 {
        for j in i + 1..4 {
            if lines[i].is_parallel(&lines[j]) {
                return Err(SectorError::NonGeneric(format!("lines {i} and {j} are parallel")));
            }
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let p = lines[i].intersect(&lines[j]).expect("non-parallel");
            for (k, line) in lines.iter().enumerate().skip(j + 1) {
                if line.contains(&p) {
                    return Err(SectorError::NonGeneric(format!("lines {i}, {j} and {k} are concurrent")));
                }
            }
        }
    }
    Ok(())
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    if a != b && a != c && a != d && b != c && b != d && c != d {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Every assignment of the four lines to the carrier roles that produces a
/// convex quadrilateral `AGED` with its two appended triangles, in
/// lexicographic order of the role assignment. Generic input yields two,
/// which differ by exchanging the roles of `G` and `D`.
pub fn planar_labelings<T: ExactField>(lines: &[PlanarLine<T>; 4]) -> Result<Vec<Labeling<T>>, SectorError> {
    check_generic(lines)?;
    let meet = |i: usize, j: usize| lines[i].intersect(&lines[j]).expect("generic lines meet");
    let mut out = Vec::new();
    for roles in permutations4() {
        let [l1, l2, l3, l4] = roles;
        let points = SectorPoints {
            a: meet(l1, l2),
            b: meet(l1, l3),
            c: meet(l2, l4),
            d: meet(l2, l3),
            e: meet(l3, l4),
            g: meet(l1, l4),
        };
        let convex = strictly_between(&points.a, &points.g, &points.b)
            && strictly_between(&points.a, &points.d, &points.c)
            && strictly_between(&points.d, &points.e, &points.b)
            && strictly_between(&points.g, &points.e, &points.c);
        if convex {
            let carriers = roles.map(|i| lines[i].clone());
            out.push((CompleteQuadrilateral { points, carriers }, roles));
        }
    }
    Ok(out)
}

/// The complete quadrilateral of four lines in general position, labelled
/// by the first valid role assignment in lexicographic order.
pub fn build_planar<T: ExactField>(lines: &[PlanarLine<T>; 4]) -> Result<PlanarQuadrilateral<T>, SectorError> {
    planar_labelings(lines)?
        .into_iter()
        .next()
        .map(|(q, _)| q)
        .ok_or_else(|| SectorError::NonGeneric("no convex quadrilateral among the lines".into()))
}

impl<T: ExactField> PlanarQuadrilateral<T> {
    /// A figure from explicit points, with carriers through the first two
    /// points of each incidence triple. The third points are not forced
    /// onto their carriers; [`Self::is_incident`] reports whether they are.
    pub fn from_points(points: SectorPoints<PlanarPoint<T>>) -> Result<Self, SectorError> {
        let carriers = [
            PlanarLine::through(&points.a, &points.g)?,
            PlanarLine::through(&points.a, &points.d)?,
            PlanarLine::through(&points.d, &points.e)?,
            PlanarLine::through(&points.g, &points.e)?,
        ];
        Ok(Self { points, carriers })
    }

    pub fn is_incident(&self) -> bool {
        self.points
            .carrier_triples()
            .iter()
            .zip(&self.carriers)
            .all(|(triple, line)| triple.iter().all(|p| line.contains(p)))
    }

    pub fn menelaus(&self) -> Result<MenelausReport<T>, SectorError> {
        menelaus_planar(&self.points)
    }
}

/// Evaluates `AG/BG = (AC/CD)·(DE/EB)` on squared lengths, so the check is
/// exact: `lhs = AG²/BG²`, `rhs = (AC²/CD²)·(DE²/EB²)` and the identity
/// holds exactly when the residual is zero.
pub fn menelaus_planar<T: ExactField>(points: &SectorPoints<PlanarPoint<T>>) -> Result<MenelausReport<T>, SectorError> {
    let mut sq = Vec::with_capacity(6);
    for (name, p, q) in points.identity_segments() {
        let d = p.distance_squared(q);
        if d.is_zero() {
            return Err(SectorError::DegenerateSegment(name));
        }
        sq.push(d);
    }
    let [ag, bg, ac, cd, de, eb]: [T; 6] = sq.try_into().expect("six segments");
    let lhs = ag / bg;
    let rhs = (ac / cd) * (de / eb);
    let residual = (lhs.clone() - rhs.clone()).abs();
    Ok(MenelausReport::new(lhs, rhs, residual, T::zero(), RatioForm::Squared))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn qr(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn line(a: i64, b: i64, c: i64) -> PlanarLine<Q> {
        PlanarLine::new(q(a), q(b), q(c)).unwrap()
    }

    fn pt(x: Q, y: Q) -> PlanarPoint<Q> {
        PlanarPoint::new(x, y)
    }

    #[test]
    fn line_normalisation() {
        let l = line(-2, 4, 6);
        assert_eq!(l.coefficients(), (&q(1), &q(-2), &q(-3)));
        assert_eq!(line(0, -3, 6).coefficients(), (&q(0), &q(1), &q(-2)));
        assert_eq!(PlanarLine::new(q(0), q(0), q(1)), Err(SectorError::ZeroNormal));
    }

    #[test]
    fn worked_example_from_a_drawn_figure() {
        // A(0,0) G(2,0) E(3/2,1) D(0,2); AG, DE meet at B(3,0); GE, AD at C(0,4).
        let lines = [line(2, 1, 4), line(0, 1, 0), line(2, 3, 6), line(1, 0, 0)];
        let labelings = planar_labelings(&lines).unwrap();
        assert_eq!(labelings.len(), 2);
        let expect = SectorPoints {
            a: pt(q(0), q(0)),
            b: pt(q(3), q(0)),
            c: pt(q(0), q(4)),
            d: pt(q(0), q(2)),
            e: pt(qr(3, 2), q(1)),
            g: pt(q(2), q(0)),
        };
        // The other labelling swaps G with D and B with C.
        let swapped = SectorPoints {
            g: expect.d.clone(),
            d: expect.g.clone(),
            b: expect.c.clone(),
            c: expect.b.clone(),
            ..expect.clone()
        };
        let got: Vec<_> = labelings.iter().map(|(f, _)| f.points.clone()).collect();
        assert!(got.contains(&expect));
        assert!(got.contains(&swapped));
        // lexicographically first role assignment wins
        assert_eq!(build_planar(&lines).unwrap(), labelings[0].0);
    }

    #[test]
    fn residual_is_exactly_zero() {
        let lines = [line(1, 0, 0), line(0, 1, 0), line(1, 1, 1), line(1, 2, 3)];
        let fig = build_planar(&lines).unwrap();
        assert!(fig.is_incident());
        let pts = &fig.points;
        let all = [&pts.a, &pts.b, &pts.c, &pts.d, &pts.e, &pts.g];
        for i in 0..6 {
            for j in i + 1..6 {
                assert_ne!(all[i], all[j]);
            }
        }
        let r = fig.menelaus().unwrap();
        assert_eq!(r.residual, q(0));
        assert!(r.satisfied);
        assert_eq!(r.form, RatioForm::Squared);
    }

    #[test]
    fn mirror_symmetric_figure_has_unit_ratios() {
        // y = 1 ± x and y = 3 ± 3x, symmetric about x = 0.
        let lines = [line(-1, 1, 1), line(1, 1, 1), line(-3, 1, 3), line(3, 1, 3)];
        let fig = build_planar(&lines).unwrap();
        let r = fig.menelaus().unwrap();
        assert_eq!(r.lhs, q(1));
        assert_eq!(r.rhs, q(1));
        assert_eq!(fig.points.e, pt(q(0), q(1)));
        assert_eq!(fig.points.a, pt(q(0), q(3)));
    }

    #[test]
    fn moving_d_off_its_carrier_breaks_the_identity() {
        let lines = [line(-1, 1, 1), line(1, 1, 1), line(-3, 1, 3), line(3, 1, 3)];
        let mut pts = build_planar(&lines).unwrap().points;
        pts.d.y = pts.d.y.clone() + qr(1, 1000);
        let r = menelaus_planar(&pts).unwrap();
        assert!(!r.satisfied);
        assert!(r.residual > q(0));
        let fig = PlanarQuadrilateral::from_points(pts).unwrap();
        assert!(!fig.is_incident());
    }

    #[test]
    fn non_generic_inputs() {
        let parallel = [line(1, 0, 0), line(0, 1, 0), line(1, 1, 1), line(1, 1, 2)];
        assert!(matches!(build_planar(&parallel), Err(SectorError::NonGeneric(_))));
        let concurrent = [line(1, 0, 0), line(0, 1, 0), line(1, 1, 0), line(1, 2, 3)];
        assert!(matches!(build_planar(&concurrent), Err(SectorError::NonGeneric(_))));
    }

    #[test]
    fn degenerate_segment() {
        let p = pt(q(0), q(0));
        let pts = SectorPoints {
            a: p.clone(),
            b: pt(q(1), q(0)),
            c: pt(q(0), q(1)),
            d: pt(q(0), q(2)),
            e: pt(q(1), q(1)),
            g: p,
        };
        assert_eq!(menelaus_planar(&pts), Err(SectorError::DegenerateSegment("AG")));
    }

    #[test]
    fn works_over_machine_rationals() {
        use num_rational::Rational64;
        let l = |a: i64, b: i64, c: i64| {
            PlanarLine::new(Rational64::from(a), Rational64::from(b), Rational64::from(c)).unwrap()
        };
        let fig = build_planar(&[l(1, 0, 0), l(0, 1, 0), l(1, 1, 1), l(1, 2, 3)]).unwrap();
        assert!(fig.menelaus().unwrap().satisfied);
    }
}
