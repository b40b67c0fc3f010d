//! Recovering a triangle from three of its elements.
//!
//! Side-heavy cases are solved by dropping a perpendicular and working in
//! the two right triangles it creates; angle-heavy cases are handed to the
//! polar triangle, which turns angles into sides.

use serde::{Deserialize, Serialize};

use super::TrigError;
use crate::scalar::{Real, Tolerances};
use crate::sphere::Elements;

/// A triangle with some elements unknown. Slot `k` holds side `k` and the
/// angle opposite it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TriangleElements<T> {
    pub sides: [Option<T>; 3],
    pub angles: [Option<T>; 3],
}

impl<T: Real> TriangleElements<T> {
    pub fn known_count(&self) -> usize {
        self.sides.iter().chain(&self.angles).filter(|x| x.is_some()).count()
    }

    pub fn complete(&self) -> Option<Elements<T>> {
        let sides = [self.sides[0]?, self.sides[1]?, self.sides[2]?];
        let angles = [self.angles[0]?, self.angles[1]?, self.angles[2]?];
        Some(Elements { sides, angles })
    }

    fn polar(&self) -> Self {
        let f = |x: Option<T>| x.map(|v| T::PI() - v);
        Self { sides: self.angles.map(f), angles: self.sides.map(f) }
    }
}

impl<T: Real> From<Elements<T>> for TriangleElements<T> {
    fn from(e: Elements<T>) -> Self {
        Self { sides: e.sides.map(Some), angles: e.angles.map(Some) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CaseKind {
    Aaa,
    Sss,
    Asa,
    Sas,
    Aas,
    Ssa,
}

impl CaseKind {
    fn polar(self) -> Self {
        match self {
            Self::Aaa => Self::Sss,
            Self::Sss => Self::Aaa,
            Self::Asa => Self::Sas,
            Self::Sas => Self::Asa,
            Self::Aas => Self::Ssa,
            Self::Ssa => Self::Aas,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SolveRequest<T> {
    elements: TriangleElements<T>,
    case_kind: CaseKind,
}

impl<T: Real> SolveRequest<T> {
    /// Accepts exactly three known elements, each in `(0, π)`.
    pub fn new(elements: TriangleElements<T>) -> Result<Self, TrigError> {
        let n = elements.known_count();
        if n != 3 {
            return Err(TrigError::InconsistentInput(format!("{n} elements given, 3 required")));
        }
        for x in elements.sides.iter().chain(&elements.angles).flatten() {
            if !x.is_finite() || *x <= T::zero() || *x >= T::PI() {
                return Err(TrigError::DomainError(format!("{x} is not in (0, π)")));
            }
        }
        let case_kind = classify(&elements);
        Ok(Self { elements, case_kind })
    }

    pub fn elements(&self) -> &TriangleElements<T> {
        &self.elements
    }

    pub fn case_kind(&self) -> CaseKind {
        self.case_kind
    }
}

fn classify<T: Real>(e: &TriangleElements<T>) -> CaseKind {
    let sides: Vec<usize> = (0..3).filter(|&i| e.sides[i].is_some()).collect();
    let angles: Vec<usize> = (0..3).filter(|&i| e.angles[i].is_some()).collect();
    match (sides.len(), angles.len()) {
        (3, _) => CaseKind::Sss,
        (0, _) => CaseKind::Aaa,
        (2, _) if sides.contains(&angles[0]) => CaseKind::Ssa,
        (2, _) => CaseKind::Sas,
        (_, _) if angles.contains(&sides[0]) => CaseKind::Aas,
        _ => CaseKind::Asa,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolveResult<T> {
    pub case_kind: CaseKind,
    pub solutions: Vec<Elements<T>>,
    pub ambiguity_note: Option<String>,
}

/// Sides `c` and angles `A`, `B` from sides `a`, `b` and the angle `C`
/// between them.
///
/// The perpendicular from `A` meets side `a` at the foot `H` with
/// `CH = x`, `AH = h`; then `HB = a - x` and the right triangle `AHB`
/// gives `c` and `B`.
fn sas<T: Real>(a: T, angle_c: T, b: T) -> (T, T, T) {
    let (c, angle_b) = sas_half(a, angle_c, b);
    let (_, angle_a) = sas_half(b, angle_c, a);
    (c, angle_a, angle_b)
}

fn sas_half<T: Real>(a: T, angle_c: T, b: T) -> (T, T) {
    let (sb, cb) = b.sin_cos();
    let (sc, cc) = angle_c.sin_cos();
    let sh = sb * sc;
    let ch = (cb * cb + sb * sb * cc * cc).sqrt();
    let x = (sb * cc).atan2(cb);
    let (sd, cd) = (a - x).sin_cos();
    let c = (sh * sh + ch * ch * sd * sd).sqrt().atan2(ch * cd);
    let angle_b = sh.atan2(ch * sd);
    (c, angle_b)
}

/// Angle opposite `a` from three sides, via the perpendicular from the
/// vertex between `a` and `b` onto side `c`.
fn sss_angle<T: Real>(a: T, b: T, c: T) -> T {
    // With foot H on c at AH = x: cos h sin x = q and cos h cos x = cos b.
    let q = (a.cos() - b.cos() * c.cos()) / c.sin();
    let sb = b.sin();
    (sb * sb - q * q).max(T::zero()).sqrt().atan2(q)
}

fn sss<T: Real>(s: [T; 3]) -> Result<[T; 3], TrigError> {
    let sum = s[0] + s[1] + s[2];
    if sum >= T::PI() + T::PI() {
        return Err(TrigError::NoSolution("sides sum to at least a full circle".into()));
    }
    for (i, &x) in s.iter().enumerate() {
        if x >= sum - x {
            return Err(TrigError::NoSolution(format!("side {i} is not shorter than the other two together")));
        }
    }
    Ok(std::array::from_fn(|i| sss_angle(s[i], s[(i + 1) % 3], s[(i + 2) % 3])))
}

/// Triangles with sides `a`, `b` and angle `A` opposite `a`, as `(B, c, C)`.
///
/// The perpendicular from `C` onto side `c` has length `h` with
/// `sin h = sin b sin A`, and splits `c` and `C` into the parts `x1, C1`
/// beside `A` and `x2, C2` beside `B`.
fn ssa<T: Real>(a: T, b: T, angle_a: T, tol: &Tolerances<T>) -> Result<Vec<(T, T, T)>, TrigError> {
    let (sb, cb) = b.sin_cos();
    let (s_a, c_a) = angle_a.sin_cos();
    let sh = sb * s_a;
    let half = T::FRAC_PI_2();
    if (b - half).abs() <= tol.quadrant && (angle_a - half).abs() <= tol.right_angle && (a - half).abs() <= tol.quadrant
    {
        return Err(TrigError::Indeterminate);
    }
    let sin_b = sh / a.sin();
    if sin_b > T::one() {
        return Err(TrigError::NoSolution(format!("sine of the angle opposite b would be {sin_b}")));
    }
    let x1 = (sb * c_a).atan2(cb);
    let c1 = x1.sin().atan2(sh * x1.cos());
    let base = sin_b.atan2((T::one() - sin_b * sin_b).max(T::zero()).sqrt());
    let mut out: Vec<(T, T, T)> = Vec::with_capacity(2);
    for angle_b in [base, T::PI() - base] {
        let x2 = (a.sin() * angle_b.cos()).atan2(a.cos());
        let c2 = x2.sin().atan2(sh * x2.cos());
        // Positions along the line and turns about C are taken mod 2π.
        let wrap = |v: T| if v < T::zero() { v + T::PI() + T::PI() } else { v };
        let (c, angle_c) = (wrap(x1 + x2), wrap(c1 + c2));
        let inside = |v: T| v > T::zero() && v < T::PI();
        if inside(c) && inside(angle_c) && !out.iter().any(|s| (s.0 - angle_b).abs() <= tol.consistency) {
            out.push((angle_b, c, angle_c));
        }
    }
    if out.is_empty() {
        return Err(TrigError::NoSolution("no placement of the third vertex closes the triangle".into()));
    }
    Ok(out)
}

/// Solves a side-heavy request (SSS, SAS or SSA).
fn solve_sides<T: Real>(
    e: &TriangleElements<T>,
    kind: CaseKind,
    tol: &Tolerances<T>,
) -> Result<Vec<Elements<T>>, TrigError> {
    let known_sides: Vec<usize> = (0..3).filter(|&i| e.sides[i].is_some()).collect();
    let s = |i: usize| e.sides[i].expect("known side");
    let ang = |i: usize| e.angles[i].expect("known angle");
    match kind {
        CaseKind::Sss => {
            let sides = [s(0), s(1), s(2)];
            Ok(vec![Elements { sides, angles: sss(sides)? }])
        }
        CaseKind::Sas => {
            let (i, j) = (known_sides[0], known_sides[1]);
            let k = 3 - i - j;
            let (c, ai, aj) = sas(s(i), ang(k), s(j));
            let mut out = Elements { sides: [T::zero(); 3], angles: [T::zero(); 3] };
            out.sides[i] = s(i);
            out.sides[j] = s(j);
            out.sides[k] = c;
            out.angles[i] = ai;
            out.angles[j] = aj;
            out.angles[k] = ang(k);
            Ok(vec![out])
        }
        CaseKind::Ssa => {
            let i = (0..3).find(|&i| e.angles[i].is_some()).expect("one angle");
            let j = known_sides.iter().copied().find(|&j| j != i).expect("second side");
            let k = 3 - i - j;
            Ok(ssa(s(i), s(j), ang(i), tol)?
                .into_iter()
                .map(|(aj, sk, ak)| {
                    let mut out = Elements { sides: [T::zero(); 3], angles: [T::zero(); 3] };
                    out.sides[i] = s(i);
                    out.sides[j] = s(j);
                    out.sides[k] = sk;
                    out.angles[i] = ang(i);
                    out.angles[j] = aj;
                    out.angles[k] = ak;
                    out
                })
                .collect())
        }
        _ => unreachable!("angle-heavy cases go through the polar triangle"),
    }
}

fn polar_back<T: Real>(e: Elements<T>) -> Elements<T> {
    Elements { sides: e.angles.map(|x| T::PI() - x), angles: e.sides.map(|x| T::PI() - x) }
}

/// Completes a triangle from three known elements.
pub fn solve<T: Real>(req: &SolveRequest<T>, tol: &Tolerances<T>) -> Result<SolveResult<T>, TrigError> {
    let kind = req.case_kind;
    let solutions = match kind {
        CaseKind::Sss | CaseKind::Sas | CaseKind::Ssa => solve_sides(&req.elements, kind, tol)?,
        CaseKind::Aaa | CaseKind::Asa | CaseKind::Aas => {
            solve_sides(&req.elements.polar(), kind.polar(), tol)?.into_iter().map(polar_back).collect()
        }
    };
    let ambiguity_note = (solutions.len() == 2).then(|| {
        match kind {
            CaseKind::Ssa => {
                "two triangles: the angle opposite the second given side may be taken or replaced by its supplement"
            }
            _ => "two triangles: the side opposite the second given angle may be taken or replaced by its supplement",
        }
        .to_string()
    });
    Ok(SolveResult { case_kind: kind, solutions, ambiguity_note })
}
