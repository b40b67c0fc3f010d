//! Random generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use spherics::census::{build_census, CircleTriple};
use spherics::ratio::Sextuple;
use spherics::sector::PlanarLine;
use spherics::{Census64, GreatCircle64, Rational, SpherePoint64, Triangle64, Vec3};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn unit(rng: &mut impl Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [rng.sample(StandardNormal), rng.sample(StandardNormal), rng.sample(StandardNormal)];
        let n = norm(v);
        if n > 1e-6 {
            return v.map(|x| x / n);
        }
    }
}

pub fn point(v: [f64; 3]) -> SpherePoint64 {
    SpherePoint64::from_vector(Vec3::new(v[0], v[1], v[2])).unwrap()
}

pub fn circle(v: [f64; 3]) -> GreatCircle64 {
    GreatCircle64::new(point(v))
}

pub fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

pub fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

pub fn normalize(a: [f64; 3]) -> [f64; 3] {
    let n = norm(a);
    a.map(|x| x / n)
}

/// Arc between unit vectors, independent of the library.
pub fn oracle_arc(p: [f64; 3], q: [f64; 3]) -> f64 {
    norm(cross(p, q)).atan2(dot(p, q))
}

/// Angle at `at` between the arcs toward `u` and `v`, measured between
/// tangent vectors rather than plane normals.
pub fn oracle_angle(at: [f64; 3], u: [f64; 3], v: [f64; 3]) -> f64 {
    let tangent = |w: [f64; 3]| {
        let k = dot(at, w);
        [w[0] - k * at[0], w[1] - k * at[1], w[2] - k * at[2]]
    };
    let (tu, tv) = (tangent(u), tangent(v));
    norm(cross(tu, tv)).atan2(dot(tu, tv))
}

/// `(sides, angles)` of a triangle, slot `k` opposite vertex `k`.
pub fn oracle_elements(v: [[f64; 3]; 3]) -> ([f64; 3], [f64; 3]) {
    let sides = std::array::from_fn(|k| oracle_arc(v[(k + 1) % 3], v[(k + 2) % 3]));
    let angles = std::array::from_fn(|k| oracle_angle(v[k], v[(k + 1) % 3], v[(k + 2) % 3]));
    (sides, angles)
}

/// Random triangle whose sides and angles stay at least `margin` away
/// from 0 and π.
pub fn triangle(rng: &mut impl Rng, margin: f64) -> ([[f64; 3]; 3], Triangle64) {
    loop {
        let v = [unit(rng), unit(rng), unit(rng)];
        let (s, a) = oracle_elements(v);
        if s.iter().chain(&a).all(|&x| x > margin && x < PI - margin) {
            let t = Triangle64::from_vertices(point(v[0]), point(v[1]), point(v[2])).unwrap();
            return (v, t);
        }
    }
}

/// Right triangle with the right angle at slot 2, legs `a` (slot 0) and
/// `b` (slot 1) drawn uniformly from `(margin, π - margin)`.
pub fn right_triangle(rng: &mut impl Rng, margin: f64) -> ([[f64; 3]; 3], (f64, f64)) {
    let a = rng.random_range(margin..PI - margin);
    let b = rng.random_range(margin..PI - margin);
    // C at the pole, CB along x, CA along y: the legs meet at a right angle.
    let c = [0.0, 0.0, 1.0];
    let pb = [a.sin(), 0.0, a.cos()];
    let pa = [0.0, b.sin(), b.cos()];
    ([pa, pb, c], (a, b))
}

/// Three circles whose poles are pairwise at least `margin` from parallel
/// and whose triple product exceeds `margin`.
pub fn generic_triple(rng: &mut impl Rng, margin: f64) -> [[f64; 3]; 3] {
    loop {
        let n = [unit(rng), unit(rng), unit(rng)];
        let pairs_ok = (0..3).all(|i| (i + 1..3).all(|j| dot(n[i], n[j]).abs() < 1.0 - margin));
        if pairs_ok && dot(n[0], cross(n[1], n[2])).abs() > margin {
            return n;
        }
    }
}

pub fn census(n: [[f64; 3]; 3]) -> Census64 {
    build_census(&CircleTriple::from_poles(n.map(point)).unwrap()).unwrap()
}

/// Four circles whose twelve meeting points are pairwise separated by at
/// least `margin` radians and lie at least `margin` off the other circles.
pub fn generic_four(rng: &mut impl Rng, margin: f64) -> [[f64; 3]; 4] {
    'outer: loop {
        let n = [unit(rng), unit(rng), unit(rng), unit(rng)];
        let mut pts = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let c = cross(n[i], n[j]);
                if norm(c) < margin.sin() {
                    continue 'outer;
                }
                let p = normalize(c);
                for (k, nk) in n.iter().enumerate() {
                    if k != i && k != j && dot(*nk, p).abs() < margin.sin() {
                        continue 'outer;
                    }
                }
                pts.push(p);
                pts.push(p.map(|x| -x));
            }
        }
        // Points come in antipodal pairs; every other pair must be apart.
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let antipodal_twin = i % 2 == 0 && j == i + 1;
                if !antipodal_twin && oracle_arc(pts[i], pts[j]) < margin {
                    continue 'outer;
                }
            }
        }
        return n;
    }
}

/// Small non-zero integer.
pub fn small_int(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let x = rng.random_range(-bound..=bound);
        if x != 0 {
            return x;
        }
    }
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Four random lines with integer coefficients, not necessarily generic.
pub fn integer_lines(rng: &mut impl Rng, bound: i64) -> [PlanarLine<Rational>; 4] {
    std::array::from_fn(|_| loop {
        let (a, b, c) =
            (rng.random_range(-bound..=bound), rng.random_range(-bound..=bound), rng.random_range(-bound..=bound));
        if let Ok(l) = PlanarLine::new(q(a), q(b), q(c)) {
            break l;
        }
    })
}

/// A sextuple with `A/B = (C/E)·(D/F)`: take `A = B·C·D` and rescale `B` by `E·F`.
pub fn premise_sextuple(rng: &mut impl Rng, bound: i64) -> Sextuple {
    let [b, c, d, e, f] = std::array::from_fn(|_| small_int(rng, bound));
    Sextuple {
        a: BigInt::from(b * c * d),
        b: BigInt::from(b * e * f),
        c: c.into(),
        d: d.into(),
        e: e.into(),
        f: f.into(),
    }
}

pub fn is_right(x: f64) -> bool {
    (x - FRAC_PI_2).abs() <= 1e-9
}
