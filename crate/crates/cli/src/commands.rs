use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use spherics::census::{
    angle_intersection_type, build_census, check_proposition, intersection_type, CircleTriple, PropositionId,
    SpeciesReport,
};
use spherics::ratio::{
    all_rearrangements, commute_check, rearrange_prop10, CompoundedRatio, ExactRatio, Sextuple, Symbol,
};
use spherics::sector::{
    build_planar, enumerate_sector_figures_with, menelaus_planar, menelaus_spherical, PlanarLine, PlanarPoint,
    PlanarQuadrilateral, SectorPoints, SphericalQuadrilateral,
};
use spherics::trig::{place_sas, sine_rule_residual, solve, tangent_table, SolveRequest, TriangleElements};
use spherics::{Elements, GreatCircle64, Rational, SpherePoint64, Tolerances, Triangle64, Vec3};

use crate::report::{RunReport, Verdict};
use crate::scenario::{mismatch, Command, Scenario, ToleranceOverrides, Units};
use crate::CliError;

/// Everything a command needs besides its payload.
#[derive(Clone, Copy, Debug)]
pub struct Context {
    pub units: Units,
    pub tol: Tolerances<f64>,
}

struct Outcome {
    result: Value,
    verdicts: Vec<Verdict>,
    warnings: Vec<String>,
}

impl Outcome {
    fn new(result: Value, verdicts: Vec<Verdict>) -> Self {
        Outcome { result, verdicts, warnings: Vec::new() }
    }
}

/// Runs a scenario. Flag-level settings in `overrides` and `units` take
/// precedence over those in the scenario file.
pub fn run(scenario: &Scenario, units: Option<Units>, overrides: ToleranceOverrides) -> RunReport {
    let units_hint = units.or(scenario.units).or_else(|| payload_units(&scenario.payload));
    match execute(scenario, units, overrides) {
        Ok((units, out)) => RunReport::success(scenario.command, units, out.result, out.verdicts, out.warnings),
        Err(e) => RunReport::failure(Some(scenario.command), units_hint, &e),
    }
}

fn payload_units(payload: &Value) -> Option<Units> {
    payload.get("units").and_then(|u| serde_json::from_value(u.clone()).ok())
}

fn execute(
    scenario: &Scenario,
    units: Option<Units>,
    overrides: ToleranceOverrides,
) -> Result<(Units, Outcome), CliError> {
    let mut payload = scenario.payload.clone();
    let Value::Object(map) = &mut payload else {
        return Err(CliError::Validation("payload must be a JSON object".into()));
    };
    let payload_units = match map.remove("units") {
        Some(u) => Some(serde_json::from_value::<Units>(u).map_err(|e| CliError::Validation(format!("units: {e}")))?),
        None => None,
    };
    let units = units.or(scenario.units).or(payload_units).unwrap_or_default();
    let tol = scenario.tolerances.merged(overrides).resolve()?;
    let ctx = Context { units, tol };
    let mut out = match scenario.command {
        Command::Ratio => ratio(parse(payload)?),
        Command::Menelaus => menelaus(parse(payload)?, &ctx),
        Command::Census => census(parse(payload)?, &ctx),
        Command::Classify => classify(parse(payload)?, &ctx),
        Command::Solve => solve_cmd(parse(payload)?, &ctx),
        Command::Table => table(parse(payload)?, &ctx),
    }?;
    if let Some(expected) = &scenario.expect {
        let diff = mismatch(expected, &out.result, tol.consistency);
        if let Some(d) = &diff {
            out.warnings.push(format!("result differs from expectation at {d}"));
        }
        out.verdicts.push(Verdict::flag("result matches expectation", diff.is_none()));
    }
    Ok((units, out))
}

fn parse<P: DeserializeOwned>(payload: Value) -> Result<P, CliError> {
    serde_json::from_value(payload).map_err(|e| CliError::Validation(format!("payload: {e}")))
}

/// An integer given as a JSON number or a decimal string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum IntInput {
    Number(i64),
    Text(String),
}

impl IntInput {
    fn value(&self) -> Result<BigInt, CliError> {
        match self {
            IntInput::Number(n) => Ok(BigInt::from(*n)),
            IntInput::Text(s) => {
                BigInt::from_str(s.trim()).map_err(|_| CliError::Validation(format!("not an integer: {s:?}")))
            }
        }
    }
}

/// A rational given as an integer, a float (taken exactly) or a string `p/q`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum RationalInput {
    Int(i64),
    Float(f64),
    Text(String),
}

impl RationalInput {
    fn value(&self) -> Result<Rational, CliError> {
        match self {
            RationalInput::Int(n) => Ok(Rational::from_integer((*n).into())),
            RationalInput::Float(x) => {
                Rational::from_float(*x).ok_or_else(|| CliError::Validation(format!("not a finite number: {x}")))
            }
            RationalInput::Text(s) => {
                Rational::from_str(s.trim()).map_err(|_| CliError::Validation(format!("not a rational: {s:?}")))
            }
        }
    }
}

fn show(q: &Rational) -> String {
    q.to_string()
}

fn sphere_point(v: [f64; 3]) -> Result<SpherePoint64, CliError> {
    Ok(SpherePoint64::from_vector(Vec3::new(v[0], v[1], v[2]))?)
}

fn elements_json(e: &Elements<f64>) -> Value {
    json!({ "sides": e.sides, "angles": e.angles })
}

// ratio

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RatioPayload {
    #[serde(rename = "A")]
    a: Option<IntInput>,
    #[serde(rename = "B")]
    b: Option<IntInput>,
    #[serde(rename = "C")]
    c: Option<IntInput>,
    #[serde(rename = "D")]
    d: Option<IntInput>,
    #[serde(rename = "E")]
    e: Option<IntInput>,
    #[serde(rename = "F")]
    f: Option<IntInput>,
    /// Rearrange for a single target instead of all nine.
    target: Option<Target>,
    compound: Option<Vec<[IntInput; 2]>>,
    commute: Option<[IntInput; 4]>,
}

/// `["A", "C"]` or `"A/C"`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Target {
    Pair([Symbol; 2]),
    Text(String),
}

impl Target {
    fn symbols(&self) -> Result<(Symbol, Symbol), CliError> {
        match self {
            Target::Pair([x, y]) => Ok((*x, *y)),
            Target::Text(t) => {
                let (x, y) = t
                    .split_once('/')
                    .ok_or_else(|| CliError::Validation(format!("target must look like \"A/C\", got {t:?}")))?;
                Ok((x.parse()?, y.parse()?))
            }
        }
    }
}

fn ratio(p: RatioPayload) -> Result<Outcome, CliError> {
    let quantities = [&p.a, &p.b, &p.c, &p.d, &p.e, &p.f];
    let has_sextuple = quantities.iter().any(|q| q.is_some());
    let given = [has_sextuple, p.compound.is_some(), p.commute.is_some()].iter().filter(|&&b| b).count();
    if given != 1 {
        return Err(CliError::Validation("ratio payload needs exactly one of A..F, compound, commute".into()));
    }
    if let Some(factors) = p.compound {
        let factors = factors
            .iter()
            .map(|[n, d]| Ok(ExactRatio::new(n.value()?, d.value()?)?))
            .collect::<Result<Vec<_>, CliError>>()?;
        let c = CompoundedRatio::new(factors)?;
        return Ok(Outcome::new(json!({ "compound": c.to_string(), "value": c.value().to_string() }), Vec::new()));
    }
    if let Some(v) = p.commute {
        let [a, b, c, d] = [v[0].value()?, v[1].value()?, v[2].value()?, v[3].value()?];
        let holds = commute_check(&a, &b, &c, &d)?;
        return Ok(Outcome::new(json!({ "commute": holds }), vec![Verdict::flag("(a/b)(c/d) = (a/d)(c/b)", holds)]));
    }

    let mut values = Vec::with_capacity(6);
    for (q, name) in quantities.iter().zip(["A", "B", "C", "D", "E", "F"]) {
        values.push(q.as_ref().ok_or_else(|| CliError::Validation(format!("missing quantity {name}")))?.value()?);
    }
    let [a, b, c, d, e, f]: [BigInt; 6] = values.try_into().expect("six quantities");
    let q = Sextuple { a, b, c, d, e, f };
    let premise = q.premise_holds()?;
    let mut verdicts = vec![Verdict::flag("premise A/B = (C/E)(D/F)", premise)];
    if !premise {
        return Ok(Outcome::new(json!({ "premise_holds": false, "rearrangements": [] }), verdicts));
    }
    let rearrangements = match p.target {
        Some(t) => {
            let (x, y) = t.symbols()?;
            vec![rearrange_prop10(&q, x, y)?]
        }
        None => all_rearrangements(&q)?,
    };
    let rows: Vec<Value> = rearrangements
        .iter()
        .map(|r| {
            let [(p1, q1), (p2, q2)] = r.factors;
            json!({
                "target": format!("{}/{}", r.numerator, r.denominator),
                "factors": [format!("{p1}/{q1}"), format!("{p2}/{q2}")],
                "lhs": r.lhs.to_string(),
                "rhs": r.rhs.value().to_string(),
                "holds": r.holds(),
            })
        })
        .collect();
    verdicts
        .extend(rearrangements.iter().map(|r| Verdict::flag(format!("{}/{}", r.numerator, r.denominator), r.holds())));
    Ok(Outcome::new(json!({ "premise_holds": true, "rearrangements": rows }), verdicts))
}

// menelaus

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MenelausPayload {
    kind: Kind,
    /// Planar: four lines `[a, b, c]` meaning `a x + b y = c`.
    /// Spherical: poles `[x, y, z]` of four great circles.
    carriers: Option<Value>,
    /// The six labelled points `A, B, C, D, E, G`.
    points: Option<Value>,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Planar,
    Spherical,
}

enum MenelausInput {
    PlanarLines([[RationalInput; 3]; 4]),
    PlanarPoints(SectorPoints<[RationalInput; 2]>),
    SphericalCircles([[f64; 3]; 4]),
    SphericalPoints(SectorPoints<[f64; 3]>),
}

impl MenelausPayload {
    fn input(self) -> Result<MenelausInput, CliError> {
        match (self.kind, self.carriers, self.points) {
            (Kind::Planar, Some(c), None) => Ok(MenelausInput::PlanarLines(parse(c)?)),
            (Kind::Planar, None, Some(p)) => Ok(MenelausInput::PlanarPoints(parse(p)?)),
            (Kind::Spherical, Some(c), None) => Ok(MenelausInput::SphericalCircles(parse(c)?)),
            (Kind::Spherical, None, Some(p)) => Ok(MenelausInput::SphericalPoints(parse(p)?)),
            _ => Err(CliError::Validation("menelaus payload needs exactly one of carriers, points".into())),
        }
    }
}

fn planar_points_json(pts: &SectorPoints<PlanarPoint<Rational>>) -> Value {
    let p = |q: &PlanarPoint<Rational>| json!([show(&q.x), show(&q.y)]);
    json!({ "A": p(&pts.a), "B": p(&pts.b), "C": p(&pts.c), "D": p(&pts.d), "E": p(&pts.e), "G": p(&pts.g) })
}

fn sphere_points_json(pts: &SectorPoints<SpherePoint64>) -> Value {
    serde_json::to_value(pts.map(|p| p.coords())).expect("plain arrays serialise")
}

fn menelaus(p: MenelausPayload, ctx: &Context) -> Result<Outcome, CliError> {
    match p.input()? {
        MenelausInput::PlanarLines(lines) => {
            let mut parsed = Vec::with_capacity(4);
            for [a, b, c] in &lines {
                parsed.push(PlanarLine::new(a.value()?, b.value()?, c.value()?)?);
            }
            let lines: [PlanarLine<Rational>; 4] = parsed.try_into().expect("four lines");
            let fig = build_planar(&lines)?;
            planar_outcome(&fig.points, fig.is_incident())
        }
        MenelausInput::PlanarPoints(pts) => {
            let mut err = None;
            let pts = pts.map(|[x, y]| match (x.value(), y.value()) {
                (Ok(x), Ok(y)) => PlanarPoint::new(x, y),
                (Err(e), _) | (_, Err(e)) => {
                    err.get_or_insert(e);
                    PlanarPoint::new(Rational::from_integer(0.into()), Rational::from_integer(0.into()))
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
            let incident = PlanarQuadrilateral::from_points(pts.clone()).map(|f| f.is_incident()).unwrap_or(false);
            planar_outcome(&pts, incident)
        }
        MenelausInput::SphericalCircles(poles) => {
            let mut circles = Vec::with_capacity(4);
            for v in poles {
                circles.push(GreatCircle64::new(sphere_point(v)?));
            }
            let circles: [GreatCircle64; 4] = circles.try_into().expect("four circles");
            let figs = enumerate_sector_figures_with(&circles, &ctx.tol)?;
            let mut rows = Vec::with_capacity(figs.len());
            let mut worst = 0f64;
            for f in &figs {
                let r = f.quadrilateral.menelaus(ctx.tol.identity)?;
                worst = worst.max(r.residual);
                rows.push(json!({
                    "class": f.class,
                    "face": f.face,
                    "corner": [f.corner.0, f.corner.1],
                    "roles": f.roles,
                    "points": sphere_points_json(&f.quadrilateral.points),
                    "lhs": r.lhs,
                    "rhs": r.rhs,
                    "residual": r.residual,
                }));
            }
            let mut classes: Vec<usize> = figs.iter().map(|f| f.class).collect();
            classes.sort_unstable();
            classes.dedup();
            let verdicts = vec![
                Verdict::residual("sector identity on every figure", worst, ctx.tol.identity),
                Verdict::flag("24 figures", figs.len() == 24),
            ];
            Ok(Outcome::new(json!({ "figures": rows, "classes": classes.len() }), verdicts))
        }
        MenelausInput::SphericalPoints(pts) => {
            let mut err = None;
            let pts = pts.map(|v| {
                sphere_point(v).unwrap_or_else(|e| {
                    err.get_or_insert(e);
                    SpherePoint64::new(0.0, 0.0, 1.0).expect("unit")
                })
            });
            if let Some(e) = err {
                return Err(e);
            }
            let r = menelaus_spherical(&pts, ctx.tol.identity)?;
            let incident =
                SphericalQuadrilateral::from_points(pts).map(|q| q.is_incident(ctx.tol.identity)).unwrap_or(false);
            let mut out = Outcome::new(
                json!({ "points": sphere_points_json(&pts), "lhs": r.lhs, "rhs": r.rhs, "residual": r.residual }),
                vec![Verdict::residual("sector identity", r.residual, ctx.tol.identity)],
            );
            if !incident {
                out.warnings.push("points do not lie on four great circles in the sector arrangement".into());
            }
            Ok(out)
        }
    }
}

fn planar_outcome(pts: &SectorPoints<PlanarPoint<Rational>>, incident: bool) -> Result<Outcome, CliError> {
    let r = menelaus_planar(pts)?;
    let mut out = Outcome::new(
        json!({
            "points": planar_points_json(pts),
            "form": r.form,
            "lhs": show(&r.lhs),
            "rhs": show(&r.rhs),
            "residual": show(&r.residual),
        }),
        vec![Verdict::flag("sector identity (exact)", r.satisfied)],
    );
    if !incident {
        out.warnings.push("points do not lie on four lines in the sector arrangement".into());
    }
    Ok(out)
}

// census

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CensusPayload {
    poles: [[f64; 3]; 3],
}

fn census(p: CensusPayload, ctx: &Context) -> Result<Outcome, CliError> {
    let mut poles = Vec::with_capacity(3);
    for v in p.poles {
        poles.push(sphere_point(v)?);
    }
    let circles: [GreatCircle64; 3] = std::array::from_fn(|i| GreatCircle64::new(poles[i]));
    let triple = CircleTriple::new(circles, ctx.tol.degeneracy)?;
    let c = build_census(&triple)?;

    let triangles: Vec<Value> = (0..8)
        .map(|i| {
            let t = c.triangle(i);
            let s = SpeciesReport::of(t, &ctx.tol);
            json!({
                "index": i,
                "signs": c.signs(i),
                "vertices": t.vertices().map(|v| v.coords()),
                "elements": elements_json(&t.elements()),
                "side_species": s.side_species,
                "angle_species": s.angle_species,
            })
        })
        .collect();
    let side_type = intersection_type(&c, ctx.tol.quadrant)?;
    let angle_type = angle_intersection_type(&c, ctx.tol.right_angle)?;

    let mut antipodal_worst = 0f64;
    for &(i, j) in c.antipodal_pairs() {
        let sorted = |mut v: [f64; 3]| {
            v.sort_by(f64::total_cmp);
            v
        };
        let (a, b) = (c.triangle(i), c.triangle(j));
        for (x, y) in [(a.sides(), b.sides()), (a.angles(), b.angles())] {
            for (u, v) in sorted(x).iter().zip(sorted(y)) {
                antipodal_worst = antipodal_worst.max((u - v).abs());
            }
        }
    }
    let mut supplement_worst = 0f64;
    let hemi = c.hemisphere();
    for &i in &hemi {
        for &j in &hemi {
            if i != j {
                supplement_worst = supplement_worst.max(c.supplement_deviation(i, j)?);
            }
        }
    }
    let (v, a, t, corners) = c.counts();
    let result = json!({
        "counts": { "vertices": v, "arcs": a, "triangles": t, "corners": corners },
        "vertices": c.vertices().map(|p| p.coords()),
        "triangles": triangles,
        "antipodal_pairs": c.antipodal_pairs(),
        "hemisphere": hemi,
        "side_intersection_type": side_type,
        "angle_intersection_type": angle_type,
    });
    let verdicts = vec![
        Verdict::residual("antipodal triangles equal", antipodal_worst, ctx.tol.identity),
        Verdict::residual("supplement relations in one hemisphere", supplement_worst, ctx.tol.identity),
    ];
    let mut out = Outcome::new(result, verdicts);
    let n = poles.iter().map(|p| *p.vector()).collect::<Vec<_>>();
    if Vec3::triple(&n[0], &n[1], &n[2]).abs() < 1e-6 {
        out.warnings.push("circles are nearly concurrent".into());
    }
    Ok(out)
}

// classify

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassifyPayload {
    vertices: Option<[[f64; 3]; 3]>,
    /// Sides in the scenario's units.
    sides: Option<[f64; 3]>,
    sides_deg: Option<[f64; 3]>,
    sides_rad: Option<[f64; 3]>,
}

fn classify(p: ClassifyPayload, ctx: &Context) -> Result<Outcome, CliError> {
    let given = [p.vertices.is_some(), p.sides.is_some(), p.sides_deg.is_some(), p.sides_rad.is_some()];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err(CliError::Validation(
            "classify payload needs exactly one of vertices, sides, sides_deg, sides_rad".into(),
        ));
    }
    let tri = if let Some(v) = p.vertices {
        Triangle64::from_vertices(sphere_point(v[0])?, sphere_point(v[1])?, sphere_point(v[2])?)?
    } else {
        let sides = match (p.sides, p.sides_deg, p.sides_rad) {
            (Some(s), _, _) => s.map(|x| ctx.units.to_radians(x)),
            (_, Some(s), _) => s.map(|x| Units::Deg.to_radians(x)),
            (_, _, Some(s)) => s,
            _ => unreachable!(),
        };
        let req = SolveRequest::new(TriangleElements { sides: sides.map(Some), angles: [None; 3] })?;
        let e = solve(&req, &ctx.tol)?.solutions[0];
        place_sas(e.sides[0], e.angles[2], e.sides[1])?
    };
    let species = SpeciesReport::of(&tri, &ctx.tol);
    let mut out = Outcome::new(Value::Null, Vec::new());
    for (k, s) in tri.sides().iter().enumerate() {
        let d = (s - std::f64::consts::FRAC_PI_2).abs();
        if d > ctx.tol.quadrant && d < 1e3 * ctx.tol.quadrant {
            out.warnings.push(format!("side {k} is within {d:.1e} of a quadrant but not counted as one"));
        }
    }
    let id = PropositionId::for_species(species.side_species).expect("species in 1..=10");
    let verdict = check_proposition(&tri, id, &ctx.tol)?;
    out.verdicts = verdict.claims.iter().map(|c| Verdict::flag(format!("{id}: {}", c.name), c.holds)).collect();
    out.result = json!({
        "vertices": tri.vertices().map(|v| v.coords()),
        "elements": elements_json(&tri.elements()),
        "side_species": species.side_species,
        "angle_species": species.angle_species,
        "proposition": verdict,
    });
    Ok(out)
}

// solve

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SolvePayload {
    /// Sides `a`, `b`, `c` and angles `A`, `B`, `C`, in the scenario's units.
    knowns: BTreeMap<String, f64>,
}

fn solve_cmd(p: SolvePayload, ctx: &Context) -> Result<Outcome, CliError> {
    let mut e = TriangleElements::<f64>::default();
    for (name, &x) in &p.knowns {
        let slot = match name.as_str() {
            "a" => &mut e.sides[0],
            "b" => &mut e.sides[1],
            "c" => &mut e.sides[2],
            "A" => &mut e.angles[0],
            "B" => &mut e.angles[1],
            "C" => &mut e.angles[2],
            other => return Err(CliError::Validation(format!("unknown element {other:?}; expected a, b, c, A, B, C"))),
        };
        *slot = Some(ctx.units.to_radians(x));
    }
    let req = SolveRequest::new(e)?;
    let r = solve(&req, &ctx.tol)?;
    let verdicts = r
        .solutions
        .iter()
        .enumerate()
        .map(|(i, s)| Verdict::residual(format!("solution {i} sine rule"), sine_rule_residual(s), ctx.tol.consistency))
        .collect();
    let mut out = Outcome::new(
        json!({
            "case_kind": r.case_kind,
            "solutions": r.solutions.iter().map(elements_json).collect::<Vec<_>>(),
            "ambiguity_note": r.ambiguity_note,
        }),
        verdicts,
    );
    if let Some(note) = &r.ambiguity_note {
        out.warnings.push(note.clone());
    }
    Ok(out)
}

// table

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TablePayload {
    /// Step and last arc, in the scenario's units.
    step: f64,
    max: f64,
}

pub fn table_rows(step: f64, max: f64, units: Units) -> Result<Vec<spherics::trig::TangentRow<f64>>, CliError> {
    Ok(tangent_table(units.to_radians(step), units.to_radians(max))?)
}

fn table(p: TablePayload, ctx: &Context) -> Result<Outcome, CliError> {
    let rows = table_rows(p.step, p.max, ctx.units)?;
    let rows: Vec<Value> = rows
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let arc_deg = match ctx.units {
                Units::Deg => (k as f64 * p.step).min(p.max),
                Units::Rad => r.arc.to_degrees(),
            };
            json!({
                "arc": r.arc,
                "arc_deg": arc_deg,
                "tangent": r.tangent,
                "first_difference": r.first_difference,
            })
        })
        .collect();
    Ok(Outcome::new(json!({ "rows": rows }), Vec::new()))
}
