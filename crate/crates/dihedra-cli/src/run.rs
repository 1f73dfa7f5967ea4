//! Subcommand implementations: each takes a parsed problem file and produces
//! an exit code, a text report, and the same report as JSON.

use crate::parse::{parse, Complex, ParseError, ProblemFile};
use dihedra::angles::{AngleAssignment, FaceAngleSolution};
use dihedra::feasibility::{
    check_conditions_bruteforce, cone_angle_problem, decide_lp, decide_with_boundary_angles,
    ConditionsVerdict, DualWitness, FeasibilityReport,
};
use dihedra::flow::{decide_flow, decide_flow_with_epsilon};
use dihedra::realization::{develop, shear_coordinates, PlanarDevelopment};
use dihedra::scalar::rational;
use dihedra::stellation::{positively_curved_realizability, stellate, CurvedRealizability};
use dihedra::subcomplex::FaceSet;
use dihedra::surface::{Corner, Dart, FaceId, TriangulatedSurface, VertexId};
use dihedra::three_manifold::{
    certificate_from_normal_surface, hext_check, linear_hyperbolic_lp_with_target, normal_chi,
    AngleStructure3, DualCertificate3, IdealTriangulation3, LinearHyperbolicReport,
    NormalSurfaceVector, TetId, EDGE_VERTICES,
};
use dihedra::Rational;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Flow,
    Lp,
    Oracle,
}

impl Engine {
    fn name(self) -> &'static str {
        match self {
            Engine::Flow => "flow",
            Engine::Lp => "lp",
            Engine::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug)]
pub enum Epsilon {
    Auto,
    Fixed(Rational),
}

#[derive(Clone, Debug)]
pub struct DecideOpts {
    pub engine: Option<Engine>,
    pub epsilon: Epsilon,
    pub delaunay_cap: bool,
}

impl Default for DecideOpts {
    fn default() -> Self {
        DecideOpts {
            engine: None,
            epsilon: Epsilon::Auto,
            delaunay_cap: true,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Command {
    Check(DecideOpts),
    Realize(DecideOpts),
    Shear(DecideOpts),
    Stellate,
    M3Check,
    M3Normal,
    Describe,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check(_) => "check",
            Command::Realize(_) => "realize",
            Command::Shear(_) => "shear",
            Command::Stellate => "stellate",
            Command::M3Check => "m3-check",
            Command::M3Normal => "m3-normal",
            Command::Describe => "describe",
        }
    }
}

/// One file's result: an exit code plus both renderings of the report.
pub struct Outcome {
    pub code: i32,
    pub json: Value,
    pub text: String,
}

/// Canonical rational rendering: always `p/q`, reduced, denominator positive.
pub fn rat(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Floats carry 12 significant digits; zero collapses to `0`.
pub fn sig(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{:.11e}", x)
    }
}

fn rats(xs: &[Rational]) -> Vec<Value> {
    xs.iter().map(|x| Value::String(rat(x))).collect()
}

struct Report {
    text: String,
    json: Map<String, Value>,
}

impl Report {
    fn new(command: &str, file: &str) -> Report {
        let mut json = Map::new();
        json.insert("command".into(), command.into());
        json.insert("file".into(), file.into());
        Report {
            text: String::new(),
            json,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn set(&mut self, key: &str, value: Value) {
        self.json.insert(key.into(), value);
    }

    fn finish(self, code: i32) -> Outcome {
        Outcome {
            code,
            json: Value::Object(self.json),
            text: self.text,
        }
    }
}

fn usage(command: &str, file: &str, msg: impl Into<String>) -> Outcome {
    let msg = msg.into();
    let mut r = Report::new(command, file);
    r.set("error", json!({ "kind": "usage", "message": msg }));
    r.line(format!("error: {msg}"));
    r.finish(2)
}

fn parse_failure(command: &str, file: &str, e: &ParseError) -> Outcome {
    let mut r = Report::new(command, file);
    r.set(
        "error",
        json!({
            "kind": e.kind.label(),
            "line": e.line,
            "col": e.col,
            "message": e.message,
        }),
    );
    r.line(format!("{file}:{e}"));
    r.finish(2)
}

/// Parses and dispatches one input file.
pub fn run_one(cmd: &Command, file: &str, source: &str) -> Outcome {
    let problem = match parse(source) {
        Ok(p) => p,
        Err(e) => return parse_failure(cmd.name(), file, &e),
    };
    match (cmd, &problem.complex) {
        (Command::Describe, _) => describe(file, &problem),
        (Command::Stellate, Complex::Surface(_)) => run_stellate(file, &problem),
        (Command::M3Check, Complex::Manifold(m)) => m3_check(file, &problem, m),
        (Command::M3Normal, Complex::Manifold(m)) => m3_normal(file, m),
        (Command::Check(opts), Complex::Surface(_)) => run_check(file, &problem, opts),
        (Command::Realize(opts), Complex::Surface(_)) => run_realize(file, &problem, opts),
        (Command::Shear(opts), Complex::Surface(_)) => run_shear(file, &problem, opts),
        (Command::Stellate | Command::Check(_) | Command::Realize(_) | Command::Shear(_), _) => {
            usage(
                cmd.name(),
                file,
                format!("`{}` expects a `surface 2` file", cmd.name()),
            )
        }
        (Command::M3Check | Command::M3Normal, _) => usage(
            cmd.name(),
            file,
            format!("`{}` expects a `manifold 3` file", cmd.name()),
        ),
    }
}

// ---------------------------------------------------------------- surfaces

/// What kind of prescription the file carries.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// `angle` lines only: prescribed dihedral angles.
    Dihedral,
    /// `cone` lines (plus `bangle` for boundary vertices): prescribed
    /// per-vertex corner totals.
    Cone,
    /// `angle` + `bangle` lines: dihedral angles with pinned boundary
    /// position angles.
    Boundary,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Dihedral => "dihedral",
            Mode::Cone => "cone",
            Mode::Boundary => "boundary",
        }
    }
}

fn classify(p: &ProblemFile) -> Result<Mode, String> {
    match (p.has_angles(), p.has_cones(), p.has_bangles()) {
        (true, true, _) => Err(
            "cone prescriptions replace dihedral angles; a file may carry `angle` \
             or `cone` lines, not both"
                .into(),
        ),
        // `bangle` lines alone prescribe corner totals at boundary vertices,
        // which is the cone problem restricted to them.
        (false, true, _) | (false, false, true) => Ok(Mode::Cone),
        (true, false, true) => Ok(Mode::Boundary),
        (true, false, false) => Ok(Mode::Dihedral),
        (false, false, false) => Err(
            "no angle data: add `angle` lines (dihedral mode) or `cone` lines \
             (cone mode)"
                .into(),
        ),
    }
}

fn full_delta(p: &ProblemFile, t: &TriangulatedSurface) -> Result<AngleAssignment<Rational>, String> {
    let mut vals = Vec::with_capacity(t.n_edges());
    for (e, v) in p.angle.iter().enumerate() {
        match v {
            Some(v) => vals.push(v.clone()),
            None => {
                let lead = t.edge(dihedra::surface::EdgeId(e)).lead;
                return Err(format!(
                    "edge class e{e} (side {}) has no `angle` line",
                    dart_name(p, lead)
                ));
            }
        }
    }
    AngleAssignment::new(t, vals).map_err(|e| e.to_string())
}

/// Corner totals for cone mode: `cone` values, with `bangle` standing in on
/// boundary vertices.
fn corner_totals(p: &ProblemFile, t: &TriangulatedSurface) -> Result<Vec<Rational>, String> {
    let mut out = Vec::with_capacity(t.n_vertices());
    for v in 0..t.n_vertices() {
        match p.cone[v].as_ref().or(p.bangle[v].as_ref()) {
            Some(x) => out.push(x.clone()),
            None => {
                return Err(format!(
                    "cone mode needs a prescription for every vertex class; v{v} has none"
                ))
            }
        }
    }
    Ok(out)
}

fn boundary_map(
    p: &ProblemFile,
    t: &TriangulatedSurface,
) -> Result<BTreeMap<VertexId, Rational>, String> {
    let mut map = BTreeMap::new();
    for v in t.vertex_ids() {
        if t.vertex(v).on_boundary {
            match &p.bangle[v.0] {
                Some(x) => {
                    map.insert(v, x.clone());
                }
                None => {
                    return Err(format!(
                        "boundary mode needs a `bangle` line for every boundary vertex; \
                         v{} has none",
                        v.0
                    ))
                }
            }
        }
    }
    Ok(map)
}

fn dart_name(p: &ProblemFile, d: Dart) -> String {
    format!("{}:{}", p.names[d.face().0], d.slot())
}

fn face_set_names(p: &ProblemFile, set: &FaceSet) -> Vec<String> {
    set.iter().map(|f| p.names[f.0].clone()).collect()
}

fn solution_json(p: &ProblemFile, sol: &FaceAngleSolution<Rational>) -> Value {
    let faces: Vec<Value> = (0..sol.n_faces())
        .map(|f| {
            let a = sol.face(FaceId(f));
            json!({
                "face": p.names[f],
                "angles": [rat(&a[0]), rat(&a[1]), rat(&a[2])],
            })
        })
        .collect();
    Value::Array(faces)
}

fn render_solution(r: &mut Report, p: &ProblemFile, sol: &FaceAngleSolution<Rational>, margin: &Rational) {
    r.set("verdict", "feasible".into());
    r.set("margin", rat(margin).into());
    r.set("solution", solution_json(p, sol));
    r.line("verdict: feasible");
    r.line(format!("margin: {}", rat(margin)));
    for f in 0..sol.n_faces() {
        let a = sol.face(FaceId(f));
        r.line(format!(
            "face {}: {} {} {}",
            p.names[f],
            rat(&a[0]),
            rat(&a[1]),
            rat(&a[2])
        ));
    }
}

fn render_infeasible(
    r: &mut Report,
    p: &ProblemFile,
    t: &TriangulatedSurface,
    delta: Option<&AngleAssignment<Rational>>,
    violating: &Option<(FaceSet, Rational)>,
    dual: &Option<DualWitness<Rational>>,
) {
    r.set("verdict", "infeasible".into());
    r.line("verdict: infeasible");
    if let Some((set, excess)) = violating {
        let names = face_set_names(p, set);
        r.set(
            "violating",
            json!({ "faces": names, "excess": rat(excess) }),
        );
        r.line(format!("violating faces: {}", names.join(" ")));
        r.line(format!("excess: {}", rat(excess)));
    }
    if let Some(w) = dual {
        let verified = delta.map(|d| w.verify(t, d));
        let kind = match w.kind {
            dihedra::feasibility::SystemKind::Exact => "exact",
            dihedra::feasibility::SystemKind::RelaxedBoundary => "relaxed-boundary",
        };
        r.set(
            "dual",
            json!({
                "kind": kind,
                "face_potential": rats(&w.face_potential),
                "edge_potential": rats(&w.edge_potential),
                "verified": verified,
            }),
        );
        r.line(format!("dual kind: {kind}"));
        r.line(format!(
            "face potentials: {}",
            w.face_potential.iter().map(rat).collect::<Vec<_>>().join(" ")
        ));
        r.line(format!(
            "edge potentials: {}",
            w.edge_potential.iter().map(rat).collect::<Vec<_>>().join(" ")
        ));
        if let Some(v) = verified {
            r.line(format!("dual verified: {v}"));
        }
    }
}

/// Runs the mode-appropriate decision and renders the report. Also hands the
/// solution back for the commands that keep going (realize, shear).
fn decide_and_render(
    r: &mut Report,
    p: &ProblemFile,
    opts: &DecideOpts,
) -> Result<Option<FaceAngleSolution<Rational>>, Outcome> {
    let command = r.json["command"].as_str().unwrap_or("check").to_string();
    let file = r.json["file"].as_str().unwrap_or("-").to_string();
    let fail = |msg: String| usage(&command, &file, msg);

    let t = p.surface().expect("surface commands are dispatched on surfaces");
    let mode = classify(p).map_err(&fail)?;
    let engine = match (opts.engine, mode) {
        (Some(Engine::Flow), Mode::Cone | Mode::Boundary) => {
            return Err(fail(format!(
                "the flow network does not encode {} equalities; use --engine lp",
                if mode == Mode::Cone { "cone-angle" } else { "boundary-angle" }
            )))
        }
        (Some(Engine::Oracle), Mode::Cone | Mode::Boundary) => {
            return Err(fail(
                "the excess oracle decides dihedral prescriptions only".into(),
            ))
        }
        (Some(e), _) => e,
        (None, Mode::Dihedral) => Engine::Flow,
        (None, Mode::Cone | Mode::Boundary) => Engine::Lp,
    };
    r.set("mode", mode.name().into());
    r.set("engine", engine.name().into());
    r.line(format!("mode: {}", mode.name()));
    r.line(format!("engine: {}", engine.name()));

    let report = match mode {
        Mode::Cone => {
            let totals = corner_totals(p, t).map_err(&fail)?;
            r.set("delaunay_cap", opts.delaunay_cap.into());
            cone_angle_problem(t, &totals, opts.delaunay_cap)
        }
        Mode::Boundary => {
            let delta = full_delta(p, t).map_err(&fail)?;
            let map = boundary_map(p, t).map_err(&fail)?;
            decide_with_boundary_angles(t, &delta, &map).map_err(|e| fail(e.to_string()))?
        }
        Mode::Dihedral => {
            let delta = full_delta(p, t).map_err(&fail)?;
            match engine {
                Engine::Lp => decide_lp(t, &delta),
                Engine::Flow => match &opts.epsilon {
                    Epsilon::Auto => decide_flow(t, &delta, true),
                    // zero margin = the plain nonnegative system
                    Epsilon::Fixed(eps) if *eps == rational(0, 1) => {
                        decide_flow(t, &delta, false)
                    }
                    Epsilon::Fixed(eps) => decide_flow_with_epsilon(t, &delta, eps)
                        .map_err(|e| fail(e.to_string()))?,
                },
                Engine::Oracle => {
                    let ConditionsVerdict { feasible, worst } =
                        check_conditions_bruteforce(t, &delta).map_err(|e| fail(e.to_string()))?;
                    let verdict = if feasible { "feasible" } else { "infeasible" };
                    r.set("verdict", verdict.into());
                    r.line(format!("verdict: {verdict}"));
                    if let Some((set, excess)) = worst {
                        let names = face_set_names(p, &set);
                        r.set(
                            "worst",
                            json!({ "faces": names, "excess": rat(&excess) }),
                        );
                        r.line(format!("worst face set: {}", names.join(" ")));
                        r.line(format!("worst excess: {}", rat(&excess)));
                    }
                    return Ok(None);
                }
            }
        }
    };

    match report {
        FeasibilityReport::Feasible { solution, margin } => {
            render_solution(r, p, &solution, &margin);
            Ok(Some(solution))
        }
        FeasibilityReport::Infeasible { violating, dual } => {
            let delta = if mode == Mode::Dihedral || mode == Mode::Boundary {
                full_delta(p, t).ok()
            } else {
                None
            };
            render_infeasible(r, p, t, delta.as_ref(), &violating, &dual);
            Ok(None)
        }
    }
}

fn verdict_code(r: &Report) -> i32 {
    match r.json.get("verdict").and_then(Value::as_str) {
        Some("feasible") | Some("strict") | Some("pass") => 0,
        _ => 1,
    }
}

fn run_check(file: &str, p: &ProblemFile, opts: &DecideOpts) -> Outcome {
    let mut r = Report::new("check", file);
    match decide_and_render(&mut r, p, opts) {
        Ok(_) => {
            let code = verdict_code(&r);
            r.finish(code)
        }
        Err(out) => out,
    }
}

fn run_realize(file: &str, p: &ProblemFile, opts: &DecideOpts) -> Outcome {
    let mut r = Report::new("realize", file);
    let t = p.surface().expect("dispatched on surfaces");
    if opts.engine == Some(Engine::Oracle) {
        return usage("realize", file, "the oracle produces no solution to lay out");
    }
    if !t.is_connected() {
        return usage("realize", file, "development needs a connected surface");
    }
    let sol = match decide_and_render(&mut r, p, opts) {
        Ok(Some(sol)) => sol,
        Ok(None) => return r.finish(1),
        Err(out) => return out,
    };
    let dev = match develop(t, &sol, FaceId(0)) {
        Ok(dev) => dev,
        Err(e) => return usage("realize", file, e.to_string()),
    };
    render_development(&mut r, p, t, &dev);
    r.finish(0)
}

fn render_development(
    r: &mut Report,
    p: &ProblemFile,
    t: &TriangulatedSurface,
    dev: &PlanarDevelopment,
) {
    let mut faces = Vec::new();
    for f in t.faces() {
        let c = dev.corners(f);
        faces.push(json!({
            "face": p.names[f.0],
            "corners": c.iter().map(|z| json!([sig(z.re), sig(z.im)])).collect::<Vec<_>>(),
        }));
        let mut line = format!("face {}:", p.names[f.0]);
        for z in c {
            let _ = write!(line, "  {} {}", sig(z.re), sig(z.im));
        }
        r.line(line);
    }
    r.set(
        "development",
        json!({
            "root": p.names[dev.root().0],
            "faces": faces,
            "max_length_mismatch": sig(dev.max_off_tree_length()),
            "max_angle_mismatch": sig(dev.max_off_tree_angle()),
        }),
    );
    r.line(format!("root: {}", p.names[dev.root().0]));
    r.line(format!(
        "max length mismatch: {}",
        sig(dev.max_off_tree_length())
    ));
    r.line(format!(
        "max angle mismatch: {}",
        sig(dev.max_off_tree_angle())
    ));
}

fn run_shear(file: &str, p: &ProblemFile, opts: &DecideOpts) -> Outcome {
    let mut r = Report::new("shear", file);
    let t = p.surface().expect("dispatched on surfaces");
    if opts.engine == Some(Engine::Oracle) {
        return usage("shear", file, "the oracle produces no solution to measure");
    }
    let sol = match decide_and_render(&mut r, p, opts) {
        Ok(Some(sol)) => sol,
        Ok(None) => return r.finish(1),
        Err(out) => return out,
    };
    let shears = match shear_coordinates(t, &sol) {
        Ok(s) => s,
        Err(e) => return usage("shear", file, e.to_string()),
    };
    let mut rows = Vec::new();
    for s in &shears {
        let edge = t.edge(s.edge);
        let partner = edge.partner.expect("shears exist on interior edges only");
        rows.push(json!({
            "edge": format!("e{}", s.edge.0),
            "lead": dart_name(p, edge.lead),
            "partner": dart_name(p, partner),
            "value": sig(s.value),
        }));
        r.line(format!(
            "shear e{} ({} = {}): {}",
            s.edge.0,
            dart_name(p, edge.lead),
            dart_name(p, partner),
            sig(s.value)
        ));
    }
    r.set("shears", Value::Array(rows));
    r.finish(0)
}

// -------------------------------------------------------------- stellation

fn run_stellate(file: &str, p: &ProblemFile) -> Outcome {
    let mut r = Report::new("stellate", file);
    let t = p.surface().expect("dispatched on surfaces");
    let s = stellate(t);
    let st = s.surface();

    let vertex_map = dihedra::catalog::vertex_classes(st, s.triples());
    let mut glue_rows: Vec<Value> = Vec::new();
    let mut glue_lines: Vec<String> = Vec::new();
    for e in st.edge_ids() {
        let edge = st.edge(e);
        if let Some(partner) = edge.partner {
            let (a, b) = (edge.lead, partner);
            glue_lines.push(format!(
                "glue s{}:{} s{}:{}",
                a.face().0,
                a.slot(),
                b.face().0,
                b.slot()
            ));
            glue_rows.push(json!([
                format!("s{}:{}", a.face().0, a.slot()),
                format!("s{}:{}", b.face().0, b.slot())
            ]));
        }
    }

    r.line(format!(
        "# stellation of {}: {} faces, {} edges, {} vertices",
        file,
        st.n_faces(),
        st.n_edges(),
        st.n_vertices()
    ));
    r.line("surface 2");
    for f in 0..st.n_faces() {
        r.line(format!("face s{f}"));
    }
    for g in &glue_lines {
        r.line(g);
    }
    let mut apex = Map::new();
    for f in t.faces() {
        let v = s.new_vertex_of(f);
        apex.insert(p.names[f.0].clone(), format!("v{}", v.0).into());
        r.line(format!("# apex of {}: v{}", p.names[f.0], v.0));
    }
    let mut base = Map::new();
    for v in 0..s.n_base_vertices() {
        let sv = vertex_map[&v];
        base.insert(format!("v{v}"), format!("v{}", sv.0).into());
        r.line(format!("# base vertex v{v} -> v{}", sv.0));
    }
    r.set(
        "stellation",
        json!({
            "faces": st.n_faces(),
            "edges": st.n_edges(),
            "vertices": st.n_vertices(),
            "glue": glue_rows,
            "apex": Value::Object(apex),
            "base_vertices": Value::Object(base),
        }),
    );

    match positively_curved_realizability::<Rational>(st) {
        Err(e) => {
            r.set(
                "realizability",
                json!({ "verdict": "not-applicable", "reason": e.to_string() }),
            );
            r.line(format!("# realizability: not applicable ({e})"));
            r.finish(0)
        }
        Ok(CurvedRealizability::Feasible { solution, margin }) => {
            let faces: Vec<Value> = (0..solution.n_faces())
                .map(|f| {
                    let a = solution.face(FaceId(f));
                    json!({
                        "face": format!("s{f}"),
                        "angles": [rat(&a[0]), rat(&a[1]), rat(&a[2])],
                    })
                })
                .collect();
            r.set(
                "realizability",
                json!({
                    "verdict": "feasible",
                    "margin": rat(&margin),
                    "solution": faces,
                }),
            );
            r.line(format!(
                "# realizability: feasible, margin {}",
                rat(&margin)
            ));
            for f in 0..solution.n_faces() {
                let a = solution.face(FaceId(f));
                r.line(format!(
                    "# angles s{f}: {} {} {}",
                    rat(&a[0]),
                    rat(&a[1]),
                    rat(&a[2])
                ));
            }
            r.finish(0)
        }
        Ok(CurvedRealizability::Infeasible { obstruction }) => {
            let verified = obstruction.verify(st);
            r.set(
                "realizability",
                json!({
                    "verdict": "infeasible",
                    "obstruction": {
                        "face_potential": rats(&obstruction.face_potential),
                        "edge_potential": rats(&obstruction.edge_potential),
                        "vertex_potential": rats(&obstruction.vertex_potential),
                        "value": rat(&obstruction.value()),
                        "verified": verified,
                    },
                }),
            );
            r.line("# realizability: infeasible");
            r.line(format!(
                "# obstruction value: {}",
                rat(&obstruction.value())
            ));
            r.line(format!(
                "# face potential: {}",
                obstruction.face_potential.iter().map(rat).collect::<Vec<_>>().join(" ")
            ));
            r.line(format!(
                "# edge potential: {}",
                obstruction.edge_potential.iter().map(rat).collect::<Vec<_>>().join(" ")
            ));
            r.line(format!(
                "# vertex potential: {}",
                obstruction.vertex_potential.iter().map(rat).collect::<Vec<_>>().join(" ")
            ));
            r.line(format!("# obstruction verified: {verified}"));
            r.finish(1)
        }
    }
}

// ------------------------------------------------------------- 3-manifolds

fn m3_target(p: &ProblemFile) -> Rational {
    p.m3_target.clone().unwrap_or_else(|| rational(2, 1))
}

fn structure_json(p: &ProblemFile, a: &AngleStructure3<Rational>) -> Value {
    let tets: Vec<Value> = (0..a.n_tets())
        .map(|t| {
            let x = a.tet(TetId(t));
            json!({
                "tet": p.names[t],
                "angles": [rat(&x[0]), rat(&x[1]), rat(&x[2])],
            })
        })
        .collect();
    Value::Array(tets)
}

fn render_structure(r: &mut Report, p: &ProblemFile, a: &AngleStructure3<Rational>) {
    for t in 0..a.n_tets() {
        let x = a.tet(TetId(t));
        r.line(format!(
            "tet {}: {} {} {}",
            p.names[t],
            rat(&x[0]),
            rat(&x[1]),
            rat(&x[2])
        ));
    }
}

fn certificate_json(
    c: &DualCertificate3<Rational>,
    m: &IdealTriangulation3,
    target: &Rational,
) -> Value {
    json!({
        "tet_potential": rats(&c.v_tet),
        "edge_potential": rats(&c.v_edge),
        "objective": rat(&c.objective),
        "residuals": rats(&c.residuals),
        "refutes_weak": c.refutes_weak(),
        "verified": c.verify(m, target),
    })
}

fn render_certificate(
    r: &mut Report,
    c: &DualCertificate3<Rational>,
    m: &IdealTriangulation3,
    target: &Rational,
) {
    r.line(format!(
        "tet potentials: {}",
        c.v_tet.iter().map(rat).collect::<Vec<_>>().join(" ")
    ));
    r.line(format!(
        "edge potentials: {}",
        c.v_edge.iter().map(rat).collect::<Vec<_>>().join(" ")
    ));
    r.line(format!("objective: {}", rat(&c.objective)));
    r.line(format!(
        "residuals: {}",
        c.residuals.iter().map(rat).collect::<Vec<_>>().join(" ")
    ));
    r.line(format!("refutes weak: {}", c.refutes_weak()));
    r.line(format!("certificate verified: {}", c.verify(m, target)));
}

fn m3_check(file: &str, p: &ProblemFile, m: &IdealTriangulation3) -> Outcome {
    let mut r = Report::new("m3-check", file);
    let target = m3_target(p);
    r.set("target", rat(&target).into());
    r.line(format!("target: {}", rat(&target)));
    match linear_hyperbolic_lp_with_target::<Rational>(m, true, target.clone()) {
        LinearHyperbolicReport::Structure(a) => {
            r.set("verdict", "strict".into());
            r.set("solution", structure_json(p, &a));
            r.line("verdict: strict");
            render_structure(&mut r, p, &a);
            r.finish(0)
        }
        LinearHyperbolicReport::WeakStructure(a) => {
            r.set("verdict", "weak".into());
            r.set("solution", structure_json(p, &a));
            r.line("verdict: weak");
            r.line("note: angles solve the system but the best uniform margin is zero");
            render_structure(&mut r, p, &a);
            r.finish(1)
        }
        LinearHyperbolicReport::None(c) => {
            r.set("verdict", "none".into());
            r.set("certificate", certificate_json(&c, m, &target));
            r.line("verdict: none");
            render_certificate(&mut r, &c, m, &target);
            r.finish(1)
        }
    }
}

fn m3_normal(file: &str, m: &IdealTriangulation3) -> Outcome {
    let mut r = Report::new("m3-normal", file);
    let n = m.n_tets();
    let link = NormalSurfaceVector::new(vec![[1; 4]; n], vec![[0; 3]; n]);
    r.set(
        "surface",
        json!({
            "name": "vertex-link",
            "triangles": (0..n).map(|t| link.triangles(t).to_vec()).collect::<Vec<_>>(),
            "quads": (0..n).map(|t| link.quads(t).to_vec()).collect::<Vec<_>>(),
        }),
    );
    r.line("surface: vertex link (every triangle once, no quads)");

    let chi = normal_chi(m, &link).expect("the vertex link is always edge-consistent");
    let hext = hext_check(m, std::slice::from_ref(&link));
    let entry = &hext.entries[0];
    r.set(
        "entry",
        json!({
            "valid": entry.valid,
            "chi": rat(&chi),
            "boundary_parallel": entry.boundary_parallel,
            "obstructs_weak": entry.obstructs_weak,
            "obstructs_strict": entry.obstructs_strict,
        }),
    );
    r.set(
        "feasibility",
        json!({
            "weak": hext.weak_feasible,
            "strict": hext.strict_feasible,
            "consistent": hext.consistent,
        }),
    );
    r.line(format!("euler characteristic: {}", rat(&chi)));
    r.line(format!("boundary parallel: {}", entry.boundary_parallel));
    r.line(format!("obstructs weak structures: {}", entry.obstructs_weak));
    r.line(format!(
        "obstructs strict structures: {}",
        entry.obstructs_strict
    ));
    r.line(format!("weak structures feasible: {}", hext.weak_feasible));
    r.line(format!(
        "strict structures feasible: {}",
        hext.strict_feasible
    ));
    r.line(format!("lp agreement: {}", hext.consistent));

    let target = rational(2, 1);
    let cert = certificate_from_normal_surface::<Rational>(m, &link)
        .expect("the vertex link is always edge-consistent");
    r.set("certificate", certificate_json(&cert, m, &target));
    render_certificate(&mut r, &cert, m, &target);

    let obstructs = entry.obstructs_weak || entry.obstructs_strict;
    let verdict = if obstructs { "obstruction" } else { "pass" };
    r.set("verdict", verdict.into());
    r.line(format!("verdict: {verdict}"));
    r.finish(if obstructs { 1 } else { 0 })
}

// ---------------------------------------------------------------- describe

fn corner_name(p: &ProblemFile, c: Corner) -> String {
    format!("{}:{}", p.names[c.face().0], c.slot())
}

fn describe(file: &str, p: &ProblemFile) -> Outcome {
    let mut r = Report::new("describe", file);
    match &p.complex {
        Complex::Surface(t) => describe_surface(&mut r, p, t),
        Complex::Manifold(m) => describe_manifold(&mut r, p, m),
    }
    r.finish(0)
}

fn describe_surface(r: &mut Report, p: &ProblemFile, t: &TriangulatedSurface) {
    r.set("kind", "surface".into());
    r.set("faces", t.n_faces().into());
    r.set("edges", t.n_edges().into());
    r.set("vertices", t.n_vertices().into());
    r.set("euler_characteristic", t.euler_characteristic().into());
    r.set("closed", t.is_closed().into());
    r.set("connected", t.is_connected().into());
    r.set("simplicial", t.is_simplicial().into());
    r.set("boundary_components", t.boundary_components().len().into());
    r.line("kind: surface");
    r.line(format!("faces: {}", t.n_faces()));
    r.line(format!("edges: {}", t.n_edges()));
    r.line(format!("vertices: {}", t.n_vertices()));
    r.line(format!("euler characteristic: {}", t.euler_characteristic()));
    r.line(format!("closed: {}", t.is_closed()));
    r.line(format!("connected: {}", t.is_connected()));
    r.line(format!("simplicial: {}", t.is_simplicial()));
    r.line(format!(
        "boundary components: {}",
        t.boundary_components().len()
    ));

    let mut faces = Vec::new();
    for f in t.faces() {
        let vs: Vec<String> = (0..3)
            .map(|s| format!("v{}", t.vertex_of(Corner::new(f, s)).0))
            .collect();
        faces.push(json!({ "face": p.names[f.0], "vertices": vs }));
        r.line(format!(
            "face {} = {}",
            p.names[f.0],
            (0..3)
                .map(|s| format!("v{}", t.vertex_of(Corner::new(f, s)).0))
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    r.set("face_table", Value::Array(faces));

    let mut edges = Vec::new();
    for e in t.edge_ids() {
        let edge = t.edge(e);
        match edge.partner {
            Some(partner) => {
                edges.push(json!({
                    "edge": format!("e{}", e.0),
                    "lead": dart_name(p, edge.lead),
                    "partner": dart_name(p, partner),
                }));
                r.line(format!(
                    "edge e{}: {} = {}",
                    e.0,
                    dart_name(p, edge.lead),
                    dart_name(p, partner)
                ));
            }
            None => {
                edges.push(json!({
                    "edge": format!("e{}", e.0),
                    "lead": dart_name(p, edge.lead),
                    "partner": Value::Null,
                }));
                r.line(format!(
                    "edge e{}: {} (boundary)",
                    e.0,
                    dart_name(p, edge.lead)
                ));
            }
        }
    }
    r.set("edge_table", Value::Array(edges));

    let mut vertices = Vec::new();
    for v in t.vertex_ids() {
        let vx = t.vertex(v);
        let corners: Vec<String> = vx.corners.iter().map(|&c| corner_name(p, c)).collect();
        vertices.push(json!({
            "vertex": format!("v{}", v.0),
            "boundary": vx.on_boundary,
            "corners": corners,
        }));
        r.line(format!(
            "vertex v{}: {}, corners: {}",
            v.0,
            if vx.on_boundary { "boundary" } else { "interior" },
            vx.corners
                .iter()
                .map(|&c| corner_name(p, c))
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    r.set("vertex_table", Value::Array(vertices));
}

fn describe_manifold(r: &mut Report, p: &ProblemFile, m: &IdealTriangulation3) {
    r.set("kind", "manifold".into());
    r.set("tets", m.n_tets().into());
    r.set("edge_classes", m.n_classes().into());
    r.line("kind: manifold");
    r.line(format!("tets: {}", m.n_tets()));
    r.line(format!("edge classes: {}", m.n_classes()));

    let mut classes = Vec::new();
    for e in 0..m.n_classes() {
        let id = dihedra::three_manifold::EdgeClassId(e);
        let slots: Vec<String> = m
            .class_slots(id)
            .iter()
            .map(|&(t, s)| {
                let (a, b) = EDGE_VERTICES[s];
                format!("{}.{}{}", p.names[t], a, b)
            })
            .collect();
        classes.push(json!({
            "class": format!("e{e}"),
            "valence": m.valence(id),
            "slots": slots,
        }));
        r.line(format!(
            "class e{e}: valence {}, slots: {}",
            m.valence(id),
            m.class_slots(id)
                .iter()
                .map(|&(t, s)| {
                    let (a, b) = EDGE_VERTICES[s];
                    format!("{}.{}{}", p.names[t], a, b)
                })
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    r.set("class_table", Value::Array(classes));

    let mut gluings = Vec::new();
    for t in 0..m.n_tets() {
        for f in 0..4 {
            let g = m.gluing(t, f);
            gluings.push(json!({
                "from": format!("{}:{}", p.names[t], f),
                "to": format!("{}:{}", p.names[g.tet], g.face),
                "map": g.map.to_vec(),
            }));
        }
    }
    r.set("gluing_table", Value::Array(gluings));
}
