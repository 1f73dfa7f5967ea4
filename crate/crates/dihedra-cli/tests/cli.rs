//! End-to-end tests of the command-line binary: exit codes, report
//! contents, error positions, and byte-exact JSON round-trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dihedra"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_on(args: &[&str], file: &Path) -> (i32, String, String) {
    let out = bin().args(args).arg(file).output().expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("dihedra-cli-test-{name}"));
    std::fs::write(&path, contents).expect("temp file written");
    path
}

// ----------------------------------------------------------------- parsing

#[test]
fn empty_file_is_a_syntax_error() {
    let f = write_temp("empty.tri", "");
    let (code, _, err) = run_on(&["check"], &f);
    assert_eq!(code, 2);
    assert!(err.contains("1:1: syntax error"), "stderr: {err}");
    assert!(err.contains("header"), "stderr: {err}");
}

#[test]
fn out_of_range_slot_is_an_unresolved_reference() {
    let f = write_temp("badslot.tri", "surface 2\nface f0\nangle f0:9 1/2\n");
    let (code, _, err) = run_on(&["check"], &f);
    assert_eq!(code, 2);
    assert!(err.contains("3:7: unresolved reference"), "stderr: {err}");
    assert!(err.contains("slot 9 out of range"), "stderr: {err}");
}

#[test]
fn unknown_face_is_an_unresolved_reference() {
    let f = write_temp("badface.tri", "surface 2\nface f0\nglue f0:0 f9:0\n");
    let (code, _, err) = run_on(&["check"], &f);
    assert_eq!(code, 2);
    assert!(err.contains("unresolved reference"), "stderr: {err}");
    assert!(err.contains("unknown face `f9`"), "stderr: {err}");
}

#[test]
fn conflicting_angle_lines_for_one_edge_class_are_duplicates() {
    let f = write_temp(
        "dupangle.tri",
        "surface 2\nface f0\nface f1\nglue f0:1 f1:2\nangle f0:1 1/2\nangle f1:2 1/3\n",
    );
    let (code, _, err) = run_on(&["check"], &f);
    assert_eq!(code, 2);
    assert!(err.contains("duplicate declaration"), "stderr: {err}");
}

#[test]
fn restating_the_same_angle_twice_is_allowed() {
    let f = write_temp(
        "sameangle.tri",
        "surface 2\nface f0\nface f1\nglue f0:1 f1:2\n\
         angle f0:1 1/1\nangle f1:2 1/1\n\
         angle f0:0 1/4\nangle f0:2 1/4\nangle f1:0 1/4\nangle f1:1 1/4\n",
    );
    let (code, out, _) = run_on(&["check"], &f);
    assert_eq!(code, 0, "output: {out}");
}

#[test]
fn regluing_a_side_is_a_duplicate() {
    let f = write_temp(
        "reglue.tri",
        "surface 2\nface f0\nface f1\nface f2\nglue f0:0 f1:0\nglue f0:0 f2:0\n",
    );
    let (code, _, err) = run_on(&["check"], &f);
    assert_eq!(code, 2);
    assert!(err.contains("duplicate declaration"), "stderr: {err}");
    assert!(err.contains("already glued on line 5"), "stderr: {err}");
}

#[test]
fn duplicate_face_names_are_rejected() {
    let f = write_temp("dupface.tri", "surface 2\nface f0\nface f0\n");
    let (code, _, err) = run_on(&["check"], &f);
    assert_eq!(code, 2);
    assert!(err.contains("duplicate declaration"), "stderr: {err}");
}

#[test]
fn surface_directives_are_rejected_in_manifold_files() {
    let f = write_temp("mixed.tri3", "manifold 3\ntet t0\nface f0\n");
    let (code, _, err) = run_on(&["m3-check"], &f);
    assert_eq!(code, 2);
    assert!(err.contains("syntax error"), "stderr: {err}");
    assert!(err.contains("surface 2"), "stderr: {err}");
}

#[test]
fn unglued_tetrahedron_faces_are_reported() {
    let f = write_temp(
        "open.tri3",
        "manifold 3\ntet t0\nglueface t0:0 t0:1 perm 023\n",
    );
    let (code, _, err) = run_on(&["m3-check"], &f);
    assert_eq!(code, 2);
    assert!(err.contains("not glued"), "stderr: {err}");
}

#[test]
fn permutation_digits_must_name_the_target_face() {
    let f = write_temp(
        "badperm.tri3",
        "manifold 3\ntet t0\ntet t1\nglueface t0:0 t1:0 perm 012\n",
    );
    let (code, _, err) = run_on(&["m3-check"], &f);
    assert_eq!(code, 2);
    assert!(err.contains("unresolved reference"), "stderr: {err}");
}

#[test]
fn bangle_on_an_interior_vertex_is_unresolved() {
    // closed sphere: every vertex interior
    let f = write_temp(
        "bangle-closed.tri",
        "surface 2\nface f0\nface f1\nglue f0:0 f1:0\nglue f0:1 f1:2\nglue f0:2 f1:1\n\
         bangle v0 1/2\n",
    );
    let (code, _, err) = run_on(&["check"], &f);
    assert_eq!(code, 2);
    assert!(err.contains("interior"), "stderr: {err}");
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let f = write_temp(
        "comments.tri",
        "# leading comment\n\n   \nsurface 2   # trailing comment\nface f0 # name\n",
    );
    let (code, out, _) = run_on(&["describe"], &f);
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("faces: 1"), "output: {out}");
}

// ------------------------------------------------------------ square runs

#[test]
fn square_file_checks_feasible_and_prints_its_angles() {
    let (code, out, _) = run_on(&["check"], &data("square.tri"));
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("verdict: feasible"), "output: {out}");
    assert!(out.contains("face f0: 1/4 1/2 1/4"), "output: {out}");
    assert!(out.contains("face f1: 1/4 1/4 1/2"), "output: {out}");
}

#[test]
fn square_lp_margin_is_exactly_one_quarter() {
    let (code, out, _) = run_on(&["lp"], &data("square.tri"));
    assert_eq!(code, 0);
    assert!(out.contains("margin: 1/4"), "output: {out}");
}

#[test]
fn squeezed_square_flow_fails_with_a_cut_certificate() {
    let (code, out, _) = run_on(&["flow"], &data("square-bad.tri"));
    assert_eq!(code, 1);
    assert!(out.contains("verdict: infeasible"), "output: {out}");
    assert!(out.contains("violating faces: f0 f1"), "output: {out}");
    assert!(out.contains("excess: -1/2"), "output: {out}");
}

#[test]
fn engines_agree_on_the_sample_surfaces() {
    for file in ["square.tri", "square-bad.tri"] {
        let flow = run_on(&["check"], &data(file)).0;
        let lp = run_on(&["check", "--engine", "lp"], &data(file)).0;
        let oracle = run_on(&["check-oracle"], &data(file)).0;
        assert_eq!(flow, lp, "{file}: flow vs lp");
        assert_eq!(flow, oracle, "{file}: flow vs oracle");
    }
}

#[test]
fn fixed_epsilon_is_honored_by_the_flow_engine() {
    let (code, out, _) = run_on(&["flow", "--epsilon", "1/4"], &data("square.tri"));
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("margin: 1/4"), "output: {out}");

    // zero epsilon asks for the plain nonnegative system; a fold carrying
    // a full half-turn pins the remaining corner of its face to zero, so
    // the instance is solvable but never strictly
    let critical = write_temp(
        "critical-fold.tri",
        "surface 2\nface f0\nface f1\nglue f0:1 f0:2\nglue f0:0 f1:0\n\
         angle f0:1 1/1\nangle f0:0 1/2\nangle f1:1 1/4\nangle f1:2 1/4\n",
    );
    let (strict, out_strict, _) = run_on(&["flow"], &critical);
    let (relaxed, out_relaxed, _) = run_on(&["flow", "--epsilon", "0/1"], &critical);
    assert_eq!(strict, 1, "strict: {out_strict}");
    assert!(out_strict.contains("excess: 0/1"), "strict: {out_strict}");
    assert_eq!(relaxed, 0, "relaxed: {out_relaxed}");
    assert!(out_relaxed.contains("margin: 0/1"), "output: {out_relaxed}");
}

// ------------------------------------------------------- prescribed totals

#[test]
fn cone_prescriptions_route_to_the_lp_engine() {
    let (code, out, _) = run_on(&["check"], &data("pillowcase-cone.tri"));
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("mode: cone"), "output: {out}");
    assert!(out.contains("engine: lp"), "output: {out}");
    assert!(out.contains("face f0: 1/3 1/3 1/3"), "output: {out}");
}

#[test]
fn boundary_prescriptions_recover_the_square() {
    for file in ["square-bangle.tri", "square-boundary.tri"] {
        let (code, out, _) = run_on(&["check"], &data(file));
        assert_eq!(code, 0, "{file}: {out}");
        assert!(out.contains("margin: 1/4"), "{file}: {out}");
        assert!(out.contains("face f0: 1/4 1/2 1/4"), "{file}: {out}");
    }
}

#[test]
fn flow_refuses_prescription_modes() {
    let (code, _, err) = run_on(&["flow"], &data("pillowcase-cone.tri"));
    assert_eq!(code, 2);
    assert!(err.contains("--engine lp"), "stderr: {err}");
    let (code, _, err) = run_on(&["check-oracle"], &data("pillowcase-cone.tri"));
    assert_eq!(code, 2);
    assert!(err.contains("dihedral"), "stderr: {err}");
}

#[test]
fn zero_cone_prescription_is_infeasible() {
    // an interior vertex pinched flat cannot carry positive corners
    let f = write_temp(
        "zerocone.tri",
        "surface 2\nface f0\nface f1\nglue f0:0 f1:0\nglue f0:1 f1:2\nglue f0:2 f1:1\n\
         cone v0 0/1\ncone v1 1/1\ncone v2 1/1\n",
    );
    let (code, out, _) = run_on(&["check"], &f);
    assert_eq!(code, 1, "output: {out}");
    assert!(out.contains("verdict: infeasible"), "output: {out}");
}

#[test]
fn cone_mode_requires_full_vertex_coverage() {
    let f = write_temp(
        "partialcone.tri",
        "surface 2\nface f0\nface f1\nglue f0:0 f1:0\nglue f0:1 f1:2\nglue f0:2 f1:1\n\
         cone v0 2/3\n",
    );
    let (code, _, err) = run_on(&["check"], &f);
    assert_eq!(code, 2);
    assert!(err.contains("every vertex class"), "stderr: {err}");
}

// ----------------------------------------------------------- develop/shear

#[test]
fn realize_lays_out_the_square_exactly() {
    let (code, out, _) = run_on(&["realize"], &data("square.tri"));
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("max length mismatch: 0"), "output: {out}");
    assert!(out.contains("max angle mismatch: 0"), "output: {out}");
}

#[test]
fn the_square_diagonal_has_zero_shear() {
    let (code, out, _) = run_on(&["shear"], &data("square.tri"));
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("shear e1 (f0:1 = f1:2): 0\n"), "output: {out}");
}

// -------------------------------------------------------------- stellation

#[test]
fn stellate_reports_the_simplex_boundary_realizable() {
    let (code, out, _) = run_on(&["stellate"], &data("tet.tri"));
    assert_eq!(code, 0, "output: {out}");
    assert!(
        out.contains("# realizability: feasible, margin 2/7"),
        "output: {out}"
    );
    assert!(out.contains("# angles s0: 3/7 2/7 2/7"), "output: {out}");
}

#[test]
fn stellate_output_is_itself_a_problem_file() {
    let (code, out, _) = run_on(&["stellate"], &data("tet.tri"));
    assert_eq!(code, 0);
    let f = write_temp("stellated-tet.tri", &out);
    let (code, described, _) = run_on(&["describe"], &f);
    assert_eq!(code, 0, "output: {described}");
    assert!(described.contains("faces: 12"), "output: {described}");
    assert!(described.contains("vertices: 8"), "output: {described}");
    assert!(described.contains("closed: true"), "output: {described}");
}

#[test]
fn stellating_twice_leaves_the_positive_curvature_regime() {
    let (code, once, _) = run_on(&["stellate"], &data("tet.tri"));
    assert_eq!(code, 0);
    let f = write_temp("stellated-once.tri", &once);
    let (code, twice, _) = run_on(&["stellate"], &f);
    assert_eq!(code, 1, "output: {twice}");
    assert!(twice.contains("# realizability: infeasible"), "output: {twice}");
    assert!(twice.contains("# obstruction verified: true"), "output: {twice}");
}

#[test]
fn stellate_on_a_disk_reports_not_applicable() {
    let (code, out, _) = run_on(&["stellate"], &data("square.tri"));
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("not applicable"), "output: {out}");
}

// ------------------------------------------------------------- 3-manifolds

#[test]
fn two_tetrahedra_admit_the_regular_strict_solution() {
    let (code, out, _) = run_on(&["m3-check"], &data("twotet.tri3"));
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("verdict: strict"), "output: {out}");
    assert!(out.contains("tet t0: 1/3 1/3 1/3"), "output: {out}");
    assert!(out.contains("tet t1: 1/3 1/3 1/3"), "output: {out}");
}

#[test]
fn a_valence_one_edge_refutes_even_weak_solutions() {
    let (code, out, _) = run_on(&["m3-check"], &data("pinched.tri3"));
    assert_eq!(code, 1, "output: {out}");
    assert!(out.contains("verdict: none"), "output: {out}");
    assert!(out.contains("refutes weak: true"), "output: {out}");
    assert!(out.contains("certificate verified: true"), "output: {out}");
}

#[test]
fn a_valence_two_edge_forces_a_merely_weak_solution() {
    let (code, out, _) = run_on(&["m3-check"], &data("weak.tri3"));
    assert_eq!(code, 1, "output: {out}");
    assert!(out.contains("verdict: weak"), "output: {out}");
    assert!(out.contains("tet t0: 1/1 0/1 0/1"), "output: {out}");
}

#[test]
fn lowering_the_edge_target_revives_strictness() {
    let (code, out, _) = run_on(&["m3-check"], &data("valence2-cone1.tri3"));
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("target: 1/1"), "output: {out}");
    assert!(out.contains("verdict: strict"), "output: {out}");
    assert!(out.contains("tet t0: 1/4 1/2 1/4"), "output: {out}");
}

#[test]
fn vertex_link_passes_on_the_census_and_obstructs_the_pinched_instance() {
    let (code, out, _) = run_on(&["m3-normal"], &data("twotet.tri3"));
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("euler characteristic: 0/1"), "output: {out}");
    assert!(out.contains("objective: 0/1"), "output: {out}");
    assert!(out.contains("verdict: pass"), "output: {out}");

    let (code, out, _) = run_on(&["m3-normal"], &data("pinched.tri3"));
    assert_eq!(code, 1, "output: {out}");
    assert!(out.contains("euler characteristic: 4/1"), "output: {out}");
    assert!(out.contains("obstructs weak structures: true"), "output: {out}");
    assert!(out.contains("verdict: obstruction"), "output: {out}");
}

// ----------------------------------------------------------------- output

#[test]
fn json_reports_round_trip_byte_exactly() {
    let cases: &[(&[&str], &str)] = &[
        (&["check"], "square.tri"),
        (&["lp"], "square-bad.tri"),
        (&["check"], "pillowcase-cone.tri"),
        (&["realize"], "square.tri"),
        (&["shear"], "square.tri"),
        (&["stellate"], "tet.tri"),
        (&["m3-check"], "twotet.tri3"),
        (&["m3-check"], "pinched.tri3"),
        (&["m3-normal"], "twotet.tri3"),
        (&["describe"], "square.tri"),
        (&["describe"], "twotet.tri3"),
    ];
    for (args, file) in cases {
        let mut argv = args.to_vec();
        argv.push("--emit");
        argv.push("json");
        let (_, first, _) = run_on(&argv, &data(file));
        let parsed: serde_json::Value =
            serde_json::from_str(first.trim_end()).unwrap_or_else(|e| {
                panic!("{file}: emitted JSON parses: {e}\n{first}")
            });
        let reprinted = serde_json::to_string(&parsed).expect("serializable");
        assert_eq!(
            reprinted,
            first.trim_end(),
            "{file}: reserialization must be byte-identical"
        );
        let (_, second, _) = run_on(&argv, &data(file));
        assert_eq!(first, second, "{file}: reruns must be byte-identical");
    }
}

#[test]
fn json_errors_carry_position_and_kind() {
    let f = write_temp("json-err.tri", "surface 2\nface f0\nangle f0:9 1/2\n");
    let (code, out, _) = run_on(&["check", "--emit", "json"], &f);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(out.trim_end()).expect("json error output");
    assert_eq!(v["error"]["kind"], "unresolved reference");
    assert_eq!(v["error"]["line"], 3);
    assert_eq!(v["error"]["col"], 7);
}

#[test]
fn multiple_files_run_in_order_with_the_worst_exit_code() {
    let out = run(&[
        "check",
        data("square.tri").to_str().unwrap(),
        data("square-bad.tri").to_str().unwrap(),
        "--jobs",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let first = text.find("square.tri").expect("first header");
    let second = text.find("square-bad.tri").expect("second header");
    assert!(first < second, "reports keep input order:\n{text}");
}

#[test]
fn jobs_json_stream_is_one_object_per_file() {
    let out = run(&[
        "check",
        data("square.tri").to_str().unwrap(),
        data("square-bad.tri").to_str().unwrap(),
        data("pillowcase-cone.tri").to_str().unwrap(),
        "--jobs",
        "3",
        "--emit",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid json per line");
        assert!(v.get("verdict").is_some());
    }
}

#[test]
fn missing_input_file_is_a_usage_error() {
    let (code, _, err) = run_on(&["check"], Path::new("/nonexistent/input.tri"));
    assert_eq!(code, 2);
    assert!(err.contains("No such file"), "stderr: {err}");
}

#[test]
fn kind_mismatches_are_usage_errors() {
    let (code, _, err) = run_on(&["m3-check"], &data("square.tri"));
    assert_eq!(code, 2);
    assert!(err.contains("manifold 3"), "stderr: {err}");
    let (code, _, err) = run_on(&["check"], &data("twotet.tri3"));
    assert_eq!(code, 2);
    assert!(err.contains("surface 2"), "stderr: {err}");
}

#[test]
fn describe_prints_canonical_class_indices() {
    let (code, out, _) = run_on(&["describe"], &data("square.tri"));
    assert_eq!(code, 0);
    for needle in [
        "faces: 2",
        "edges: 5",
        "vertices: 4",
        "euler characteristic: 1",
        "edge e1: f0:1 = f1:2",
        "vertex v0: boundary, corners: f0:0 f1:0",
    ] {
        assert!(out.contains(needle), "missing `{needle}` in:\n{out}");
    }
    let (code, out, _) = run_on(&["describe"], &data("twotet.tri3"));
    assert_eq!(code, 0);
    assert!(out.contains("tets: 2"), "output: {out}");
    assert!(out.contains("edge classes: 2"), "output: {out}");
    assert!(out.contains("valence 6"), "output: {out}");
}
