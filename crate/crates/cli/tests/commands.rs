use std::fs;

use kinesphere_cli::capture;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["kinesphere"];
    argv.extend_from_slice(args);
    capture(argv)
}

#[test]
fn invert_prints_only_the_sequence() {
    let (code, out, err) = run(&["invert", "fb", "MRF MLB"]);
    assert_eq!((code, out.as_str(), err.as_str()), (0, "MRB MLF\n", ""));
}

#[test]
fn invert_notes_fixed_directions_on_stderr() {
    let (code, out, err) = run(&["invert", "fb", "HR MRF"]);
    assert_eq!(code, 0);
    assert_eq!(out, "HR MRB\n");
    assert!(err.contains("HR is fixed by fb"), "{err}");
}

#[test]
fn invert_explain_and_composites() {
    let (code, out, _) = run(&["invert", "fb.lr", "MRF", "--explain"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("MLB"));
    assert!(out.contains("permutation: "));
}

#[test]
fn octahedral_inversion_from_the_command_line() {
    let (code, out, _) = run(&["invert", "octa", "BACK UP RIGHT"]);
    assert_eq!((code, out.as_str()), (0, "FWD DOWN LEFT\n"));
}

#[test]
fn zones_table() {
    let (code, out, _) = run(&["zones"]);
    assert_eq!(code, 0);
    let left_arm = out.lines().find(|l| l.starts_with("Left Arm")).unwrap();
    assert!(left_arm.contains("HL        FH BH MLB LL MLF"), "{left_arm}");
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn orbits_of_the_horizontal_plane_stabilizer() {
    let (code, out, _) = run(&[
        "orbits",
        "icosahedron",
        "--group",
        "full",
        "--stab-plane",
        "horizontal",
    ]);
    assert_eq!(code, 0);
    assert!(
        out.contains("\norbits: (v1 v9)(v2 v10)(v3 v11)(v4 v12)\nfixed: v5 v6 v7 v8\n"),
        "{out}"
    );
}

#[test]
fn orbits_accept_tokens_and_sets() {
    let (_, by_token, _) = run(&["orbits", "octahedron", "--stab", "RIGHT"]);
    let (_, by_number, _) = run(&["orbits", "octahedron", "--stab", "v5"]);
    assert_eq!(by_token, by_number);
    assert!(by_number.contains("(order 4)"));

    let (code, out, _) = run(&["orbits", "icosahedron", "--stab", "v1,v2", "--setwise"]);
    assert_eq!(code, 0);
    assert!(out.contains("(order 2)"));
    assert!(out.contains("fixed: none"));
}

#[test]
fn whole_group_orbits_are_transitive() {
    for solid in ["octahedron", "cube", "icosahedron"] {
        let (code, out, _) = run(&["orbits", solid, "--group", "full"]);
        assert_eq!(code, 0);
        let orbits = out.lines().find(|l| l.starts_with("orbits:")).unwrap();
        assert_eq!(orbits.matches('(').count(), 1, "{orbits}");
    }
}

#[test]
fn info_reports_group_orders() {
    let (code, out, _) = run(&["info", "cube"]);
    assert_eq!(code, 0);
    assert!(out.contains("rotation group order 24, full symmetry group order 48"));
    let (code, json, _) = run(&["info", "icosahedron", "--json"]);
    assert_eq!(code, 0);
    assert!(json.trim_start().starts_with('{'));
}

#[test]
fn svg_is_well_formed_with_twelve_nodes() {
    let (code, svg, _) = run(&[
        "clock",
        "--form",
        "girdle",
        "--device",
        "T3",
        "--render",
        "svg",
        "--show",
        "labels,path,cosets,diameters",
    ]);
    assert_eq!(code, 0);
    let doc = roxmltree::Document::parse(&svg).expect("valid XML");
    let nodes = doc
        .descendants()
        .filter(|n| n.attribute("class") == Some("clock-node"))
        .count();
    assert_eq!(nodes, 12);
    assert_eq!(
        doc.descendants().filter(|n| n.has_tag_name("polyline")).count(),
        2
    );
}

#[test]
fn rendering_is_deterministic() {
    let args = [
        "clock",
        "--form",
        "girdle",
        "--show",
        "labels,path,cosets",
        "--cosets",
        "3",
    ];
    let first = run(&args);
    for _ in 0..3 {
        assert_eq!(run(&args), first);
    }
    let svg = ["clock", "--render", "svg"];
    assert_eq!(run(&svg), run(&svg));
}

#[test]
fn clock_writes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("clock.svg");
    let (code, out, _) = run(&["clock", "--render", "svg", "--output", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    assert!(fs::read_to_string(path).unwrap().contains("clock-node"));
}

#[test]
fn ascii_clock_stays_narrow() {
    let (code, out, _) = run(&[
        "clock",
        "--show",
        "labels,path,cosets,diameters",
        "--form",
        "attack-scale",
    ]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.chars().count() <= 80));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
    assert_eq!(run(&[]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["orbits", "icosahedron", "--group", "half"]).0, 1);

    let (code, out, err) = run(&["invert", "fb", "MRF XYZ"]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert_eq!(err, "1:5: unknown direction `XYZ` (token 2)\n");

    assert_eq!(run(&["invert", "fb", "UP"]).0, 2);
    assert_eq!(run(&["invert", "zz", "FH"]).0, 2);
    assert_eq!(run(&["info", "dodecahedron"]).0, 2);
    assert_eq!(run(&["orbits", "cube", "--stab-plane", "horizontal"]).0, 2);
    assert_eq!(run(&["clock", "--form", "nothing"]).0, 2);
}

#[test]
fn check_reports_every_case() {
    let (code, out, _) = run(&["check"]);
    let summary = out.lines().last().unwrap();
    let total = kinesphere_cli::check::cases().len();
    assert!(summary.ends_with(&format!(
        "{total} total in {}",
        summary.rsplit(' ').next().unwrap()
    )));
    let fails = out.lines().filter(|l| l.starts_with("FAIL")).count();
    assert_eq!(code, if fails == 0 { 0 } else { 1 });
}

#[test]
fn scripts_run_and_report_positions() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.kin");
    fs::write(
        &good,
        "seq a = MRF MLB\napply fb.lr a -> b\nform g @ primary = 0 2 4\napply T3 g -> h\n",
    )
    .unwrap();
    let (code, out, _) = run(&["run", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "seq a = MRF MLB\nseq b = MLB MRF\nform g @ primary = 0 2 4\nform h @ primary = 3 5 7\n"
    );

    let bad = dir.path().join("bad.kin");
    fs::write(&bad, "seq a = FH\napply fb a -> a\n").unwrap();
    let (code, _, err) = run(&["run", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.starts_with("2:15: "), "{err}");
}

#[test]
fn custom_config_is_used() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("scales.json");
    fs::write(
        &config,
        r#"{"scales":[{"name":"alt","order":[1,2,3,4,5,6,7,8,9,10,11,12]}],"trace_forms":[]}"#,
    )
    .unwrap();
    let (code, out, err) = run(&["--config", config.to_str().unwrap(), "clock", "--scale", "alt"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("scale alt"));
    assert!(err.starts_with("warning: "), "{err}");

    fs::write(&config, "{").unwrap();
    assert_eq!(run(&["--config", config.to_str().unwrap(), "zones"]).0, 0);
    assert_eq!(run(&["--config", config.to_str().unwrap(), "clock"]).0, 2);
}
