use std::path::PathBuf;

use toric_orbifold::cli::report::{
    BiholomorphicComparison, DelzantReport, FaceRecord, GroupRecord, JsonInt, StabilizerReport, SymplecticComparison,
    ValidateReport, VerifyReport,
};
use toric_orbifold::cli::{run, EXIT_IO, EXIT_OK, EXIT_VALIDATION};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

fn toric(args: &[&str]) -> (i32, String, String) {
    let argv = std::iter::once("toric".to_string()).chain(args.iter().map(|a| {
        if a.ends_with(".json") && !a.starts_with('/') {
            data(a)
        } else {
            a.to_string()
        }
    }));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json<T: serde::de::DeserializeOwned>(args: &[&str]) -> T {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = toric(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}"))
}

fn ints(v: &[i64]) -> Vec<JsonInt> {
    v.iter().map(|&x| JsonInt(x.into())).collect()
}

#[test]
fn validate_football() {
    let (code, out, _) = toric(&["validate", "football_3_5.json"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("simple, rational, bounded; facets labeled 3, 5"), "{out}");
    let r: ValidateReport = json(&["validate", "football_3_5.json"]);
    assert_eq!(r.labels, vec![3, 5]);
    assert_eq!(r.vertices, vec![vec!["0".to_string()], vec!["1".to_string()]]);
}

#[test]
fn compare_labels_versus_fans() {
    let (code, out, _) = toric(&["compare", "--biholomorphic", "t1.json", "t1_label2.json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "fans equal; NOT symplectomorphic (labels differ)\n");
    let b: BiholomorphicComparison = json(&["compare", "--biholomorphic", "t1.json", "t1_label2.json"]);
    assert!(b.fans_equal && !b.symplectomorphic);
    let s: SymplecticComparison = json(&["compare", "--symplectic", "t1.json", "t1_label2.json"]);
    assert!(!s.isomorphic);
    let same: SymplecticComparison = json(&["compare", "--symplectic", "t1.json", "t1.json"]);
    assert_eq!(same.translation, Some(vec!["0".to_string(), "0".to_string()]));
    let (_, out, _) = toric(&["compare", "--biholomorphic", "t1.json", "w2.json"]);
    assert!(out.starts_with("fans differ"));
}

#[test]
fn stabilizers_of_w2() {
    let (code, out, _) = toric(&["stabilizers", "w2.json"]);
    assert_eq!(code, EXIT_OK);
    let line = out.lines().find(|l| l.contains("vertex (0, 1)")).unwrap();
    assert!(line.ends_with("[2]"), "{line}");
    assert_eq!(out.lines().last(), Some("oracles agree"));
    let r: StabilizerReport = json(&["stabilizers", "w2.json"]);
    assert!(r.oracles_agree);
    let vertex = r.stabilizers.iter().find(|s| s.face == vec![0, 2]).unwrap();
    assert_eq!(vertex.invariant_factors, ints(&[2]));
    assert_eq!(vertex.structure_group, ints(&[2]));
    assert_eq!(r.stabilizers.iter().filter(|s| s.invariant_factors.is_empty()).count(), 5);
}

#[test]
fn json_reports_parse_into_their_schemas() {
    let faces: Vec<FaceRecord> = json(&["faces", "tetrahedron_labeled.json"]);
    assert_eq!(faces.len(), 15);
    assert_eq!(faces[0].codim, 0);
    let groups: Vec<GroupRecord> = json(&["structure-groups", "tetrahedron_labeled.json"]);
    assert_eq!(groups.len(), 14);
    let fan: Vec<Vec<Vec<JsonInt>>> = json(&["fan", "w2.json"]);
    let rays: Vec<&Vec<JsonInt>> = fan.iter().filter(|c| c.len() == 1).map(|c| &c[0]).collect();
    assert_eq!(rays, vec![&ints(&[-1, -2]), &ints(&[0, 1]), &ints(&[1, 0])]);
    let vertices: Vec<Vec<String>> = json(&["vertices", "w2.json"]);
    assert_eq!(vertices.len(), 3);
    let d: DelzantReport = json(&["delzant", "w2.json"]);
    assert_eq!(d.kernel_basis, vec![ints(&[1, 2, 1])]);
    assert_eq!(d.level, vec!["2".to_string()]);
    let v: VerifyReport = json(&["verify", "tetrahedron_labeled.json", "--samples", "20", "--seed", "9"]);
    assert!(v.passed && v.regular);
    assert_eq!((v.samples, v.vertices_attained, v.vertex_count), (24, 4, 4));
    let betti: Vec<u64> = json(&["betti", "square.json"]);
    assert_eq!(betti, vec![1, 0, 2, 0, 1]);
    let betti: Vec<u64> = json(&["betti", "t1.json", "--xi", "-1,3"]);
    assert_eq!(betti, vec![1, 0, 1, 0, 1]);
}

#[test]
fn reports_round_trip_byte_for_byte() {
    let (_, out, _) = toric(&["--json", "delzant", "tetrahedron_labeled.json"]);
    let parsed: DelzantReport = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", out);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["betti", "tetrahedron_labeled.json"],
        vec!["verify", "w2.json", "--samples", "30"],
        vec!["--json", "verify", "square.json", "--seed", "4"],
        vec!["faces", "tetrahedron_labeled.json"],
    ] {
        assert_eq!(toric(&args), toric(&args));
    }
}

#[test]
fn exit_codes() {
    let (code, _, err) = toric(&["validate", "unbounded.json"]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.contains("unbounded"), "{err}");
    let (code, _, err) = toric(&["betti", "t1.json", "--xi", "1,1"]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.contains("vertex"), "{err}");
    assert_eq!(toric(&["betti", "t1.json", "--xi", "1,2,3"]).0, EXIT_VALIDATION);
    assert_eq!(toric(&["validate", "missing.json"]).0, EXIT_IO);
    assert_eq!(toric(&["compare", "t1.json", "w2.json"]).0, EXIT_IO);
    assert_eq!(toric(&["compare", "--symplectic", "--biholomorphic", "t1.json", "w2.json"]).0, EXIT_IO);
    assert_eq!(toric(&["--help"]).0, EXIT_OK);

    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path.to_string_lossy().into_owned()
    };
    let garbage = write("garbage.json", "{ not json");
    assert_eq!(toric(&["validate", &garbage]).0, EXIT_IO);
    let bad_offset = write("offset.json", r#"{"dim":1,"halfspaces":[{"normal":[1],"offset":"1/0","label":1}]}"#);
    assert_eq!(toric(&["validate", &bad_offset]).0, EXIT_IO);
    let bad_label = write(
        "label.json",
        r#"{"dim":1,"halfspaces":[{"normal":[1],"offset":"0","label":0},{"normal":[-1],"offset":"-1","label":1}]}"#,
    );
    let (code, _, err) = toric(&["validate", &bad_label]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.contains("halfspace 0"), "{err}");
    let scaled = write(
        "scaled.json",
        r#"{"dim":1,"halfspaces":[{"normal":[2],"offset":0,"label":1},{"normal":[-1],"offset":"-1","label":1}]}"#,
    );
    let (code, _, err) = toric(&["validate", &scaled]);
    assert_eq!(code, EXIT_OK);
    assert!(err.starts_with("warning:"), "{err}");
}
