use std::path::Path;

use tiltkit::format::{
    algebra_from_file, algebra_to_file, complex_from_file, complex_to_file, module_from_file, module_to_file,
    read_json, AlgebraFile, ComplexFile, ModuleFile,
};
use tiltkit_core::module::{injective, projective};
use tiltkit_core::tilting::presentations_match;

fn corpus(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

#[test]
fn algebra_files_round_trip() {
    for name in ["fig1.json", "fig2.json", "sec5_A.json"] {
        let f: AlgebraFile = read_json(&corpus(name)).unwrap();
        let a = algebra_from_file(&f, 30).unwrap();
        let g = algebra_to_file(&a);
        assert_eq!(g, f, "{name}");
        let b = algebra_from_file(&g, 30).unwrap();
        assert_eq!(a, b);
        assert!(presentations_match(&a, &b).is_some());
    }
}

#[test]
fn complex_files_round_trip() {
    let a = algebra_from_file(&read_json(&corpus("fig1.json")).unwrap(), 30).unwrap();
    for name in ["fig1_T.json", "doubled_T.json", "unit_T.json", "stalk_cycle.json"] {
        let f: ComplexFile = read_json(&corpus(name)).unwrap();
        let c = complex_from_file(&a, &f).unwrap();
        let g = complex_to_file(&a, &c, f.algebra.clone());
        assert_eq!(complex_from_file(&a, &g).unwrap(), c, "{name}");
        let text = serde_json::to_string(&g).unwrap();
        let h: ComplexFile = serde_json::from_str(&text).unwrap();
        assert_eq!(h, g);
    }
}

#[test]
fn module_files_round_trip() {
    let a = algebra_from_file(&read_json(&corpus("sec5_A.json")).unwrap(), 30).unwrap();
    for v in 0..4 {
        for m in [projective(&a, v), injective(&a, v)] {
            let f = module_to_file(&a, &m, None);
            assert_eq!(module_from_file(&a, &f).unwrap(), m);
        }
    }
    let s: ModuleFile = read_json(&corpus("S1.json")).unwrap();
    let cycle = algebra_from_file(&read_json(&corpus("fig1.json")).unwrap(), 30).unwrap();
    assert_eq!(module_from_file(&cycle, &s).unwrap().dims(), &[1, 0, 0]);
}

#[test]
fn malformed_inputs_are_rejected() {
    let bad_version: AlgebraFile = serde_json::from_str(r#"{"format": 2, "vertices": ["1"]}"#).unwrap();
    assert!(algebra_from_file(&bad_version, 30).is_err());
    let unknown: AlgebraFile = serde_json::from_str(
        r#"{"format": 1, "vertices": ["1"], "arrows": [{"name": "a", "source": "1", "target": "2"}]}"#,
    )
    .unwrap();
    assert!(algebra_from_file(&unknown, 30).is_err());
    let a = algebra_from_file(&read_json(&corpus("fig1.json")).unwrap(), 30).unwrap();
    let d2: ComplexFile = serde_json::from_str(
        r#"{"format": 1, "terms": {"0": ["3"], "1": ["1"], "2": ["2"]},
            "diffs": {"0": [[{"coeff": "1", "path": ["gamma"]}]], "1": [[{"coeff": "1", "path": ["alpha"]}]]}}"#,
    )
    .unwrap();
    assert!(complex_from_file(&a, &d2).is_err());
    let shape: ComplexFile =
        serde_json::from_str(r#"{"format": 1, "terms": {"0": ["2"], "1": ["1"]}, "diffs": {"0": [[], []]}}"#).unwrap();
    assert!(complex_from_file(&a, &shape).is_err());
}
