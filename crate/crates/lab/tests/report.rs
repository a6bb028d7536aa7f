use std::fs;
use std::path::Path;

use blowup_core::search::{verify_theorem, SearchConfig};
use blowup_core::StarForestSpec;
use blowup_lab::report::Report;
use blowup_lab::{decode_graph6, emit_report};

const KEYS: [&str; 12] = [
    "n",
    "p",
    "ks",
    "ex_brute",
    "ex_formula",
    "extremal_g6",
    "rho_max",
    "exsp_g6",
    "containment_holds",
    "formula_matches",
    "diagnostics",
    "runtime_ms",
];

fn golden(name: &str, n: usize, ks: &[usize]) {
    let spec = StarForestSpec::new(2, ks).unwrap();
    let r = verify_theorem(n, &spec, &SearchConfig::default()).unwrap();
    let json = emit_report(&r, 0);
    let want = fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap();
    assert_eq!(json, want, "{name}");

    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    let object = value.as_object().unwrap();
    for key in KEYS {
        assert!(object.contains_key(key), "missing {key}");
    }
    assert_eq!(object.len(), KEYS.len());
    let parsed: Report = serde_json::from_value(value).unwrap();
    for g6 in &parsed.extremal_g6 {
        assert_eq!(decode_graph6(g6).unwrap().edge_count(), parsed.ex_brute);
    }
    assert_eq!(parsed.exsp_g6.len(), parsed.diagnostics.spectral.len());
}

#[test]
fn golden_triangle_free_five() {
    golden("verify_n5_p2_ks1.json", 5, &[1]);
}

#[test]
fn golden_bowtie_six() {
    golden("verify_n6_p2_ks2.json", 6, &[2]);
}

#[test]
fn golden_two_triangles_seven() {
    golden("verify_n7_p2_ks1_1.json", 7, &[1, 1]);
}
