use std::path::Path;
use std::sync::Arc;

use proptest::prelude::*;
use quasihopf::dimodule::{attach_kx_right_coaction, build_m_tensor_he};
use quasihopf::io::{
    canonical_json, dimodule_from_json, dimodule_to_json, module_from_json, module_to_json, smash_from_json, smash_to_json,
    structure_from_json, structure_to_json, IoError, ModuleFile,
};
use quasihopf::quasigroup::catalog;
use quasihopf::quasimodule::{attach_kx_coaction, build_kx, regular_module};
use quasihopf::{build_kq, trivial_grading, Field, HopfQuasigroupData, QuasimoduleHopfQuasigroup};

fn here() -> &'static Path {
    Path::new(".")
}

#[test]
fn kz3_file_layout() {
    let h = build_kq(&catalog("Z3").unwrap(), Field::Rational);
    let text = structure_to_json(&h);
    assert!(text.starts_with("{\n  \"antipode\": [\n    [0,0,0,\"1/1\"],\n"));
    assert!(text.contains("\"field\": \"Q\""));
    assert!(text.contains("\"grading\": [\n    [0,1,2],\n    [1,2,0],\n    [2,0,1]\n  ]"));
    assert!(text.contains("\"unit\": [\n    [0,\"1/1\"]\n  ]"));
    let h5 = build_kq(&catalog("Z3").unwrap(), Field::prime(5).unwrap());
    assert!(structure_to_json(&h5).contains("[1,2,0,0,0,\"1 mod 5\"]"));
}

#[test]
fn structures_round_trip() {
    for name in ["Z1", "Z4", "S3", "moufang12", "ip_min_nonassoc"] {
        for field in [Field::Rational, Field::prime(3).unwrap()] {
            let h = build_kq(&catalog(name).unwrap(), field);
            let text = structure_to_json(&h);
            let back = structure_from_json(&text).unwrap();
            assert_eq!(back, h);
            assert_eq!(structure_to_json(&back), text);
        }
    }
}

#[test]
fn hand_written_input_is_canonicalized() {
    // shuffled keys, integer scalars, entries out of order, explicit zero
    let text = r#"{"unit": [[0, 1]], "dims": [1, 1], "grading": "2\n0 1\n1 0\n", "field": "Q",
        "mult": [[1,1,0,0,0,"1"], [0,0,0,0,0,1], [0,1,0,0,0,1], [1,0,0,0,0,"2/2"]],
        "comult": [[1,0,0,0,1], [0,0,0,0,1]], "counit": [[0,0,1],[1,0,1]],
        "antipode": [[0,0,0,1],[1,0,0,1],[1,0,0,0]]}"#;
    assert!(matches!(structure_from_json(text), Err(IoError::Format(_))));
    let text = text.replace(",[1,0,0,0]]", "]");
    let h = structure_from_json(&text).unwrap();
    assert_eq!(h, build_kq(&catalog("Z2").unwrap(), Field::Rational));
    let again = structure_to_json(&h);
    assert_eq!(again, canonical_json(&serde_json::from_str(&again).unwrap()));
}

#[test]
fn malformed_structures_are_rejected() {
    let good = structure_to_json(&build_kq(&catalog("Z2").unwrap(), Field::Rational));
    let cases = [
        good.replace("\"Q\"", "\"F4\""),
        good.replace("\"dims\": [1,1]", "\"dims\": [1]"),
        good.replace("[1,1,0,0,0,\"1/1\"]", "[1,1,0,1,0,\"1/1\"]"),
        good.replace("[1,1,0,0,0,\"1/1\"]", "[2,1,0,0,0,\"1/1\"]"),
        good.replace("[1,1,0,0,0,\"1/1\"]", "[1,1,0,0,0,\"x\"]"),
        good.replace("[1,1,0,0,0,\"1/1\"]", "[1,1,0,0,\"1/1\"]"),
        "[]".to_string(),
        "{".to_string(),
    ];
    for c in cases {
        assert!(structure_from_json(&c).is_err(), "{c}");
    }
}

#[test]
fn modules_round_trip() {
    let z3 = catalog("Z3").unwrap();
    let m = attach_kx_coaction(build_kx(&z3, &[2, 2, 2], Field::Rational).unwrap()).unwrap();
    let text = module_to_json(&ModuleFile::Hopf(m.clone()));
    match module_from_json(&text, here()).unwrap() {
        ModuleFile::Hopf(back) => assert_eq!(back, m),
        other => panic!("lost the coaction: {other:?}"),
    }
    let plain = ModuleFile::Quasi(m.base().clone());
    let text = module_to_json(&plain);
    assert!(!text.contains("coaction"));
    assert!(matches!(module_from_json(&text, here()).unwrap(), ModuleFile::Quasi(_)));
}

#[test]
fn module_structure_by_path() {
    let dir = std::env::temp_dir().join(format!("quasihopf-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let h = Arc::new(build_kq(&catalog("S3").unwrap(), Field::Rational));
    std::fs::write(dir.join("ks3.json"), structure_to_json(&h)).unwrap();
    let m = regular_module(Arc::clone(&h)).unwrap();
    let text = module_to_json(&ModuleFile::Hopf(m.clone()));
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["structure"] = "ks3.json".into();
    let back = module_from_json(&v.to_string(), &dir).unwrap();
    assert_eq!(module_to_json(&back), text);
    assert!(matches!(module_from_json(&v.to_string(), here()), Err(IoError::Read { .. })));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn dimodules_round_trip() {
    let g = catalog("S3").unwrap();
    let d = attach_kx_right_coaction(&build_kx(&g, &[2; 6], Field::Rational).unwrap()).unwrap();
    let text = dimodule_to_json(&d);
    assert_eq!(dimodule_from_json(&text, here()).unwrap(), d);
    let kl = Arc::new(trivial_grading(&HopfQuasigroupData::loop_algebra(&catalog("Z3").unwrap(), Field::Rational)).unwrap());
    let d = build_m_tensor_he(regular_module(kl).unwrap().base()).unwrap();
    let text = dimodule_to_json(&d);
    assert_eq!(dimodule_to_json(&dimodule_from_json(&text, here()).unwrap()), text);
}

#[test]
fn smash_inputs_round_trip() {
    let z2 = catalog("Z2").unwrap();
    let s3 = catalog("S3").unwrap();
    let x = QuasimoduleHopfQuasigroup::by_loop_maps(&z2, &s3, &[vec![0, 1, 2, 3, 4, 5], vec![0, 2, 1, 3, 5, 4]], Field::Rational);
    let x = x.unwrap();
    let text = smash_to_json(&x);
    let back = smash_from_json(&text, here()).unwrap();
    assert_eq!(back, x);
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["algebra"] = serde_json::from_str(&structure_to_json(&build_kq(&z2, Field::Rational))).unwrap();
    assert!(matches!(smash_from_json(&v.to_string(), here()), Err(IoError::Format(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn kx_modules_round_trip(name in prop::sample::select(vec!["Z2", "Z5", "D4", "Q8"]), s in 1usize..3, p in prop::sample::select(vec![2u32, 3, 7])) {
        let g = catalog(name).unwrap();
        let field = Field::prime(p).unwrap();
        let m = ModuleFile::Hopf(attach_kx_coaction(build_kx(&g, &vec![s; g.order()], field).unwrap()).unwrap());
        let text = module_to_json(&m);
        let back = module_from_json(&text, here()).unwrap();
        prop_assert_eq!(module_to_json(&back), text);
    }
}
