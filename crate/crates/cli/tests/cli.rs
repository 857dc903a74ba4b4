use std::path::PathBuf;
use std::process::{Command, Output};

use kuptv_cli::corpus::corpus_files;
use kuptv_core::scalars::{ExactScalar, FieldDescriptor, Scalar};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn corpus(rel: &str) -> String {
    root().join("corpus").join(rel).to_string_lossy().into_owned()
}

fn kuptv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kuptv")).args(args).output().expect("binary runs")
}

fn value(args: &[&str]) -> String {
    let out = kuptv(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

fn code(args: &[&str]) -> i32 {
    kuptv(args).status.code().unwrap()
}

#[test]
fn ku_examples() {
    assert_eq!(value(&["ku", &corpus("diagrams/s3.hgd"), "--algebra", "group:Z2"]), "1");
    assert_eq!(value(&["ku", &corpus("diagrams/lens21.hgd"), "--algebra", "group:Z2"]), "2");
    assert_eq!(value(&["ku", &corpus("diagrams/lens21.hgd"), "--algebra", &corpus("algebras/kZ2.hopf")]), "2");
    assert_eq!(
        value(&["ku", "lens:2,1", "--algebra", "group:Z2", "--strategy", "enumerate"]),
        "2"
    );
}

#[test]
fn tv_examples() {
    assert_eq!(value(&["tv", &corpus("triangulations/s3_a.tri"), "--category", &corpus("fusion/vecZ2.fus")]), "1/2");
    assert_eq!(value(&["tv", &corpus("triangulations/s3_a.tri"), "--category", &corpus("fusion/trivial.fus")]), "1");
    assert_eq!(value(&["tv", "s2xs1", "--category", "vecg:Z2"]), "1");
}

#[test]
fn pi1count_examples() {
    assert_eq!(value(&["pi1count", &corpus("diagrams/lens21.hgd"), "--group", "Z2"]), "2");
    assert_eq!(value(&["pi1count", &corpus("diagrams/s2xs1.hgd"), "--group", "Z3"]), "3");
    for g in ["Z2", "S3", "Q8"] {
        assert_eq!(value(&["pi1count", &corpus("diagrams/s3.hgd"), "--group", g]), "1");
    }
    assert_eq!(value(&["pi1count", "s2xs1", "--group", &corpus("groups/S3.grp")]), "6");
}

#[test]
fn crosscheck_examples() {
    let out = value(&[
        "crosscheck", "--diagram", &corpus("diagrams/s3.hgd"), "--triangulation", &corpus("triangulations/s3_a.tri"), "--group", "Z2",
    ]);
    assert!(out.starts_with("PASS"), "{out}");
    let out = value(&["crosscheck", "--diagram", "lens:2,1", "--triangulation", "l21", "--group", "Z3"]);
    assert!(out.starts_with("PASS"), "{out}");
    let mismatch = kuptv(&["crosscheck", "--diagram", "s3", "--triangulation", "l21", "--group", "Z2"]);
    assert_eq!(mismatch.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&mismatch.stderr).contains("Z/2"));
}

#[test]
fn exit_codes() {
    let tmp = std::env::temp_dir().join(format!("kuptv-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let bad = tmp.join("bad.hgd");
    std::fs::write(&bad, "heegaard oops\ngenus x\n").unwrap();
    assert_eq!(code(&["ku", bad.to_str().unwrap(), "--algebra", "group:Z2"]), 2);
    assert_eq!(code(&["ku", "s3", "--algebra", &corpus("algebras/sweedler.hopf")]), 3);
    assert_eq!(code(&["ku", "lens:7,2", "--algebra", "double:S3", "--cap", "1000"]), 4);

    let full = std::fs::read_to_string(corpus("fusion/vecZ2.fus")).unwrap();
    let missing: String = full.lines().filter(|l| !l.starts_with("sixj: 0 0 0 0 0 0")).map(|l| format!("{l}\n")).collect();
    let miss = tmp.join("miss.fus");
    std::fs::write(&miss, missing).unwrap();
    assert_eq!(code(&["tv", "s3_a", "--category", miss.to_str().unwrap()]), 3);
    assert_eq!(code(&["tv", "l31", "--category", "vecg:Z3", "--cap", "3"]), 4);
    std::fs::remove_dir_all(&tmp).ok();
}

#[test]
fn json_reports_are_stable_and_round_trip() {
    let args = ["tv", "s3_b", "--category", "fibonacci", "--json"];
    let a = value(&args);
    assert_eq!(a, value(&args));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["kind"], "tv");
    assert_eq!(v["inputs"].as_array().unwrap().len(), 2);
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    let field = FieldDescriptor::parse(v["field"].as_str().unwrap()).unwrap();
    let text = v["value"].as_str().unwrap();
    let parsed = ExactScalar::parse(&field, text).unwrap();
    assert_eq!(parsed.to_string(), text);
    assert!(v["toolchain"].as_str().unwrap().contains("rustc"));

    let ku = value(&["ku", "lens:5,2", "--algebra", "double:Z2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&ku).unwrap();
    assert_eq!(v["kind"], "kuperberg");
    assert!(v["cost"]["estimate"].as_u64().is_some());
}

#[test]
fn every_corpus_file_validates() {
    for (rel, _) in corpus_files() {
        let out = kuptv(&["validate", &corpus(&rel)]);
        assert!(out.status.success(), "{rel}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn validation_failures_name_a_witness() {
    let tmp = std::env::temp_dir().join(format!("kuptv-validate-{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let fib = std::fs::read_to_string(corpus("fusion/fibonacci.fus")).unwrap();

    let bad_qdim = tmp.join("qdim.fus");
    std::fs::write(&bad_qdim, fib.replace("qdim: 1 t\n", "qdim: 1 1\n")).unwrap();
    let out = kuptv(&["validate", bad_qdim.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("qdim"));

    let bad_sixj = tmp.join("sixj.fus");
    std::fs::write(&bad_sixj, fib.replace("sixj: 1 1 1 1 1 1 -2 + t\n", "sixj: 1 1 1 1 1 1 2 - t\n")).unwrap();
    let out = kuptv(&["validate", bad_sixj.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("pentagon fails"));

    let unglued = tmp.join("open.tri");
    std::fs::write(&unglued, "triangulation open tets 1\nglue t0 f0 t0 f1 perm 023\n").unwrap();
    assert_eq!(code(&["validate", unglued.to_str().unwrap()]), 2);
    std::fs::remove_dir_all(&tmp).ok();
}

#[test]
fn shipped_corpus_matches_the_generator() {
    for (rel, text) in corpus_files() {
        let on_disk = std::fs::read_to_string(corpus(&rel)).unwrap_or_default();
        assert_eq!(on_disk, text, "corpus/{rel} is stale; run `kuptv generate corpus`");
    }
}
