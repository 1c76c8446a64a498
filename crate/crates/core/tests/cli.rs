use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn examples() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples")
}

fn run(args: &[&str]) -> (i32, Option<Value>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_laxdesc")).args(args).output().expect("binary runs");
    let json = serde_json::from_slice(&out.stdout).ok();
    (out.status.code().unwrap_or(-1), json, String::from_utf8_lossy(&out.stderr).into_owned())
}

fn example(name: &str) -> String {
    examples().join(name).to_string_lossy().into_owned()
}

#[test]
fn every_example_loads() {
    let mut seen = 0;
    for entry in std::fs::read_dir(examples()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "lcat") {
            let text = std::fs::read_to_string(&path).unwrap();
            if let Err(e) = laxdesc::frontend::load_str(&text) {
                panic!("{}: {e}", path.display());
            }
            seen += 1;
        }
    }
    assert!(seen >= 5);
}

#[test]
fn effective_descent_exit_codes() {
    let (code, json, _) = run(&["effective", "--indexed", "slice", "--map", &example("surjection.lcat"), "--bound", "4"]);
    assert_eq!(code, 0);
    let json = json.unwrap();
    assert_eq!(json["schema"], "laxdesc/1");
    assert_eq!(json["effective"], true);

    let (code, json, _) = run(&["effective", "--indexed", "slice", "--map", &example("injection.lcat"), "--bound", "4"]);
    assert_eq!(code, 1);
    let json = json.unwrap();
    assert_eq!(json["effective"], false);
    assert!(json["comparison"]["witness"].is_string());
}

#[test]
fn input_errors_exit_with_two() {
    let (code, json, err) = run(&["effective", "--indexed", "slice", "--map", "/nonexistent/p.lcat", "--bound", "4"]);
    assert_eq!((code, json), (2, None));
    assert!(err.contains("p.lcat"));
    let (code, _, err) = run(&["effective", "--indexed", "slice", "--map", &example("surjection.lcat"), "--frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
    let (code, _, err) = run(&["effective", "--indexed", "slice", "--map", &example("surjection.lcat")]);
    assert_eq!(code, 2);
    assert!(err.contains("--bound"));
    let dir = std::env::temp_dir().join(format!("laxdesc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.lcat");
    std::fs::write(&bad, "category C { objects: a; hom(a, a): f; compose: f . = g; }").unwrap();
    let (code, _, err) = run(&["build", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains(":1:53:"), "{err}");
}

#[test]
fn builds_and_actions() {
    let (code, json, _) = run(&["build", &example("m_sets.lcat"), "--pseudofunctor", "A"]);
    assert_eq!(code, 0);
    assert_eq!(json.unwrap()["pseudofunctor_valid"], true);
    let (code, json, _) = run(&["build", &example("nerve.lcat")]);
    assert_eq!(code, 0);
    assert_eq!(json.unwrap()["universal_pair_valid"], true);
    let (code, json, _) = run(&["actions", &example("m_sets.lcat"), "--indexed", "S", "--precategory", "Q"]);
    assert_eq!(code, 0);
    assert!(json.unwrap()["actions"].as_u64().unwrap() > 0);
}

#[test]
fn kernel_pairs_and_checks() {
    let (code, json, _) = run(&["eqp", "--map", &example("surjection.lcat")]);
    assert_eq!(code, 0);
    assert_eq!(json.unwrap()["objects"], serde_json::json!([2, 4, 8]));
    for cmd in [vec!["check", "bc"], vec!["check", "br"], vec!["factor"]] {
        let mut args = cmd.clone();
        args.extend(["--indexed", "slice", "--bound", "3", "--map"]);
        let p = example("surjection.lcat");
        args.push(&p);
        let (code, json, err) = run(&args);
        assert_eq!(code, 0, "{cmd:?}: {err}");
        assert_eq!(json.unwrap()["holds"], true);
    }
    let (code, json, _) = run(&["check", "bc", "--indexed", "D", "--map", &example("diagrams.lcat")]);
    assert_eq!(code, 0);
    assert_eq!(json.unwrap()["invertible"], true);
}

#[test]
fn monadicity_and_kan() {
    let m = example("monadic.lcat");
    assert_eq!(run(&["monadic", &m, "--functor", "idA"]).0, 0);
    let (code, json, _) = run(&["monadic", &m, "--functor", "bang"]);
    assert_eq!(code, 1);
    assert_eq!(json.unwrap()["conservative"], false);
    let k = example("kan.lcat");
    let (code, json, _) = run(&["kan", "lan", &k, "--of", "legs", "--along", "in"]);
    assert_eq!(code, 0);
    let json = json.unwrap();
    assert_eq!(json["value"]["objects"]["y"], "top");
    assert_eq!(json["universal"]["b"], "j");
    let (code, json, _) = run(&["kan", "ran", &k, "--of", "legs", "--along", "in"]);
    assert_eq!(code, 1);
    let json = json.unwrap();
    assert_eq!(json["exists"], false);
    assert_eq!(json["witnesses"], serde_json::json!(["x"]));
}

#[test]
fn verification_suites() {
    let (code, json, _) = run(&["verify", "main", "--seed", "3", "--count", "6"]);
    assert_eq!(code, 0);
    let json = json.unwrap();
    assert_eq!(json["instances"], 12);
    assert_eq!(json["counterexamples"], 0);
    let (code, json, _) = run(&["verify", "monadic", "--seed", "3", "--count", "4"]);
    assert_eq!(code, 0);
    assert_eq!(json.unwrap()["counterexamples"], 0);
}
