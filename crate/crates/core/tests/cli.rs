use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geochroma"))
        .args(args)
        .env("GEOCHROMA_THREADS", "2")
        .output()
        .expect("spawn geochroma")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_build_color_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    let dec = dir.path().join("dec.json");

    let o = run(&["gen", "-n", "40", "--seed", "3", "--out", p(&cfg)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("cfg.json.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["command"], "gen");
    let digest = manifest["outputs"][p(&cfg)].as_str().unwrap();
    assert_eq!(digest, geochroma::io::sha256_hex(&std::fs::read(&cfg).unwrap()));

    let o = run(&["build", "thm5", "--config", p(&cfg), "--out", p(&dec)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["verify", p(&dec)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["valid"], true);

    let o = run(&["stats", p(&dec)]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 40);
    assert_eq!(v["construction"], "thm5");
}

#[test]
fn exact_coloring_and_deterministic_render() {
    let dir = tempfile::tempdir().unwrap();
    let dec = dir.path().join("k6.json");
    assert!(run(&["build", "edges", "-n", "6", "--out", p(&dec)]).status.success());
    let o = run(&["color", p(&dec), "--mode", "exact"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let d = geochroma::io::read_decomposition(&dec).unwrap();
    assert!(d.palette_size().unwrap() >= 6);
    assert_eq!(run(&["verify", p(&dec)]).status.code(), Some(0));

    let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    assert!(run(&["render", p(&dec), "--out", p(&a)]).status.success());
    assert!(run(&["render", p(&dec), "--out", p(&b)]).status.success());
    let (sa, sb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(sa, sb);
    assert!(String::from_utf8(sa).unwrap().starts_with("<svg"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let dec = dir.path().join("bad.json");
    assert!(run(&["build", "thm4", "-n", "9", "--out", p(&dec)]).status.success());
    // break the cover: drop the last part
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&dec).unwrap()).unwrap();
    v["parts"].as_array_mut().unwrap().pop();
    if let Some(c) = v.get_mut("coloring").and_then(|c| c.as_array_mut()) {
        c.pop();
    }
    std::fs::write(&dec, v.to_string()).unwrap();
    assert_eq!(run(&["verify", p(&dec)]).status.code(), Some(1));

    assert_eq!(run(&["gen", "-n", "2", "--convex"]).status.code(), Some(2));
    assert_eq!(run(&["build", "thm32", "-k", "5"]).status.code().map(|c| c != 0), Some(true));
    assert_eq!(run(&["verify", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["experiment", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn experiment_suite_reports_json() {
    let o = run(&["experiment", "acceptance-sts9"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["reports"][0]["checks"].as_array().unwrap().len(), 3);
}
