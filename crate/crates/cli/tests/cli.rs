use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn curralg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curralg")).args(args).output().expect("binary runs")
}

fn with_stdin(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_curralg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = curralg(&full);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).expect("valid json"))
}

fn degrees(v: &Value) -> Vec<[u64; 4]> {
    v["results"]["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| [d["C"].as_u64().unwrap(), d["H"].as_u64().unwrap(), d["B"].as_u64().unwrap(), d["Z"].as_u64().unwrap()])
        .collect()
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("curralg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn oscillator_table_in_json() {
    let (code, v) = json(&["cohomology", "catalog:oscillator", "--all"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(
        degrees(&v),
        vec![[1, 1, 0, 1], [4, 1, 0, 1], [6, 0, 3, 3], [4, 1, 3, 4], [1, 1, 0, 1]]
    );
}

#[test]
fn abelian_h2_single_degree() {
    let (code, v) = json(&["cohomology", "catalog:abelian:3", "--p", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["degrees"][0]["H"], 3);
}

#[test]
fn exported_entry_reingests_through_stdin() {
    let export = curralg(&["catalog", "export", "oscillator"]);
    assert!(export.status.success());
    let piped = with_stdin(&["cohomology", "-", "--all", "--format", "json"], &export.stdout);
    let direct = json(&["cohomology", "catalog:oscillator", "--all"]).1;
    let piped: Value = serde_json::from_slice(&piped.stdout).unwrap();
    assert_eq!(degrees(&piped), degrees(&direct));
    // Catalog fingerprints hash the exported file, so both routes agree.
    assert_eq!(piped["inputs"][0]["sha256"], direct["inputs"][0]["sha256"]);
}

#[test]
fn file_input_with_coadjoint_module() {
    let text = String::from_utf8(curralg(&["catalog", "export", "heisenberg"]).stdout).unwrap();
    let path = temp_file("heis.json", &text);
    let (code, from_file) = json(&["cohomology", path.to_str().unwrap(), "--module", "coadjoint", "--p", "1"]);
    let (_, from_catalog) = json(&["cohomology", "catalog:heisenberg", "--module", "coadjoint", "--p", "1"]);
    assert_eq!(code, 0);
    assert_eq!(from_file["results"], from_catalog["results"]);
    assert_eq!(from_file["results"]["module_dim"], 3);
}

#[test]
fn json_reports_are_deterministic_apart_from_timing() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    let args = ["current", "catalog:trunc_poly:3", "catalog:heisenberg", "--sequence", "--b2-check"];
    assert_eq!(strip(json(&args).1), strip(json(&args).1));
}

#[test]
fn current_reports() {
    let (code, v) = json(&["current", "catalog:dual_numbers", "catalog:oscillator", "--sequence"]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("pass")));
    assert_eq!(v["results"]["sequence"]["exact"], true);

    let (code, v) = json(&["current", "catalog:field", "catalog:heisenberg", "--h2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["h2"]["cohomology"], 2);
    assert!(v["verdict"].is_null());

    let (code, v) = json(&["current", "catalog:dual_numbers", "catalog:sl2", "--zusmanovich"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["zusmanovich"]["predicted"], v["results"]["zusmanovich"]["brute_force"]);
}

#[test]
fn closed_form_mismatch_exits_with_failure() {
    let (code, v) = json(&["current", "catalog:dual_numbers", "catalog:oscillator", "--zusmanovich"]);
    assert_eq!(code, 1);
    let z = &v["results"]["zusmanovich"];
    assert_eq!(z["brute_force"].as_u64().unwrap(), z["predicted"].as_u64().unwrap() + z["coupled_correction"].as_u64().unwrap());
}

#[test]
fn verify_targets() {
    let out = curralg(&["verify", "prop-7.2", "catalog:heisenberg"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
    for target in ["oscillator-table", "pelc", "lemma-1.1", "theorem-2.4", "theorem-3.1", "theorem-4.2"] {
        assert_eq!(curralg(&["verify", target]).status.code(), Some(0), "{target}");
    }
    let (code, v) = json(&["verify", "theorem-2.4", "catalog:trunc_poly:3", "catalog:sl2", "catalog:heisenberg"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["claims"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_all_on_battery() {
    let (code, v) = json(&["verify", "all", "--battery"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["failed"], 0);
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(curralg(&["cohomology", "catalog:nope"]).status.code(), Some(2));
    assert_eq!(curralg(&["verify", "theorem-9.9"]).status.code(), Some(2));
    assert_eq!(curralg(&["current", "catalog:heisenberg", "catalog:sl2"]).status.code(), Some(2));
    assert_eq!(curralg(&["cohomology", "-", "-"]).status.code(), Some(2));

    let path = temp_file("bad.json", "{\n  \"kind\": \"lie\",\n  \"name\": \"b\",\n  \"dim\": 2,\n  \"brackets\": {\"0,1\": {\"1\": \"x\"}}\n}\n");
    let out = curralg(&["cohomology", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.json") && err.contains("line"), "{err}");
}

#[test]
fn size_guard_requires_force() {
    let out = curralg(&["cohomology", "catalog:abelian:70", "--p", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force"));
    assert_eq!(curralg(&["--force", "cohomology", "catalog:abelian:70", "--p", "0"]).status.code(), Some(0));
}

#[test]
fn thread_override() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_curralg"))
            .args(["cohomology", "catalog:pelc:6", "--all"])
            .env("CURRALG_THREADS", threads)
            .output()
            .unwrap()
    };
    assert!(run("1").status.success());
    assert_eq!(run("zero").status.code(), Some(2));
    assert_eq!(run("0").status.code(), Some(2));
}

#[test]
fn catalog_listing() {
    let (code, v) = json(&["catalog", "list"]);
    assert_eq!(code, 0);
    let entries = v["results"]["entries"].as_array().unwrap();
    assert!(entries.iter().any(|e| e["name"] == "pelc:6" && e["dim"] == 7));
    assert_eq!(curralg(&["catalog", "export", "nope"]).status.code(), Some(2));
}
