use std::process::{Command, Output};

use hbrauer::embed::EmbedReport;
use hbrauer::engine::{CensusReport, NormalFormJson};
use hbrauer::suites::SuiteReport;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hbrauer")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

/// Parsing into the report type and emitting again gives the same document.
fn round_trips<T: DeserializeOwned + Serialize>(v: &Value) {
    let typed: T = serde_json::from_value(v.clone()).expect("report parses");
    assert_eq!(&serde_json::to_value(typed).unwrap(), v);
}

#[test]
fn roots_counts() {
    let out = run(&["roots", "--type", "H3", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["count"], 15);
    assert_eq!(v["type"], "H3");
    assert_eq!(v["roots"][0], serde_json::json!([[1, 0], [0, 0], [0, 0]]));
    assert_eq!(v["roots"].as_array().unwrap().len(), 15);

    let out = run(&["roots", "--type", "E8"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("E8: 120 positive roots"));

    let out = run(&["roots", "--type", "E8", "--json"]);
    assert_eq!(json(&out)["count"], 120);
}

#[test]
fn bad_type_is_a_usage_error() {
    let out = run(&["roots", "--type", "X9"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("X9"));
    assert_eq!(code(&run(&["census", "--type", "D6"])), 2);
    assert_eq!(code(&run(&["nonsense"])), 2);
}

#[test]
fn chen_needs_h4() {
    assert_eq!(code(&run(&["census", "--type", "H3", "--variant", "chen"])), 2);
    assert_eq!(code(&run(&["eval", "e1", "--type", "H3", "--variant", "chen"])), 2);
    assert_eq!(code(&run(&["census", "--type", "H4", "--variant", "bogus"])), 2);
}

#[test]
fn group_orders() {
    let v = json(&run(&["group", "--type", "H3", "--json"]));
    assert_eq!(v["order"], 120);
    let v = json(&run(&["group", "--type", "H4", "--json"]));
    assert_eq!(v["order"], 14400);
    assert_eq!(v["z"]["order"], 2);
    assert_eq!(v["z"]["central_in_k"], true);
    assert_eq!(code(&run(&["group", "--type", "E8"])), 2);
}

#[test]
fn admissible_census() {
    let v = json(&run(&["admissible", "--type", "H4", "--json"]));
    assert_eq!(v["bases"], 75);
    assert_eq!(v["admissible_sets"], 136);
    assert_eq!(v["cells"]["d1"], 60);
    assert_eq!(v["cells"]["n2"], 192);
    let v = json(&run(&["admissible", "--type", "H3", "--json"]));
    assert_eq!(v["bases"], 5);
    assert_eq!(v["admissible_sets"], 21);
}

#[test]
fn census_h3() {
    let out = run(&["census", "--type", "H3", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["counts"], serde_json::json!({"group": 120, "e1": 900, "e1e3": 25, "total": 1045}));
    round_trips::<CensusReport>(&v);
}

#[test]
fn census_h4_variants() {
    let v = json(&run(&["census", "--type", "H4", "--json", "--jobs", "2"]));
    assert_eq!(v["counts"]["total"], 236025);
    assert_eq!(v["closed"], true);
    let out = run(&["census", "--type", "H4", "--variant", "chen", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["counts"]["total"], 452025);
}

#[test]
fn eval_examples() {
    let out = run(&["eval", "e1 r2 e1", "--type", "H3", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["cell"], "e1");
    assert_eq!(v["delta"], 0);
    round_trips::<NormalFormJson>(&v);

    let v = json(&run(&["eval", "e1 e1", "--type", "H3", "--json"]));
    assert_eq!(v["cell"], "e1");
    assert_eq!(v["delta"], 2);

    let v = json(&run(&["eval", "e1 e3", "--type", "H3", "--json"]));
    assert_eq!(v["cell"], "e1e3");
}

#[test]
fn eval_parse_errors() {
    let out = run(&["eval", "r9"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 0"));
    let out = run(&["eval", "r1 x2", "--type", "H3"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 3"));
}

#[test]
fn verify_relations_lists_families() {
    let out = run(&["verify", "--suite", "relations", "--type", "H3", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["passed"], true);
    let suite = &v["suites"][0];
    round_trips::<SuiteReport>(suite);
    let names: Vec<&str> = suite["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names.iter().filter(|n| n.starts_with("relation: ")).count(), 17);
}

#[test]
fn verify_all_h3() {
    let out = run(&["verify", "--type", "H3", "--suite", "all", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let suites: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    assert_eq!(suites, ["relations", "census", "embed", "action", "properties"]);
    for s in v["suites"].as_array().unwrap() {
        round_trips::<SuiteReport>(s);
    }
}

#[test]
fn verify_embed_h4_orbits() {
    let out = run(&["verify", "--type", "H4", "--suite", "embed"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("orbit of the pair has 60 sets"));
    assert!(text.contains("orbit of the top set has 75 sets"));
    assert_eq!(code(&run(&["verify", "--suite", "nope"])), 2);
}

#[test]
fn verify_output_is_independent_of_jobs() {
    let a = run(&["verify", "--type", "H3", "--suite", "properties", "--seed", "11", "--json", "--jobs", "1"]);
    let b = run(&["verify", "--type", "H3", "--suite", "properties", "--seed", "11", "--json", "--jobs", "4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn embed_reports() {
    let out = run(&["embed", "--type", "H3", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["map"], "phi1");
    assert_eq!(v["group_order"], 120);
    assert_eq!(v["orbits"], serde_json::json!({"pair": 15, "top": 5}));
    assert_eq!(v["r5_check"], true);
    round_trips::<EmbedReport>(&v);

    let v = json(&run(&["embed", "--type", "E8", "--json"]));
    assert_eq!(v["map"], "phi2");
    assert_eq!(v["orbits"], serde_json::json!({"pair": 60, "top": 75}));
}

#[test]
fn cache_dir_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = run(&["group", "--type", "H4", "--cache-dir", d, "--json"]);
    assert_eq!(code(&first), 0);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let second = run(&["group", "--type", "H4", "--cache-dir", d, "--json"]);
    assert_eq!(json(&second)["order"], 14400);
}
