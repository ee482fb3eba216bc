use std::path::PathBuf;
use std::process::{Command, Output};

use lctop::RealizeOptions;
use lctop_cli::selftest::{default_checks, selftest_with};
use lctop_cli::Session;
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn lctop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lctop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(file: &str, extra: &[&str]) -> Output {
    let path = data(file);
    let mut args = vec!["run", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    lctop(&args)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn names(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect()
}

#[test]
fn session_att_and_realize() {
    let out = run("four_planes.json", &[]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    let results = report["results"].as_array().unwrap();
    assert_eq!(results.len(), 10);
    assert_eq!(names(&results[0]["attached"]), ["p1", "p2"]);
    assert_eq!(names(&results[1]["attached"]), ["p3", "p4"]);
    assert_eq!(names(&results[2]["attached"]), ["p1", "p2", "p3", "p4"]);
    assert_eq!(results[3]["ideal"], "(1)");
    assert_eq!(results[3]["path"], "unit");
    for r in &results[4..6] {
        assert_eq!(r["target"], r["attached"]);
        assert!(!r["certificates"].as_array().unwrap().is_empty());
    }
    // indices address the assh list printed in the header
    let assh = names(&report["modules"][0]["assh"]);
    let mut expect: Vec<&str> = assh[..3].to_vec();
    expect.sort();
    assert_eq!(names(&results[5]["target"]), expect);
    assert_eq!(results[6]["dimension"], 1);
    assert_eq!(names(&results[6]["attached"]), ["p2", "p4"]);
    assert_eq!(names(&results[7]["attached"]), ["p1"]);
    assert!(results[7]["direct_intersection"].is_string());
    assert_eq!(results[8]["holds"], false);
    assert_eq!(results[9]["holds"], true);
    assert!(results.iter().all(|r| r.get("elapsed_ms").is_none()));
}

#[test]
fn reports_are_byte_identical() {
    let first = run("four_planes.json", &[]);
    let second = run("four_planes.json", &[]);
    let parallel = run("four_planes.json", &["--parallel"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, parallel.stdout);
}

#[test]
fn timings_are_opt_in() {
    let report = json(&run("four_planes.json", &["--timings"]));
    assert!(report["results"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["elapsed_ms"].is_f64()));
}

#[test]
fn lex_rendering() {
    let report = json(&run("four_planes.json", &["--order", "lex"]));
    assert_eq!(report["order"], "lex");
    assert_eq!(report["results"][3]["ideal"], "(1)");
}

#[test]
fn undeclared_ideal_is_a_validation_error() {
    let out = run("undeclared.json", &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("queries[0].ideal") && err.contains("`b`"), "{err}");
}

#[test]
fn missing_file_exits_1() {
    assert_eq!(run("no_such_file.json", &[]).status.code(), Some(1));
}

#[test]
fn partial_failure_keeps_going() {
    let out = run("partial.json", &[]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["results"][0]["status"], "error");
    assert_eq!(report["results"][0]["kind"], "input");
    assert_eq!(report["results"][1]["status"], "ok");
    assert_eq!(names(&report["results"][1]["attached"]), ["p2"]);
}

#[test]
fn nonlinear_lemma_is_unsupported() {
    let out = run("nonlinear.json", &[]);
    assert_eq!(out.status.code(), Some(2));
    let report = json(&out);
    assert_eq!(names(&report["results"][0]["attached"]), ["p", "q"]);
    assert_eq!(report["results"][1]["kind"], "unsupported");
    assert_eq!(report["results"][2]["kind"], "unsupported");
    assert_eq!(report["results"][3]["status"], "ok");
    assert_eq!(names(&report["results"][3]["attached"]), ["p"]);
}

#[test]
fn enumerate_command() {
    let path = data("single_prime.json");
    let out = lctop(&["enumerate", path.to_str().unwrap(), "--module", "M"]);
    assert_eq!(out.status.code(), Some(0));
    let table = &json(&out)["results"][0];
    assert_eq!(table["count"], 2);
    assert_eq!(table["distinct"], 2);

    let path = data("four_planes.json");
    let out = lctop(&["enumerate", path.to_str().unwrap(), "--module", "M", "--max-coeff", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let table = &json(&out)["results"][0];
    assert_eq!(table["count"], 16);
    assert_eq!(table["distinct"], 16);
    for row in table["rows"].as_array().unwrap() {
        assert_eq!(row["subset"], row["attached"]);
    }

    let out = lctop(&["enumerate", path.to_str().unwrap(), "--module", "N"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn enumeration_limit() {
    let vars: Vec<String> = (0..12).map(|i| format!("X{i}")).collect();
    let primes: Vec<Value> = (0..12)
        .flat_map(|i| (i + 1..12).map(move |j| (i, j)))
        .take(13)
        .enumerate()
        .map(|(k, (i, j))| {
            let gens: Vec<String> = (0..12).filter(|&v| v != i && v != j).map(|v| format!("X{v}")).collect();
            serde_json::json!({ "name": format!("q{k}"), "generators": gens })
        })
        .collect();
    let module: Vec<String> = (0..13).map(|k| format!("q{k}")).collect();
    let session = serde_json::json!({
        "ring": { "variables": vars },
        "primes": primes,
        "module": module,
        "queries": [ { "op": "enumerate" } ],
    });
    let session = Session::from_json(&session.to_string()).unwrap();
    assert_eq!(session.modules[0].module.assh_len(), 13);
    let report = lctop_cli::run_session(&session, &Default::default());
    assert_eq!(report.exit_code(), 1);
    let text = lctop_cli::report::render(&report);
    assert!(text.contains("enumeration limit of 12"), "{text}");
}

#[test]
fn validation_locations() {
    let cases = [
        (
            r#"{"ring":{"variables":["X"]},"primes":[{"name":"m","generators":["X"]}]}"#,
            "reserved",
        ),
        (
            r#"{"ring":{"variables":["X","Y"]},"primes":[{"name":"p","generators":["X"]},{"name":"p","generators":["Y"]}]}"#,
            "duplicate",
        ),
        (
            r#"{"ring":{"variables":["X","Y"]},"primes":[{"name":"p","generators":["X + Q"]}]}"#,
            "primes[0].generators[0]",
        ),
        (
            r#"{"ring":{"variables":["X","Y"]},"primes":[{"name":"p","generators":["X*Y"]}]}"#,
            "assert_prime",
        ),
        (
            r#"{"ring":{"variables":["X","Y"]},"ideals":[{"name":"a","generators":["X + 1"]}]}"#,
            "ideals[0]",
        ),
        (r#"{"ring":{"variables":["X"],"characteristic":6}}"#, "characteristic"),
        (
            r#"{"ring":{"variables":["X","Y"]},"primes":[{"name":"p","generators":["X"]},{"name":"q","generators":["X","Y"]}],"module":["p","q"]}"#,
            "comparable",
        ),
        (
            r#"{"ring":{"variables":["X","Y"]},"primes":[{"name":"p","generators":["X"]}],"module":["p"],"queries":[{"op":"realize","subset":[3]}]}"#,
            "queries[0].subset[0]",
        ),
        (
            r#"{"ring":{"variables":["X","Y"]},"primes":[{"name":"p","generators":["X"]}],"modules":[{"name":"A","primes":["p"]},{"name":"B","primes":["p"]}],"queries":[{"op":"enumerate"}]}"#,
            "name one",
        ),
        (
            r#"{"ring":{"variables":["X"]},"queries":[{"op":"frobnicate"}]}"#,
            "frobnicate",
        ),
    ];
    for (text, needle) in cases {
        let err = Session::from_json(text)
            .err()
            .unwrap_or_else(|| panic!("accepted {text}"));
        assert!(err.to_string().contains(needle), "{err} lacks {needle}");
    }
}

#[test]
fn selftest_passes() {
    let out = lctop(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["checks"].as_array().unwrap().len(), 15);
    assert_eq!(report["enumerate"]["count"], 16);
    assert_eq!(report["passed"], 16);
    assert_eq!(report["failed"], 0);
}

#[test]
fn corrupted_generator_flips_only_its_check() {
    let options = RealizeOptions::default();
    let base = default_checks();
    for (i, check) in base.iter().enumerate() {
        if !check.name.starts_with('a') || check.name.len() != 3 {
            continue;
        }
        for k in 0..check.generators.len() {
            let mut checks = base.clone();
            checks[i].generators.remove(k);
            let report = selftest_with(&checks, &options);
            let failed: Vec<&str> = report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.ideal.as_str())
                .collect();
            assert_eq!(failed, [check.name.as_str()], "dropping generator {k}");
            assert!(report.enumerate.pass);
            assert_eq!(report.diff().len(), 1);
        }
    }
}
