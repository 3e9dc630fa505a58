//! The binary end to end: formats, exit codes, file and stdin input,
//! and byte-stable output.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use slnweb::ring::LaurentPoly;

fn slnweb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slnweb")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn poly(s: &str) -> LaurentPoly {
    serde_json::from_str(s).unwrap()
}

#[test]
fn enumeration_prints_one_tableau_per_line() {
    let out = stdout(&slnweb(&["tableaux", "--N", "2", "--l", "1", "--type", "1,1", "--semistandard"]));
    assert_eq!(out, "{\"N\":2,\"l\":1,\"rows\":[[1,2]]}\n");
    let out = stdout(&slnweb(&["tableaux", "--N", "2", "--l", "2", "--type", "1,1,1,1", "--semistandard", "--format", "table"]));
    assert_eq!(out, "[1 3/2 4]\n[1 2/3 4]\n");
}

#[test]
fn dual_canonical_example() {
    let out = stdout(&slnweb(&["dual-canonical", "--N", "2", "--l", "1", "--type", "1,1"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let terms = &v[0]["expansion"]["terms"];
    assert_eq!(terms[0]["rows"], serde_json::json!([[1, 2]]));
    assert_eq!(terms[0]["coeff"], serde_json::json!([[0, 1]]));
    assert_eq!(terms[1]["rows"], serde_json::json!([[2, 1]]));
    assert_eq!(terms[1]["coeff"], serde_json::json!([[-1, 1]]));
    assert_eq!(v[0]["beta"], serde_json::json!([]));
}

#[test]
fn relation_sweep_passes() {
    let out = stdout(&slnweb(&["verify", "--relations", "--N", "3"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["relations"].as_array().unwrap().len() > 100);
}

#[test]
fn output_is_independent_of_worker_count() {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_slnweb"))
            .args(["verify", "--properties", "--N", "2", "--seed", "11"])
            .env("SLNWEB_WORKERS", workers)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("4"));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(String::from_utf8_lossy(&a.stderr), "seed 11\n");
    assert_eq!(run("zero").status.code(), Some(2));
}

#[test]
fn cartan_of_the_two_by_two_zero_weight_block() {
    let out = stdout(&slnweb(&["cartan", "--N", "2", "--l", "2", "--k", "1,1,1,1"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    // v^2 [2]^2 on the diagonal, v^2 [2] off it
    let e = &v["matrix"]["entries"];
    assert_eq!(poly(&e[0][0].to_string()), LaurentPoly::from_terms([(4, 1), (2, 2), (0, 1)]));
    assert_eq!(poly(&e[0][1].to_string()), LaurentPoly::from_terms([(3, 1), (1, 1)]));
    assert_eq!(e[0][1], e[1][0]);
    assert_eq!(v["gorenstein"], 4);
    assert_eq!(v["frobenius"]["passed"], true);
}

#[test]
fn web_files_and_stdin() {
    let dir = std::env::temp_dir().join(format!("slnweb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    // a digon on one color-2 strand: lower then raise
    let web = stdout(&slnweb(&["ladder", "--N", "2", "--k", "2,0", "--word", "+1^1,-1^1"]));
    let path = dir.join("digon.json");
    std::fs::write(&path, &web).unwrap();
    let ev = stdout(&slnweb(&["ev", "--web", path.to_str().unwrap()]));
    assert_eq!(poly(&ev), LaurentPoly::from_terms([(-1, 1), (1, 1)]));

    let mut child = Command::new(env!("CARGO_BIN_EXE_slnweb"))
        .args(["ev", "--web", "-", "--format", "table"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(web.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out), "v + v^-1\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn act_on_a_tableau_vector() {
    let x = r#"{"N":2,"l":1,"terms":[{"rows":[[1,1]],"coeff":[[0,1]]}]}"#;
    let out = stdout(&slnweb(&["act", "--sign", "-", "--i", "1", "--r", "1", "--vector", x]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows: Vec<_> = v["terms"].as_array().unwrap().iter().map(|t| t["rows"].clone()).collect();
    assert_eq!(rows, vec![serde_json::json!([[1, 2]]), serde_json::json!([[2, 1]])]);
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        vec!["tableaux", "--N", "1", "--l", "1"],
        vec!["gram", "--N", "2", "--l", "1", "--type", "3,0"],
        vec!["ladder", "--N", "2", "--k", "2,0", "--word", "+1"],
        vec!["ev", "--web", "/nonexistent/web.json"],
        vec!["eval", "--web", "{}", "--vector", "{}"],
        vec!["cartan", "--N", "2"],
    ] {
        let o = slnweb(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(o.stdout.is_empty());
    }
}
