use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const SSTAR: &str = r#"{"cone":{"rays":[[4,1],[9,5]]},"gaps":[[2,1],[3,1]]}"#;

fn fixture(name: &str, body: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_csemigroup"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = run(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn code(args: &[&str], stdin: Option<&str>) -> i32 {
    run(args, stdin).status.code().unwrap()
}

#[test]
fn cover_count_of_the_worked_example() {
    // 151 covers from a nonempty Λ plus T(f, ∅)
    let out = ok(&["ddset", "--semigroup", "-", "--d", "3", "--f", "9,3", "--count-only"], Some(SSTAR));
    assert_eq!(out, "152");
}

#[test]
fn trivial_quotient_is_canonical() {
    let out = ok(&["quotient", "--semigroup", "-", "--d", "1"], Some(SSTAR));
    assert_eq!(
        out,
        r#"{"cone":{"rays":[[4,1],[9,5]]},"gaps":[[2,1],[3,1]],"order":{"kind":"graded-then-revcoordlex","perm":[0,1]}}"#
    );
    let via = ok(&["quotient", "--semigroup", "-", "--d", "2", "--via", "algorithm1", "--verify"], Some(SSTAR));
    assert_eq!(via, ok(&["quotient", "--semigroup", "-", "--d", "2"], Some(SSTAR)));
}

#[test]
fn double_then_generators() {
    let t = ok(&["double", "--semigroup", "-", "--f", "13,5"], Some(SSTAR));
    let out = ok(&["generators", "--semigroup", "-"], Some(&t));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let mut gens: Vec<(i64, i64)> = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_i64().unwrap(), p[1].as_i64().unwrap()))
        .collect();
    gens.sort();
    let expected = [
        (6, 3), (7, 3), (8, 2), (8, 3), (8, 4), (9, 3), (9, 4), (9, 5), (10, 3), (10, 4), (10, 5),
        (11, 3), (11, 4), (11, 5), (11, 6), (12, 3), (12, 4), (12, 5), (13, 4), (13, 7), (14, 4), (15, 4),
    ];
    assert_eq!(gens, expected);
    assert_eq!(ok(&["classify", "--semigroup", "-"], Some(&t)), r#"{"classification":"symmetric"}"#);
    assert_eq!(ok(&["frobenius", "--semigroup", "-"], Some(&t)), r#"{"frobenius":[13,5]}"#);
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 3] = [
        &["tree", "--rays", "4,1;9,5", "--d", "2", "--f", "4,2", "--dot"],
        &["tree", "--rays", "4,1;9,5", "--d", "2", "--f", "4,2"],
        &["ddset", "--semigroup", "-", "--d", "2", "--f", "6,2"],
    ];
    for args in cases {
        assert_eq!(ok(args, Some(SSTAR)), ok(args, Some(SSTAR)));
    }
    let dot = ok(cases[0], None);
    assert!(dot.starts_with("digraph covers {"));
    assert_eq!(dot.matches("->").count(), 11);
}

#[test]
fn emitted_semigroups_round_trip() {
    let covers = ok(&["ddset", "--semigroup", "-", "--d", "2", "--f", "7,3"], Some(SSTAR));
    let covers: Vec<serde_json::Value> = serde_json::from_str(&covers).unwrap();
    assert!(!covers.is_empty());
    let t = ok(&["double", "--semigroup", "-", "--f", "13,5"], Some(SSTAR));
    let mut emitted: Vec<String> = covers.iter().map(|c| c.to_string()).collect();
    emitted.push(ok(&["cover", "--semigroup", "-"], Some(&t)));
    emitted.push(ok(&["fourth", "--semigroup", "-", "--f", "13,5"], Some(SSTAR)));
    emitted.push(t);
    for s in emitted {
        ok(&["validate", "--semigroup", "-"], Some(&s));
        assert_eq!(ok(&["quotient", "--semigroup", "-", "--d", "1"], Some(&s)), s);
    }
}

#[test]
fn file_inputs() {
    let path = fixture("sstar.json", SSTAR);
    assert_eq!(ok(&["genus", "--semigroup", &path], None), r#"{"genus":2}"#);
    assert_eq!(ok(&["member", "--semigroup", &path, "--x", "9,3", "--verify"], None), r#"{"member":true}"#);
    assert_eq!(ok(&["pf", "--semigroup", &path], None), r#"{"pseudo_frobenius":[[2,1],[3,1]]}"#);
    let gens = fixture("cm.json", r#"{"generators":[[4,0],[0,4],[1,3],[3,1]]}"#);
    let cm = ok(&["cm", "--semigroup", &gens, "--window", "8,8"], None);
    assert!(cm.contains("\"a\":[2,6]"), "{cm}");
    let sys = fixture("h.json", r#"{"rows":[[1,-2]]}"#);
    assert_eq!(ok(&["hilbert", "--system", &sys, "--verify"], None), r#"{"basis":[[2,1]]}"#);
    let seg = fixture("seg.json", r#"{"vertices":[[1,1],["2","1"]]}"#);
    assert_eq!(ok(&["convex", "--polytope", &seg, "--x", "3,2"], None), r#"{"member":true}"#);
    let pm = fixture("pm.json", r#"{"A":[[3]],"G":[[2]],"b":[7]}"#);
    assert_eq!(ok(&["pm", "--system", &pm, "--x", "4"], None), r#"{"member":true}"#);
    assert_eq!(ok(&["pm", "--system", &pm, "--d", "2"], None), r#"{"A":[[6]],"G":[[4]],"b":[7]}"#);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["genus", "--semigroup", "-"], Some("{not json")), 2);
    assert_eq!(code(&["member", "--semigroup", "-", "--x", "9,x"], Some(SSTAR)), 2);
    let not_closed = r#"{"cone":{"rays":[[1,0],[0,1]]},"gaps":[[2,0]]}"#;
    assert_eq!(code(&["validate", "--semigroup", "-"], Some(not_closed)), 3);
    assert_eq!(code(&["double", "--semigroup", "-", "--f", "12,5"], Some(SSTAR)), 3);
    assert_eq!(code(&["cover", "--semigroup", "-"], Some(SSTAR)), 3);
    let big = fixture("big.json", r#"{"A":[[1]],"G":[[4611686018427387904]],"b":[3]}"#);
    assert_eq!(code(&["pm", "--system", &big, "--d", "4"], None), 4);
    assert_eq!(code(&["ddset", "--semigroup", "-", "--d", "3", "--f", "13,5", "--verify"], Some(SSTAR)), 5);
    let out = run(&["cover", "--semigroup", "-"], Some(SSTAR));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "precondition");
    assert!(out.stdout.is_empty());
}

#[test]
fn witness_is_null_for_reducible_input() {
    assert_eq!(ok(&["witness", "--semigroup", "-"], Some(SSTAR)), "null");
    let sym = r#"{"cone":{"rays":[[1,0],[0,1]]},"gaps":[[1,0]]}"#;
    let t = ok(&["witness", "--semigroup", "-"], Some(sym));
    assert_eq!(ok(&["classify", "--semigroup", "-"], Some(&t)), r#"{"classification":"pseudo-symmetric"}"#);
}
