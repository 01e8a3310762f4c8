use std::io::Write;
use std::process::{Command, Output, Stdio};

use orbitlab::ClassificationReport;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitlab")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_orbitlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_out(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classify_sp2_json() {
    let v = json_out(&["classify", "sp", "2", "--lambda", "1,0", "--json"]);
    assert_eq!(v["orbit"]["partition"], serde_json::json!([2, 2]));
    assert_eq!(v["k"], 2);
    assert_eq!(v["gk_dim"], "3");
    assert_eq!(v["consistent"], true);
}

#[test]
fn classify_e6_text() {
    let o = run(&["classify", "e6", "--lambda0", "0,0,0,0,0,22/3,22/3,-22/3", "--z", "8"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("orbit       A1 (dim 22)"), "{s}");
    assert!(s.contains("gk_dim      11"), "{s}");
}

#[test]
fn unitary_and_gkdim() {
    let o = run(&["unitary", "so_odd", "3", "--lambda0", "-4,0,0", "--z", "5/2"]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = run(&["unitary", "so_odd", "3", "--lambda0", "-4,0,0", "--z", "3", "--json"]);
    assert_eq!(stdout(&o).trim(), "false");
    let o = run(&["gkdim", "sp", "2", "--lambda", "3/2,1/2", "--json"]);
    assert_eq!(stdout(&o).trim(), "\"2\"");
}

#[test]
fn json_round_trips_byte_identical() {
    let cases: &[&[&str]] = &[
        &["classify", "sp", "2", "--lambda", "1,0", "--json"],
        &["classify", "so_star", "4", "--lambda", "1,0,-1,-2", "--json"],
        &["classify", "so_odd", "3", "--lambda0", "-4,0,0", "--z", "5/2", "--json"],
        &["classify", "e7", "--lambda0", "0,0,0,0,0,-17,17/2,-17/2", "--z", "13/9", "--json"],
        &["classify", "e6", "--lambda0", "0,0,0,0,0,22/3,22/3,-22/3", "--z", "8", "--json"],
    ];
    for args in cases {
        let o = run(args);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let text = stdout(&o);
        let line = text.trim_end();
        let report: ClassificationReport = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&report).unwrap(), line);
    }
}

#[test]
fn raw_and_normalized_inputs_agree() {
    let pairs: &[(&[&str], &str)] = &[
        (&["sp", "2"], "1,0"),
        (&["su", "2", "1"], "1/2,-1/2,0"),
        (&["so_star", "4"], "1,0,-1,-2"),
        (&["so_odd", "3"], "-3/2,2,1"),
        (&["so_even", "4"], "5,2,1,0"),
        (&["e6"], "0,1,2,3,4,-2,-2,2"),
    ];
    for (group, lambda) in pairs {
        let mut a: Vec<&str> = vec!["classify"];
        a.extend(group.iter());
        a.extend(["--lambda", lambda, "--json"]);
        let raw = json_out(&a);
        let l0: Vec<String> = raw["lambda0"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().into()).collect();
        let l0 = l0.join(",");
        let z = raw["z"].as_str().unwrap().to_string();
        let mut b: Vec<&str> = vec!["classify"];
        b.extend(group.iter());
        b.extend(["--lambda0", &l0, "--z", &z, "--json"]);
        assert_eq!(raw, json_out(&b), "{group:?}");
    }
}

#[test]
fn exit_codes() {
    // parse errors
    assert_eq!(run(&["classify", "nope", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "sp", "2", "--lambda", "1,x"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "sp", "2", "--lambda", "0.5,0"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "sp", "2"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "sp", "2", "--lambda", "1,0", "--z", "1"]).status.code(), Some(2));
    // domain errors
    let o = run(&["classify", "sp", "2", "--lambda", "0,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("dominan"));
    let o = run(&["classify", "e6", "--lambda0", "0,0,0,0,0,-22/3,-22/3,22/3", "--z", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("normalization"));
    assert_eq!(run(&["classify", "sp", "2", "--lambda", "1,0,0"]).status.code(), Some(1));
    assert_eq!(run(&["scan", "sp", "9"]).status.code(), Some(1));
}

#[test]
fn scan_reports_known_boundary_only() {
    let o = run(&["scan", "sp", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    let header: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(header["hard_failures"], 0);
    assert!(header["known_boundary"].as_u64().unwrap() > 0);
    for l in lines {
        let d: Value = serde_json::from_str(l).unwrap();
        assert_eq!(d["severity"], "known_boundary");
        assert!(d["input"]["group"].as_str().unwrap().starts_with("sp "));
    }
}

#[test]
fn scan_is_deterministic() {
    let a = run(&["scan", "su", "2", "2", "--json", "--check", "antichain", "--seed", "9"]);
    let b = run(&["scan", "su", "2", "2", "--json", "--check", "antichain", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
    let header: Value = serde_json::from_str(stdout(&a).lines().next().unwrap()).unwrap();
    assert_eq!(header["seed"], 9);
}

#[test]
fn verify_small_rank_passes() {
    let o = Command::new(env!("CARGO_BIN_EXE_orbitlab"))
        .args(["verify", "--json"])
        .env("ORBITLAB_MAX_RANK", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let header: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(header["hard_failures"], 0);
    let o = Command::new(env!("CARGO_BIN_EXE_orbitlab")).args(["verify"]).env("ORBITLAB_MAX_RANK", "x").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn batch_mode() {
    let input = concat!(
        r#"{"group":"sp 2","lambda":["1","0"]}"#,
        "\n",
        r#"{"verb":"gkdim","group":"so_odd 3","lambda0":[-4,0,0],"z":"5/2"}"#,
        "\n",
        r#"{"verb":"unitary","group":"su 2 1","lambda":["1/2","-1/2","0"]}"#,
        "\n",
    );
    let o = run_stdin(&["batch"], input);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    let single = json_out(&["classify", "sp", "2", "--lambda", "1,0", "--json"]);
    assert_eq!(serde_json::from_str::<Value>(lines[0]).unwrap(), single);
    assert_eq!(lines[1], "\"4\"");
    assert_eq!(lines[2], "true");

    let o = run_stdin(&["batch"], "{\"group\":\"sp 2\",\"lambda\":[\"0\",\"1\"]}\nnot json\n");
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    let kinds: Vec<Value> = out.lines().map(|l| serde_json::from_str::<Value>(l).unwrap()["kind"].clone()).collect();
    assert_eq!(kinds, vec![Value::from("domain"), Value::from("parse")]);
}
