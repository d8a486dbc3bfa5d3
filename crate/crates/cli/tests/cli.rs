use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sumstab"))
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
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

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("{}-{name}", std::process::id()))
}

#[test]
fn doubling_of_zero_deficit_set() {
    let o = run_stdin(&["doubling", "-"], "0\n1\n2\n4\n");
    assert!(o.status.success());
    assert!(stdout(&o).contains("card=4 sum=8 deficit=0"), "{}", stdout(&o));
}

#[test]
fn doubling_json() {
    let o = run_stdin(&["--json", "doubling", "-"], "0 0\n0 1\n1 0\n1 1\n");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["doubling"]["deficit"], -7);
    assert_eq!(v["doubling"]["card_sum"], 9);
    assert!(v["converse"].is_null());
}

#[test]
fn convex_progression_fills_lattice() {
    let o = run_stdin(&["covprog", "-"], "1\n3\n7\n9\n");
    assert!(o.status.success());
    let text = stdout(&o);
    let pts: Vec<&str> = text.lines().filter(|l| !l.starts_with("gap=") && !l.starts_with('#')).collect();
    assert_eq!(pts, ["1", "3", "5", "7", "9"]);
    assert!(text.lines().any(|l| l == "gap=1"));
}

#[test]
fn sum_backends_agree() {
    let input = scratch("sum.txt");
    std::fs::write(&input, "0 0\n3 1\n-2 5\n4 4\n1 1\n").unwrap();
    let path = input.to_str().unwrap();
    let outs: Vec<String> = ["hash", "merge", "bitset", "auto"]
        .iter()
        .map(|b| {
            let o = run_stdin(&["sum", "--backend", b, path, path], "");
            assert!(o.status.success(), "{b}");
            stdout(&o)
        })
        .collect();
    assert!(outs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn enumerate_small_n() {
    let o = bin().args(["enumerate", "--n", "13"]).output().unwrap();
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("n=13"));
    assert!(text.contains("sets=4096"));
    assert!(text.contains("violations=0"));
}

#[test]
fn family_round_trips_through_doubling() {
    let o = bin().args(["family", "degenerate", "--k", "2", "--n0", "1", "--n", "3"]).output().unwrap();
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).count(), 7);
    let d = run_stdin(&["doubling", "-"], &text);
    assert!(stdout(&d).contains("deficit=-10"), "{}", stdout(&d));
}

#[test]
fn set_round_trip_via_files() {
    let input = scratch("in.txt");
    let out = scratch("out.txt");
    std::fs::write(&input, "# comment\n2 1\n\n0 0\n2 1\n").unwrap();
    let o = bin()
        .args(["--out", out.to_str().unwrap(), "compress", "--axis", "0", input.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().collect::<Vec<_>>(), ["0 0", "0 1"]);
    let o_path = out.to_str().unwrap();
    let back = bin().args(["--json", "sum", o_path, o_path]).output().unwrap();
    assert!(back.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(v["dim"], 2);
}

#[test]
fn lower_hull_and_infconv() {
    let f = "0 0\n1 3\n2 1\n3 3\n";
    let o = run_stdin(&["lowerhull", "-"], f);
    assert!(o.status.success());
    let values: Vec<String> = stdout(&o).lines().map(|l| l.split_whitespace().last().unwrap().to_string()).collect();
    assert_eq!(values, ["0", "1/2", "1", "3"]);
    let o = run_stdin(&["infconv", "-"], "0 0\n1 1\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn exit_codes() {
    let usage = bin().args(["doubling", "--no-such-flag"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
    let missing = bin().args(["doubling", "/nonexistent/set.txt"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(2));
    let bad = run_stdin(&["doubling", "-"], "1 2\n3\n");
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    let help = bin().arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn small_suite_is_clean() {
    let o = bin().args(["suite", "--seed", "3", "--count", "20", "--freiman-n", "8"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["suites"].as_array().unwrap().iter().all(|s| s["violations"] == 0));
}
