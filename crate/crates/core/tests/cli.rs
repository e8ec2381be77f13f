//! End-to-end runs of the `orientable` binary.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_orientable"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn constructions_pipe_into_verify() {
    let cases: [&[&str]; 5] = [
        &["construct", "periodic", "--target-order", "12"],
        &["construct", "periodic", "--target-order", "6"],
        &["construct", "aperiodic", "--target-order", "9"],
        &["construct", "aperiodic", "--target-order", "2"],
        &["construct", "debruijn", "--order", "8"],
    ];
    for args in cases {
        let built = run(args);
        assert_eq!(built.status.code(), Some(0), "{args:?}");
        let property = if args[1] == "debruijn" {
            "nwindow"
        } else {
            "orientable"
        };
        let checked = run_with_stdin(&["verify", "--property", property, "-"], &built.stdout);
        assert_eq!(
            checked.status.code(),
            Some(0),
            "{args:?}: {}",
            stdout(&checked)
        );
    }
}

#[test]
fn construct_writes_files_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s10.txt");
    let trace = dir.path().join("trace.json");
    let o = run(&[
        "construct",
        "periodic",
        "--target-order",
        "10",
        "--out",
        out.to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("# mode=periodic order=10\n"));
    assert_eq!(text.lines().nth(1).unwrap().len(), 149);
    let t: Value = serde_json::from_str(&fs::read_to_string(&trace).unwrap()).unwrap();
    let periods: Vec<u64> = t["steps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["period"].as_u64().unwrap())
        .collect();
    assert_eq!(periods, [9, 18, 37, 74, 149]);
}

#[test]
fn custom_starter_is_checked() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    fs::write(&good, "001010111\n").unwrap();
    let o = run(&[
        "construct",
        "periodic",
        "--target-order",
        "8",
        "--starter",
        good.to_str().unwrap(),
        "--starter-order",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0000100011010001001111101110010111011"));

    // [001101] has even weight.
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "001101\n").unwrap();
    let o = run(&[
        "construct",
        "periodic",
        "--target-order",
        "8",
        "--starter",
        bad.to_str().unwrap(),
        "--starter-order",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_reports_counterexample() {
    let o = run_with_stdin(
        &["verify", "--order", "2", "--property", "nwindow", "-"],
        b"00110\n",
    );
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["ok"], false);
    assert_eq!(v["counterexample"]["i"], 0);
    assert_eq!(v["counterexample"]["j"], 4);
    assert_eq!(v["counterexample"]["tuple"], "00");

    let o = run_with_stdin(
        &["verify", "--order", "3", "--mode", "aperiodic", "-"],
        b"00110\n",
    );
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["counterexample"]["kind"], "reversed");

    let o = run_with_stdin(&["--json", "verify", "--order", "5", "-"], b"[001101]\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["ok"], true);
}

#[test]
fn bounds() {
    let o = run(&["--json", "bound", "--order", "9"]);
    let v = json(&o);
    assert_eq!(v["dai"], 206);
    assert_eq!(v["burns"], 248);
    let o = run(&["bound", "--order", "5", "--aperiodic"]);
    assert_eq!(stdout(&o).trim(), "burns 16");
    assert_eq!(run(&["bound", "--order", "4"]).status.code(), Some(2));
}

#[test]
fn search_with_budget_and_resume() {
    let o = run(&["--json", "search", "--order", "5", "--mode", "periodic"]);
    let v = json(&o);
    assert_eq!(v["best"], 6);
    assert_eq!(v["exhaustive"], true);

    let full = json(&run(&[
        "--json", "search", "--order", "6", "--mode", "periodic",
    ]));
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("cp.json");
    let cp_arg = cp.to_str().unwrap();
    let partial = json(&run(&[
        "--json",
        "search",
        "--order",
        "6",
        "--mode",
        "periodic",
        "--budget",
        "100",
        "--checkpoint",
        cp_arg,
    ]));
    assert_eq!(partial["exhaustive"], false);
    assert!(cp.exists());
    let resumed = json(&run(&["--json", "search", "--resume", cp_arg]));
    assert_eq!(resumed["exhaustive"], true);
    assert_eq!(resumed["best"], full["best"]);
    assert_eq!(resumed["witness"], full["witness"]);
    assert_eq!(resumed["nodes"], full["nodes"]);

    let o = run(&[
        "search",
        "--order",
        "5",
        "--mode",
        "aperiodic",
        "--no-prune",
        "--no-symmetry",
    ]);
    assert!(stdout(&o).contains("length 14 optimal"));
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn index_and_locate() {
    let dir = tempfile::tempdir().unwrap();
    let seq = write(dir.path(), "s.txt", "# mode=periodic order=5\n001101\n");
    let idx = dir.path().join("idx.txt");
    let o = run(&["index", "--seq", &seq, "--out", idx.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&idx).unwrap();
    assert_eq!(text.lines().count(), 13);
    assert!(text.contains("\n00110 0 forward\n"));

    let o = run(&["locate", "--seq", &seq, "--window", "01100"]);
    assert_eq!(stdout(&o).trim(), "position 0 reverse");
    let o = run(&["--json", "locate", "--seq", &seq, "--window", "10011"]);
    assert_eq!(json(&o)["location"]["orientation"], "forward");
    assert_eq!(
        run(&["locate", "--seq", &seq, "--window", "11111"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["locate", "--seq", &seq, "--window", "0110"])
            .status
            .code(),
        Some(2)
    );

    // Not orientable at order 2, so no index.
    let bad = write(dir.path(), "bad.txt", "00110\n");
    assert_eq!(
        run(&["index", "--seq", &bad, "--order", "2"]).status.code(),
        Some(1)
    );
}

#[test]
fn tables_render() {
    let o = run(&["tables"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("| 9 | 206 |"));
    assert!(text.contains("| 10 | 149 | 149 | yes |"));
    assert!(text.contains("| 10 | 350 | 350 |"));
    let v = json(&run(&["--json", "tables"]));
    assert_eq!(v["period_bounds"][0]["max_period"], 6);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["construct"][..],
        &["verify"],
        &["search", "--order", "5"],
        &["construct", "periodic", "--target-order", "5"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let o = run_with_stdin(&["verify", "-"], b"0101\n");
    assert_eq!(o.status.code(), Some(2));
    let o = run_with_stdin(&["verify", "--order", "3", "-"], b"01x1\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
