use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn instance(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances").join(name)
}

fn setcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setcalc")).args(args).output().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sum_example_check_succeeds() {
    let out = setcalc(&["check", path(&instance("abs_sum_equality.json"))]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("equality-holds, LHS=RHS=[-1, 1]"), "{}", stdout(&out));
    assert!(out.stderr.is_empty());
}

#[test]
fn subdiff_prints_the_two_point_set() {
    let out = setcalc(&["subdiff", path(&instance("abs_sum_strict.json")), "F2", "Theta", "at", "p0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{-1, 1}\n");
    let singular = setcalc(&["subdiff", path(&instance("abs_sum_strict.json")), "F2", "Theta", "p0", "--singular"]);
    assert_eq!(stdout(&singular), "{0}\n");
    let regular = setcalc(&["subdiff", path(&instance("abs_sum_strict.json")), "F2", "Theta", "at", "p0", "--kind", "regular"]);
    assert_eq!(stdout(&regular), "∅\n");
}

#[test]
fn violated_qualification_does_not_fail_the_run() {
    let out = setcalc(&["check", path(&instance("qualification_violated.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("violated"), "{text}");
    assert!(text.contains("conclusion not guaranteed"), "{text}");
}

#[test]
fn failed_inclusion_exits_one() {
    let out = setcalc(&["check", path(&instance("epi_chain_counterexample.json"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("inclusion-fails"));
}

#[test]
fn parse_errors_exit_two_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"points": {"p": ["1.5"]}}"#).unwrap();
    let out = setcalc(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("MalformedRational"));
    let missing = setcalc(&["check", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
    let usage = setcalc(&["frobnicate"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("off_graph.json");
    let text = fs::read_to_string(instance("abs_sum_equality.json")).unwrap().replace(r#""p0": ["0", "0"]"#, r#""p0": ["0", "-1"]"#);
    fs::write(&file, text).unwrap();
    let out = setcalc(&["check", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("epigraph"));
    let sub = setcalc(&["subdiff", file.to_str().unwrap(), "F1", "Theta", "at", "p0"]);
    assert_eq!(sub.status.code(), Some(3));
}

#[test]
fn jobs_keep_instance_order() {
    let file = instance("chain_abs.json");
    let serial = setcalc(&["--json", "check", path(&file)]);
    let parallel = setcalc(&["--json", "check", path(&file), "--jobs", "4"]);
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn json_reports_match_the_golden_files() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances");
    let mut seen = 0;
    for entry in fs::read_dir(&dir).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_none_or(|e| e != "json") {
            continue;
        }
        let expected = fs::read_to_string(dir.join("expected").join(p.file_name().unwrap())).unwrap();
        let out = setcalc(&["--json", "check", path(&p)]);
        assert_eq!(stdout(&out), expected, "{}", p.display());
        seen += 1;
    }
    assert!(seen >= 8);
}

#[test]
fn normal_cone_and_coderivative_commands() {
    let file = instance("indicator.json");
    let out = setcalc(&["normal-cone", path(&file), "HalfLine", "at", "zero"]);
    assert_eq!(stdout(&out), "regular:  (-inf, 0]\nlimiting: (-inf, 0]\n");
    let literal = setcalc(&["normal-cone", path(&file), "Cross", "at", "0,0", "--kind", "regular"]);
    assert_eq!(stdout(&literal), "regular:  conv{(0, 0)}\n");
    let cod = setcalc(&["coderivative", path(&instance("abs_sum_equality.json")), "F1", "at", "p0", "1"]);
    assert_eq!(stdout(&cod), "[0, 1]\n");
    let json = setcalc(&["--json", "coderivative", path(&instance("chain_linear.json")), "Double", "at", "origin", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["pieces"][0]["vertices"][0][0], "6");
}

#[test]
fn oracle_compare_is_sound_on_shipped_sets() {
    let out = setcalc(&["oracle-compare", path(&instance("indicator.json")), "--oracle-resolution", "16"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let json = setcalc(&["--json", "oracle-compare", path(&instance("indicator.json")), "Cross", "at", "origin"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["sound"], true);
    assert_eq!(v[0]["covered"], v[0]["generators"]);
}
