use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn uclab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uclab"))
        .args(args)
        .env_remove("UCLAB_MAX_ATOMS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

const KMIN_B3: &str = r#"{"kind": "complex", "vertices": ["a", "b", "c"], "faces": [["a"], ["b"], ["c"]]}"#;

/// Writes Kmin on three atoms as a uc document.
fn kmin_file(dir: &Path) -> PathBuf {
    let c = write(dir, "kmin_complex.json", KMIN_B3);
    let out = dir.join("kmin.json");
    let o = uclab(&["convert", "--in", c.to_str().unwrap(), "--to", "uc", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn check_accepts_kmin() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let k = kmin_file(dir);
    let o = uclab(&["check", "--in", k.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("valid ultracontact"));
    assert_eq!(read_json(&k)["kind"], "uc");
}

#[test]
fn violation_exits_one_with_counterexample() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let bad = write(
        dir,
        "bad.json",
        r#"{"kind": "complex", "vertices": ["a", "b", "c"], "faces": [["a"], ["b"], ["c"], ["a", "b", "c"]]}"#,
    );
    let report = dir.join("report.json");
    let o = uclab(&["--json", report.to_str().unwrap(), "check", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample"));
    let r = read_json(&report);
    assert_eq!(r["status"], "violation");
    assert_eq!(r["counterexample"]["axiom"], "SC2");
}

#[test]
fn malformed_input_exits_two() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let bad = write(dir, "bad.json", "{oops");
    let report = dir.join("report.json");
    let o = uclab(&["--json", report.to_str().unwrap(), "check", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(read_json(&report)["status"], "error");
    let missing = uclab(&["check", "--in", dir.join("nope.json").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    for (what, n, count) in [("--ucs", "3", 9), ("--stacks", "3", 20), ("--grills", "3", 7), ("--complexes", "4", 114)] {
        let report = dir.join("e.json");
        let o = uclab(&["--json", report.to_str().unwrap(), "enumerate", what, "--atoms", n]);
        assert_eq!(o.status.code(), Some(0), "{what}");
        assert_eq!(read_json(&report)["data"]["count"], count, "{what}");
    }
}

#[test]
fn atom_cap_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_uclab"))
        .args(["enumerate", "--ucs", "--atoms", "3"])
        .env("UCLAB_MAX_ATOMS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("UCLAB_MAX_ATOMS"));
}

#[test]
fn convert_round_trips_through_stack_systems() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let k = kmin_file(dir);
    let s = dir.join("s.json");
    let back = dir.join("back.json");
    let cx = dir.join("cx.json");
    assert!(uclab(&["convert", "--in", k.to_str().unwrap(), "--to", "stack-system", "--out", s.to_str().unwrap()]).status.success());
    assert_eq!(read_json(&s)["kind"], "stack-system");
    assert!(uclab(&["convert", "--in", s.to_str().unwrap(), "--to", "uc", "--out", back.to_str().unwrap()]).status.success());
    assert_eq!(read_json(&k), read_json(&back));
    assert!(uclab(&["convert", "--in", back.to_str().unwrap(), "--to", "complex", "--out", cx.to_str().unwrap()]).status.success());
    assert_eq!(read_json(&cx), serde_json::from_str::<Value>(KMIN_B3).unwrap());
}

#[test]
fn derive_contact_and_hypercontact() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let k = kmin_file(dir);
    let c = dir.join("c.json");
    let h = dir.join("h.json");
    assert!(uclab(&["derive", "--in", k.to_str().unwrap(), "--contact", "--out", c.to_str().unwrap()]).status.success());
    assert_eq!(read_json(&c)["kind"], "contact");
    assert_eq!(uclab(&["check", "--in", c.to_str().unwrap()]).status.code(), Some(0));
    assert!(uclab(&["derive", "--in", k.to_str().unwrap(), "--hypercontact", "--out", h.to_str().unwrap()]).status.success());
    assert_eq!(read_json(&h)["kind"], "hypercontact");
    assert_eq!(uclab(&["check", "--in", h.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn extend_and_lattice() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let k = kmin_file(dir);
    let ks = k.to_str().unwrap();
    let kab = dir.join("kab.json");
    let kac = dir.join("kac.json");
    assert!(uclab(&["extend", "--in", ks, "--atoms", "a,b", "--out", kab.to_str().unwrap()]).status.success());
    assert!(uclab(&["extend", "--in", ks, "--atoms", "a,c", "--out", kac.to_str().unwrap()]).status.success());

    let meet = dir.join("meet.json");
    let o = uclab(&["lattice", "--meet", kab.to_str().unwrap(), kac.to_str().unwrap(), "--out", meet.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(read_json(&meet), read_json(&k));

    let join = dir.join("join.json");
    let o = uclab(&["lattice", "--join", ks, kab.to_str().unwrap(), "--out", join.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(read_json(&join), read_json(&kab));

    let grill = uclab(&["extend", "--in", ks, "--grill", "a,ab,ac,abc", "--grill", "b,ab,bc,abc"]);
    assert_eq!(grill.status.code(), Some(0));
    let not_grill = uclab(&["extend", "--in", ks, "--grill", "a"]);
    assert_eq!(not_grill.status.code(), Some(2));

    let set = uclab(&["extend", "--in", ks, "--set", "a,b"]);
    assert_eq!(set.status.code(), Some(1));
    assert!(stdout(&set).contains("counterexample"));
}

#[test]
fn topology_uc_from_a_space() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let x = write(
        dir,
        "x.json",
        r#"{"kind": "space", "points": ["l", "m", "r"], "opens": [[], ["l"], ["r"], ["l", "r"], ["l", "m", "r"]]}"#,
    );
    let out = dir.join("k.json");
    let o = uclab(&["topology-uc", "--in", x.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let k = read_json(&out);
    assert_eq!(k["algebra"]["atoms"], serde_json::json!(["{l,m}", "{m,r}"]));
}

#[test]
fn verify_theorems() {
    let o = uclab(&["verify", "--theorem", "meet-not-intersection"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS meet-not-intersection"));
    let all = uclab(&["verify", "--all"]);
    assert_eq!(all.status.code(), Some(0));
    assert_eq!(stdout(&all).lines().filter(|l| l.starts_with("PASS")).count(), 20);
    assert_eq!(uclab(&["verify", "--theorem", "no-such-theorem"]).status.code(), Some(2));
}
