use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn weil(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_weil"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn spec_examples() {
    assert_eq!(weil(&["milgram", "--m", "5"]).0, 0);
    let (code, out) = weil(&["rank-lemma", "--m", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("rank: 4"));
    assert!(out.contains("PASS leading 2φ(m) columns independent"));
    let (code, out) = weil(&[
        "check-S",
        "--builtin",
        "theta",
        "--points",
        "i",
        "--tol",
        "1e-8",
    ]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn failures_exit_with_two() {
    assert_eq!(weil(&["rank-lemma", "--m", "5"]).0, 2);
    assert_eq!(weil(&["milgram", "--m", "3", "--sig", "2,2"]).0, 2);
    assert_eq!(weil(&["casimir-check", "--builtin", "probe"]).0, 2);
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(weil(&[]).0, 1);
    assert_eq!(weil(&["rho"]).0, 1);
    assert_eq!(weil(&["rho", "--m", "2", "--word", "S X"]).0, 1);
    assert_eq!(
        weil(&["check-S", "--builtin", "theta", "--points", "-i"]).0,
        1
    );
    assert_eq!(
        weil(&["split", "--in", "/nonexistent.json", "--m", "1", "--k", "0"]).0,
        1
    );
    assert_eq!(weil(&["rank-lemma", "--m", "4"]).0, 1);
}

#[test]
fn every_subcommand_is_wired() {
    let (_, help) = weil(&["--help"]);
    for sub in [
        "rho",
        "milgram",
        "split",
        "combine",
        "eval",
        "check-plus",
        "check-T",
        "check-S",
        "fj-check",
        "rank-lemma",
        "gauss-check",
        "b-entry",
        "jacobi-decompose",
        "jacobi-reconstruct",
        "jacobi-thm2",
        "heat-check",
        "casimir-check",
        "selftest",
    ] {
        assert!(help.contains(sub), "{sub} missing from help");
    }
}

#[test]
fn rho_emits_exact_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("rho.json");
    let (code, _) = weil(&[
        "rho",
        "--m",
        "2",
        "--word",
        "S T T S'",
        "--json",
        path(&report),
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["command"], "rho");
    assert_eq!(v["params"]["word"], "S T T S'");
    assert_eq!(v["data"]["matrix"].as_array().unwrap().len(), 4);
    assert_eq!(v["data"]["matrix"][0][0]["N"], 8);
    assert_eq!(v["data"]["embedding"][0].as_array().unwrap().len(), 4);
    assert_eq!(v["pass"], true);
}

#[test]
fn split_combine_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    let v = dir.path().join("F.json");
    let back = dir.path().join("back.json");
    std::fs::write(
        &f,
        r#"{"kind":"scalar","m":3,"k":1,"weight_num":3,
            "coeffs":[{"n":"-1","c_plus":"1","c_minus":"5/2"},{"n":"8","c_plus":"-6"},{"n":"12","c_plus":0.5}],
            "window":["-4","20"]}"#,
    )
    .unwrap();
    let (code, out) = weil(&[
        "split",
        "--in",
        path(&f),
        "--m",
        "3",
        "--k",
        "1",
        "--out",
        path(&v),
    ]);
    assert_eq!(code, 0, "{out}");
    let (code, _) = weil(&["check-T", "--in", path(&v)]);
    assert_eq!(code, 0);
    let (code, _) = weil(&["combine", "--in", path(&v), "--out", path(&back)]);
    assert_eq!(code, 0);
    let (code, _) = weil(&["check-plus", "--in", path(&back)]);
    assert_eq!(code, 0);
    let a: Value = serde_json::from_str(&std::fs::read_to_string(&back).unwrap()).unwrap();
    assert_eq!(a["coeffs"].as_array().unwrap().len(), 3);
    assert_eq!(a["coeffs"][0]["c_minus"], "5/2");
    assert_eq!(a["coeffs"][2]["c_plus"], 0.5);
    // 2 is not ±□ mod 12
    std::fs::write(
        &f,
        r#"{"kind":"scalar","m":3,"k":1,"weight_num":3,"coeffs":[{"n":"2","c_plus":"1"}],"window":["0","5"]}"#,
    )
    .unwrap();
    assert_eq!(weil(&["check-plus", "--in", path(&f)]).0, 2);
    assert_eq!(
        weil(&["split", "--in", path(&f), "--m", "3", "--k", "1"]).0,
        1
    );
}

#[test]
fn jacobi_commands() {
    let dir = tempfile::tempdir().unwrap();
    let phi = dir.path().join("phi.json");
    let hs = dir.path().join("h.json");
    let f = dir.path().join("f.json");
    let phi2 = dir.path().join("phi2.json");
    std::fs::write(
        &phi,
        r#"{"kind":"jacobi","k":2,"m":3,
            "c_plus":[{"D":-12,"r":0,"v":"1"},{"D":1,"r":1,"v":"2"},{"D":1,"r":5,"v":"2"}],
            "c_minus":[{"D":12,"r":0,"v":"-1"}],"d_window":[-12,12]}"#,
    )
    .unwrap();
    assert_eq!(
        weil(&["jacobi-decompose", "--in", path(&phi), "--out", path(&hs)]).0,
        0
    );
    assert_eq!(
        weil(&[
            "jacobi-reconstruct",
            "--in",
            path(&hs),
            "--out",
            path(&phi2)
        ])
        .0,
        0
    );
    let a: Value = serde_json::from_str(&std::fs::read_to_string(&phi2).unwrap()).unwrap();
    assert_eq!(a["c_plus"].as_array().unwrap().len(), 3);
    assert_eq!(
        weil(&["jacobi-thm2", "--in", path(&phi), "--out", path(&f)]).0,
        0
    );
    assert_eq!(
        weil(&[
            "jacobi-thm2",
            "--inverse",
            "--in",
            path(&f),
            "--out",
            path(&phi2)
        ])
        .0,
        0
    );
    assert_eq!(
        weil(&["casimir-check", "--in", path(&phi), "--tau", "0.1+1.2i"]).0,
        0
    );
    assert_eq!(weil(&["heat-check", "--m", "7", "--r", "-11"]).0, 0);
}

#[test]
fn numeric_commands() {
    let (code, out) = weil(&["eval", "--builtin", "theta", "--tau", "i"]);
    assert_eq!(code, 0);
    assert!(out.contains("1.0037348854877"));
    assert_eq!(weil(&["fj-check", "--builtin", "theta", "--j", "3"]).0, 0);
    assert_eq!(weil(&["fj-check", "--builtin", "theta", "--j", "2"]).0, 1);
    assert_eq!(weil(&["gauss-check", "--m", "7"]).0, 0);
    let (code, out) = weil(&["b-entry", "--m", "3", "--beta", "1", "--gamma", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("value: 4") && out.contains("table: -2"));
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(weil(&["selftest", "--seed", "9", "--json", path(&a)]).0, 0);
    assert_eq!(weil(&["selftest", "--seed", "9", "--json", path(&b)]).0, 0);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let c = dir.path().join("c.json");
    weil(&["check-S", "--builtin", "theta", "--json", path(&c)]);
    weil(&["check-S", "--builtin", "theta", "--json", path(&a)]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&c).unwrap());
}
