use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const BROKEN: &str = r#"{
  "name": "broken",
  "dim_even": 2,
  "dim_odd": 0,
  "alpha": [["1", "0"], ["0", "1"]],
  "brackets": [{"i": 0, "j": 0, "coeffs": {"1": "1"}}]
}
"#;

fn homsuper(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homsuper"))
        .args(args)
        .env_remove("HOMSUPER_SEED")
        .output()
        .expect("spawn homsuper")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_catalog(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.alg"));
    let o = homsuper(&["catalog", name, "--out", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    path
}

#[test]
fn complete_sl2_at_zero() {
    let dir = TempDir::new().unwrap();
    let sl2 = write_catalog(dir.path(), "sl2");
    let o = homsuper(&["complete", sl2.to_str().unwrap(), "--s", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("complete: true"), "{out}");
    assert!(out.contains("simply_complete: true"), "{out}");
    assert!(out.contains("center_dim: 0"), "{out}");
    assert!(out.contains("der_dim: 3|0"), "{out}");
}

#[test]
fn sl2_with_odd_module_is_incomplete() {
    let dir = TempDir::new().unwrap();
    let g = write_catalog(dir.path(), "remark_2_2");
    let o = homsuper(&["--format", "machine", "complete", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["complete"], false);
}

#[test]
fn broken_self_bracket_reports_witness() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("broken.alg");
    std::fs::write(&path, BROKEN).unwrap();
    let o = homsuper(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("Supersymmetry"), "{err}");
    assert!(err.contains("[0, 0, 1]"), "{err}");
    assert!(stdout(&o).contains("supersymmetry: false"));

    // commands that need a valid algebra refuse it too
    let o = homsuper(&["complete", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn holomorph_output_validates() {
    let dir = TempDir::new().unwrap();
    for name in ["sl2", "heisenberg3", "gl11"] {
        let g = write_catalog(dir.path(), name);
        let h = dir.path().join(format!("h_{name}.alg"));
        let o = homsuper(&["holomorph", g.to_str().unwrap(), "--out", h.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        let o = homsuper(&["validate", h.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        homsuper(&["validate", "x.alg", "--no-such-flag"]).status.code(),
        Some(2)
    );
    assert_eq!(homsuper(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(homsuper(&[]).status.code(), Some(2));
}

#[test]
fn missing_file_and_bad_catalog_exit_one() {
    assert_eq!(homsuper(&["validate", "/nonexistent/g.alg"]).status.code(), Some(1));
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("x.alg");
    let o = homsuper(&["catalog", "e8", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn malformed_json_exits_one() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, "{\"name\": \"x\", \"dim_even\": 1}").unwrap();
    let o = homsuper(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stderr(&o).is_empty());
}

#[test]
fn machine_analyze_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = write_catalog(dir.path(), "sl2_plus_sl2");
    let args = ["--format", "machine", "analyze", g.to_str().unwrap(), "--sweep", "1"];
    let a = homsuper(&args);
    let b = homsuper(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["decomposition"]["summand_dims"].as_array().unwrap().len(), 2);
}

#[test]
fn decompose_and_theorems() {
    let dir = TempDir::new().unwrap();
    let g = write_catalog(dir.path(), "sl2_plus_sl2");
    let o = homsuper(&[
        "--format",
        "machine",
        "decompose",
        g.to_str().unwrap(),
        "--simply-complete",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let summands = v["summands"].as_array().unwrap();
    assert_eq!(summands.len(), 2);
    assert!(summands.iter().all(|s| s["dim_even"] == 3 && s["complete"] == true));

    let o = homsuper(&["check-theorems", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("fail "));
}

#[test]
fn seed_must_be_numeric() {
    let dir = TempDir::new().unwrap();
    let g = write_catalog(dir.path(), "sl2");
    let o = Command::new(env!("CARGO_BIN_EXE_homsuper"))
        .args(["decompose", g.to_str().unwrap()])
        .env("HOMSUPER_SEED", "abc")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn derivations_inner_listing() {
    let dir = TempDir::new().unwrap();
    let g = write_catalog(dir.path(), "heisenberg3");
    let o = homsuper(&["--format", "machine", "derivations", g.to_str().unwrap(), "--inner"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["even_dim"], 6);
    assert_eq!(v["inner_dim"], 2);
    assert_eq!(v["inner_contained_in_next"], true);
}

#[test]
fn non_multiplicative_twist_fails_validation() {
    // sl2 with α = 2·id: hom-Jacobi holds, α[x, y] ≠ [αx, αy]
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("scaled.alg");
    let sl2 = write_catalog(dir.path(), "sl2");
    let text = std::fs::read_to_string(sl2).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for k in 0..3 {
        v["alpha"][k][k] = "2".into();
    }
    std::fs::write(&path, v.to_string()).unwrap();
    let o = homsuper(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("multiplicative: false"));
    assert!(stderr(&o).contains("Multiplicativity"), "{}", stderr(&o));
}
