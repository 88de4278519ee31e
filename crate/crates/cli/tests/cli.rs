use std::path::PathBuf;
use std::process::{Command, Output};

fn overdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_overdet")).args(args).env_remove("OVERDET_SEED").output().expect("binary runs")
}

fn system(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "systems", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn analyze_file_as_json() {
    let f = system("cr2.sys");
    let o = overdet(&["analyze", &f, "--format", "json", "--query-dim", "0", "--no-flagcover"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["m"], 2);
    assert_eq!(v["verdict"]["classification"], "overdetermined");
    assert_eq!(v["verdict"]["max_removable_submanifold_dim"], 0);
    assert_eq!(v["removability"][0]["answer"], "removable");
    assert_eq!(v["ext"][1]["status"], "trivial");
}

#[test]
fn sharp_counterexample_query() {
    let o = overdet(&["catalog", "example2_n3d1", "--query-dim", "1", "--no-omega"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("query dim 1: sharp-counterexample"));
}

#[test]
fn parse_error_reports_location() {
    let dir = std::env::temp_dir().join(format!("overdet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("broken.sys");
    std::fs::write(&f, "vars 2;\nunknowns 1;\neq d1 + * d2;\n").unwrap();
    let o = overdet(&["analyze", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3:9"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(overdet(&["analyze"]).status.code(), Some(2));
    assert_eq!(overdet(&["catalog", "no-such-system"]).status.code(), Some(2));
    assert_eq!(overdet(&["analyze", "/nonexistent/x.sys"]).status.code(), Some(2));
    assert_eq!(overdet(&["catalog", "cr1", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn json_is_deterministic_for_a_seed() {
    let args = ["catalog", "wave2", "--format", "json", "--seed", "7", "--samples", "200"];
    let a = overdet(&args);
    let b = overdet(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_overdet"))
        .args(["catalog", "cr1", "--format", "json", "--no-omega", "--no-flagcover"])
        .env("OVERDET_SEED", "42")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 42);
}

#[test]
fn list_catalog_names_every_system() {
    let out = stdout(&overdet(&["list-catalog"]));
    for name in
        ["cr1", "cr2", "cr3", "grad2", "grad3", "laplace2", "wave2", "example2_n3d1", "example2_n4d1", "example2_n4d2"]
    {
        assert!(out.lines().any(|l| l.starts_with(name)), "{name}");
    }
}

#[test]
fn lower_order_terms_are_dropped() {
    let f = system("grad3_lower_order.sys");
    let o = overdet(&["analyze", &f, "--format", "json", "--no-omega", "--no-flagcover"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["shifts"]["lower_order_dropped"], true);
    assert_eq!(v["m"], 3);
}
