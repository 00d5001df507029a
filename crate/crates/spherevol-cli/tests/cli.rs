//! End-to-end tests of the command-line surface.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spherevol"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin_file(args: &[&str], content: &str) -> (Output, tempdir::Scoped) {
    let dir = tempdir::scoped();
    let path = dir.path.join("input.json");
    std::fs::write(&path, content).unwrap();
    let mut full: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    full.push(path.to_string_lossy().into_owned());
    let out = bin().args(&full).output().expect("binary runs");
    (out, dir)
}

/// Tiny scoped temp dir; std has no stable tempdir and the tests only
/// need a throwaway path.
mod tempdir {
    use std::path::PathBuf;

    pub struct Scoped {
        pub path: PathBuf,
    }

    impl Drop for Scoped {
        fn drop(&mut self) {
            let _ = std::fs::remove_dir_all(&self.path);
        }
    }

    pub fn scoped() -> Scoped {
        let path = std::env::temp_dir().join(format!(
            "spherevol-test-{}-{:?}",
            std::process::id(),
            std::thread::current().id()
        ));
        std::fs::create_dir_all(&path).unwrap();
        Scoped { path }
    }
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn construct_p4_then_volume() {
    let construct = run(&["construct", "p4"]);
    assert!(construct.status.success());
    let doc = String::from_utf8(construct.stdout).unwrap();

    let (volume_out, _dir) = run_with_stdin_file(&["volume"], &doc);
    let v = stdout_json(&volume_out);
    let vol = v["volume"].as_f64().unwrap();
    assert!((vol - 3.0f64.sqrt() / 4.0).abs() < 1e-9, "vol(P_4) = {vol}");
    assert_eq!(v["manifest"]["command"], "volume");
}

#[test]
fn construct_output_reparses_losslessly() {
    let first = run(&["construct", "cyclic", "--dim", "4", "--nverts", "7"]);
    let text = String::from_utf8(first.stdout).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let reserialized = serde_json::to_string_pretty(&parsed).unwrap();
    // shortest-roundtrip floats: parse + re-serialize is the identity
    assert_eq!(text.trim(), reserialized.trim());
}

#[test]
fn cyclic_c47_satisfies_property_z() {
    let construct = run(&["construct", "cyclic", "--dim", "4", "--nverts", "7"]);
    let doc = String::from_utf8(construct.stdout).unwrap();
    let (out, _dir) = run_with_stdin_file(&["check-z", "--tol", "1e-8"], &doc);
    let v = stdout_json(&out);
    assert_eq!(v["satisfies"], true);
    assert!(v["max_residual"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn gale_of_square_contracts_to_signs() {
    let construct = run(&["construct", "dplus2", "--dim", "2"]);
    let doc = String::from_utf8(construct.stdout).unwrap();
    let (out, _dir) = run_with_stdin_file(&["gale", "--contract"], &doc);
    let v = stdout_json(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["predicates"]["simplicial"], true);
    let mults: Vec<u64> = v["contraction"]["multiplicities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m.as_u64().unwrap())
        .collect();
    let mut sorted = mults.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![2, 2]);
}

#[test]
fn gale_beyond_codim_two_still_prints_the_transform() {
    // cross-polytope in R^4 has 8 vertices: codimension 3
    let construct = run(&["construct", "cross", "--dim", "4"]);
    let doc = String::from_utf8(construct.stdout).unwrap();
    let (out, _dir) = run_with_stdin_file(&["gale"], &doc);
    let v = stdout_json(&out);
    assert_eq!(v["diagram"]["codim"], 3);
    assert_eq!(v["analyses_supported"], false);
    assert!(v["predicates"].is_null());
}

#[test]
fn gram_solve_d4_lists_three_identified_solutions() {
    let out = run(&["gram-solve", "--case", "d4"]);
    let v = stdout_json(&out);
    let solutions = v["solutions"].as_array().unwrap();
    assert_eq!(solutions.len(), 3);
    let mut idents: Vec<String> = solutions
        .iter()
        .map(|s| s["identification"].as_str().unwrap().to_string())
        .collect();
    idents.sort();
    assert_eq!(idents, vec!["C_2(7)", "C_4(7)", "regular simplex in R^6"]);
}

#[test]
fn gram_solve_d6_checks_all_pass() {
    let out = run(&["gram-solve", "--case", "d6"]);
    let v = stdout_json(&out);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 7);
}

#[test]
fn table_orders_dplus3_above_cyclic_at_d6() {
    let out = run(&["table", "--dmax", "6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut dplus3_d6 = None;
    let mut cyclic_d6 = None;
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        if cells[0] == "6" && cells[1] == "9" {
            let val: f64 = cells[3].parse().unwrap();
            match cells[2] {
                "dplus3" => dplus3_d6 = Some(val),
                "cyclic" => cyclic_d6 = Some(val),
                _ => {}
            }
        }
    }
    let (p6, c69) = (dplus3_d6.unwrap(), cyclic_d6.unwrap());
    assert!(
        p6 > c69,
        "table must reproduce vol(P_6) = {p6} > vol(C_6(9)) = {c69}"
    );
    // residual column under 1e-9 for both rows
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        if cells[0] == "6" && cells[1] == "9" && !cells[5].is_empty() {
            assert!(cells[5].parse::<f64>().unwrap() <= 1e-9);
        }
    }
}

#[test]
fn optimize_is_deterministic_under_fixed_seed() {
    let args = [
        "optimize", "--dim", "2", "--nverts", "5", "--starts", "3", "--seed", "11",
        "--max-iter", "400",
    ];
    let a = stdout_json(&run(&args));
    let b = stdout_json(&run(&args));
    let strip = |mut v: serde_json::Value| {
        v["manifest"]
            .as_object_mut()
            .unwrap()
            .remove("wall_time_ms");
        v
    };
    assert_eq!(strip(a), strip(b), "identical flags must reproduce the manifest");
}

#[test]
fn seed_env_var_is_the_fallback() {
    let out = bin()
        .args(["optimize", "--dim", "2", "--nverts", "4", "--starts", "1", "--max-iter", "50"])
        .env("SPHEREVOL_SEED", "77")
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["manifest"]["seed"], 77);
    assert_eq!(v["config"]["seed"], 77);
}

#[test]
fn exit_codes_follow_the_contract() {
    // validation failure: malformed JSON (with line/column diagnostics)
    let (out, _dir) = run_with_stdin_file(&["volume"], "{\"dim\": 3, \"vertices\": [[1,0,0],]}");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line") && err.contains("column"), "{err}");

    // validation failure: bad flags
    let out = run(&["construct", "cyclic", "--dim", "3", "--nverts", "7"]);
    assert_eq!(out.status.code(), Some(1));

    // numeric failure: a valid polytope whose volume decomposition is
    // unsupported (origin outside)
    let h = 0.4f64;
    let r = (1.0f64 - h * h).sqrt();
    let doc = serde_json::json!({
        "dim": 3,
        "vertices": [
            [0.0, 0.0, 1.0], [r, 0.0, h], [0.0, r, h], [-r, 0.0, h], [0.0, -r, h]
        ]
    });
    let (out, _dir) = run_with_stdin_file(&["volume"], &doc.to_string());
    assert_eq!(out.status.code(), Some(2));

    // success writes to --out and prints nothing
    let dir = tempdir::scoped();
    let path = dir.path.join("result.json");
    let out = run(&["construct", "p6", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(path.exists());
}

#[test]
fn compare_reports_the_inequality_and_labels_d8_experimental() {
    let out = run(&["compare", "--dim", "4", "--starts", "2", "--max-iter", "300"]);
    let v = stdout_json(&out);
    assert_eq!(v["experimental"], false);
    let cy = v["cyclic_volume"].as_f64().unwrap();
    let pr = v["product_volume"].as_f64().unwrap();
    assert!(pr > cy);

    let out = run(&["compare", "--dim", "8", "--starts", "1", "--max-iter", "60"]);
    let v = stdout_json(&out);
    assert_eq!(v["experimental"], true);
}
