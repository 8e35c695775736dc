use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use landau_wall::cli::table::Table;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_landau-wall")).args(args).output().expect("spawn")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn table(path: &Path) -> Table {
    Table::from_csv(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn levels_rows() {
    let t = Table::from_csv(&stdout(&["--B", "1", "levels", "--n-max", "3"])).unwrap();
    assert_eq!(t.columns, ["n", "Lambda_n"]);
    assert_eq!(t.reals("Lambda_n"), [1.0, 3.0, 5.0, 7.0]);
    assert_eq!(t.reals("n"), [0.0, 1.0, 2.0, 3.0]);
}

#[test]
fn cluster_shifts_positive() {
    let t = Table::from_csv(&stdout(&["--B", "1", "--a", "1.1", "--alpha", "-1", "cluster", "--n", "0"])).unwrap();
    let shifts = t.reals("shift");
    assert!(!shifts.is_empty());
    assert!(shifts.iter().all(|s| *s > 0.0));
}

#[test]
fn solve_is_byte_identical() {
    let args = ["--B", "1", "--a", "1.1", "--alpha", "-1", "solve", "--m", "0", "--gap", "0"];
    let one = stdout(&args);
    assert_eq!(one, stdout(&args));
    let t = Table::from_csv(&one).unwrap();
    let e = t.reals("E")[0];
    assert!((e - 1.496_023_418_261_149).abs() < 1e-9);
}

#[test]
fn csv_round_trip_and_precision() {
    let text = stdout(&["coeff", "--m-max", "5"]);
    let t = Table::from_csv(&text).unwrap();
    assert_eq!(t.to_csv(), text);
    for field in text.lines().nth(1).unwrap().split(',').filter(|f| f.contains('e')) {
        let mantissa = field.trim_start_matches('-').split('e').next().unwrap();
        assert_eq!(mantissa.chars().filter(char::is_ascii_digit).count(), 17, "{field}");
    }
}

#[test]
fn json_output_parses() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "levels"])).unwrap();
    assert_eq!(v["command"], "levels");
    assert_eq!(v["rows"][2]["Lambda_n"], 5.0);
}

#[test]
fn exit_codes() {
    let bad_flag = run(&["levels", "--bogus"]);
    assert_eq!(bad_flag.status.code(), Some(2));
    assert!(!bad_flag.stderr.is_empty());
    assert_eq!(run(&["--B", "-1", "levels"]).status.code(), Some(2));
    assert_eq!(run(&["--alpha", "abc", "levels"]).status.code(), Some(2));
    assert_eq!(run(&["--term-tol", "1e-300", "mu", "--E", "0.5"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(&cfg, "B = 2\n# comment\nalpha = -0.5\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let t = Table::from_csv(&stdout(&["--config", cfg, "levels", "--n-max", "1"])).unwrap();
    assert_eq!(t.reals("Lambda_n"), [2.0, 6.0]);
    let t = Table::from_csv(&stdout(&["--config", cfg, "--B", "3", "levels", "--n-max", "1"])).unwrap();
    assert_eq!(t.reals("Lambda_n"), [3.0, 9.0]);
    fs::write(dir.path().join("broken.cfg"), "B 2\n").unwrap();
    let broken = dir.path().join("broken.cfg");
    assert_eq!(run(&["--config", broken.to_str().unwrap(), "levels"]).status.code(), Some(2));
}

#[test]
fn output_path_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sub/levels.csv");
    let out = stdout(&["--out", path.to_str().unwrap(), "levels"]);
    assert!(out.is_empty());
    assert_eq!(table(&path).rows.len(), 4);
}

fn listing(dir: &Path) -> BTreeSet<String> {
    fs::read_dir(dir).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect()
}

#[test]
fn eig_gap_figure() {
    let dir = tempfile::tempdir().unwrap();
    stdout(&["--out", dir.path().to_str().unwrap(), "figure", "eig-gap"]);
    let names = ["eig-gap_alpha-0.5.csv", "eig-gap_alpha-1.0.csv", "eig-gap_alpha-1.5.csv"];
    assert_eq!(listing(dir.path()), names.iter().map(|s| (*s).to_owned()).collect());
    let tables: Vec<Table> = names.iter().map(|n| table(&dir.path().join(n))).collect();
    for t in &tables {
        let ms = t.reals("m");
        assert!(ms.windows(2).all(|w| w[0] < w[1]), "one row per m");
        assert!(t.reals("E").iter().all(|e| 1.0 < *e && *e < 3.0));
    }
    let energy = |t: &Table, m: f64| t.reals("m").iter().position(|x| *x == m).map(|i| t.reals("E")[i]);
    for m in tables[2].reals("m") {
        if let (Some(e05), Some(e10), Some(e15)) = (energy(&tables[0], m), energy(&tables[1], m), energy(&tables[2], m)) {
            assert!(e15 <= e10 && e10 <= e05, "m={m}");
        }
    }
}

#[test]
fn resonance_figure() {
    let dir = tempfile::tempdir().unwrap();
    stdout(&["--out", dir.path().to_str().unwrap(), "figure", "resonance", "--svg"]);
    let expected: BTreeSet<String> = ["resonance_m3.csv", "resonance_m4.csv", "resonance.json", "resonance.svg"]
        .iter()
        .map(|s| (*s).to_owned())
        .collect();
    assert_eq!(listing(dir.path()), expected);
    for (m, peak) in [(3, 7.0_f64.sqrt()), (4, 3.0)] {
        let t = table(&dir.path().join(format!("resonance_m{m}.csv")));
        let (r, v) = (t.reals("r"), t.reals("value"));
        let i = (0..v.len()).max_by(|&i, &j| v[i].total_cmp(&v[j])).unwrap();
        assert!((r[i] - peak).abs() < 1e-6, "m={m}: {}", r[i]);
        assert!((v[i] - 1.0).abs() < 1e-12);
    }
    let summary: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("resonance.json")).unwrap()).unwrap();
    assert_eq!(summary["resonance_index"], 4.0);
}

#[test]
fn free_vs_wall_figure() {
    let dir = tempfile::tempdir().unwrap();
    stdout(&["--out", dir.path().to_str().unwrap(), "figure", "free-vs-wall"]);
    assert_eq!(listing(dir.path()).len(), 4);
    for stem in ["free-vs-wall_free", "free-vs-wall_wall-paper", "free-vs-wall_wall-bs"] {
        let t = table(&dir.path().join(format!("{stem}.csv")));
        let (r, v) = (t.reals("r"), t.reals("value"));
        let norm: f64 = r
            .windows(2)
            .zip(v.windows(2))
            .map(|(r, v)| 0.5 * (r[1] - r[0]) * (r[0] * v[0] * v[0] + r[1] * v[1] * v[1]))
            .sum::<f64>()
            * 2.0
            * std::f64::consts::PI;
        // trapezoid error at the kink is about 3e-4
        assert!((norm - 1.0).abs() < 1e-3, "{stem}: {norm}");
    }
    let s: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("free-vs-wall.json")).unwrap()).unwrap();
    let a = 3.0_f64.sqrt();
    assert!((s["bs"]["argmax"].as_f64().unwrap() - a).abs() < 0.15);
}
