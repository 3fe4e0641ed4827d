use std::fs;
use std::process::{Command, Output};

use fraclogistic::closed_forms::classical_exact;
use fraclogistic::model::ModelParams;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fraclogistic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn classical_grid_and_values() {
    let text = stdout(&[
        "classical",
        "--r",
        "1",
        "--k",
        "100",
        "--z0",
        "10",
        "--t-end",
        "10",
        "--points",
        "101",
    ]);
    assert_eq!(text.lines().next(), Some("t,z"));
    let data = rows(&text);
    assert_eq!(data.len(), 101);
    assert_eq!(text.lines().nth(1), Some("0,10"));
    let p = ModelParams::new(1.0, 100.0, 10.0, 1.0, 1.0).unwrap();
    let last = data.last().unwrap();
    assert_eq!(last[0], 10.0);
    assert!((last[1] - classical_exact(&p, 10.0).unwrap()).abs() < 1e-9);

    let long = rows(&stdout(&["classical", "--r", "1", "--t-end", "30"]));
    assert!((long.last().unwrap()[1] - 100.0).abs() < 1e-6);
}

#[test]
fn headers_per_command() {
    let cases: [(&[&str], &str); 9] = [
        (&["ml-eval", "--mu", "0.5", "--points", "5"], "x,e_mu"),
        (&["exact-lambda0", "--points", "5"], "t,z"),
        (&["hsv", "--points", "5"], "t,z"),
        (&["closed-form", "--points", "5"], "t,z"),
        (
            &["solve", "--points", "5", "--t-end", "1", "--h", "0.01"],
            "t,z",
        ),
        (
            &["compare", "--points", "5", "--t-end", "1", "--h", "0.01"],
            "t,z_abc,z_cfc,z_caputo",
        ),
        (
            &["surface", "--vary", "both", "--points", "5"],
            "mu,lambda,z",
        ),
        (
            &["convergence", "--n-max", "3", "--points", "3"],
            "n_terms,t,partial_sum,last_term_abs",
        ),
        (
            &["stability", "--t-end", "1", "--h", "0.01", "--points", "5"],
            "epsilon,max_deviation,c_estimate",
        ),
    ];
    for (args, header) in cases {
        let text = stdout(args);
        assert_eq!(text.lines().next(), Some(header), "{args:?}");
        assert!(text.ends_with('\n'));
    }
}

#[test]
fn compare_at_unit_order_coincides() {
    let data = rows(&stdout(&[
        "compare", "--mu", "1", "--lambda", "1", "--t-end", "5", "--h", "0.001",
    ]));
    for row in data {
        let (a, c, k) = (row[1], row[2], row[3]);
        assert!(
            (a - c).abs() <= 1e-3 * a && (a - k).abs() <= 1e-3 * a && (c - k).abs() <= 1e-3 * c
        );
    }
}

#[test]
fn convergence_last_terms_decrease_for_small_growth() {
    let data = rows(&stdout(&[
        "convergence",
        "--n-max",
        "8",
        "--t-end",
        "1",
        "--points",
        "11",
    ]));
    for i in 1..11 {
        let t = i as f64 * 0.1;
        let mags: Vec<f64> = data
            .iter()
            .filter(|r| (r[1] - t).abs() < 1e-12)
            .map(|r| r[3])
            .collect();
        assert_eq!(mags.len(), 8);
        assert!(mags.windows(2).all(|w| w[1] < w[0]), "t = {t}: {mags:?}");
    }
}

#[test]
fn surface_rows_are_ordered_by_sweep_then_time() {
    let data = rows(&stdout(&[
        "surface", "--vary", "mu", "--points", "4", "--t-end", "3",
    ]));
    assert_eq!(data.len(), 9 * 4);
    for block in data.chunks(4) {
        assert!(block.iter().all(|r| r[1] == block[0][1]));
        assert!(block.windows(2).all(|w| w[1][0] > w[0][0]));
    }
    assert!(data
        .chunks(4)
        .collect::<Vec<_>>()
        .windows(2)
        .all(|w| w[1][0][1] > w[0][0][1]));
}

#[test]
fn output_is_deterministic() {
    let args = ["surface", "--vary", "lambda", "--points", "21"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["compare", "--t-end", "2", "--h", "0.01"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn invalid_arguments_exit_with_two_and_name_the_field() {
    for (args, field) in [
        (&["classical", "--k", "-3"][..], "k"),
        (&["hsv", "--mu", "1.5"][..], "mu"),
        (&["classical", "--points", "1"][..], "points"),
        (
            &["surface", "--vary", "lambda", "--to", "1.5"][..],
            "lambda",
        ),
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(field), "{args:?}: {err}");
    }
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["classical", "--bogus"]).status.code(), Some(2));
}

#[test]
fn solver_failures_exit_with_three() {
    let out = run(&["closed-form", "--r", "2", "--mu", "1", "--t-end", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&[
        "solve", "--r", "500", "--mu", "0.2", "--t-end", "1", "--h", "0.1", "--points", "11",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("step"));
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(&cfg, "r = 1.0\nt-end = 4.0\npoints = 5\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let from_file = rows(&stdout(&["classical", "--config", cfg]));
    assert_eq!(from_file.len(), 5);
    assert_eq!(from_file.last().unwrap()[0], 4.0);
    let overridden = rows(&stdout(&["classical", "--config", cfg, "--points", "3"]));
    assert_eq!(overridden.len(), 3);

    fs::write(dir.path().join("bad.toml"), "growth = 1.0\n").unwrap();
    let bad = dir.path().join("bad.toml");
    assert_eq!(
        run(&["classical", "--config", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_file_receives_the_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let out = run(&[
        "classical",
        "--points",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        fs::read_to_string(&path).unwrap(),
        stdout(&["classical", "--points", "3"])
    );
}
