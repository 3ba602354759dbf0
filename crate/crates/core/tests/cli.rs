use std::process::Command;

use clap::Parser;
use lnlaplace::cli::{format_significant, render, Cli, CliError};

fn run(args: &[&str]) -> Result<String, CliError> {
    let mut full = vec!["lnlaplace"];
    full.extend_from_slice(args);
    render(&Cli::try_parse_from(full).expect("parse"))
}

fn column(csv: &str, name: &str) -> Vec<f64> {
    let mut lines = csv.lines().filter(|l| !l.starts_with('#'));
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let idx = header.iter().position(|h| *h == name).unwrap();
    lines.map(|l| l.split(',').nth(idx).unwrap().parse().unwrap()).collect()
}

#[test]
fn eval_series_example() {
    let out = run(&[
        "eval", "--method", "series", "--mu", "0", "--sigma", "0.25", "--alpha", "10", "--terms", "41", "--z", "1",
    ])
    .unwrap();
    let v = column(&out, "value_re")[0];
    assert!((v - 0.36804).abs() < 5e-6);
    assert!(out.starts_with("z_re,z_im,method,value_re,value_im,error_bound\n"));
}

#[test]
fn eval_mb_example() {
    let out = run(&["eval", "--method", "mb", "--mu", "0", "--sigma", "2", "--z", "3"]).unwrap();
    assert!((column(&out, "value_re")[0] - 0.24163).abs() < 5e-6);
}

#[test]
fn eval_rejects_origin() {
    let err = run(&["eval", "--sigma", "1", "--z", "0"]).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    assert!(err.message().contains("z on branch cut or at origin"));
}

#[test]
fn eval_boundary_and_grid_points() {
    let out = run(&["eval", "--sigma", "1", "--z", "-1:+0,0.5:1:0.25,2:-1"]).unwrap();
    let re = column(&out, "z_re");
    assert_eq!(re, vec![-1.0, 0.5, 0.75, 1.0, 2.0]);
    assert!(out.contains("# rows with z_im = 0"));
}

#[test]
fn table_cells() {
    let t1 = run(&["table", "1"]).unwrap();
    assert!((column(&t1, "phi sigma=0.75")[3] - 0.18984).abs() < 5e-6);
    let t3 = run(&["table", "3"]).unwrap();
    assert!((column(&t3, "phi sigma=1.5")[5] - 0.12725).abs() < 5e-6);
    let t4 = run(&["table", "4"]).unwrap();
    assert!(column(&t4, "AD sigma=2")[1] <= 1e-6);
    assert!(t4.contains("# benchmark: direct_transform"));
    assert_eq!(t1.lines().filter(|l| !l.starts_with('#')).count(), 8);
}

#[test]
fn density_single() {
    let out = run(&["density", "--components", "0:1", "--x", "0:5:0.1"]).unwrap();
    let x = column(&out, "x");
    let f = column(&out, "f");
    let i = x.iter().position(|&v| (v - 1.0).abs() < 1e-9).unwrap();
    assert!((f[i] - 0.398942).abs() < 1e-3);
    assert!(out.contains("# skipped 1 grid point(s) with x <= 0"));
    assert!(out.lines().last().unwrap().starts_with("# mass_estimate="));
    assert!(out.lines().next().unwrap().ends_with("f_closed_form"));
}

#[test]
fn density_two_components_mass() {
    let out = run(&["density", "--components", "0:1,0:1", "--x", "0.5:8:0.1"]).unwrap();
    let mass: f64 = out
        .lines()
        .last()
        .unwrap()
        .trim_start_matches("# mass_estimate=")
        .parse()
        .unwrap();
    // probability of [0.5, 8] for the sum, from the convolution oracle
    assert!((mass - 0.9234).abs() < 2e-3, "{mass}");
}

#[test]
fn density_rejects_empty_components() {
    assert_eq!(
        run(&["density", "--components", "", "--x", "1"])
            .unwrap_err()
            .exit_code(),
        2
    );
}

#[test]
fn json_output_parses() {
    let out = run(&["thorin", "--sigma", "1", "--t", "0.1,1", "--format", "json"]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
    assert!(v["rows"][1]["U"].as_f64().unwrap() > 0.0);
}

#[test]
fn output_is_deterministic_and_finite() {
    for args in [
        vec!["table", "2"],
        vec!["eval", "--method", "series", "--sigma", "0.0625", "--z", "0.5,1"],
        vec!["leipnik-demo"],
    ] {
        let a = run(&args).unwrap();
        assert_eq!(a, run(&args).unwrap());
        for line in a.lines().skip(1).filter(|l| !l.starts_with('#')) {
            for cell in line.split(',').filter(|c| !c.is_empty() && c.parse::<f64>().is_ok()) {
                assert!(cell.parse::<f64>().unwrap().is_finite());
            }
        }
    }
}

#[test]
fn significant_digit_formatting() {
    assert_eq!(format_significant(0.606236, 5), "0.60624");
    assert_eq!(format_significant(3.928874e-5, 5), "3.9289e-5");
    assert_eq!(format_significant(10.0, 5), "10.000");
    assert_eq!(format_significant(0.0, 5), "0");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lnlaplace");
    let ok = Command::new(bin)
        .args(["eval", "--sigma", "1", "--z", "1"])
        .output()
        .unwrap();
    assert!(ok.status.success());
    let bad = Command::new(bin)
        .args(["eval", "--sigma", "1", "--z", "-2"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("z on branch cut or at origin"));
    let numeric = Command::new(bin)
        .args(["eval", "--method", "series", "--sigma", "0.05", "--z", "-1:+0"])
        .output()
        .unwrap();
    assert_eq!(numeric.status.code(), Some(3));
    let threads = Command::new(bin)
        .env("LNLAPLACE_THREADS", "2")
        .args(["eval", "--sigma", "1", "--z", "1,2,3"])
        .output()
        .unwrap();
    assert_eq!(
        threads.stdout,
        Command::new(bin)
            .args(["eval", "--sigma", "1", "--z", "1,2,3"])
            .output()
            .unwrap()
            .stdout
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("lnlaplace-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.csv");
    let cli = Cli::try_parse_from([
        "lnlaplace",
        "thorin",
        "--sigma",
        "1",
        "--t",
        "1",
        "--out",
        path.to_str().unwrap(),
    ])
    .unwrap();
    lnlaplace::cli::execute(&cli).unwrap();
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("t,U\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}
