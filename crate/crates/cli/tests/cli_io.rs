//! End-to-end checks of the CLI surface: CSV structure, exit codes, config
//! file resolution, and plot-script emission.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_decay-spectra")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn rows(path: &Path) -> Vec<String> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(String::from)
        .collect()
}

#[test]
fn spectrum_golden_structure() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("eta.csv");
    let o = run(&[
        "spectrum", "--model", "bw", "--mass", "1", "--width", "0.05", "--time", "20",
        "--omega-min", "-0.25", "--omega-max", "2.25", "--points", "2001",
        "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let lines = rows(&out);
    assert_eq!(lines[0], "omega,eta,eta_normalized");
    assert_eq!(lines.len(), 2002); // header + 2001 rows
    // resolved config is echoed in the comment header
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with('#'));
    assert!(text.contains("# points = 2001"));
    assert!(text.contains("# model = bw"));
}

#[test]
fn fwhm_golden_values() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fwhm.csv");
    let o = run(&[
        "fwhm", "--model", "bw", "--width", "1", "--times", "0.1,0.5,1,3,100",
        "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let lines = rows(&out);
    assert_eq!(lines[0], "t,delta_omega,delta_omega_over_gamma");
    assert_eq!(lines.len(), 6);
    let last: Vec<f64> = lines[5].split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(last[0], 100.0);
    assert!((last[1] - 1.0).abs() < 0.01);
    assert!((last[2] - 1.0).abs() < 0.01);
}

#[test]
fn piplus_scenario_ratio_columns() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pi.csv");
    let o = run(&["scenario", "piplus", "--time", "1.0", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let lines = rows(&out);
    let header: Vec<&str> = lines[0].split(',').collect();
    let cells: Vec<f64> = lines[1].split(',').map(|c| c.parse().unwrap()).collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    assert!((cells[col("ratio_mu")] - 0.2134).abs() < 1e-3);
    assert!((cells[col("ratio_nu")] - 0.7866).abs() < 1e-3);
    // provenance tags present in the metadata
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("provenance: paper"));
    assert!(text.contains("provenance: user"));
}

#[test]
fn exit_codes() {
    // unknown flag / missing required input -> 2
    let o = run(&["spectrum", "--model", "bw", "--width", "1"]);
    assert_eq!(o.status.code(), Some(2)); // no --time
    let o = run(&["spectrum", "--model", "nope", "--time", "1", "--out", "/tmp/x.csv"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["fwhm", "--model", "band", "--times", "1", "--out", "/tmp/x.csv"]);
    assert_eq!(o.status.code(), Some(2)); // fwhm is bw-only
    let o = run(&["definitely-not-a-command"]);
    assert_eq!(o.status.code(), Some(2));

    // numerical failure -> 3: a spectral measure too coarse to normalize
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    let o = run(&[
        "spectrum", "--model", "band", "--time", "1", "--points", "51",
        "--measure-points", "31", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3), "stderr: {}", String::from_utf8_lossy(&o.stderr));

    // success -> 0
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    let out = dir.path().join("eta.csv");
    fs::write(
        &cfg,
        format!(
            r#"{{"command": "spectrum", "model": "bw", "mass": 1.0, "width": 0.05,
                 "time": 20.0, "points": 101, "omega_min": -0.25, "omega_max": 2.25,
                 "out": "{}"}}"#,
            out.display()
        ),
    )
    .unwrap();
    // flag overrides the file's points
    let o = run(&["--config", cfg.to_str().unwrap(), "spectrum", "--points", "51"]);
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(rows(&out).len(), 52);

    // command mismatch between file and invocation -> 2
    let o = run(&["--config", cfg.to_str().unwrap(), "fwhm", "--times", "1"]);
    assert_eq!(o.status.code(), Some(2));

    // malformed type in the file -> 2
    fs::write(&cfg, r#"{"model": "bw", "width": "wide"}"#).unwrap();
    let o = run(&["--config", cfg.to_str().unwrap(), "spectrum", "--time", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn plotscript_roundtrip_fig1_fig2() {
    let dir = tempfile::tempdir().unwrap();
    // two spectra for fig1 (t = tau and t = 100 tau), three more for fig2
    let mut csvs = Vec::new();
    for (label, t) in [("eta_t1", "20"), ("eta_t100", "2000")] {
        let out = dir.path().join(format!("{label}.csv"));
        let o = run(&[
            "spectrum", "--model", "bw", "--mass", "1", "--width", "0.05", "--time", t,
            "--points", "101", "--out", out.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        csvs.push(out);
    }
    let fig1 = dir.path().join("fig1.gp");
    let o = run(&[
        "plotscript", "--figure", "fig1",
        "--csv", csvs[0].to_str().unwrap(),
        "--csv", csvs[1].to_str().unwrap(),
        "--out", fig1.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&fig1).unwrap();
    assert!(text.contains("dashtype 2"), "fig1 wants a dashed second curve");
    assert!(text.contains("eta_t1") && text.contains("eta_t100"));

    // five-curve fig2 from normalized spectra
    for t in ["2", "10", "60"] {
        let out = dir.path().join(format!("eta_s{t}.csv"));
        let o = run(&[
            "spectrum", "--model", "bw", "--mass", "1", "--width", "0.05", "--time", t,
            "--points", "101", "--out", out.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        csvs.push(out);
    }
    let fig2 = dir.path().join("fig2.gp");
    let mut args = vec!["plotscript".to_string(), "--figure".into(), "fig2".into()];
    for c in &csvs {
        args.push("--csv".into());
        args.push(c.display().to_string());
    }
    args.push("--out".into());
    args.push(fig2.display().to_string());
    let o = Command::new(bin()).args(&args).output().unwrap();
    assert!(o.status.success());
    let text = fs::read_to_string(&fig2).unwrap();
    assert_eq!(text.matches("'eta_normalized'").count(), 5, "five curves");

    // fwhm --format csv+plotscript emits the fig3 companion script
    let fw = dir.path().join("fwhm.csv");
    let o = run(&[
        "fwhm", "--model", "bw", "--width", "1", "--times", "0.1,1,100",
        "--format", "csv+plotscript", "--out", fw.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(dir.path().join("fwhm.gp").exists());

    // missing column -> 2
    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "a,b\n1,2\n").unwrap();
    let o = run(&[
        "plotscript", "--figure", "fig3", "--csv", bad.to_str().unwrap(),
        "--out", dir.path().join("bad.gp").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn twobody_and_poles_structure() {
    let dir = tempfile::tempdir().unwrap();
    let tb = dir.path().join("tb.csv");
    let o = run(&[
        "twobody", "--mass", "1000", "--width", "1", "--m1", "300", "--m2", "0",
        "--time", "1", "--points", "51", "--out", tb.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let lines = rows(&tb);
    assert_eq!(lines[0], "particle,omega,eta_narrow,eta_exact");
    assert_eq!(lines.len(), 1 + 2 * 51);
    let text = fs::read_to_string(&tb).unwrap();
    assert!(text.contains("# ratio_1 = "));

    let poles = dir.path().join("poles.csv");
    let o = run(&["poles", "--model", "band", "--out", poles.to_str().unwrap()]);
    assert!(o.status.success());
    let lines = rows(&poles);
    assert_eq!(lines[0], "level,energy,residue");
    assert_eq!(lines.len(), 3, "band has two levels");
}

#[test]
fn atomic_scenario_natural_broadening() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("atomic.csv");
    let o = run(&[
        "scenario", "atomic", "--delta-e", "10.2", "--gamma", "4.12e-7",
        "--time", "100", "--points", "501", "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    let fwhm_line = text
        .lines()
        .find(|l| l.starts_with("# fwhm_ev"))
        .expect("fwhm metadata");
    let fwhm: f64 = fwhm_line.split('=').nth(1).unwrap().trim().parse().unwrap();
    assert!((fwhm / 4.12e-7 - 1.0).abs() < 0.01, "fwhm = {fwhm}");
    let peak_line = text.lines().find(|l| l.starts_with("# peak_ev")).unwrap();
    let peak: f64 = peak_line.split('=').nth(1).unwrap().trim().parse().unwrap();
    assert!((peak - 10.2).abs() < 1e-6);
}

#[test]
fn fig4_scenario_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "scenario", "fig4-band", "--times", "0.40,0.79", "--points", "151",
        "--measure-points", "1501", "--survival-points", "41", "--t-max", "3",
        "--out-dir", dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    for name in ["survival.csv", "eta_t0p4.csv", "eta_t0p79.csv", "levels.csv", "fig4.gp"] {
        assert!(dir.path().join(name).exists(), "{name} missing");
    }
    let lines = rows(&dir.path().join("levels.csv"));
    assert_eq!(lines.len(), 3);
    let surv = rows(&dir.path().join("survival.csv"));
    assert_eq!(surv[0], "t,p,p_exponential");
    // p(0) = 1 and the short-time deviation p > exp(-t)
    let first: Vec<f64> = surv[1].split(',').map(|c| c.parse().unwrap()).collect();
    assert!((first[1] - 1.0).abs() < 1e-6);
    let mid: Vec<f64> = surv[10].split(',').map(|c| c.parse().unwrap()).collect();
    assert!(mid[1] > mid[2], "non-exponential enhancement expected");
}
