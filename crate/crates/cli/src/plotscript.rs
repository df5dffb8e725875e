//! Gnuplot script emission. Scripts are plain text, reference the CSVs by
//! the paths given, and are byte-deterministic for fixed inputs. Each figure
//! validates that its input CSVs carry the columns it plots.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{CliError, Result};
use crate::output::{read_header, write_atomic};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    /// η(t, ω) at a long and a short time overlaid.
    Fig1,
    /// Normalized η(t, ω)/η(t, M) at several times.
    Fig2,
    /// δω(t)/Γ on a log time axis with the short-time law dashed.
    Fig3,
    /// Survival probability plus normalized band spectra, two panels.
    Fig4,
    /// Single-file η overlay with no figure-specific dressing.
    Generic,
}

impl FromStr for FigureId {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1" => Ok(FigureId::Fig1),
            "fig2" => Ok(FigureId::Fig2),
            "fig3" => Ok(FigureId::Fig3),
            "fig4" => Ok(FigureId::Fig4),
            "generic" => Ok(FigureId::Generic),
            other => Err(CliError::Usage(format!("unknown figure `{other}`"))),
        }
    }
}

fn require_columns(path: &Path, needed: &[&str]) -> Result<()> {
    let header = read_header(path)?;
    for col in needed {
        if !header.iter().any(|h| h == col) {
            return Err(CliError::Usage(format!(
                "{} lacks column `{col}` (header: {})",
                path.display(),
                header.join(",")
            )));
        }
    }
    Ok(())
}

fn preamble(title: &str, out_png: &str) -> String {
    format!(
        "set terminal pngcairo size 900,620 enhanced\n\
         set output '{out_png}'\n\
         set datafile separator ','\n\
         set datafile commentschars '#'\n\
         set key top right\n\
         set title '{title}'\n"
    )
}

fn time_label(path: &Path) -> String {
    // best-effort curve label from the file stem
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Emits the script for `figure` reading data from `csvs`, writing to `out`.
pub fn emit(figure: FigureId, csvs: &[PathBuf], out: &Path) -> Result<()> {
    let script = match figure {
        FigureId::Fig1 => {
            if csvs.len() != 2 {
                return Err(CliError::Usage(
                    "fig1 needs exactly two spectrum CSVs (long and short time)".to_string(),
                ));
            }
            for p in csvs {
                require_columns(p, &["omega", "eta"])?;
            }
            let mut s = preamble("final-state energy distribution", "fig1.png");
            s.push_str("set xlabel 'omega'\nset ylabel 'eta(t,omega)'\n");
            s.push_str(&format!(
                "plot '{}' using 'omega':'eta' with lines lw 2 title '{}', \\\n     '{}' using 'omega':'eta' with lines dashtype 2 lw 2 title '{}'\n",
                csvs[0].display(),
                time_label(&csvs[0]),
                csvs[1].display(),
                time_label(&csvs[1]),
            ));
            s
        }
        FigureId::Fig2 => {
            if csvs.len() < 2 {
                return Err(CliError::Usage(
                    "fig2 needs several normalized spectrum CSVs".to_string(),
                ));
            }
            for p in csvs {
                require_columns(p, &["omega", "eta_normalized"])?;
            }
            let mut s = preamble("normalized energy distribution", "fig2.png");
            s.push_str("set xlabel 'omega'\nset ylabel 'eta(t,omega)/eta(t,M)'\n");
            s.push_str("plot \\\n");
            let curves: Vec<String> = csvs
                .iter()
                .map(|p| {
                    format!(
                        "     '{}' using 'omega':'eta_normalized' with lines lw 2 title '{}'",
                        p.display(),
                        time_label(p)
                    )
                })
                .collect();
            s.push_str(&curves.join(", \\\n"));
            s.push('\n');
            s
        }
        FigureId::Fig3 => {
            if csvs.len() != 1 {
                return Err(CliError::Usage("fig3 needs exactly one fwhm CSV".to_string()));
            }
            require_columns(&csvs[0], &["t", "delta_omega_over_gamma"])?;
            let y2 = 2.0 * decay_spectra::bw::short_time_constant::<f64>();
            let mut s = preamble("half-height width of the energy distribution", "fig3.png");
            s.push_str("set xlabel 't/tau'\nset ylabel 'delta omega / Gamma'\n");
            s.push_str("set logscale x\nset logscale y\n");
            s.push_str(&format!(
                "plot '{}' using 't':'delta_omega_over_gamma' with lines lw 2 title 'delta omega', \\\n     {y2:.6}/x with lines dashtype 2 lw 2 title 'short-time law'\n",
                csvs[0].display(),
            ));
            s
        }
        FigureId::Fig4 => {
            if csvs.len() < 2 {
                return Err(CliError::Usage(
                    "fig4 needs a survival CSV followed by spectrum CSVs".to_string(),
                ));
            }
            require_columns(&csvs[0], &["t", "p", "p_exponential"])?;
            for p in &csvs[1..] {
                require_columns(p, &["omega", "eta_normalized"])?;
            }
            let mut s = preamble("non-exponential benchmark", "fig4.png");
            s.push_str("set multiplot layout 2,1\n");
            s.push_str("set xlabel 't/tau'\nset ylabel 'p(t)'\n");
            s.push_str(&format!(
                "plot '{}' using 't':'p' with lines lw 2 title 'p(t)', \\\n     '{}' using 't':'p_exponential' with lines dashtype 2 lw 2 title 'exp(-t)'\n",
                csvs[0].display(),
                csvs[0].display(),
            ));
            s.push_str("set xlabel 'omega'\nset ylabel 'eta(t,omega)/eta(t,M)'\n");
            s.push_str("plot \\\n");
            let curves: Vec<String> = csvs[1..]
                .iter()
                .map(|p| {
                    format!(
                        "     '{}' using 'omega':'eta_normalized' with lines lw 2 title '{}'",
                        p.display(),
                        time_label(p)
                    )
                })
                .collect();
            s.push_str(&curves.join(", \\\n"));
            s.push('\n');
            s.push_str("unset multiplot\n");
            s
        }
        FigureId::Generic => {
            if csvs.is_empty() {
                return Err(CliError::Usage("no CSVs given".to_string()));
            }
            for p in csvs {
                require_columns(p, &["omega", "eta"])?;
            }
            let mut s = preamble("energy distribution", "spectrum.png");
            s.push_str("set xlabel 'omega'\nset ylabel 'eta'\n");
            s.push_str("plot \\\n");
            let curves: Vec<String> = csvs
                .iter()
                .map(|p| {
                    format!(
                        "     '{}' using 'omega':'eta' with lines lw 2 title '{}'",
                        p.display(),
                        time_label(p)
                    )
                })
                .collect();
            s.push_str(&curves.join(", \\\n"));
            s.push('\n');
            s
        }
    };
    write_atomic(out, script.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    #[test]
    fn fig3_script_is_deterministic_and_validated() {
        let dir = tempfile::tempdir().unwrap();
        let csv = dir.path().join("fwhm.csv");
        fs::write(&csv, "# x = 1\nt,delta_omega,delta_omega_over_gamma\n1,1,1\n").unwrap();
        let out1 = dir.path().join("a.gp");
        let out2 = dir.path().join("b.gp");
        emit(FigureId::Fig3, &[csv.clone()], &out1).unwrap();
        emit(FigureId::Fig3, &[csv.clone()], &out2).unwrap();
        assert_eq!(fs::read(&out1).unwrap(), fs::read(&out2).unwrap());
        let text = fs::read_to_string(&out1).unwrap();
        assert!(text.contains("logscale x"));
        assert!(text.contains("/x with lines dashtype 2"));

        // missing column is a usage error
        let bad = dir.path().join("bad.csv");
        fs::write(&bad, "t,delta_omega\n1,1\n").unwrap();
        let err = emit(FigureId::Fig3, &[bad], &out1).unwrap_err();
        assert!(matches!(err, CliError::Usage(_)));
    }
}
