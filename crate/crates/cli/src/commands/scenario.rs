//! `scenario`: named physical presets. Times are in units of the lifetime τ
//! since each preset fixes its own width scale.

use std::path::{Path, PathBuf};

use decay_spectra::scenarios::{self, BandReading, TaggedValue};
use decay_spectra::units::{convert_energy, EnergyUnit};
use decay_spectra::Grid;

use super::base_metadata;
use crate::config::Options;
use crate::error::{CliError, Result};
use crate::output::Table;
use crate::plotscript::{self, FigureId};

pub fn run(name: &str, opts: &Options) -> Result<()> {
    match name {
        "pi0" => pi0(opts),
        "piplus" => piplus(opts),
        "atomic" => atomic(opts),
        "fig4-band" => band(opts, BandReading::WideBand),
        "fig4-band-narrow" => band(opts, BandReading::ThresholdAt252),
        "smooth-cutoff" => smooth_cutoff(opts),
        other => Err(CliError::Usage(format!(
            "unknown scenario `{other}` (pi0, piplus, atomic, fig4-band, fig4-band-narrow, smooth-cutoff)"
        ))),
    }
}

fn scenario_times(opts: &Options) -> Vec<f64> {
    match (&opts.times, opts.time) {
        (Some(ts), _) if !ts.is_empty() => ts.clone(),
        (_, Some(t)) => vec![t],
        _ => vec![0.1, 0.5, 1.0, 3.0, 10.0, 100.0],
    }
}

fn tagged_metadata(tags: &[TaggedValue]) -> Vec<(String, String)> {
    tags.iter()
        .map(|t| {
            (
                t.name.to_string(),
                format!("{} (provenance: {}; {})", t.value, t.provenance, t.note),
            )
        })
        .collect()
}

fn pi0(opts: &Options) -> Result<()> {
    let times = scenario_times(opts);
    let mut rows = Vec::with_capacity(times.len());
    for &t in &times {
        let spread = scenarios::pi0_photon_spread(t)?;
        rows.push(vec![t, scenarios::fwhm_over_gamma(t)?, spread]);
    }
    let mut metadata = base_metadata("scenario pi0", opts);
    metadata.extend(tagged_metadata(&scenarios::pi0_parameters()));
    Table {
        metadata,
        header: vec!["t_over_tau", "delta_omega_over_gamma", "delta_e_gamma_ev"],
        rows,
    }
    .write(opts.out()?)
}

fn piplus(opts: &Options) -> Result<()> {
    let times = scenario_times(opts);
    let (r1, r2) = scenarios::piplus_ratios()?;
    let mut rows = Vec::with_capacity(times.len());
    for &t in &times {
        let (mu, nu) = scenarios::piplus_spreads(t)?;
        rows.push(vec![t, scenarios::fwhm_over_gamma(t)?, r1, r2, mu, nu]);
    }
    let mut metadata = base_metadata("scenario piplus", opts);
    metadata.extend(tagged_metadata(&scenarios::piplus_parameters()));
    Table {
        metadata,
        header: vec![
            "t_over_tau",
            "delta_omega_over_gamma",
            "ratio_mu",
            "ratio_nu",
            "delta_e_mu_ev",
            "delta_e_nu_ev",
        ],
        rows,
    }
    .write(opts.out()?)
}

fn atomic(opts: &Options) -> Result<()> {
    let delta_e = opts.delta_e.unwrap_or(10.2);
    let gamma = opts.gamma.unwrap_or(4.12e-7);
    let t = opts.time.unwrap_or(1.0);
    let span = opts.span.unwrap_or(25.0);
    let points = opts.points.unwrap_or(2001);
    let grid = Grid::new(delta_e - span * gamma, delta_e + span * gamma, points)
        .map_err(CliError::from)?;
    let dist = scenarios::atomic_emission_spectrum(delta_e, gamma, t, &grid)?;
    let fwhm = scenarios::atomic_fwhm_ev(delta_e, gamma, t)?;

    let mut metadata = base_metadata("scenario atomic", opts);
    metadata.extend([
        (
            "delta_e_ev".into(),
            format!("{delta_e} (provenance: user; level splitting)"),
        ),
        (
            "gamma_ev".into(),
            format!("{gamma} (provenance: user; natural linewidth)"),
        ),
        ("t_over_tau".into(), format!("{t}")),
        ("fwhm_ev".into(), format!("{fwhm}")),
        ("peak_ev".into(), format!("{}", dist.peak_energy())),
        (
            "lifetime_s".into(),
            format!(
                "{} (provenance: derived; hbar over gamma)",
                convert_energy(gamma, EnergyUnit::EV, EnergyUnit::Seconds)?
            ),
        ),
    ]);
    let rows = (0..dist.nodes.len())
        .map(|i| vec![dist.nodes[i], dist.values[i], dist.normalized[i]])
        .collect();
    Table {
        metadata,
        header: vec!["omega_ev", "eta", "eta_normalized"],
        rows,
    }
    .write(opts.out()?)
}

fn out_dir(opts: &Options) -> Result<PathBuf> {
    let dir = opts
        .out_dir
        .as_ref()
        .ok_or_else(|| CliError::Usage("this scenario needs --out-dir".to_string()))?;
    std::fs::create_dir_all(dir)?;
    Ok(dir.clone())
}

fn eta_file_name(t: f64) -> String {
    format!("eta_t{}.csv", format!("{t}").replace('.', "p"))
}

fn write_bundle(
    dir: &Path,
    run: &scenarios::NonExponentialRun,
    metadata: Vec<(String, String)>,
    times: &[f64],
) -> Result<Vec<PathBuf>> {
    let survival_path = dir.join("survival.csv");
    Table {
        metadata: metadata.clone(),
        header: vec!["t", "p", "p_exponential"],
        rows: run
            .survival
            .iter()
            .map(|s| vec![s.t, s.p, s.p_exponential])
            .collect(),
    }
    .write(&survival_path)?;

    let mut spectrum_paths = Vec::new();
    for (dist, &t) in run.spectra.iter().zip(times) {
        let path = dir.join(eta_file_name(t));
        let mut md = metadata.clone();
        md.push(("time_over_tau".into(), format!("{t}")));
        Table {
            metadata: md,
            header: vec!["omega", "eta", "eta_normalized"],
            rows: (0..dist.nodes.len())
                .map(|i| vec![dist.nodes[i], dist.values[i], dist.normalized[i]])
                .collect(),
        }
        .write(&path)?;
        spectrum_paths.push(path);
    }

    Table {
        metadata,
        header: vec!["level", "energy", "residue"],
        rows: run
            .levels
            .iter()
            .enumerate()
            .map(|(i, l)| vec![(i + 1) as f64, l.energy, l.weight])
            .collect(),
    }
    .write(&dir.join("levels.csv"))?;

    let mut csvs = vec![survival_path];
    csvs.extend(spectrum_paths);
    Ok(csvs)
}

fn band(opts: &Options, reading: BandReading) -> Result<()> {
    let dir = out_dir(opts)?;
    let times = match &opts.times {
        Some(ts) if !ts.is_empty() => ts.clone(),
        _ => vec![0.40, 0.79, 100.0],
    };
    let (model, mass) = scenarios::band_model(reading)?;
    let run = build_run(opts, &model, mass, &times)?;

    let mut metadata = base_metadata("scenario fig4-band", opts);
    metadata.extend(tagged_metadata(&scenarios::band_parameters(reading)));
    let csvs = write_bundle(&dir, &run, metadata, &times)?;
    plotscript::emit(FigureId::Fig4, &csvs, &dir.join("fig4.gp"))?;
    Ok(())
}

fn smooth_cutoff(opts: &Options) -> Result<()> {
    let dir = out_dir(opts)?;
    let times = match &opts.times {
        Some(ts) if !ts.is_empty() => ts.clone(),
        _ => vec![0.40, 0.79, 100.0],
    };
    let (model, mass) = scenarios::smooth_cutoff_model()?;
    let run = build_run(opts, &model, mass, &times)?;

    let mut metadata = base_metadata("scenario smooth-cutoff", opts);
    metadata.extend(tagged_metadata(&scenarios::smooth_cutoff_parameters()));
    let csvs = write_bundle(&dir, &run, metadata, &times)?;
    plotscript::emit(FigureId::Fig4, &csvs, &dir.join("figure.gp"))?;
    Ok(())
}

fn build_run(
    opts: &Options,
    model: &decay_spectra::FormFactor,
    mass: f64,
    times: &[f64],
) -> Result<scenarios::NonExponentialRun> {
    let t_max = opts.t_max.unwrap_or(5.0);
    let n_survival = opts.survival_points.unwrap_or(251);
    let survival_times: Vec<f64> = (0..n_survival)
        .map(|i| t_max * i as f64 / (n_survival - 1) as f64)
        .collect();
    Ok(scenarios::non_exponential_run(
        model,
        mass,
        &survival_times,
        times,
        opts.measure_points.unwrap_or(super::DEFAULT_MEASURE_POINTS),
        opts.points.unwrap_or(601),
    )?)
}
