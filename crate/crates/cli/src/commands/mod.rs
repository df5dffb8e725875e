//! Command implementations. Each command resolves its configuration, runs
//! the engine, and emits one or more CSV tables (plus optional plot
//! scripts).

pub mod fwhm;
pub mod poles;
pub mod scenario;
pub mod spectrum;
pub mod survival;
pub mod twobody;

use decay_spectra::lee::{default_nodes, eta_general, spectral_function, FormFactorModel};
use decay_spectra::numerics::QuadratureSpec;
use decay_spectra::{Distribution, EnergyDistribution, Grid, Measure, Quadrature};
use rayon::prelude::*;

use crate::config::{ModelKind, Options, ResolvedModel};
use crate::error::{CliError, Result};

pub fn quadrature() -> Quadrature {
    QuadratureSpec::with_tolerances(1e-8, 1e-8).expect("valid tolerances")
}

pub const DEFAULT_MEASURE_POINTS: usize = 4001;

/// Sampled spectral measure for a Lee model.
pub fn lee_measure(model: &FormFactorModel<f64>, mass: f64, n: usize) -> Result<Measure> {
    let nodes = default_nodes(model, mass, n);
    Ok(spectral_function(model, mass, &nodes, &quadrature(), 1e-3)?)
}

/// Default ω window per model kind: ±25 width scales around the peak for
/// unbounded models, the continuum support for a band, threshold to a few
/// widths above the peak for the smooth cutoff.
pub fn default_window(model: &ResolvedModel) -> (f64, f64) {
    let scale = model.width_scale();
    let mass = model.mass();
    match model {
        ResolvedModel::Bw { .. } => (mass - 25.0 * scale, mass + 25.0 * scale),
        ResolvedModel::Lee { model, .. } => match model.support() {
            (Some(lo), Some(hi)) => (lo, hi),
            (Some(lo), None) => (lo, mass + 8.0 * scale),
            _ => (mass - 25.0 * scale, mass + 25.0 * scale),
        },
    }
}

/// η(t, ·) sampled on `grid`, in parallel for the quadrature-backed models.
pub fn sample_spectrum(
    resolved: &ResolvedModel,
    measure: Option<&Measure>,
    t: f64,
    grid: &Grid,
) -> Result<Distribution> {
    match resolved {
        ResolvedModel::Bw { mass, width } => {
            let p = decay_spectra::BreitWigner::new(*mass, *width)?;
            Ok(decay_spectra::bw::sample_eta(&p, t, grid))
        }
        ResolvedModel::Lee { model, mass, .. } => {
            let measure = measure.ok_or_else(|| {
                CliError::Usage("internal: lee spectrum needs a measure".to_string())
            })?;
            let spec = quadrature();
            let nodes = grid.nodes();
            let values = nodes
                .par_iter()
                .map(|&w| eta_general(model, measure, t, w, &spec))
                .collect::<decay_spectra::Result<Vec<f64>>>()?;
            Ok(EnergyDistribution::from_values(t, nodes, *mass, values))
        }
    }
}

/// Rejects model kinds a command does not support.
pub fn require_kind(model: &ResolvedModel, allowed: &[ModelKind], what: &str) -> Result<()> {
    if allowed.contains(&model.kind()) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{what} supports models {:?}, got `{}`",
            allowed.iter().map(|k| k.as_str()).collect::<Vec<_>>(),
            model.kind().as_str()
        )))
    }
}

/// Shared metadata prefix: command name plus the resolved model and output.
pub fn base_metadata(command: &str, opts: &Options) -> Vec<(String, String)> {
    let mut md = vec![("command".into(), command.to_string())];
    if let Some(out) = &opts.out {
        md.push(("out".into(), out.display().to_string()));
    }
    if let Some(dir) = &opts.out_dir {
        md.push(("out_dir".into(), dir.display().to_string()));
    }
    md
}
