//! `twobody`: per-particle energy distributions of a two-body decay, narrow
//! and exact forms side by side, in long format (one row per particle and
//! energy node).

use decay_spectra::kinematics::{
    eta1_exact, eta1_narrow, eta2_exact, eta2_narrow, partial_widths, TwoBodyConfig,
};
use decay_spectra::{bw, BreitWigner};
use rayon::prelude::*;

use crate::config::Options;
use crate::error::{CliError, Result};
use crate::output::Table;

use super::base_metadata;

pub fn run(opts: &Options) -> Result<()> {
    let mass = opts
        .mass
        .ok_or_else(|| CliError::Usage("twobody needs --mass".to_string()))?;
    let width = opts
        .width
        .ok_or_else(|| CliError::Usage("twobody needs --width".to_string()))?;
    let m1 = opts
        .m1
        .ok_or_else(|| CliError::Usage("twobody needs --m1".to_string()))?;
    let m2 = opts
        .m2
        .ok_or_else(|| CliError::Usage("twobody needs --m2".to_string()))?;
    let t = opts
        .time
        .ok_or_else(|| CliError::Usage("twobody needs --time".to_string()))?;
    let span = opts.span.unwrap_or(25.0);
    let points = opts.points.unwrap_or(2001);

    let parent = BreitWigner::new(mass, width)?;
    let cfg = TwoBodyConfig::new(m1, m2, parent)?;
    let (w1bar, w2bar) = cfg.peak_energies();
    let (g1, g2) = partial_widths(&cfg);
    let dm2 = cfg.delta_m_sq();
    let eta = |tt: f64, w: f64| bw::eta(&parent, tt, w);

    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(2 * points);
    for (particle, wbar, gi) in [(1.0, w1bar, g1), (2.0, w2bar, g2)] {
        // clip the grid to the kinematically allowed region
        let mut lo = wbar - span * gi;
        if particle == 1.0 && dm2 > 0.0 {
            lo = lo.max(dm2.sqrt() * (1.0 + 1e-12));
        }
        if particle == 2.0 && dm2 < 0.0 {
            lo = lo.max((-dm2).sqrt() * (1.0 + 1e-12));
        }
        let hi = wbar + span * gi;
        if !(lo < hi) {
            return Err(CliError::Usage(format!(
                "empty grid for particle {particle}: [{lo}, {hi}]"
            )));
        }
        let nodes: Vec<f64> = (0..points)
            .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
            .collect();
        let chunk: Vec<Vec<f64>> = nodes
            .par_iter()
            .map(|&w| {
                let (narrow, exact) = if particle == 1.0 {
                    (
                        eta1_narrow(&cfg, t, w),
                        eta1_exact(eta, t, w, dm2).unwrap_or(f64::NAN),
                    )
                } else {
                    (
                        eta2_narrow(&cfg, t, w),
                        eta2_exact(eta, t, w, dm2).unwrap_or(f64::NAN),
                    )
                };
                vec![particle, w, narrow, exact]
            })
            .collect();
        rows.extend(chunk);
    }

    let mut metadata = base_metadata("twobody", opts);
    metadata.extend([
        ("model".into(), "bw".into()),
        ("mass".into(), format!("{mass}")),
        ("width".into(), format!("{width}")),
        ("m1".into(), format!("{m1}")),
        ("m2".into(), format!("{m2}")),
        ("time".into(), format!("{t}")),
        ("span".into(), format!("{span}")),
        ("points".into(), format!("{points}")),
        ("omega_bar_1".into(), format!("{w1bar}")),
        ("omega_bar_2".into(), format!("{w2bar}")),
        ("gamma_1".into(), format!("{g1}")),
        ("gamma_2".into(), format!("{g2}")),
        ("ratio_1".into(), format!("{}", g1 / width)),
        ("ratio_2".into(), format!("{}", g2 / width)),
    ]);

    Table {
        metadata,
        header: vec!["particle", "omega", "eta_narrow", "eta_exact"],
        rows,
    }
    .write(opts.out()?)
}
