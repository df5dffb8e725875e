//! `survival`: a(t) and p(t) = |a(t)|² on a time grid, with the exponential
//! reference alongside.

use decay_spectra::lee::{fermi_golden_rule, survival_amplitude_general};
use decay_spectra::{bw, BreitWigner};

use super::{base_metadata, lee_measure, DEFAULT_MEASURE_POINTS};
use crate::config::{resolve_model, Options, ResolvedModel};
use crate::error::{CliError, Result};
use crate::output::Table;

pub fn run(opts: &Options) -> Result<()> {
    let model = resolve_model(opts)?;
    let t_max = opts.t_max.unwrap_or(5.0);
    if !(t_max > 0.0) {
        return Err(CliError::Usage("--t-max must be positive".to_string()));
    }
    let n = opts.survival_points.or(opts.points).unwrap_or(201);
    if n < 2 {
        return Err(CliError::Usage("need at least two time points".to_string()));
    }
    let times: Vec<f64> = (0..n)
        .map(|i| t_max * i as f64 / (n - 1) as f64)
        .collect();

    let mut metadata = base_metadata("survival", opts);
    metadata.extend(model.metadata());
    metadata.push(("t_max".into(), format!("{t_max}")));
    metadata.push(("points".into(), format!("{n}")));

    let rows: Vec<Vec<f64>> = match &model {
        ResolvedModel::Bw { mass, width } => {
            let p = BreitWigner::new(*mass, *width)?;
            times
                .iter()
                .map(|&t| {
                    let a = bw::survival_amplitude(&p, t);
                    vec![t, a.re, a.im, a.norm_sqr(), (-width * t).exp()]
                })
                .collect()
        }
        ResolvedModel::Lee { model: ff, mass, .. } => {
            let measure = lee_measure(
                ff,
                *mass,
                opts.measure_points.unwrap_or(DEFAULT_MEASURE_POINTS),
            )?;
            let gamma = fermi_golden_rule(ff, *mass)?;
            metadata.push(("golden_rule_width".into(), format!("{gamma}")));
            times
                .iter()
                .map(|&t| {
                    let a = survival_amplitude_general(&measure, t);
                    vec![t, a.re, a.im, a.norm_sqr(), (-gamma * t).exp()]
                })
                .collect()
        }
    };

    Table {
        metadata,
        header: vec!["t", "re", "im", "p", "p_exponential"],
        rows,
    }
    .write(opts.out()?)
}
