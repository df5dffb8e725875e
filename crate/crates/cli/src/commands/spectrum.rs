//! `spectrum`: η(t, ω) over an energy grid, one time per run.

use decay_spectra::Grid;

use super::{base_metadata, default_window, lee_measure, sample_spectrum, DEFAULT_MEASURE_POINTS};
use crate::config::{resolve_model, Options, OutputFormat, ResolvedModel};
use crate::error::{CliError, Result};
use crate::output::Table;
use crate::plotscript::{self, FigureId};

pub fn run(opts: &Options) -> Result<()> {
    let model = resolve_model(opts)?;
    let t = opts
        .time
        .ok_or_else(|| CliError::Usage("spectrum needs --time".to_string()))?;
    let (def_lo, def_hi) = default_window(&model);
    let lo = opts.omega_min.unwrap_or(def_lo);
    let hi = opts.omega_max.unwrap_or(def_hi);
    let points = opts.points.unwrap_or(4001);
    let grid = Grid::new(lo, hi, points).map_err(CliError::from)?;

    let measure = match &model {
        ResolvedModel::Bw { .. } => None,
        ResolvedModel::Lee { model: ff, mass, .. } => Some(lee_measure(
            ff,
            *mass,
            opts.measure_points.unwrap_or(DEFAULT_MEASURE_POINTS),
        )?),
    };
    let dist = sample_spectrum(&model, measure.as_ref(), t, &grid)?;

    let mut metadata = base_metadata("spectrum", opts);
    metadata.extend(model.metadata());
    metadata.push(("time".into(), format!("{t}")));
    metadata.push(("omega_min".into(), format!("{lo}")));
    metadata.push(("omega_max".into(), format!("{hi}")));
    metadata.push(("points".into(), format!("{points}")));
    if measure.is_some() {
        metadata.push((
            "measure_points".into(),
            format!("{}", opts.measure_points.unwrap_or(DEFAULT_MEASURE_POINTS)),
        ));
    }
    metadata.push(("integral".into(), format!("{}", dist.integral)));

    let rows = (0..dist.nodes.len())
        .map(|i| vec![dist.nodes[i], dist.values[i], dist.normalized[i]])
        .collect();
    let table = Table {
        metadata,
        header: vec!["omega", "eta", "eta_normalized"],
        rows,
    };
    let out = opts.out()?;
    table.write(out)?;

    if opts.format()? == OutputFormat::CsvPlotscript {
        let figure: FigureId = opts
            .figure
            .as_deref()
            .unwrap_or("generic")
            .parse()?;
        let mut csvs = vec![out.clone()];
        if let Some(extra) = &opts.overlay {
            csvs.extend(extra.iter().cloned());
        }
        let script = out.with_extension("gp");
        plotscript::emit(figure, &csvs, &script)?;
    }
    Ok(())
}
