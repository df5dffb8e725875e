//! `fwhm`: δω(t) of the Breit-Wigner η at the requested times.

use decay_spectra::{bw, BreitWigner};

use super::{base_metadata, require_kind};
use crate::config::{resolve_model, ModelKind, Options, OutputFormat, ResolvedModel};
use crate::error::Result;
use crate::output::Table;
use crate::plotscript::{self, FigureId};

pub fn run(opts: &Options) -> Result<()> {
    let model = resolve_model(opts)?;
    require_kind(&model, &[ModelKind::Bw], "fwhm")?;
    let ResolvedModel::Bw { mass, width } = model else {
        unreachable!()
    };
    let p = BreitWigner::new(mass, width)?;
    let times = opts.require_times()?;

    let mut rows = Vec::with_capacity(times.len());
    for &t in &times {
        let d = bw::fwhm(&p, t)?;
        rows.push(vec![t, d, d / width]);
    }

    let mut metadata = base_metadata("fwhm", opts);
    metadata.extend(model_metadata(mass, width));
    metadata.push((
        "times".into(),
        times
            .iter()
            .map(|t| format!("{t}"))
            .collect::<Vec<_>>()
            .join(","),
    ));

    let table = Table {
        metadata,
        header: vec!["t", "delta_omega", "delta_omega_over_gamma"],
        rows,
    };
    let out = opts.out()?;
    table.write(out)?;

    if opts.format()? == OutputFormat::CsvPlotscript {
        let figure: FigureId = opts.figure.as_deref().unwrap_or("fig3").parse()?;
        plotscript::emit(figure, &[out.clone()], &out.with_extension("gp"))?;
    }
    Ok(())
}

fn model_metadata(mass: f64, width: f64) -> Vec<(String, String)> {
    vec![
        ("model".into(), "bw".into()),
        ("mass".into(), format!("{mass}")),
        ("width".into(), format!("{width}")),
    ]
}
