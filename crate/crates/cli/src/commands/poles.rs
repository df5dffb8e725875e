//! `poles`: emergent discrete levels of a Lee model.

use decay_spectra::lee::find_discrete_levels;

use super::{base_metadata, quadrature, require_kind};
use crate::config::{resolve_model, ModelKind, Options, ResolvedModel};
use crate::error::Result;
use crate::output::Table;

pub fn run(opts: &Options) -> Result<()> {
    let model = resolve_model(opts)?;
    require_kind(
        &model,
        &[ModelKind::Flat, ModelKind::Band, ModelKind::SmoothCutoff],
        "poles",
    )?;
    let ResolvedModel::Lee { model: ff, mass, .. } = &model else {
        unreachable!()
    };
    let levels = find_discrete_levels(ff, *mass, &quadrature())?;

    let mut metadata = base_metadata("poles", opts);
    metadata.extend(model.metadata());
    metadata.push(("levels".into(), format!("{}", levels.len())));
    let (lo, hi) = ff.support();
    if let Some(lo) = lo {
        metadata.push(("support_min".into(), format!("{lo}")));
    }
    if let Some(hi) = hi {
        metadata.push(("support_max".into(), format!("{hi}")));
    }

    let rows = levels
        .iter()
        .enumerate()
        .map(|(i, l)| vec![(i + 1) as f64, l.energy, l.weight])
        .collect();

    Table {
        metadata,
        header: vec!["level", "energy", "residue"],
        rows,
    }
    .write(opts.out()?)
}
