//! Run configuration: an optional JSON config file plus command-line flags,
//! flags winning field by field. The resolved configuration is fully
//! explicit and is echoed into every CSV's metadata header.

use std::path::PathBuf;
use std::str::FromStr;

use decay_spectra::lee::{fermi_golden_rule, FormFactorModel, FormFactorShape};
use decay_spectra::scenarios;
use serde::Deserialize;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Bw,
    Flat,
    Band,
    SmoothCutoff,
}

impl ModelKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModelKind::Bw => "bw",
            ModelKind::Flat => "flat",
            ModelKind::Band => "band",
            ModelKind::SmoothCutoff => "smooth-cutoff",
        }
    }
}

impl FromStr for ModelKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bw" => Ok(ModelKind::Bw),
            "flat" => Ok(ModelKind::Flat),
            "band" => Ok(ModelKind::Band),
            "smooth-cutoff" | "smooth_cutoff" => Ok(ModelKind::SmoothCutoff),
            other => Err(CliError::Usage(format!("unknown model `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    CsvPlotscript,
}

impl FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "csv+plotscript" => Ok(OutputFormat::CsvPlotscript),
            other => Err(CliError::Usage(format!("unknown format `{other}`"))),
        }
    }
}

/// The merged option bag. Every field is optional here; each command
/// resolves what it needs and rejects what is missing.
#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub command: Option<String>,
    pub model: Option<String>,
    pub mass: Option<f64>,
    pub width: Option<f64>,
    pub coupling: Option<f64>,
    pub e0: Option<f64>,
    pub alpha: Option<f64>,
    pub lambda: Option<f64>,
    pub time: Option<f64>,
    pub times: Option<Vec<f64>>,
    pub t_max: Option<f64>,
    pub points: Option<usize>,
    pub survival_points: Option<usize>,
    pub measure_points: Option<usize>,
    pub omega_min: Option<f64>,
    pub omega_max: Option<f64>,
    pub m1: Option<f64>,
    pub m2: Option<f64>,
    pub span: Option<f64>,
    pub delta_e: Option<f64>,
    pub gamma: Option<f64>,
    pub out: Option<PathBuf>,
    pub out_dir: Option<PathBuf>,
    pub format: Option<String>,
    pub figure: Option<String>,
    pub overlay: Option<Vec<PathBuf>>,
}

impl Options {
    /// Loads the JSON config file; type mismatches and unknown fields are
    /// configuration errors (exit code 2).
    pub fn from_file(path: &PathBuf) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }

    /// Field-by-field overlay: `self` (flags) wins over `base` (file).
    pub fn over(self, base: Options) -> Options {
        macro_rules! pick {
            ($($f:ident),* $(,)?) => {
                Options { $($f: self.$f.or(base.$f)),* }
            };
        }
        pick!(
            command, model, mass, width, coupling, e0, alpha, lambda, time, times, t_max,
            points, survival_points, measure_points, omega_min, omega_max, m1, m2, span,
            delta_e, gamma, out, out_dir, format, figure, overlay,
        )
    }

    pub fn format(&self) -> Result<OutputFormat> {
        match &self.format {
            None => Ok(OutputFormat::Csv),
            Some(s) => s.parse(),
        }
    }

    pub fn out(&self) -> Result<&PathBuf> {
        self.out
            .as_ref()
            .ok_or_else(|| CliError::Usage("--out is required".to_string()))
    }

    pub fn require_times(&self) -> Result<Vec<f64>> {
        match &self.times {
            Some(ts) if !ts.is_empty() => Ok(ts.clone()),
            _ => Err(CliError::Usage("--times is required".to_string())),
        }
    }
}

pub fn parse_times(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("bad time `{tok}`")))
        })
        .collect()
}

/// A fully resolved physics model.
#[derive(Debug, Clone)]
pub enum ResolvedModel {
    Bw {
        mass: f64,
        width: f64,
    },
    Lee {
        kind: ModelKind,
        model: FormFactorModel<f64>,
        mass: f64,
    },
}

impl ResolvedModel {
    pub fn kind(&self) -> ModelKind {
        match self {
            ResolvedModel::Bw { .. } => ModelKind::Bw,
            ResolvedModel::Lee { kind, .. } => *kind,
        }
    }

    /// Width scale used for default grids: Γ for the Breit-Wigner model and
    /// the golden-rule width otherwise.
    pub fn width_scale(&self) -> f64 {
        match self {
            ResolvedModel::Bw { width, .. } => *width,
            ResolvedModel::Lee { model, mass, .. } => {
                fermi_golden_rule(model, *mass).unwrap_or(1.0)
            }
        }
    }

    pub fn mass(&self) -> f64 {
        match self {
            ResolvedModel::Bw { mass, .. } => *mass,
            ResolvedModel::Lee { mass, .. } => *mass,
        }
    }

    /// Metadata lines describing the resolved model.
    pub fn metadata(&self) -> Vec<(String, String)> {
        match self {
            ResolvedModel::Bw { mass, width } => vec![
                ("model".into(), "bw".into()),
                ("mass".into(), format!("{mass}")),
                ("width".into(), format!("{width}")),
            ],
            ResolvedModel::Lee { kind, model, mass } => {
                let mut md = vec![
                    ("model".into(), kind.as_str().to_string()),
                    ("coupling".into(), format!("{}", model.coupling())),
                    ("mass".into(), format!("{mass}")),
                ];
                match *model.shape() {
                    FormFactorShape::Flat => {}
                    FormFactorShape::Band { half_width, asymmetry, .. } => {
                        md.push(("e0".into(), format!("{half_width}")));
                        md.push(("alpha".into(), format!("{asymmetry}")));
                    }
                    FormFactorShape::SmoothCutoff {
                        half_width,
                        asymmetry,
                        cutoff,
                        ..
                    } => {
                        md.push(("e0".into(), format!("{half_width}")));
                        md.push(("alpha".into(), format!("{asymmetry}")));
                        md.push(("lambda".into(), format!("{cutoff}")));
                    }
                }
                md
            }
        }
    }
}

/// Builds the model from the option bag. Band and smooth-cutoff default to
/// the non-exponential benchmark constants so the figures are reproducible
/// out of the box; everything resolved is echoed in the metadata.
pub fn resolve_model(opts: &Options) -> Result<ResolvedModel> {
    let kind: ModelKind = opts
        .model
        .as_deref()
        .ok_or_else(|| CliError::Usage("--model is required".to_string()))?
        .parse()?;
    match kind {
        ModelKind::Bw => {
            let width = opts
                .width
                .ok_or_else(|| CliError::Usage("bw model needs --width".to_string()))?;
            let mass = opts.mass.unwrap_or(0.0);
            decay_spectra::BreitWigner::new(mass, width)?;
            Ok(ResolvedModel::Bw { mass, width })
        }
        ModelKind::Flat => {
            let coupling = match (opts.coupling, opts.width) {
                (Some(g), _) => g,
                (None, Some(w)) if w > 0.0 => w.sqrt(),
                _ => {
                    return Err(CliError::Usage(
                        "flat model needs --coupling (or --width)".to_string(),
                    ))
                }
            };
            let mass = opts.mass.unwrap_or(0.0);
            let model = FormFactorModel::flat(coupling)?;
            Ok(ResolvedModel::Lee { kind, model, mass })
        }
        ModelKind::Band => {
            let coupling = opts.coupling.unwrap_or(scenarios::BAND_COUPLING);
            let mass = opts.mass.unwrap_or_else(scenarios::band_mass);
            let e0 = opts.e0.unwrap_or(scenarios::BAND_SCALE);
            let alpha = opts.alpha.unwrap_or(scenarios::BAND_ASYMMETRY);
            let model = FormFactorModel::new(
                coupling,
                FormFactorShape::Band { center: mass, half_width: e0, asymmetry: alpha },
            )?;
            Ok(ResolvedModel::Lee { kind, model, mass })
        }
        ModelKind::SmoothCutoff => {
            let mass = opts.mass.unwrap_or_else(scenarios::band_mass);
            let e0 = opts.e0.unwrap_or(scenarios::BAND_SCALE);
            let alpha = opts.alpha.unwrap_or(scenarios::BAND_ASYMMETRY);
            let lambda = opts.lambda.unwrap_or(scenarios::SMOOTH_CUTOFF_LAMBDA);
            let shape = FormFactorShape::SmoothCutoff {
                center: mass,
                half_width: e0,
                asymmetry: alpha,
                cutoff: lambda,
            };
            let coupling = match opts.coupling {
                Some(g) => g,
                None => {
                    let probe = FormFactorModel::new(1.0, shape)?;
                    probe.f_squared(mass).recip().sqrt()
                }
            };
            let model = FormFactorModel::new(coupling, shape)?;
            Ok(ResolvedModel::Lee { kind, model, mass })
        }
    }
}
