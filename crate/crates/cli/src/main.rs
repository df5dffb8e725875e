//! Command-line front end: computes spectra, survival curves, widths,
//! two-body distributions, discrete levels and scenario presets, writing
//! deterministic CSV tables and optional gnuplot scripts.

mod commands;
mod config;
mod error;
mod output;
mod plotscript;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{parse_times, Options};
use error::{CliError, Result};

#[derive(Parser)]
#[command(
    name = "decay-spectra",
    version,
    about = "Time-resolved energy distributions of decay products",
    after_help = "Energies and times of the compute commands are in the model's natural units \
                  (times in 1/energy; with width 1 the time axis is t/tau). Scenario times are \
                  in units of the lifetime tau. A JSON config file (--config) provides defaults; \
                  command-line flags override it field by field."
)]
struct Cli {
    /// JSON config file with the same field names as the flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct CommonArgs {
    /// Model kind: bw | flat | band | smooth-cutoff.
    #[arg(long)]
    model: Option<String>,
    /// Resonance mass M (band/smooth-cutoff default: the benchmark value).
    #[arg(long, allow_negative_numbers = true)]
    mass: Option<f64>,
    /// Breit-Wigner width Γ.
    #[arg(long)]
    width: Option<f64>,
    /// Coupling g (dimension energy^1/2) of the Lee models.
    #[arg(long)]
    coupling: Option<f64>,
    /// Band half-width E0.
    #[arg(long)]
    e0: Option<f64>,
    /// Linear form-factor asymmetry α.
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Smooth-cutoff scale Λ.
    #[arg(long)]
    lambda: Option<f64>,
    /// Single evaluation time.
    #[arg(long, allow_negative_numbers = true)]
    time: Option<f64>,
    /// Comma-separated list of times.
    #[arg(long, allow_hyphen_values = true)]
    times: Option<String>,
    /// End of the survival time grid.
    #[arg(long)]
    t_max: Option<f64>,
    /// Number of grid points.
    #[arg(long)]
    points: Option<usize>,
    /// Number of survival time points.
    #[arg(long)]
    survival_points: Option<usize>,
    /// Nodes used to sample the spectral measure of the Lee models.
    #[arg(long)]
    measure_points: Option<usize>,
    /// Lower edge of the ω grid.
    #[arg(long, allow_negative_numbers = true)]
    omega_min: Option<f64>,
    /// Upper edge of the ω grid.
    #[arg(long, allow_negative_numbers = true)]
    omega_max: Option<f64>,
    /// Mass of decay particle 1.
    #[arg(long, allow_negative_numbers = true)]
    m1: Option<f64>,
    /// Mass of decay particle 2.
    #[arg(long, allow_negative_numbers = true)]
    m2: Option<f64>,
    /// Per-particle grid half-width in units of the partial width.
    #[arg(long)]
    span: Option<f64>,
    /// Level splitting ΔE in eV (atomic scenario).
    #[arg(long, allow_negative_numbers = true)]
    delta_e: Option<f64>,
    /// Natural linewidth Γ in eV (atomic scenario).
    #[arg(long)]
    gamma: Option<f64>,
    /// Output CSV path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output directory for multi-file scenarios.
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Output format: csv | csv+plotscript.
    #[arg(long)]
    format: Option<String>,
    /// Figure layout for the plot script: fig1 | fig2 | fig3 | fig4 | generic.
    #[arg(long)]
    figure: Option<String>,
    /// Extra CSVs overlaid by the emitted plot script.
    #[arg(long)]
    overlay: Option<Vec<PathBuf>>,
}

impl CommonArgs {
    fn into_options(self) -> Result<Options> {
        let times = self.times.as_deref().map(parse_times).transpose()?;
        Ok(Options {
            command: None,
            model: self.model,
            mass: self.mass,
            width: self.width,
            coupling: self.coupling,
            e0: self.e0,
            alpha: self.alpha,
            lambda: self.lambda,
            time: self.time,
            times,
            t_max: self.t_max,
            points: self.points,
            survival_points: self.survival_points,
            measure_points: self.measure_points,
            omega_min: self.omega_min,
            omega_max: self.omega_max,
            m1: self.m1,
            m2: self.m2,
            span: self.span,
            delta_e: self.delta_e,
            gamma: self.gamma,
            out: self.out,
            out_dir: self.out_dir,
            format: self.format,
            figure: self.figure,
            overlay: self.overlay,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sample η(t, ω) over an energy grid at one time.
    Spectrum(CommonArgs),
    /// Survival amplitude a(t) and probability p(t) on a time grid.
    Survival(CommonArgs),
    /// Half-height width δω(t) of the Breit-Wigner distribution.
    Fwhm(CommonArgs),
    /// Per-particle two-body energy distributions (narrow and exact forms).
    Twobody(CommonArgs),
    /// Emergent discrete levels of a Lee model.
    Poles(CommonArgs),
    /// Named presets: pi0, piplus, atomic, fig4-band, fig4-band-narrow,
    /// smooth-cutoff. Times are in units of τ.
    Scenario {
        name: String,
        #[command(flatten)]
        args: CommonArgs,
    },
    /// Emit a gnuplot script from existing CSVs.
    Plotscript {
        /// fig1 | fig2 | fig3 | fig4 | generic.
        #[arg(long)]
        figure: String,
        /// Input CSVs, repeatable, in plotting order.
        #[arg(long = "csv", required = true)]
        csvs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn init_threads() {
    if let Ok(v) = std::env::var("DECAY_SPECTRA_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn merge(args: CommonArgs, config: &Option<PathBuf>, command: &str) -> Result<Options> {
    let mut opts = args.into_options()?;
    if let Some(path) = config {
        let file = Options::from_file(path)?;
        if let Some(file_cmd) = &file.command {
            if file_cmd != command {
                return Err(CliError::Usage(format!(
                    "config file is for command `{file_cmd}`, not `{command}`"
                )));
            }
        }
        opts = opts.over(file);
    }
    Ok(opts)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Spectrum(args) => commands::spectrum::run(&merge(args, &cli.config, "spectrum")?),
        Command::Survival(args) => commands::survival::run(&merge(args, &cli.config, "survival")?),
        Command::Fwhm(args) => commands::fwhm::run(&merge(args, &cli.config, "fwhm")?),
        Command::Twobody(args) => commands::twobody::run(&merge(args, &cli.config, "twobody")?),
        Command::Poles(args) => commands::poles::run(&merge(args, &cli.config, "poles")?),
        Command::Scenario { name, args } => {
            let opts = merge(args, &cli.config, "scenario")?;
            commands::scenario::run(&name, &opts)
        }
        Command::Plotscript { figure, csvs, out } => {
            plotscript::emit(figure.parse()?, &csvs, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 2u8,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    init_threads();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
