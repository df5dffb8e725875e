//! Physical presets binding the engine to concrete decays: π⁰ → γγ,
//! π⁺ → μ⁺ν, atomic spontaneous emission, and the non-exponential band /
//! smooth-cutoff benchmarks. Everything here works in `f64` and converts
//! physical units at the boundary; the engine itself runs in units of Γ.

use crate::bw::{self, BreitWignerParams};
use crate::distribution::EnergyDistribution;
use crate::error::Result;
use crate::grid::EnergyGrid;
use crate::kinematics::TwoBodyConfig;
use crate::lee::{
    default_nodes, eta_general, spectral_function, survival_amplitude_general, FormFactorModel,
    FormFactorShape,
};
use crate::measure::{DiscreteLevel, SpectralMeasure};
use crate::numerics::QuadratureSpec;
use crate::units::{convert_energy, EnergyUnit};

/// Origin of a preset number: printed in the paper, supplied from standard
/// tables by the user, or derived inside this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Paper,
    User,
    Derived,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::Paper => "paper",
            Provenance::User => "user",
            Provenance::Derived => "derived",
        })
    }
}

/// A preset number together with its provenance, for run metadata.
#[derive(Debug, Clone, Copy)]
pub struct TaggedValue {
    pub name: &'static str,
    pub value: f64,
    pub provenance: Provenance,
    pub note: &'static str,
}

pub const PI0_LIFETIME_S: f64 = 8.52e-17;
pub const PIPLUS_LIFETIME_S: f64 = 2.6033e-8;
/// Charged-pion and muon masses (standard tables).
pub const PIPLUS_MASS_MEV: f64 = 139.570;
pub const MUON_MASS_MEV: f64 = 105.658;

/// Unit-width resonance: the dimensionless engine behind every scenario.
fn unit_bw() -> BreitWignerParams<f64> {
    BreitWignerParams::new(0.0, 1.0).expect("unit Breit-Wigner")
}

/// δω(t)/Γ for the universal Breit-Wigner shape, with t in units of τ.
pub fn fwhm_over_gamma(t_over_tau: f64) -> Result<f64> {
    bw::fwhm(&unit_bw(), t_over_tau)
}

/// π⁰ → γγ: energy spread per photon, in eV, for a measurement at
/// `t_over_tau` lifetimes. Each photon carries half the total spread since
/// the photons are massless and share the width equally.
pub fn pi0_photon_spread(t_over_tau: f64) -> Result<f64> {
    let gamma_ev = convert_energy(PI0_LIFETIME_S, EnergyUnit::Seconds, EnergyUnit::EV)?;
    let cfg = TwoBodyConfig::new(0.0, 0.0, BreitWignerParams::new(1.0, 1.0)?)?;
    let (f1, _) = cfg.width_fractions();
    Ok(fwhm_over_gamma(t_over_tau)? * gamma_ev * f1)
}

pub fn pi0_parameters() -> Vec<TaggedValue> {
    vec![TaggedValue {
        name: "lifetime_s",
        value: PI0_LIFETIME_S,
        provenance: Provenance::Paper,
        note: "pi0 mean lifetime",
    }]
}

/// Width fractions (Γ₁/Γ, Γ₂/Γ) of π⁺ → μ⁺ν, recomputed from the masses.
pub fn piplus_ratios() -> Result<(f64, f64)> {
    let cfg = TwoBodyConfig::new(
        MUON_MASS_MEV,
        0.0,
        BreitWignerParams::new(PIPLUS_MASS_MEV, 1.0)?,
    )?;
    Ok(cfg.width_fractions())
}

/// π⁺ → μ⁺ν: (δE_μ, δE_ν) in eV at `t_over_tau` lifetimes.
pub fn piplus_spreads(t_over_tau: f64) -> Result<(f64, f64)> {
    let gamma_ev = convert_energy(PIPLUS_LIFETIME_S, EnergyUnit::Seconds, EnergyUnit::EV)?;
    let (r1, r2) = piplus_ratios()?;
    let spread = fwhm_over_gamma(t_over_tau)? * gamma_ev;
    Ok((r1 * spread, r2 * spread))
}

pub fn piplus_parameters() -> Vec<TaggedValue> {
    vec![
        TaggedValue {
            name: "lifetime_s",
            value: PIPLUS_LIFETIME_S,
            provenance: Provenance::Paper,
            note: "pi+ mean lifetime",
        },
        TaggedValue {
            name: "parent_mass_mev",
            value: PIPLUS_MASS_MEV,
            provenance: Provenance::User,
            note: "standard-table pi+ mass",
        },
        TaggedValue {
            name: "m1_mev",
            value: MUON_MASS_MEV,
            provenance: Provenance::User,
            note: "standard-table muon mass",
        },
        TaggedValue {
            name: "m2_mev",
            value: 0.0,
            provenance: Provenance::User,
            note: "neutrino treated as massless",
        },
    ]
}

/// Atomic spontaneous emission: photon spectrum η₂(t, ω₂) = η(t, ω₂ + m_D),
/// centered on the level splitting ΔE. Works directly in eV; `t_over_tau`
/// counts lifetimes 1/Γ.
pub fn atomic_emission_spectrum(
    delta_e_ev: f64,
    gamma_ev: f64,
    t_over_tau: f64,
    grid: &EnergyGrid<f64>,
) -> Result<EnergyDistribution<f64>> {
    let p = BreitWignerParams::new(delta_e_ev, gamma_ev)?;
    let t = t_over_tau / gamma_ev;
    Ok(bw::sample_eta(&p, t, grid))
}

/// Long-time photon linewidth of the atomic scenario (natural broadening).
pub fn atomic_fwhm_ev(delta_e_ev: f64, gamma_ev: f64, t_over_tau: f64) -> Result<f64> {
    let p = BreitWignerParams::new(delta_e_ev, gamma_ev)?;
    bw::fwhm(&p, t_over_tau / gamma_ev)
}

/// Reading of the band benchmark's geometry. The printed constants
/// (g = 0.95 √Γ, α = 0.0396 τ, "M − E₀ = 2.52 Γ") do not pin (M, E₀) by
/// themselves; the self-consistency Γ = g²(1 + αM) fixes M ≈ 2.7281 Γ, and
/// taking E₀ = 2.52 Γ reproduces the published level offsets and residues,
/// so that is the default. The alternative places the lower band edge at
/// 2.52 Γ instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandReading {
    /// E₀ = 2.52 Γ (default; matches the published discrete levels).
    WideBand,
    /// M − E₀ = 2.52 Γ read literally as the threshold location.
    ThresholdAt252,
}

pub const BAND_COUPLING: f64 = 0.95; // units sqrt(Γ)
pub const BAND_ASYMMETRY: f64 = 0.0396; // units τ
pub const BAND_SCALE: f64 = 2.52; // units Γ; E₀ or threshold depending on reading

/// Bare mass fixed by Γ = g²(1 + αM) in engine units (Γ = 1).
pub fn band_mass() -> f64 {
    (1.0 / (BAND_COUPLING * BAND_COUPLING) - 1.0) / BAND_ASYMMETRY
}

/// Band-model preset of the non-exponential benchmark.
pub fn band_model(reading: BandReading) -> Result<(FormFactorModel<f64>, f64)> {
    let mass = band_mass();
    let half_width = match reading {
        BandReading::WideBand => BAND_SCALE,
        BandReading::ThresholdAt252 => mass - BAND_SCALE,
    };
    let model = FormFactorModel::new(
        BAND_COUPLING,
        FormFactorShape::Band {
            center: mass,
            half_width,
            asymmetry: BAND_ASYMMETRY,
        },
    )?;
    Ok((model, mass))
}

pub fn band_parameters(reading: BandReading) -> Vec<TaggedValue> {
    let mut v = vec![
        TaggedValue {
            name: "coupling",
            value: BAND_COUPLING,
            provenance: Provenance::Paper,
            note: "g in units sqrt(Gamma)",
        },
        TaggedValue {
            name: "asymmetry",
            value: BAND_ASYMMETRY,
            provenance: Provenance::Paper,
            note: "alpha in units tau",
        },
        TaggedValue {
            name: "mass",
            value: band_mass(),
            provenance: Provenance::Derived,
            note: "from Gamma = g^2 (1 + alpha M)",
        },
    ];
    v.push(match reading {
        BandReading::WideBand => TaggedValue {
            name: "half_width",
            value: BAND_SCALE,
            provenance: Provenance::Paper,
            note: "E0; reading that reproduces the published levels",
        },
        BandReading::ThresholdAt252 => TaggedValue {
            name: "half_width",
            value: band_mass() - BAND_SCALE,
            provenance: Provenance::Derived,
            note: "from threshold M - E0 = 2.52 read literally",
        },
    });
    v
}

/// Smooth-cutoff preset: same geometry as the band, √ threshold factor and
/// Λ = 5 Γ, with g normalized so the golden-rule width is exactly 1.
pub const SMOOTH_CUTOFF_LAMBDA: f64 = 5.0;

pub fn smooth_cutoff_model() -> Result<(FormFactorModel<f64>, f64)> {
    let mass = band_mass();
    let shape = FormFactorShape::SmoothCutoff {
        center: mass,
        half_width: BAND_SCALE,
        asymmetry: BAND_ASYMMETRY,
        cutoff: SMOOTH_CUTOFF_LAMBDA,
    };
    let probe = FormFactorModel::new(1.0, shape)?;
    let g = probe.f_squared(mass).recip().sqrt();
    Ok((FormFactorModel::new(g, shape)?, mass))
}

pub fn smooth_cutoff_parameters() -> Vec<TaggedValue> {
    let g = smooth_cutoff_model().map(|(m, _)| m.coupling()).unwrap_or(f64::NAN);
    vec![
        TaggedValue {
            name: "cutoff",
            value: SMOOTH_CUTOFF_LAMBDA,
            provenance: Provenance::User,
            note: "Lambda in units Gamma",
        },
        TaggedValue {
            name: "coupling",
            value: g,
            provenance: Provenance::Derived,
            note: "normalized so the golden-rule width is 1",
        },
        TaggedValue {
            name: "asymmetry",
            value: BAND_ASYMMETRY,
            provenance: Provenance::Paper,
            note: "alpha in units tau",
        },
        TaggedValue {
            name: "mass",
            value: band_mass(),
            provenance: Provenance::Derived,
            note: "from Gamma = g^2 (1 + alpha M)",
        },
    ]
}

/// One sampled survival point: p(t) against the exponential reference.
#[derive(Debug, Clone, Copy)]
pub struct SurvivalPoint {
    pub t: f64,
    pub p: f64,
    pub p_exponential: f64,
}

/// Bundle produced by the non-exponential benchmark run.
#[derive(Debug, Clone)]
pub struct NonExponentialRun {
    pub measure: SpectralMeasure<f64>,
    pub survival: Vec<SurvivalPoint>,
    pub spectra: Vec<EnergyDistribution<f64>>,
    pub levels: Vec<DiscreteLevel<f64>>,
}

/// Runs a general model: survival curve at `survival_times`, η(t, ·) spectra
/// at `eta_times` (normalized at the bare mass, as in the figures), and the
/// discrete levels. Times are in units of τ; the engine width is 1.
pub fn non_exponential_run(
    model: &FormFactorModel<f64>,
    mass: f64,
    survival_times: &[f64],
    eta_times: &[f64],
    n_measure: usize,
    n_omega: usize,
) -> Result<NonExponentialRun> {
    let spec = QuadratureSpec::with_tolerances(1e-8, 1e-8)?;
    let nodes = default_nodes(model, mass, n_measure);
    let measure = spectral_function(model, mass, &nodes, &spec, 1e-3)?;

    let survival = survival_times
        .iter()
        .map(|&t| {
            let p = survival_amplitude_general(&measure, t).norm_sqr();
            SurvivalPoint { t, p, p_exponential: (-t).exp() }
        })
        .collect();

    let (sup_lo, sup_hi) = model.support();
    let (node_lo, node_hi) = measure.node_range().expect("measure has nodes");
    let lo = sup_lo.unwrap_or(node_lo);
    let hi = sup_hi.unwrap_or_else(|| node_hi.min(mass + 20.0));
    let grid = EnergyGrid::new(lo, hi, n_omega)?;
    let mut spectra = Vec::with_capacity(eta_times.len());
    for &t in eta_times {
        let values = grid
            .nodes()
            .into_iter()
            .map(|w| eta_general(model, &measure, t, w, &spec))
            .collect::<Result<Vec<f64>>>()?;
        spectra.push(EnergyDistribution::from_values(t, grid.nodes(), mass, values));
    }

    let levels = measure.atoms().to_vec();
    Ok(NonExponentialRun { measure, survival, spectra, levels })
}

/// Least-squares slope of ln(1 − p) against ln t: the short-time power-law
/// exponent (2 for a measure with finite variance).
pub fn short_time_exponent(measure: &SpectralMeasure<f64>, t_lo: f64, t_hi: f64, n: usize) -> f64 {
    assert!(n >= 2 && t_lo > 0.0 && t_hi > t_lo);
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for i in 0..n {
        let t = t_lo * (t_hi / t_lo).powf(i as f64 / (n - 1) as f64);
        let p = survival_amplitude_general(measure, t).norm_sqr();
        xs.push(t.ln());
        ys.push((1.0 - p).ln());
    }
    let mx = xs.iter().sum::<f64>() / n as f64;
    let my = ys.iter().sum::<f64>() / n as f64;
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..n {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    num / den
}
