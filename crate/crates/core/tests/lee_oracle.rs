//! Heavier integration tests of the general machinery: the flat form factor
//! against the closed Breit-Wigner forms, unitarity, and the band-model
//! benchmark (short-time law, asymmetry, long-time plateau, η → d_S).

use decay_spectra::bw::{self, BreitWignerParams};
use decay_spectra::lee::{
    decay_probability_general, default_nodes, eta_general, spectral_function,
    survival_amplitude_general, FormFactorModel,
};
use decay_spectra::numerics::QuadratureSpec;
use decay_spectra::scenarios::{self, BandReading};
use decay_spectra::{Measure, Quadrature};

fn spec() -> Quadrature {
    QuadratureSpec::with_tolerances(1e-8, 1e-8).unwrap()
}

fn band_measure(n: usize) -> (FormFactorModel<f64>, f64, Measure) {
    let (model, mass) = scenarios::band_model(BandReading::WideBand).unwrap();
    let nodes = default_nodes(&model, mass, n);
    let measure = spectral_function(&model, mass, &nodes, &spec(), 1e-3).unwrap();
    (model, mass, measure)
}

#[test]
fn band_unitarity_at_figure_times() {
    let (model, _, measure) = band_measure(4001);
    for &t in &[0.40, 0.79] {
        let w = decay_probability_general(&model, &measure, t, &spec(), 1e-3).unwrap();
        let p = survival_amplitude_general(&measure, t).norm_sqr();
        assert!((w + p - 1.0).abs() < 1e-3, "t = {t}: w + p = {}", w + p);
    }
}

#[test]
fn band_unitarity_long_time() {
    let (model, _, measure) = band_measure(4001);
    let t = 100.0;
    let w = decay_probability_general(&model, &measure, t, &spec(), 1e-3).unwrap();
    let p = survival_amplitude_general(&measure, t).norm_sqr();
    assert!((w + p - 1.0).abs() < 1e-3, "w + p = {}", w + p);
    // at 100τ the exponential part is long gone; what survives is the
    // power-law tail fed by the band-edge layers
    assert!(p < 1e-5, "p(100τ) = {p}");
}

#[test]
fn band_short_time_law_is_quadratic() {
    let (_, _, measure) = band_measure(4001);
    let slope = scenarios::short_time_exponent(&measure, 1e-3, 1e-2, 9);
    assert!((slope - 2.0).abs() < 0.1, "slope = {slope}");
}

#[test]
fn band_spectrum_skews_upward_at_short_times() {
    let (model, mass, measure) = band_measure(4001);
    let lo = mass - 2.52;
    let hi = mass + 2.52;
    let n = 301;
    for &t in &[0.40, 0.79] {
        let mut best = (0.0, 0.0);
        for i in 0..n {
            let w = lo + (hi - lo) * (i as f64 + 0.5) / n as f64;
            let v = eta_general(&model, &measure, t, w, &spec()).unwrap();
            assert!(v >= 0.0);
            if v > best.1 {
                best = (w, v);
            }
        }
        assert!(
            best.0 > mass,
            "t = {t}: argmax {} not above mass {mass}",
            best.0
        );
    }
}

#[test]
fn band_eta_approaches_spectral_density() {
    let (model, mass, measure) = band_measure(4001);
    let t = 100.0;
    for &w in &[mass - 1.0, mass, mass + 1.0] {
        let v = eta_general(&model, &measure, t, w, &spec()).unwrap();
        let d = measure.density_at(w);
        assert!((v / d - 1.0).abs() < 0.02, "w = {w}: eta {v} vs d_S {d}");
    }
}

#[test]
fn band_survival_plateaus_at_pole_weights() {
    let (_, _, measure) = band_measure(4001);
    let z_sum: f64 = measure.atoms().iter().map(|a| a.weight).sum();
    // beyond ~60τ the continuum has decayed exponentially; what is left is
    // the two discrete phases plus the slowly fading edge layers
    let t = 3.0e4;
    let p = survival_amplitude_general(&measure, t).norm_sqr();
    assert!(p < 1e-8, "p = {p}");
    assert!(z_sum > 0.0 && (z_sum * z_sum) < 1e-8);
}

#[test]
fn flat_oracle_equivalence_suite() {
    let model = FormFactorModel::flat(1.0f64).unwrap();
    let nodes = default_nodes(&model, 0.0, 6001);
    let measure = spectral_function(&model, 0.0, &nodes, &spec(), 1e-3).unwrap();
    let p = BreitWignerParams::new(0.0, 1.0).unwrap();

    for &t in &[0.5, 1.0, 3.0] {
        let a = survival_amplitude_general(&measure, t);
        assert!((a - bw::survival_amplitude(&p, t)).norm() < 1e-3);
    }
    for &(t, w) in &[(0.5, 0.0), (1.0, 0.0), (1.0, 2.0), (1.0, -5.0)] {
        let v = eta_general(&model, &measure, t, w, &spec()).unwrap();
        assert!((v / bw::eta(&p, t, w) - 1.0).abs() < 1e-3, "t={t} w={w}");
    }
    let w = decay_probability_general(&model, &measure, 1.0, &spec(), 1e-3).unwrap();
    assert!((w / bw::decay_probability(&p, 1.0) - 1.0).abs() < 1.6e-3, "w = {w}");
}
