//! General (beyond-Breit-Wigner) time-dependent quantities built on a
//! sampled spectral measure:
//!
//!   a(t)    = ∫ d_S(E) e^{-iEt} dE + Σ Z_i e^{-iE_i t}
//!   η(t, ω) = Im Π(ω)/π · |∫ d_S(E) (e^{-iωt} − e^{-iEt})/(ω − E) dE|²
//!   w(t)    = ∫ η(t, ω) dω  =  1 − |a(t)|²
//!
//! The η kernel has a removable singularity at E = ω; near it the integrand
//! switches to its Taylor form. The E integral is panelled at an eighth of
//! the oscillation period 2π/t inside the window where the density is
//! non-negligible; the far tails are left to adaptive refinement, which
//! coarsens them according to their actual contribution.

use std::cell::Cell;

use num_complex::Complex;

use super::FormFactorModel;
use crate::error::{Error, Result};
use crate::measure::SpectralMeasure;
use crate::numerics::{integrate_segments, oscillatory_segments, QuadratureSpec};
use crate::scalar::Real;

/// a(t) for a sampled measure: exact Fourier transform of the interpolated
/// continuum plus the discrete phases. a(0) equals the total mass.
pub fn survival_amplitude_general<R: Real>(measure: &SpectralMeasure<R>, t: R) -> Complex<R> {
    measure.fourier_transform(t)
}

/// Kernel (e^{-iωt} − e^{-iEt})/(ω − E); entire in E, |K| ≤ t. For
/// |ω − E| t below 1e-4 the limit −i t e^{-iωt} (1 + z/2 + z²/6 + z³/24)
/// with z = i(ω − E)t replaces the ratio.
fn kernel<R: Real>(e: R, omega: R, t: R) -> Complex<R> {
    let d = omega - e;
    if (d * t).abs() < R::lit(1e-4) {
        let z = Complex::new(R::zero(), d * t);
        let one = Complex::new(R::one(), R::zero());
        let series = one
            + z.scale(R::lit(0.5))
            + (z * z).scale(R::lit(1.0 / 6.0))
            + (z * z * z).scale(R::lit(1.0 / 24.0));
        (Complex::new(R::zero(), -t) * Complex::cis(-omega * t)) * series
    } else {
        (Complex::cis(-omega * t) - Complex::cis(-e * t)).scale(d.recip())
    }
}

/// Window outside which the sampled density is negligible (below 1e-3 of its
/// peak); oscillation panelling is restricted to it.
fn oscillation_core<R: Real>(measure: &SpectralMeasure<R>) -> Option<(R, R)> {
    let nodes = measure.nodes();
    let density = measure.density();
    if nodes.is_empty() {
        return None;
    }
    let mut peak = R::zero();
    for &d in density {
        if d > peak {
            peak = d;
        }
    }
    if peak == R::zero() {
        return None;
    }
    let floor = peak * R::lit(1e-3);
    let mut lo = nodes[0];
    let mut hi = nodes[nodes.len() - 1];
    for i in 0..nodes.len() {
        if density[i] > floor {
            lo = nodes[i.saturating_sub(1)];
            break;
        }
    }
    for i in (0..nodes.len()).rev() {
        if density[i] > floor {
            hi = nodes[(i + 1).min(nodes.len() - 1)];
            break;
        }
    }
    Some((lo, hi))
}

/// η(t, ω) for a general model and its sampled measure. Zero wherever
/// Im Π(ω) vanishes (outside the continuum support), including t = 0.
pub fn eta_general<R: Real>(
    model: &FormFactorModel<R>,
    measure: &SpectralMeasure<R>,
    t: R,
    omega: R,
    spec: &QuadratureSpec<R>,
) -> Result<R> {
    let im_pi = model.im_self_energy(omega);
    if im_pi == R::zero() {
        return Ok(R::zero());
    }
    let mut amplitude = Complex::new(R::zero(), R::zero());
    for a in measure.atoms() {
        amplitude = amplitude + kernel(a.energy, omega, t).scale(a.weight);
    }
    if let Some((lo, hi)) = measure.node_range() {
        let segs = oscillatory_segments(lo, hi, t, oscillation_core(measure), R::lit(0.125))?;
        let (integral, _) = integrate_segments(
            |e| kernel(e, omega, t).scale(measure.density_at(e)),
            &segs,
            spec,
        )?;
        amplitude = amplitude + integral;
    }
    Ok(im_pi / R::PI() * amplitude.norm_sqr())
}

/// w(t) by quadrature of η over the continuum support, checked against
/// 1 − |a(t)|². A violation beyond `consistency_tol` means the quadrature
/// settings are too loose for the requested identity and is reported as an
/// error rather than silently returned.
///
/// The identity is only needed to `consistency_tol`, so the outer tolerance
/// follows it (floored by `spec`) and the inner η integrals run two orders
/// tighter; with unbounded supports this is what keeps the slowly decaying
/// oscillatory tails from being resolved far beyond their contribution.
pub fn decay_probability_general<R: Real>(
    model: &FormFactorModel<R>,
    measure: &SpectralMeasure<R>,
    t: R,
    spec: &QuadratureSpec<R>,
    consistency_tol: R,
) -> Result<R> {
    let p = survival_amplitude_general(measure, t).norm_sqr();
    let Some((node_lo, node_hi)) = measure.node_range() else {
        return Err(Error::Domain("measure has no continuum nodes".to_string()));
    };
    let (sup_lo, sup_hi) = measure.support();
    let lo = sup_lo.map_or(node_lo, |s| s.max(node_lo));
    let hi = sup_hi.map_or(node_hi, |s| s.min(node_hi));

    let outer_tol = (consistency_tol * R::lit(0.05)).max(spec.abs_tol);
    let outer_spec = QuadratureSpec {
        abs_tol: outer_tol,
        rel_tol: outer_tol,
        ..*spec
    };
    let inner_spec = outer_spec.scaled(R::lit(0.01));
    let first_error: Cell<Option<Error>> = Cell::new(None);
    let segs = oscillatory_segments(lo, hi, t, oscillation_core(measure), R::lit(0.5))?;
    let (w, _) = integrate_segments(
        |omega| match eta_general(model, measure, t, omega, &inner_spec) {
            Ok(v) => v,
            Err(err) => {
                let prev = first_error.take();
                first_error.set(prev.or(Some(err)));
                R::zero()
            }
        },
        &segs,
        &outer_spec,
    )?;
    if let Some(err) = first_error.take() {
        return Err(err);
    }
    let gap = (w + p - R::one()).abs();
    if gap > consistency_tol {
        return Err(Error::Consistency {
            gap: gap.as_f64(),
            tol: consistency_tol.as_f64(),
        });
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bw::{self, BreitWignerParams};
    use crate::lee::levels::tests::benchmark_band;
    use crate::lee::{default_nodes, spectral_function};

    fn spec() -> QuadratureSpec<f64> {
        QuadratureSpec::with_tolerances(1e-8, 1e-8).unwrap()
    }

    fn flat_measure() -> (FormFactorModel<f64>, SpectralMeasure<f64>) {
        let model = FormFactorModel::flat(1.0f64).unwrap();
        let nodes = default_nodes(&model, 0.0, 6001);
        let m = spectral_function(&model, 0.0, &nodes, &spec(), 1e-3).unwrap();
        (model, m)
    }

    #[test]
    fn survival_flat_matches_exponential() {
        let (_, measure) = flat_measure();
        let p = BreitWignerParams::new(0.0, 1.0).unwrap();
        let a0 = survival_amplitude_general(&measure, 0.0);
        assert!((a0.re - 1.0).abs() < 1e-12);
        for &t in &[0.5, 1.0, 3.0] {
            let a = survival_amplitude_general(&measure, t);
            let oracle = bw::survival_amplitude(&p, t);
            assert!((a - oracle).norm() < 1e-3, "t = {t}: {a} vs {oracle}");
        }
    }

    #[test]
    fn eta_flat_matches_closed_form() {
        let (model, measure) = flat_measure();
        let p = BreitWignerParams::new(0.0, 1.0).unwrap();
        for &t in &[0.5, 1.0] {
            for &w in &[0.0, 2.0, 5.0, -5.0] {
                let v = eta_general(&model, &measure, t, w, &spec()).unwrap();
                let oracle = bw::eta(&p, t, w);
                assert!(
                    (v / oracle - 1.0).abs() < 1e-3,
                    "t = {t}, w = {w}: {v} vs {oracle}"
                );
            }
        }
    }

    #[test]
    fn eta_zero_at_t_zero_and_off_support() {
        let (model, mass) = benchmark_band();
        let nodes = default_nodes(&model, mass, 2001);
        let measure = spectral_function(&model, mass, &nodes, &spec(), 1e-3).unwrap();
        assert_eq!(eta_general(&model, &measure, 0.0, mass, &spec()).unwrap(), 0.0);
        let outside = mass + 2.52 + 0.5;
        assert_eq!(eta_general(&model, &measure, 1.0, outside, &spec()).unwrap(), 0.0);
    }

    #[test]
    fn flat_decay_probability_matches_exponential() {
        let (model, measure) = flat_measure();
        let w = decay_probability_general(&model, &measure, 1.0, &spec(), 1e-3).unwrap();
        assert!((w - 0.6321205588285577).abs() < 1e-3, "w = {w}");
    }

    #[test]
    fn decay_probability_zero_at_t_zero() {
        let (model, measure) = flat_measure();
        let w = decay_probability_general(&model, &measure, 0.0, &spec(), 1e-3).unwrap();
        assert!(w.abs() < 1e-9);
    }

    #[test]
    fn consistency_error_when_tolerance_impossible() {
        let (model, mass) = benchmark_band();
        let nodes = default_nodes(&model, mass, 2001);
        let measure = spectral_function(&model, mass, &nodes, &spec(), 1e-3).unwrap();
        let loose = QuadratureSpec::with_tolerances(1e-6, 1e-6).unwrap();
        let err = decay_probability_general(&model, &measure, 0.4, &loose, 1e-10);
        assert!(matches!(err, Err(Error::Consistency { .. })));
    }
}
