//! Self-energy Π(E) = -(g²/2π) PV ∫ f²(k)/(E−k) dk + i g²f²(E)/2.
//!
//! The flat form factor gives the constant iΓ/2; the band has the closed
//! logarithmic form; the smooth cutoff needs principal-value quadrature,
//! done after a √ substitution at the threshold plus an inverse-square-root
//! substitution for the tail so both pieces are smooth.

use num_complex::Complex;

use super::{FormFactorModel, FormFactorShape};
use crate::error::Result;
use crate::numerics::{integrate, pv_integral, QuadratureSpec};
use crate::scalar::Real;

/// Full Π(E) with the convention Im Π ≥ 0 on the support.
pub fn self_energy<R: Real>(
    model: &FormFactorModel<R>,
    e: R,
    spec: &QuadratureSpec<R>,
) -> Result<Complex<R>> {
    Ok(Complex::new(
        re_self_energy(model, e, spec)?,
        model.im_self_energy(e),
    ))
}

/// Re Π(E); analytic for Flat and Band, quadrature for SmoothCutoff.
pub fn re_self_energy<R: Real>(
    model: &FormFactorModel<R>,
    e: R,
    spec: &QuadratureSpec<R>,
) -> Result<R> {
    let g2 = model.coupling() * model.coupling();
    match *model.shape() {
        FormFactorShape::Flat => Ok(R::zero()),
        FormFactorShape::Band {
            center,
            half_width,
            asymmetry,
        } => {
            let u = e - center;
            Ok(band_re_from_distances(
                g2,
                asymmetry,
                e,
                (u - half_width).abs(),
                (u + half_width).abs(),
            ))
        }
        FormFactorShape::SmoothCutoff { .. } => smooth_re(model, e, spec),
    }
}

/// Band Re Π from the distances to the two edges:
/// (g²/2π)(1 + αE) ln(|E − M − E₀| / |E − M + E₀|).
/// Exposed on distances so callers near an edge can pass the offset exactly.
pub(super) fn band_re_from_distances<R: Real>(
    g2: R,
    asymmetry: R,
    e: R,
    dist_upper: R,
    dist_lower: R,
) -> R {
    g2 / R::TAU() * (R::one() + asymmetry * e) * (dist_upper / dist_lower).ln()
}

fn smooth_re<R: Real>(model: &FormFactorModel<R>, e: R, spec: &QuadratureSpec<R>) -> Result<R> {
    let (center, half_width, asymmetry, cutoff) = match *model.shape() {
        FormFactorShape::SmoothCutoff {
            center,
            half_width,
            asymmetry,
            cutoff,
        } => (center, half_width, asymmetry, cutoff),
        _ => unreachable!("smooth_re called on a non-smooth shape"),
    };
    let g2 = model.coupling() * model.coupling();
    let threshold = center - half_width;

    // split point for head (PV in u = sqrt(k - threshold)) and tail (in v = 1/sqrt(k))
    let split = (R::lit(8.0) * (e.abs() + cutoff + center.abs() + half_width)).max(R::lit(200.0));
    let u_max = (split - threshold).sqrt();

    // head: ∫ f²(k)/(E-k) dk = ∫ 2u²(1+αk)/((k²+Λ²)(E-k)) du, k = threshold + u²
    let base = |u: R| {
        let k = threshold + u * u;
        R::lit(2.0) * u * u * (R::one() + asymmetry * k) / (k * k + cutoff * cutoff)
    };
    let head = if e > threshold {
        let u0 = (e - threshold).sqrt();
        // pole at u0: 1/(E-k) = 1/((u0-u)(u0+u))
        pv_integral(
            |u| base(u) / ((u0 - u) * (u0 + u)),
            u0,
            R::zero(),
            u_max,
            spec,
        )?
    } else {
        integrate(|u: R| base(u) / ((e - threshold) - u * u), R::zero(), u_max, spec)?.0
    };

    // tail: ∫_split^∞ f²(k)/(k-E) dk with k = 1/v², smooth on [0, 1/sqrt(split)]
    let v_max = split.sqrt().recip();
    let tail_integrand = |v: R| {
        let v2 = v * v;
        R::lit(2.0) * (v2 + asymmetry) * (R::one() - threshold * v2).sqrt()
            / ((R::one() - e * v2) * (R::one() + cutoff * cutoff * v2 * v2))
    };
    let (tail, _) = integrate(tail_integrand, R::zero(), v_max, spec)?;

    // Re Π = -(g²/2π)(head - tail)
    Ok(g2 / R::TAU() * (tail - head))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lee::FormFactorShape;
    use std::f64::consts::PI;

    fn spec() -> QuadratureSpec<f64> {
        QuadratureSpec::with_tolerances(1e-10, 1e-10).unwrap()
    }

    #[test]
    fn flat_is_constant_imaginary() {
        let m = FormFactorModel::flat(0.8f64).unwrap();
        let pi_e = self_energy(&m, 17.3, &spec()).unwrap();
        assert_eq!(pi_e.re, 0.0);
        assert!((pi_e.im - 0.32).abs() < 1e-15); // g²/2
    }

    #[test]
    fn band_center_is_pure_imaginary() {
        // α = 0, E = M: log(|E₀|/|E₀|) = 0, Im = g²/2
        let m = FormFactorModel::new(
            0.95f64,
            FormFactorShape::Band { center: 2.0, half_width: 1.0, asymmetry: 0.0 },
        )
        .unwrap();
        let v = self_energy(&m, 2.0, &spec()).unwrap();
        assert_eq!(v.re, 0.0);
        assert!((v.im - 0.95 * 0.95 / 2.0).abs() < 1e-15);
    }

    #[test]
    fn band_outside_is_real_log() {
        // E = M + 2E₀: ratio of distances is E₀/3E₀ = 1/3
        let alpha = 0.1f64;
        let m = FormFactorModel::new(
            1.1,
            FormFactorShape::Band { center: 2.0, half_width: 1.0, asymmetry: alpha },
        )
        .unwrap();
        let e = 4.0;
        let v = self_energy(&m, e, &spec()).unwrap();
        assert_eq!(v.im, 0.0);
        let expect = 1.1f64 * 1.1 / (2.0 * PI) * (1.0 + alpha * e) * (1.0f64 / 3.0).ln();
        assert!((v.re - expect).abs() < 1e-14);
    }

    #[test]
    fn band_inside_imaginary_part() {
        let alpha = 0.0396f64;
        let g = 0.95f64;
        let m = FormFactorModel::new(
            g,
            FormFactorShape::Band { center: 2.728, half_width: 2.52, asymmetry: alpha },
        )
        .unwrap();
        let e = 3.5;
        let v = self_energy(&m, e, &spec()).unwrap();
        assert!((v.im - g * g * (1.0 + alpha * e) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn smooth_cutoff_matches_band_free_oracle() {
        // For f²(k) = √(k-th)/(k²+Λ²) the dispersion integral below threshold
        // can be checked against direct adaptive quadrature on k.
        let model = FormFactorModel::new(
            1.3f64,
            FormFactorShape::SmoothCutoff { center: 3.0, half_width: 1.0, asymmetry: 0.0, cutoff: 2.0 },
        )
        .unwrap();
        let th = 2.0;
        let e = 1.0; // below threshold: plain integral
        let got = re_self_energy(&model, e, &spec()).unwrap();
        // oracle: -(g²/2π) ∫_th^K f²/(E-k) dk on a straight (non-substituted)
        // fine splitting, plus the same v-substituted tail
        let g2 = 1.3f64 * 1.3;
        let f2 = |k: f64| (k - th).sqrt() / (k * k + 4.0);
        let (head, _) = integrate(
            |k: f64| f2(k) / (e - k),
            th + 1e-13,
            4000.0,
            &QuadratureSpec { max_subdivisions: 40_000, ..spec() },
        )
        .unwrap();
        let tail = {
            let (v, _) = integrate(
                |v: f64| {
                    let v2 = v * v;
                    2.0 * v2 * (1.0 - th * v2).sqrt() / ((1.0 - e * v2) * (1.0 + 4.0 * v2 * v2))
                },
                0.0,
                1.0 / 4000.0f64.sqrt(),
                &spec(),
            )
            .unwrap();
            v
        };
        let expect = g2 / (2.0 * PI) * (tail - head);
        assert!((got - expect).abs() < 1e-6, "got {got}, expect {expect}");
        // Im vanishes below threshold, is g²f²/2 above
        assert_eq!(model.im_self_energy(e), 0.0);
        let e_in = 3.2;
        assert!((model.im_self_energy(e_in) - g2 * f2(e_in) / 2.0).abs() < 1e-15);
    }
}
