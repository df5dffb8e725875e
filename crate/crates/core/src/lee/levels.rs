//! Emergent discrete levels: real roots of E − M + Re Π(E) = 0 outside the
//! continuum support, with residues Z = 1/(1 + Re Π'(E)).
//!
//! The band-model roots sit exponentially close to the edges, so the search
//! runs in the log of the edge offset and the band logarithm is evaluated
//! from the offset directly, which keeps the cancellation out of the root
//! function.

use super::self_energy::band_re_from_distances;
use super::{re_self_energy, FormFactorModel, FormFactorShape};
use crate::error::{Error, Result};
use crate::measure::DiscreteLevel;
use crate::numerics::{find_root, QuadratureSpec, RootBracket};
use crate::scalar::Real;

#[derive(Clone, Copy)]
enum Side {
    Below,
    Above,
}

/// All discrete levels of the model with bare mass `mass`.
pub fn find_discrete_levels<R: Real>(
    model: &FormFactorModel<R>,
    mass: R,
    spec: &QuadratureSpec<R>,
) -> Result<Vec<DiscreteLevel<R>>> {
    let mut levels = Vec::new();
    match *model.shape() {
        FormFactorShape::Flat => {}
        FormFactorShape::Band { center, half_width, .. } => {
            let lo = center - half_width;
            let hi = center + half_width;
            if let Some(l) = search_edge(model, mass, lo, Side::Below, spec)? {
                levels.push(l);
            }
            if let Some(l) = search_edge(model, mass, hi, Side::Above, spec)? {
                levels.push(l);
            }
        }
        FormFactorShape::SmoothCutoff { center, half_width, .. } => {
            let threshold = center - half_width;
            if let Some(l) = search_edge(model, mass, threshold, Side::Below, spec)? {
                levels.push(l);
            }
        }
    }
    Ok(levels)
}

/// D(E) = E − mass + Re Π(E) evaluated at offset `delta` from `edge`,
/// cancellation-free for the band shape.
fn dispersion_at_offset<R: Real>(
    model: &FormFactorModel<R>,
    mass: R,
    edge: R,
    side: Side,
    delta: R,
    spec: &QuadratureSpec<R>,
) -> Result<R> {
    let e = match side {
        Side::Below => edge - delta,
        Side::Above => edge + delta,
    };
    let re = match *model.shape() {
        FormFactorShape::Band { half_width, asymmetry, .. } => {
            let g2 = model.coupling() * model.coupling();
            let width2 = half_width * R::lit(2.0);
            match side {
                // E below lo: distances are 2E₀+δ (upper) and δ (lower)
                Side::Below => band_re_from_distances(g2, asymmetry, e, width2 + delta, delta),
                // E above hi: distances are δ (upper) and 2E₀+δ (lower)
                Side::Above => band_re_from_distances(g2, asymmetry, e, delta, width2 + delta),
            }
        }
        _ => re_self_energy(model, e, spec)?,
    };
    Ok(e - mass + re)
}

fn search_edge<R: Real>(
    model: &FormFactorModel<R>,
    mass: R,
    edge: R,
    side: Side,
    spec: &QuadratureSpec<R>,
) -> Result<Option<DiscreteLevel<R>>> {
    let scale = edge.abs().max(mass.abs()).max(R::one());
    let delta_min = scale * R::lit(1e-13);
    let delta_max = scale * R::lit(20.0);

    // scan log-spaced offsets for a sign change of D
    let n_scan = 320;
    let log_lo = delta_min.ln();
    let log_hi = delta_max.ln();
    let step = (log_hi - log_lo) / R::from_usize(n_scan - 1).unwrap();
    let mut prev: Option<(R, R)> = None;
    let mut bracket = None;
    for i in 0..n_scan {
        let s = log_lo + step * R::from_usize(i).unwrap();
        let d = dispersion_at_offset(model, mass, edge, side, s.exp(), spec)?;
        if let Some((s_prev, d_prev)) = prev {
            if d_prev == R::zero() || d_prev * d < R::zero() {
                bracket = Some((s_prev, s));
                break;
            }
        }
        prev = Some((s, d));
    }
    let Some((s_lo, s_hi)) = bracket else {
        return Ok(None);
    };

    let f = |s: R| {
        dispersion_at_offset(model, mass, edge, side, s.exp(), spec)
            .unwrap_or_else(|_| R::nan())
    };
    let s_root = find_root(f, RootBracket { lo: s_lo, hi: s_hi }, R::lit(1e-12))?;
    let delta = s_root.exp();
    if delta <= scale * R::lit(1e-12) {
        return Err(Error::EdgeDegenerate);
    }
    let energy = match side {
        Side::Below => edge - delta,
        Side::Above => edge + delta,
    };

    // Z = 1/(1 + Re Π'(E)), central difference clamped below the edge distance
    let h = (scale * R::lit(1e-6)).min(delta * R::lit(0.125));
    let re_at = |d: R| -> Result<R> {
        Ok(dispersion_at_offset(model, mass, edge, side, d, spec)?
            - (match side {
                Side::Below => edge - d,
                Side::Above => edge + d,
            } - mass))
    };
    // moving away from the edge by +h shifts E by -h below, +h above
    let (re_plus, re_minus) = match side {
        Side::Below => (re_at(delta - h)?, re_at(delta + h)?),
        Side::Above => (re_at(delta + h)?, re_at(delta - h)?),
    };
    let d_re = (re_plus - re_minus) / (h + h);
    let weight = (R::one() + d_re).recip();
    if !(weight > R::zero() && weight <= R::one()) {
        return Err(Error::EdgeDegenerate);
    }
    Ok(Some(DiscreteLevel { energy, weight }))
}
