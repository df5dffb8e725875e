//! Spectral function d_S(E) = |Im G_S(E)|/π of the dressed propagator,
//! sampled into a [`SpectralMeasure`] together with the discrete levels.

use super::{find_discrete_levels, re_self_energy, FormFactorModel, FormFactorShape};
use crate::error::Result;
use crate::grid::{core_and_tail_nodes, edge_graded_nodes, threshold_graded_nodes};
use crate::measure::SpectralMeasure;
use crate::numerics::QuadratureSpec;
use crate::scalar::Real;

/// Continuum part of d_S at one energy; zero off the support.
pub fn continuum_density<R: Real>(
    model: &FormFactorModel<R>,
    mass: R,
    e: R,
    spec: &QuadratureSpec<R>,
) -> Result<R> {
    if !model.in_support(e) {
        return Ok(R::zero());
    }
    let im = model.im_self_energy(e);
    if im == R::zero() {
        return Ok(R::zero());
    }
    let re = re_self_energy(model, e, spec)?;
    let d = e - mass + re;
    Ok(im / R::PI() / (d * d + im * im))
}

/// Samples d_S on `nodes` and appends the discrete levels, without
/// normalizing. The completeness deficit of the returned measure is a direct
/// diagnostic of the sampling quality.
pub fn spectral_function_raw<R: Real>(
    model: &FormFactorModel<R>,
    mass: R,
    nodes: &[R],
    spec: &QuadratureSpec<R>,
) -> Result<SpectralMeasure<R>> {
    let atoms = find_discrete_levels(model, mass, spec)?;
    let density = nodes
        .iter()
        .map(|&e| continuum_density(model, mass, e, spec))
        .collect::<Result<Vec<R>>>()?;
    SpectralMeasure::new(nodes.to_vec(), density, atoms, model.support())
}

/// Sampled measure with total mass rescaled to exactly 1. Errors with the
/// deficit if the raw mass misses 1 by more than `mass_tol`.
pub fn spectral_function<R: Real>(
    model: &FormFactorModel<R>,
    mass: R,
    nodes: &[R],
    spec: &QuadratureSpec<R>,
    mass_tol: R,
) -> Result<SpectralMeasure<R>> {
    spectral_function_raw(model, mass, nodes, spec)?.normalized(mass_tol)
}

/// Default node layout per form-factor shape, sized by the golden-rule width:
/// uniform core plus geometric tails for the flat model, edge-graded nodes
/// across a band, threshold grading plus a long tail for the smooth cutoff.
pub fn default_nodes<R: Real>(model: &FormFactorModel<R>, mass: R, n: usize) -> Vec<R> {
    let g2 = model.coupling() * model.coupling();
    match *model.shape() {
        FormFactorShape::Flat => {
            let gamma = g2;
            core_and_tail_nodes(
                mass,
                gamma * R::lit(25.0),
                gamma * R::lit(1e4),
                n,
                R::lit(1.08),
            )
        }
        FormFactorShape::Band { center, half_width, .. } => {
            edge_graded_nodes(center - half_width, center + half_width, n)
        }
        FormFactorShape::SmoothCutoff { center, half_width, cutoff, .. } => {
            let threshold = center - half_width;
            let gamma = g2 * model.f_squared(mass);
            let dense_hi = mass + (gamma + half_width) * R::lit(4.0);
            let far = (center.abs() + half_width + cutoff + gamma) * R::lit(40.0);
            threshold_graded_nodes(threshold, dense_hi, far.max(dense_hi * R::lit(4.0)), n, R::lit(1.03))
        }
    }
}
