//! Lee-model machinery beyond the Breit-Wigner limit: form factors, the
//! self-energy Π(E), the propagator spectral function d_S(E), emergent
//! discrete levels, the general survival amplitude and η(t, ω).
//!
//! Conventions: dispersion ω(k) = k, and the self-energy sign is fixed so
//! that Im Π(E) = +g²f²(E)/2 on the continuum support. The propagator
//! G_S(E) = 1/(E − M + Π(E) + iε) then has d_S = |Im G_S|/π ≥ 0 and a
//! decaying survival amplitude, and the flat form factor reproduces the
//! Lorentzian with Γ = g².

mod eta;
mod levels;
mod self_energy;
mod spectral;

pub use eta::{decay_probability_general, eta_general, survival_amplitude_general};
pub use levels::find_discrete_levels;
pub use self_energy::{re_self_energy, self_energy};
pub use spectral::{continuum_density, default_nodes, spectral_function, spectral_function_raw};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Shape of the squared form factor f²(k).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FormFactorShape<R> {
    /// f² = 1 everywhere: the Breit-Wigner limit, Γ = g².
    Flat,
    /// f²(k) = (1 + αk) θ(E₀² − (k − M)²): coupling restricted to the band
    /// (M − E₀, M + E₀) with linear asymmetry α.
    Band {
        center: R,
        half_width: R,
        asymmetry: R,
    },
    /// f²(k) = (1 + αk) √(k − (M − E₀)) / (k² + Λ²) θ(k − (M − E₀)):
    /// square-root threshold behavior and a smooth high-energy cutoff.
    SmoothCutoff {
        center: R,
        half_width: R,
        asymmetry: R,
        cutoff: R,
    },
}

/// Coupling g (dimension energy^{1/2}) plus the form-factor shape.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormFactorModel<R> {
    coupling: R,
    shape: FormFactorShape<R>,
}

impl<R: Real> FormFactorModel<R> {
    pub fn new(coupling: R, shape: FormFactorShape<R>) -> Result<Self> {
        if !(coupling > R::zero() && coupling.is_finite()) {
            return Err(Error::Domain(format!("coupling must be positive, got {coupling}")));
        }
        match shape {
            FormFactorShape::Flat => {}
            FormFactorShape::Band {
                center,
                half_width,
                asymmetry,
            } => {
                if !(half_width > R::zero()) {
                    return Err(Error::Domain("band half-width must be positive".to_string()));
                }
                let lo = center - half_width;
                let hi = center + half_width;
                if R::one() + asymmetry * lo <= R::zero()
                    || R::one() + asymmetry * hi <= R::zero()
                {
                    return Err(Error::Domain(
                        "1 + αk must stay positive across the band".to_string(),
                    ));
                }
            }
            FormFactorShape::SmoothCutoff {
                half_width,
                asymmetry,
                cutoff,
                ..
            } => {
                if !(half_width > R::zero() && cutoff > R::zero()) {
                    return Err(Error::Domain(
                        "smooth cutoff needs positive half-width and cutoff".to_string(),
                    ));
                }
                if asymmetry < R::zero() {
                    return Err(Error::Domain(
                        "negative asymmetry makes f² negative on the unbounded support"
                            .to_string(),
                    ));
                }
            }
        }
        Ok(Self { coupling, shape })
    }

    pub fn flat(coupling: R) -> Result<Self> {
        Self::new(coupling, FormFactorShape::Flat)
    }

    pub fn coupling(&self) -> R {
        self.coupling
    }

    pub fn shape(&self) -> &FormFactorShape<R> {
        &self.shape
    }

    /// Continuum support of f² as `(lower, upper)`; `None` is unbounded.
    pub fn support(&self) -> (Option<R>, Option<R>) {
        match self.shape {
            FormFactorShape::Flat => (None, None),
            FormFactorShape::Band {
                center, half_width, ..
            } => (Some(center - half_width), Some(center + half_width)),
            FormFactorShape::SmoothCutoff {
                center, half_width, ..
            } => (Some(center - half_width), None),
        }
    }

    /// Strict interior of the support.
    pub fn in_support(&self, e: R) -> bool {
        let (lo, hi) = self.support();
        lo.map_or(true, |l| e > l) && hi.map_or(true, |h| e < h)
    }

    /// Squared form factor f²(k); zero outside the support.
    pub fn f_squared(&self, k: R) -> R {
        match self.shape {
            FormFactorShape::Flat => R::one(),
            FormFactorShape::Band {
                center,
                half_width,
                asymmetry,
            } => {
                if (k - center).abs() < half_width {
                    R::one() + asymmetry * k
                } else {
                    R::zero()
                }
            }
            FormFactorShape::SmoothCutoff {
                center,
                half_width,
                asymmetry,
                cutoff,
            } => {
                let threshold = center - half_width;
                if k > threshold {
                    (R::one() + asymmetry * k) * (k - threshold).sqrt()
                        / (k * k + cutoff * cutoff)
                } else {
                    R::zero()
                }
            }
        }
    }

    /// Im Π(E) = g² f²(E)/2 on the support, zero outside.
    pub fn im_self_energy(&self, e: R) -> R {
        if self.in_support(e) {
            self.coupling * self.coupling * self.f_squared(e) * R::lit(0.5)
        } else {
            R::zero()
        }
    }
}

/// Fermi golden rule width Γ = g² f²(k_M)/|ω'(k_M)|; with ω(k) = k this is
/// g² f²(M). Errors if `mass` lies outside the form-factor support.
pub fn fermi_golden_rule<R: Real>(model: &FormFactorModel<R>, mass: R) -> Result<R> {
    if !model.in_support(mass) {
        return Err(Error::Domain(format!(
            "mass {mass} lies outside the form-factor support"
        )));
    }
    Ok(model.coupling() * model.coupling() * model.f_squared(mass))
}
