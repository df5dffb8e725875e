//! Two-body decay kinematics: the back-to-back final state of total energy ω
//! splits into per-particle energies
//!
//!   ω₁ = (ω² + m₁² − m₂²)/2ω,   ω₂ = (ω² − m₁² + m₂²)/2ω,
//!
//! and the parent distribution η(t, ω) induces per-particle distributions
//! η₁, η₂ — exactly (summing both inversion branches with their Jacobians)
//! or in the narrow-peak form with rescaled widths Γ₁, Γ₂.

use crate::bw::{self, BreitWignerParams};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Branch of ω = ω₁ ± √(ω₁² − Δm²).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// Masses of the two decay products plus the parent resonance.
#[derive(Debug, Clone, Copy)]
pub struct TwoBodyConfig<R> {
    m1: R,
    m2: R,
    parent: BreitWignerParams<R>,
}

impl<R: Real> TwoBodyConfig<R> {
    pub fn new(m1: R, m2: R, parent: BreitWignerParams<R>) -> Result<Self> {
        if !(m1 >= R::zero() && m2 >= R::zero() && m1.is_finite() && m2.is_finite()) {
            return Err(Error::Domain("masses must be finite and non-negative".to_string()));
        }
        let m = parent.mass();
        if (m1 * m1 - m2 * m2).abs() >= m * m {
            return Err(Error::Domain(
                "partial widths need |Δm²| < M²".to_string(),
            ));
        }
        Ok(Self { m1, m2, parent })
    }

    pub fn m1(&self) -> R {
        self.m1
    }

    pub fn m2(&self) -> R {
        self.m2
    }

    pub fn parent(&self) -> &BreitWignerParams<R> {
        &self.parent
    }

    /// Δm² = m₁² − m₂².
    pub fn delta_m_sq(&self) -> R {
        self.m1 * self.m1 - self.m2 * self.m2
    }

    /// Peak energies (ω̄₁, ω̄₂) = ((M² ± Δm²)/2M).
    pub fn peak_energies(&self) -> (R, R) {
        let m = self.parent.mass();
        let d = self.delta_m_sq();
        let two_m = m + m;
        ((m * m + d) / two_m, (m * m - d) / two_m)
    }

    /// Width fractions (Γ₁/Γ, Γ₂/Γ) = (1/2 ∓ Δm²/2M²).
    pub fn width_fractions(&self) -> (R, R) {
        let m = self.parent.mass();
        let half = R::lit(0.5);
        let shift = self.delta_m_sq() / (R::lit(2.0) * m * m);
        (half - shift, half + shift)
    }
}

/// Partial widths (Γ₁, Γ₂); they sum to Γ.
pub fn partial_widths<R: Real>(cfg: &TwoBodyConfig<R>) -> (R, R) {
    let (f1, f2) = cfg.width_fractions();
    let gamma = cfg.parent.width();
    (f1 * gamma, f2 * gamma)
}

/// Per-particle energies of a two-body state with total energy ω.
pub fn split_energies<R: Real>(omega: R, m1: R, m2: R) -> Result<(R, R)> {
    if !(omega > R::zero()) {
        return Err(Error::Domain(format!("total energy must be positive, got {omega}")));
    }
    let d = m1 * m1 - m2 * m2;
    let two_omega = omega + omega;
    Ok(((omega * omega + d) / two_omega, (omega * omega - d) / two_omega))
}

/// Total energy from the particle-1 energy on the chosen branch:
/// ω = ω₁ ± √(ω₁² − Δm²). Requires ω₁² ≥ Δm².
pub fn invert_energy<R: Real>(omega1: R, delta_m_sq: R, branch: Branch) -> Result<R> {
    let disc = omega1 * omega1 - delta_m_sq;
    if disc < R::zero() {
        return Err(Error::Domain(format!(
            "inversion needs ω₁² ≥ Δm², got ω₁ = {omega1}, Δm² = {delta_m_sq}"
        )));
    }
    let root = disc.sqrt();
    Ok(match branch {
        Branch::Plus => omega1 + root,
        Branch::Minus => omega1 - root,
    })
}

/// Exact particle-1 distribution: both branches of ω(ω₁) weighted by their
/// Jacobians |1 ± ω₁/√(ω₁² − Δm²)|, valid for any parent η.
pub fn eta1_exact<R: Real, F: Fn(R, R) -> R>(
    eta: F,
    t: R,
    omega1: R,
    delta_m_sq: R,
) -> Result<R> {
    let disc = omega1 * omega1 - delta_m_sq;
    if disc < R::zero() {
        return Err(Error::Domain(format!(
            "η₁ undefined for ω₁² < Δm² (ω₁ = {omega1}, Δm² = {delta_m_sq})"
        )));
    }
    let root = disc.sqrt();
    if root == R::zero() {
        // Jacobian diverges at the branch point; the integrable endpoint is
        // never sampled by the quadratures used on top of this.
        return Ok(R::infinity());
    }
    let ratio = omega1 / root;
    let plus = (R::one() + ratio).abs() * eta(t, omega1 + root);
    let minus = (R::one() - ratio).abs() * eta(t, omega1 - root);
    Ok(plus + minus)
}

/// Exact particle-2 distribution (Δm² enters with the opposite sign).
pub fn eta2_exact<R: Real, F: Fn(R, R) -> R>(
    eta: F,
    t: R,
    omega2: R,
    delta_m_sq: R,
) -> Result<R> {
    eta1_exact(eta, t, omega2, -delta_m_sq)
}

/// Narrow-peak particle-1 distribution: a translated, width-rescaled copy of
/// the parent Breit-Wigner η with peak ω̄₁ and width parameter Γ₁; its FWHM
/// at time t is (Γ₁/Γ) δω(t).
pub fn eta1_narrow<R: Real>(cfg: &TwoBodyConfig<R>, t: R, omega1: R) -> R {
    let (f1, _) = cfg.width_fractions();
    let (w1bar, _) = cfg.peak_energies();
    let scale = f1.recip();
    let m = cfg.parent.mass();
    scale * bw::eta(&cfg.parent, t, m + scale * (omega1 - w1bar))
}

/// Narrow-peak particle-2 distribution.
pub fn eta2_narrow<R: Real>(cfg: &TwoBodyConfig<R>, t: R, omega2: R) -> R {
    let (_, f2) = cfg.width_fractions();
    let (_, w2bar) = cfg.peak_energies();
    let scale = f2.recip();
    let m = cfg.parent.mass();
    scale * bw::eta(&cfg.parent, t, m + scale * (omega2 - w2bar))
}
