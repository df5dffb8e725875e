//! Unit conversion at the I/O boundary.
//!
//! All internal computation happens in natural units (ħ = c = 1), usually
//! rescaled so that Γ = 1. Physical quantities enter and leave through
//! [`convert_energy`], which applies ħ exactly once. A time in seconds is
//! treated as the inverse of an energy (a lifetime τ maps to the width ħ/τ).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Reduced Planck constant in MeV·s (CODATA, exact to the digits kept here).
pub const HBAR_MEV_S: f64 = 6.582_119_569e-22;

/// Unit tag attached to energies crossing the I/O boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergyUnit {
    /// Dimensionless engine units (energies in Γ, times in τ = 1/Γ).
    Natural,
    MeV,
    EV,
    /// A time in seconds standing for its inverse energy, E = ħ/t.
    Seconds,
}

impl fmt::Display for EnergyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            EnergyUnit::Natural => "natural",
            EnergyUnit::MeV => "MeV",
            EnergyUnit::EV => "eV",
            EnergyUnit::Seconds => "s",
        };
        f.write_str(tag)
    }
}

impl FromStr for EnergyUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "natural" => Ok(EnergyUnit::Natural),
            "mev" => Ok(EnergyUnit::MeV),
            "ev" => Ok(EnergyUnit::EV),
            "s" | "sec" | "seconds" => Ok(EnergyUnit::Seconds),
            other => Err(Error::UnknownUnit(other.to_string())),
        }
    }
}

/// Converts an energy between unit tags.
///
/// `Seconds` values are times whose inverse (times ħ) is the energy, so the
/// conversion is reciprocal: a lifetime of 8.52e-17 s becomes a width of
/// ħ/8.52e-17 ≈ 7.73e-6 MeV. Natural engine units carry no absolute scale
/// and convert only to themselves.
pub fn convert_energy<R: Real>(value: R, from: EnergyUnit, to: EnergyUnit) -> Result<R> {
    if from == to {
        return Ok(value);
    }
    if from == EnergyUnit::Natural || to == EnergyUnit::Natural {
        return Err(Error::Config(
            "natural engine units have no absolute scale; supply the reference width instead"
                .to_string(),
        ));
    }
    let hbar = R::lit(HBAR_MEV_S);
    let mev = match from {
        EnergyUnit::MeV => value,
        EnergyUnit::EV => value * R::lit(1e-6),
        EnergyUnit::Seconds => {
            if value == R::zero() {
                return Err(Error::Domain("cannot convert a zero time".to_string()));
            }
            hbar / value
        }
        EnergyUnit::Natural => unreachable!(),
    };
    let out = match to {
        EnergyUnit::MeV => mev,
        EnergyUnit::EV => mev * R::lit(1e6),
        EnergyUnit::Seconds => {
            if mev == R::zero() {
                return Err(Error::Domain("cannot convert a zero energy".to_string()));
            }
            hbar / mev
        }
        EnergyUnit::Natural => unreachable!(),
    };
    Ok(out)
}
