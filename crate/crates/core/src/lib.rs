//! Time-resolved energy distributions of decay products.
//!
//! An unstable state prepared at t = 0 decays into a continuum of final
//! states; this crate computes the probability density η(t, ω) that a
//! measurement at time t finds the system decayed with final-state energy ω,
//! together with its half-height width δω(t), the survival amplitude, the
//! per-particle distributions of a two-body decay, and the general
//! (non-exponential) Lee-model quantities driven by a form factor and its
//! self-energy.
//!
//! The numerical core is generic over the floating-point scalar through
//! [`Real`]; the aliases at the crate root fix `f64` for ordinary use.

pub mod bw;
pub mod distribution;
pub mod error;
pub mod grid;
pub mod kinematics;
pub mod lee;
pub mod measure;
pub mod numerics;
pub mod scalar;
pub mod scenarios;
pub mod units;

pub use distribution::EnergyDistribution;
pub use error::{Error, Result};
pub use grid::EnergyGrid;
pub use measure::{DiscreteLevel, SpectralMeasure};
pub use scalar::Real;

/// Complex amplitude over the engine scalar.
pub type Amplitude<R> = num_complex::Complex<R>;

// f64 aliases for ordinary use.
pub type BreitWigner = bw::BreitWignerParams<f64>;
pub type Grid = grid::EnergyGrid<f64>;
pub type Measure = measure::SpectralMeasure<f64>;
pub type Level = measure::DiscreteLevel<f64>;
pub type FormFactor = lee::FormFactorModel<f64>;
pub type TwoBody = kinematics::TwoBodyConfig<f64>;
pub type Quadrature = numerics::QuadratureSpec<f64>;
pub type Distribution = distribution::EnergyDistribution<f64>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_is_generic_over_the_scalar() {
        // the same closed forms in f32
        let p = bw::BreitWignerParams::<f32>::new(0.0, 1.0).unwrap();
        let v = bw::eta(&p, 1.0, 0.0);
        assert!((v - 0.098_560_28_f32).abs() < 1e-5);
        let y: f32 = bw::short_time_constant();
        assert!((y - 2.7831).abs() < 1e-3);
    }
}
