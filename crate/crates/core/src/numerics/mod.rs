//! Quadrature and root-finding engines: adaptive Gauss-Kronrod integration
//! with oscillation-aware panelling, Cauchy principal values, Brent's method,
//! and half-height width extraction from sampled spectra.

mod quad;
mod root;
mod width;

pub use quad::{
    fourier_integral, integrate, integrate_segments, oscillatory_segments, pv_integral, QuadValue,
    QuadratureSpec,
};
pub use root::{find_root, RootBracket};
pub use width::half_height_width;
