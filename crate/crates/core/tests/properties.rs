//! Property tests of the engine invariants.

use decay_spectra::bw::{self, BreitWignerParams};
use decay_spectra::kinematics::{partial_widths, split_energies, TwoBodyConfig};
use decay_spectra::numerics::{
    fourier_integral, half_height_width, pv_integral, QuadratureSpec,
};
use decay_spectra::units::{convert_energy, EnergyUnit};
use num_complex::Complex64;
use proptest::prelude::*;

fn spec() -> QuadratureSpec<f64> {
    QuadratureSpec::with_tolerances(1e-9, 1e-9).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unit_round_trip(x in 1e-20f64..1e10, a in 0usize..3, b in 0usize..3) {
        let units = [EnergyUnit::MeV, EnergyUnit::EV, EnergyUnit::Seconds];
        let (ua, ub) = (units[a], units[b]);
        let y = convert_energy(convert_energy(x, ua, ub).unwrap(), ub, ua).unwrap();
        prop_assert!((y / x - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pv_vanishes_for_odd_integrands(s in -3.0f64..3.0, h in 0.1f64..5.0, c in 0.1f64..10.0) {
        // c/(x-s) + (x-s)^3 is odd about s on a symmetric window
        let f = |x: f64| c / (x - s) + (x - s).powi(3);
        let v = pv_integral(f, s, s - h, s + h, &spec()).unwrap();
        prop_assert!(v.abs() < 1e-7 * (1.0 + c + h.powi(4)), "v = {v}");
    }

    #[test]
    fn pv_is_linear(a in 0.2f64..2.0, b in -2.0f64..2.0) {
        // PV(a·f + b·g) = a·PV(f) + b·PV(g) on [0,3], pole at 1
        let f = |x: f64| 1.0 / (x - 1.0);
        let g = |x: f64| x / (x - 1.0);
        let lhs = pv_integral(|x| a * f(x) + b * g(x), 1.0, 0.0, 3.0, &spec()).unwrap();
        let pf = pv_integral(f, 1.0, 0.0, 3.0, &spec()).unwrap();
        let pg = pv_integral(g, 1.0, 0.0, 3.0, &spec()).unwrap();
        prop_assert!((lhs - (a * pf + b * pg)).abs() < 1e-7 * (1.0 + a.abs() + b.abs()));
    }

    #[test]
    fn fourier_conjugate_symmetry(t in 0.01f64..5.0, width in 0.2f64..3.0) {
        // real g: result(-t) = conj(result(t))
        let g = |e: f64| Complex64::new((-e * e / (2.0 * width)).exp(), 0.0);
        let plus = fourier_integral(g, t, -10.0, 10.0, &spec()).unwrap();
        let minus = fourier_integral(g, -t, -10.0, 10.0, &spec()).unwrap();
        prop_assert!((plus.conj() - minus).norm() < 1e-8);
    }

    #[test]
    fn width_invariant_under_scaling_and_shift(
        scale in 0.01f64..100.0,
        shift in -50.0f64..50.0,
        gamma in 0.2f64..5.0,
    ) {
        let n = 1501;
        let base: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let x = -10.0 * gamma + 20.0 * gamma * i as f64 / (n - 1) as f64;
                (x, gamma / (x * x + gamma * gamma / 4.0))
            })
            .collect();
        let moved: Vec<(f64, f64)> = base
            .iter()
            .map(|&(x, y)| (x + shift, scale * y))
            .collect();
        let w0 = half_height_width(&base, n / 2).unwrap();
        let w1 = half_height_width(&moved, n / 2).unwrap();
        prop_assert!((w0 - w1).abs() < 1e-9 * gamma);
    }

    #[test]
    fn bw_eta_is_symmetric_about_the_mass(
        mass in -5.0f64..5.0,
        gamma in 0.1f64..4.0,
        t in 0.0f64..20.0,
        x in 0.0f64..30.0,
    ) {
        let p = BreitWignerParams::new(mass, gamma).unwrap();
        let hi = bw::eta(&p, t, mass + x);
        let lo = bw::eta(&p, t, mass - x);
        prop_assert!((hi - lo).abs() <= 1e-12 * hi.abs().max(1e-300));
    }

    #[test]
    fn energy_conservation_in_split(
        omega in 0.1f64..1e4,
        m1 in 0.0f64..50.0,
        m2 in 0.0f64..50.0,
    ) {
        let (w1, w2) = split_energies(omega, m1, m2).unwrap();
        prop_assert!((w1 + w2 - omega).abs() <= 1e-12 * omega);
    }

    #[test]
    fn partial_widths_sum_and_swap(
        mass in 1.0f64..200.0,
        gamma in 1e-6f64..1.0,
        f1 in 0.0f64..0.9,
        f2 in 0.0f64..0.9,
    ) {
        let m1 = mass * f1;
        let m2 = mass * f2;
        prop_assume!((m1 * m1 - m2 * m2).abs() < mass * mass * 0.99);
        let p = BreitWignerParams::new(mass, gamma).unwrap();
        let a = TwoBodyConfig::new(m1, m2, p).unwrap();
        let b = TwoBodyConfig::new(m2, m1, p).unwrap();
        let (g1, g2) = partial_widths(&a);
        let (h1, h2) = partial_widths(&b);
        prop_assert!(((g1 + g2) / gamma - 1.0).abs() < 4.0 * f64::EPSILON);
        prop_assert_eq!(g1, h2);
        prop_assert_eq!(g2, h1);
        let (wa1, wa2) = a.peak_energies();
        prop_assert!((wa1 + wa2 - mass).abs() <= 1e-12 * mass);
    }
}
