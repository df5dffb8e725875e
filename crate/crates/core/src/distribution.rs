//! Sampled energy distribution η(t, ·) over a node set, with the peak and
//! trapezoid integral kept as metadata and a copy normalized to the value at
//! a reference energy (the resonance mass in the figures).

use crate::error::Result;
use crate::numerics::half_height_width;
use crate::scalar::Real;

#[derive(Debug, Clone)]
pub struct EnergyDistribution<R> {
    pub t: R,
    pub nodes: Vec<R>,
    pub values: Vec<R>,
    /// `values` divided by the value at the node nearest the reference
    /// energy; all zeros when that value vanishes (t = 0).
    pub normalized: Vec<R>,
    pub integral: R,
    pub peak_index: usize,
    pub reference_index: usize,
}

impl<R: Real> EnergyDistribution<R> {
    /// Samples `f` on `nodes`; `reference` picks the normalization node.
    pub fn sample<F: Fn(R) -> R>(t: R, nodes: Vec<R>, reference: R, f: F) -> Self {
        let values: Vec<R> = nodes.iter().map(|&w| f(w)).collect();
        Self::from_values(t, nodes, reference, values)
    }

    pub fn from_values(t: R, nodes: Vec<R>, reference: R, values: Vec<R>) -> Self {
        assert_eq!(nodes.len(), values.len());
        assert!(nodes.len() >= 2);
        let mut peak_index = 0;
        let mut reference_index = 0;
        for (i, &x) in nodes.iter().enumerate() {
            if values[i] > values[peak_index] {
                peak_index = i;
            }
            if (x - reference).abs() < (nodes[reference_index] - reference).abs() {
                reference_index = i;
            }
        }
        let reference_value = values[reference_index];
        let normalized = if reference_value > R::zero() {
            values.iter().map(|&v| v / reference_value).collect()
        } else {
            vec![R::zero(); values.len()]
        };
        let half = R::lit(0.5);
        let mut integral = R::zero();
        for i in 1..nodes.len() {
            integral += half * (nodes[i] - nodes[i - 1]) * (values[i] + values[i - 1]);
        }
        Self {
            t,
            nodes,
            values,
            normalized,
            integral,
            peak_index,
            reference_index,
        }
    }

    pub fn peak_energy(&self) -> R {
        self.nodes[self.peak_index]
    }

    pub fn peak_value(&self) -> R {
        self.values[self.peak_index]
    }

    /// FWHM extracted from the samples around the peak.
    pub fn fwhm(&self) -> Result<R> {
        let samples: Vec<(R, R)> = self
            .nodes
            .iter()
            .copied()
            .zip(self.values.iter().copied())
            .collect();
        half_height_width(&samples, self.peak_index)
    }
}
