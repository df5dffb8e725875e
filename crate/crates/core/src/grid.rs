//! Energy grids. [`EnergyGrid`] is the uniform grid used for sampling
//! distributions; the free functions build the non-uniform node sets that
//! spectral measures need (edge grading, geometric tails).

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Uniform energy grid with `n >= 2` nodes on `[min, max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyGrid<R> {
    min: R,
    max: R,
    n: usize,
}

impl<R: Real> EnergyGrid<R> {
    pub fn new(min: R, max: R, n: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(Error::Domain("grid bounds must be finite".to_string()));
        }
        if !(min < max) {
            return Err(Error::Domain(format!(
                "grid requires min < max, got [{min}, {max}]"
            )));
        }
        if n < 2 {
            return Err(Error::Domain(format!("grid requires n >= 2, got {n}")));
        }
        Ok(Self { min, max, n })
    }

    pub fn min(&self) -> R {
        self.min
    }

    pub fn max(&self) -> R {
        self.max
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> R {
        (self.max - self.min) / R::from_usize(self.n - 1).unwrap()
    }

    /// i-th node; the endpoints are exact.
    pub fn node(&self, i: usize) -> R {
        debug_assert!(i < self.n);
        if i == 0 {
            self.min
        } else if i == self.n - 1 {
            self.max
        } else {
            let frac = R::from_usize(i).unwrap() / R::from_usize(self.n - 1).unwrap();
            self.min + (self.max - self.min) * frac
        }
    }

    pub fn nodes(&self) -> Vec<R> {
        (0..self.n).map(|i| self.node(i)).collect()
    }

    /// Index of the node closest to `x`.
    pub fn nearest_index(&self, x: R) -> usize {
        let frac = (x - self.min) / (self.max - self.min);
        let pos = frac * R::from_usize(self.n - 1).unwrap();
        let i = pos.round().as_f64() as isize;
        i.clamp(0, self.n as isize - 1) as usize
    }
}

/// Nodes on `[lo, hi]` clustered toward both endpoints (smoothstep image of a
/// uniform grid; spacing near an edge shrinks quadratically). Used for band
/// continua whose densities have boundary layers at the edges.
pub fn edge_graded_nodes<R: Real>(lo: R, hi: R, n: usize) -> Vec<R> {
    assert!(n >= 2 && lo < hi);
    let range = hi - lo;
    let two = R::lit(2.0);
    let three = R::lit(3.0);
    (0..n)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == n - 1 {
                hi
            } else {
                let u = R::from_usize(i).unwrap() / R::from_usize(n - 1).unwrap();
                lo + range * u * u * (three - two * u)
            }
        })
        .collect()
}

/// Nodes graded toward a lower threshold: square-root clustering on
/// `[lo, dense_hi]` followed by a geometric tail up to `far_hi`.
pub fn threshold_graded_nodes<R: Real>(
    lo: R,
    dense_hi: R,
    far_hi: R,
    n_dense: usize,
    ratio: R,
) -> Vec<R> {
    assert!(n_dense >= 2 && lo < dense_hi && dense_hi < far_hi && ratio > R::one());
    let range = dense_hi - lo;
    let mut nodes: Vec<R> = (0..n_dense)
        .map(|i| {
            let u = R::from_usize(i).unwrap() / R::from_usize(n_dense - 1).unwrap();
            lo + range * u * u
        })
        .collect();
    let mut step = (dense_hi - nodes[n_dense - 2]) * ratio;
    let mut x = dense_hi;
    loop {
        x = x + step;
        if x >= far_hi {
            nodes.push(far_hi);
            break;
        }
        nodes.push(x);
        step = step * ratio;
    }
    nodes
}

/// Symmetric nodes for a peaked density with unbounded tails: a uniform core
/// on `center ± core_half` plus geometric tails out to `center ± tail_half`.
pub fn core_and_tail_nodes<R: Real>(
    center: R,
    core_half: R,
    tail_half: R,
    n_core: usize,
    ratio: R,
) -> Vec<R> {
    assert!(n_core >= 3 && core_half > R::zero() && tail_half > core_half && ratio > R::one());
    let core_lo = center - core_half;
    let core_hi = center + core_half;
    let h = (core_hi - core_lo) / R::from_usize(n_core - 1).unwrap();
    let mut upper: Vec<R> = Vec::new();
    let mut step = h * ratio;
    let mut x = core_hi;
    loop {
        x = x + step;
        if x >= center + tail_half {
            upper.push(center + tail_half);
            break;
        }
        upper.push(x);
        step = step * ratio;
    }
    let mut nodes: Vec<R> = upper.iter().rev().map(|&u| center - (u - center)).collect();
    for i in 0..n_core {
        let frac = R::from_usize(i).unwrap() / R::from_usize(n_core - 1).unwrap();
        nodes.push(core_lo + (core_hi - core_lo) * frac);
    }
    nodes.extend(upper);
    nodes
}
