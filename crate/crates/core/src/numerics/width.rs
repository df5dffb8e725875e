//! Full width at half maximum of a sampled spectrum.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Half-height width of `samples` (ordered in ω) around the local maximum at
/// `peak_index`. The crossings are the ones contiguous to the peak: scanning
/// outward, the first interval dropping through half height on each side is
/// interpolated linearly, so side lobes further out do not contribute.
pub fn half_height_width<R: Real>(samples: &[(R, R)], peak_index: usize) -> Result<R> {
    if samples.len() < 3 || peak_index == 0 || peak_index + 1 >= samples.len() {
        return Err(Error::Domain(
            "peak must be interior to at least three samples".to_string(),
        ));
    }
    let peak = samples[peak_index].1;
    if !(peak > R::zero())
        || samples[peak_index - 1].1 > peak
        || samples[peak_index + 1].1 > peak
    {
        return Err(Error::Domain("peak_index is not a local maximum".to_string()));
    }
    let half = peak * R::lit(0.5);

    let mut right = None;
    for i in peak_index..samples.len() - 1 {
        let (x0, y0) = samples[i];
        let (x1, y1) = samples[i + 1];
        if y0 > half && y1 <= half {
            let frac = (y0 - half) / (y0 - y1);
            right = Some(x0 + (x1 - x0) * frac);
            break;
        }
    }
    let right = right.ok_or(Error::RangeTooNarrow { side: "upper" })?;

    let mut left = None;
    for i in (1..=peak_index).rev() {
        let (x0, y0) = samples[i - 1];
        let (x1, y1) = samples[i];
        if y1 > half && y0 <= half {
            let frac = (y1 - half) / (y1 - y0);
            left = Some(x1 - (x1 - x0) * frac);
            break;
        }
    }
    let left = left.ok_or(Error::RangeTooNarrow { side: "lower" })?;

    Ok(right - left)
}
